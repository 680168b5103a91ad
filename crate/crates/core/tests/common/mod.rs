#![allow(dead_code)]

use std::sync::Arc;

use superpoisson::brackets::{canonical_poisson, de_rham, schouten};
use superpoisson::graded::{
    random_poly, rat, Chart, GradedPoly, Parity, RandomSpec, Rational, VarKind,
};

pub fn parity(u: &GradedPoly) -> u8 {
    u.parity_of().expect("homogeneous").bit()
}

pub fn signed(e: u8, u: GradedPoly) -> GradedPoly {
    if e % 2 == 0 {
        u
    } else {
        -u
    }
}

pub fn super22() -> Arc<Chart> {
    Arc::new(Chart::standard(2, 2))
}

pub fn seeded(chart: &Arc<Chart>, spec: &RandomSpec, seed: u64) -> GradedPoly {
    let parity = if seed % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    };
    random_poly(chart, spec, parity, seed).expect("odd variables available")
}

pub fn mixed_spec() -> RandomSpec {
    RandomSpec::new(&[
        (VarKind::Base, 2),
        (VarKind::Fiber, 2),
        (VarKind::AntiFiber, 2),
    ])
    .terms(3)
}

pub fn phase_spec() -> RandomSpec {
    RandomSpec::new(&[
        (VarKind::Base, 2),
        (VarKind::Fiber, 1),
        (VarKind::MomentumBase, 1),
        (VarKind::MomentumFiber, 1),
    ])
    .terms(3)
}

// Each law returns its residual; zero means it holds.

pub fn supercommutativity(a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
    a * b - signed(parity(a) * parity(b), b * a)
}

pub fn associativity(a: &GradedPoly, b: &GradedPoly, c: &GradedPoly) -> GradedPoly {
    &(a * b) * c - a * &(b * c)
}

pub fn d_squared(w: &GradedPoly) -> GradedPoly {
    de_rham(&de_rham(w).unwrap()).unwrap()
}

/// `[P,QR] = [P,Q]R + (-1)^{(P+1)Q} Q[P,R]`
pub fn schouten_leibniz(p: &GradedPoly, q: &GradedPoly, r: &GradedPoly) -> GradedPoly {
    let lhs = schouten(p, &(q * r)).unwrap();
    let e = (parity(p) + 1) * parity(q);
    lhs - &schouten(p, q).unwrap() * r - signed(e, q * &schouten(p, r).unwrap())
}

/// `[P,[Q,R]] = [[P,Q],R] + (-1)^{(P+1)(Q+1)} [Q,[P,R]]`
pub fn schouten_jacobi(p: &GradedPoly, q: &GradedPoly, r: &GradedPoly) -> GradedPoly {
    let s = |a: &GradedPoly, b: &GradedPoly| schouten(a, b).unwrap();
    let e = (parity(p) + 1) * (parity(q) + 1);
    s(p, &s(q, r)) - s(&s(p, q), r) - signed(e, s(q, &s(p, r)))
}

/// `(F,GH) = (F,G)H + (-1)^{FG} G(F,H)`
pub fn poisson_leibniz(f: &GradedPoly, g: &GradedPoly, h: &GradedPoly) -> GradedPoly {
    let b = |a: &GradedPoly, c: &GradedPoly| canonical_poisson(a, c).unwrap();
    let e = parity(f) * parity(g);
    b(f, &(g * h)) - &b(f, g) * h - signed(e, g * &b(f, h))
}

/// `(F,(G,H)) = ((F,G),H) + (-1)^{FG} (G,(F,H))`
pub fn poisson_jacobi(f: &GradedPoly, g: &GradedPoly, h: &GradedPoly) -> GradedPoly {
    let b = |a: &GradedPoly, c: &GradedPoly| canonical_poisson(a, c).unwrap();
    let e = parity(f) * parity(g);
    b(f, &b(g, h)) - b(&b(f, g), h) - signed(e, b(g, &b(f, h)))
}

/// Inverse of a small rational matrix by cofactor-free elimination.
pub fn inverse(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { rat(1) } else { rat(0) }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != rat(0)).expect("invertible");
        a.swap(col, pivot);
        let inv = rat(1) / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && a[r][col] != rat(0) {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = x.clone() - f.clone() * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}
