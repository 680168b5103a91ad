//! Schouten bracket, canonical Poisson bracket on the cotangent bundle of
//! the odd tangent bundle, de Rham and Lichnerowicz differentials, the
//! derivation kappa and the higher Poisson brackets.

pub mod calibration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{GradedPoly, Parity, VarKind, Variable};

/// Sign exponent `c0 + c1*u + c2*a + c3*u*a (mod 2)` where `u` is the parity
/// of the first bracket argument and `a` the parity of the coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignExponent {
    pub c0: u8,
    pub c1: u8,
    pub c2: u8,
    pub c3: u8,
}

impl SignExponent {
    pub const fn new(c0: u8, c1: u8, c2: u8, c3: u8) -> Self {
        SignExponent { c0, c1, c2, c3 }
    }

    pub fn eval(self, u: Parity, a: Parity) -> u8 {
        let (u, a) = (u.bit(), a.bit());
        (self.c0 + self.c1 * u + self.c2 * a + self.c3 * u * a) % 2
    }

    pub fn sign(self, u: Parity, a: Parity) -> i64 {
        if self.eval(u, a) == 0 {
            1
        } else {
            -1
        }
    }

    /// All sixteen Boolean functions of two bits.
    pub fn all() -> impl Iterator<Item = SignExponent> {
        (0u8..16).map(|k| SignExponent::new(k & 1, (k >> 1) & 1, (k >> 2) & 1, (k >> 3) & 1))
    }
}

impl std::fmt::Display for SignExponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.c0 == 1 {
            parts.push("1");
        }
        if self.c1 == 1 {
            parts.push("u");
        }
        if self.c2 == 1 {
            parts.push("a");
        }
        if self.c3 == 1 {
            parts.push("ua");
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// The pair of exponents of a two-term bracket
/// `sum (-1)^{s1} dF/dp dG/dy + (-1)^{s2} dF/dy dG/dp`.
pub type BracketSigns = [SignExponent; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignConvention {
    pub schouten: BracketSigns,
    pub poisson: BracketSigns,
}

/// Frozen result of [`calibration::calibrate`].
pub const CALIBRATED: SignConvention = SignConvention {
    // s1 = (a+1)(u+1), s2 = a + 1 + u a
    schouten: [SignExponent::new(1, 1, 1, 1), SignExponent::new(1, 0, 1, 1)],
    // t1 = a(u+1), t2 = 1 + u a
    poisson: [SignExponent::new(0, 0, 1, 1), SignExponent::new(1, 0, 0, 1)],
};

const SCHOUTEN_FORBIDDEN: [VarKind; 3] = [
    VarKind::Fiber,
    VarKind::MomentumBase,
    VarKind::MomentumFiber,
];

fn pairing_bracket(
    signs: &BracketSigns,
    pairs: &[(Variable, Variable)],
    f: &GradedPoly,
    g: &GradedPoly,
) -> Result<GradedPoly> {
    let mut out = GradedPoly::zero(f.chart());
    let (even, odd) = f.split_parity();
    for (part, u) in [(even, Parity::Even), (odd, Parity::Odd)] {
        if part.is_zero() {
            continue;
        }
        for &(y, p) in pairs {
            let a = y.parity();
            let fp = part.left_deriv(p);
            if !fp.is_zero() {
                let gy = g.left_deriv(y);
                if !gy.is_zero() {
                    out = out.try_add(&fp.try_mul(&gy)?.scale_int(signs[0].sign(u, a)))?;
                }
            }
            let fy = part.left_deriv(y);
            if !fy.is_zero() {
                let gp = g.left_deriv(p);
                if !gp.is_zero() {
                    out = out.try_add(&fy.try_mul(&gp)?.scale_int(signs[1].sign(u, a)))?;
                }
            }
        }
    }
    Ok(out)
}

pub fn schouten(p: &GradedPoly, q: &GradedPoly) -> Result<GradedPoly> {
    schouten_with(&CALIBRATED.schouten, p, q)
}

/// Schouten bracket under an explicit sign choice.
pub fn schouten_with(signs: &BracketSigns, p: &GradedPoly, q: &GradedPoly) -> Result<GradedPoly> {
    p.forbid("schouten", &SCHOUTEN_FORBIDDEN)?;
    q.forbid("schouten", &SCHOUTEN_FORBIDDEN)?;
    let chart = p.chart();
    let pairs: Vec<_> = (0..chart.dim())
        .map(|a| (chart.base(a), chart.antifiber(a)))
        .collect();
    pairing_bracket(signs, &pairs, p, q)
}

pub fn canonical_poisson(f: &GradedPoly, g: &GradedPoly) -> Result<GradedPoly> {
    canonical_poisson_with(&CALIBRATED.poisson, f, g)
}

pub fn canonical_poisson_with(
    signs: &BracketSigns,
    f: &GradedPoly,
    g: &GradedPoly,
) -> Result<GradedPoly> {
    f.forbid("poisson", &[VarKind::AntiFiber])?;
    g.forbid("poisson", &[VarKind::AntiFiber])?;
    let chart = f.chart();
    let mut pairs = Vec::with_capacity(2 * chart.dim());
    for a in 0..chart.dim() {
        pairs.push((chart.base(a), chart.var(VarKind::MomentumBase, a)));
        pairs.push((chart.fiber(a), chart.var(VarKind::MomentumFiber, a)));
    }
    pairing_bracket(signs, &pairs, f, g)
}

/// `d = sum_a dx^a d/dx^a`.
pub fn de_rham(w: &GradedPoly) -> Result<GradedPoly> {
    w.forbid(
        "d",
        &[
            VarKind::AntiFiber,
            VarKind::MomentumBase,
            VarKind::MomentumFiber,
        ],
    )?;
    let chart = w.chart();
    let mut out = GradedPoly::zero(chart);
    for a in 0..chart.dim() {
        let dw = w.left_deriv(chart.base(a));
        if !dw.is_zero() {
            out = out + &GradedPoly::var(chart, chart.fiber(a)) * &dw;
        }
    }
    Ok(out)
}

/// `d_P(Q) = [P, Q]`.
pub fn lichnerowicz(p: &GradedPoly, q: &GradedPoly) -> Result<GradedPoly> {
    schouten(p, q)
}

/// `kappa_Q(w) = sum_a (-1)^{(Q~+1)(a~+1)} dQ/dx*_a dw/d(dx^a)`.
pub fn kappa(q: &GradedPoly, w: &GradedPoly) -> Result<GradedPoly> {
    let qp = q.parity_of().ok_or(Error::MixedParity { op: "kappa" })?;
    q.forbid("kappa", &SCHOUTEN_FORBIDDEN)?;
    w.forbid("kappa", &[VarKind::MomentumBase, VarKind::MomentumFiber])?;
    let chart = q.chart();
    let mut out = GradedPoly::zero(chart);
    for a in 0..chart.dim() {
        let dw = w.left_deriv(chart.fiber(a));
        if dw.is_zero() {
            continue;
        }
        let dq = q.left_deriv(chart.antifiber(a));
        let s = if (qp.bit() + 1) * (chart.parity(a).bit() + 1) % 2 == 0 {
            1
        } else {
            -1
        };
        out = out.try_add(&dq.try_mul(&dw)?.scale_int(s))?;
    }
    Ok(out)
}

/// Set every variable of the listed kinds to zero.
pub fn restrict(u: &GradedPoly, kinds: &[VarKind]) -> GradedPoly {
    u.restrict(kinds)
}

/// Even multivector `P` together with functions `f_1..f_n`.
#[derive(Clone, Debug)]
pub struct HigherBracketRequest {
    p: GradedPoly,
    args: Vec<GradedPoly>,
}

impl HigherBracketRequest {
    pub fn new(p: GradedPoly, args: Vec<GradedPoly>) -> Result<Self> {
        if !p.is_homogeneous_of(Parity::Even) {
            return Err(Error::WrongParity {
                op: "hp",
                expected: Parity::Even,
            });
        }
        p.forbid("hp", &SCHOUTEN_FORBIDDEN)?;
        for f in &args {
            f.forbid(
                "hp",
                &[
                    VarKind::Fiber,
                    VarKind::AntiFiber,
                    VarKind::MomentumBase,
                    VarKind::MomentumFiber,
                ],
            )?;
            if f.parity_of().is_none() {
                return Err(Error::MixedParity { op: "hp" });
            }
        }
        Ok(HigherBracketRequest { p, args })
    }

    pub fn p(&self) -> &GradedPoly {
        &self.p
    }

    pub fn args(&self) -> &[GradedPoly] {
        &self.args
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }
}

/// `{f_1,...,f_n}_P = [...[P,f_1],...,f_n]|_M`.
pub fn higher_poisson(req: &HigherBracketRequest) -> Result<GradedPoly> {
    nested_restricted(&CALIBRATED.schouten, &req.p, &req.args)
}

pub(crate) fn nested_restricted(
    signs: &BracketSigns,
    q: &GradedPoly,
    args: &[GradedPoly],
) -> Result<GradedPoly> {
    let mut acc = q.clone();
    for (k, f) in args.iter().enumerate() {
        let remaining = (args.len() - k) as u32;
        acc = acc.filter(|m| m.degree_in(|kind| kind == VarKind::AntiFiber) <= remaining);
        acc = schouten_with(signs, &acc, f)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc.restrict(&[VarKind::AntiFiber]))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graded::{rat, Chart};

    fn r2() -> Arc<Chart> {
        Arc::new(Chart::standard(2, 0))
    }

    #[test]
    fn schouten_examples() {
        let c = r2();
        let p = GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
        let x1 = GradedPoly::var(&c, c.base(0));
        let xs2 = GradedPoly::var(&c, c.antifiber(1));
        assert_eq!(schouten(&p, &x1).unwrap(), xs2);
        assert!(schouten(&p, &p).unwrap().is_zero());
        assert!(schouten(&p, &GradedPoly::int(&c, 5)).unwrap().is_zero());
        let dx = GradedPoly::var(&c, c.fiber(0));
        assert!(matches!(
            schouten(&p, &dx),
            Err(Error::ForbiddenVariable { .. })
        ));
    }

    #[test]
    fn poisson_conjugate_pairs() {
        let c = r2();
        let p1 = GradedPoly::var(&c, c.var(VarKind::MomentumBase, 0));
        let pi1 = GradedPoly::var(&c, c.var(VarKind::MomentumFiber, 0));
        let x1 = GradedPoly::var(&c, c.base(0));
        let x2 = GradedPoly::var(&c, c.base(1));
        let dx1 = GradedPoly::var(&c, c.fiber(0));
        assert_eq!(canonical_poisson(&p1, &x1).unwrap(), GradedPoly::one(&c));
        assert_eq!(canonical_poisson(&pi1, &dx1).unwrap(), GradedPoly::one(&c));
        assert!(canonical_poisson(&p1, &x2).unwrap().is_zero());
        assert!(canonical_poisson(&x1, &x2).unwrap().is_zero());
    }

    #[test]
    fn de_rham_examples() {
        let c = r2();
        let x1 = GradedPoly::var(&c, c.base(0));
        let dx1 = GradedPoly::var(&c, c.fiber(0));
        let dx2 = GradedPoly::var(&c, c.fiber(1));
        assert!(de_rham(&GradedPoly::one(&c)).unwrap().is_zero());
        assert_eq!(de_rham(&x1).unwrap(), dx1);
        assert_eq!(de_rham(&(&x1 * &dx2)).unwrap(), &dx1 * &dx2);
    }

    #[test]
    fn kappa_examples() {
        let c = r2();
        let q = GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
        let dx1 = GradedPoly::var(&c, c.fiber(0));
        let xs2 = GradedPoly::var(&c, c.antifiber(1));
        assert_eq!(kappa(&q, &dx1).unwrap(), xs2);
        let f = GradedPoly::var(&c, c.base(0)).pow(3);
        assert!(kappa(&q, &f).unwrap().is_zero());
        let mixed = &q + &xs2;
        assert!(matches!(
            kappa(&mixed, &dx1),
            Err(Error::MixedParity { .. })
        ));
    }

    #[test]
    fn higher_poisson_examples() {
        let c = r2();
        let p = GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
        let x1 = GradedPoly::var(&c, c.base(0));
        let x2 = GradedPoly::var(&c, c.base(1));
        let req = HigherBracketRequest::new(p.clone(), vec![x1.clone(), x2]).unwrap();
        assert_eq!(higher_poisson(&req).unwrap(), GradedPoly::one(&c));
        let req = HigherBracketRequest::new(p.clone(), vec![x1.clone(), x1.clone()]).unwrap();
        assert!(higher_poisson(&req).unwrap().is_zero());
        let req = HigherBracketRequest::new(p.clone(), vec![]).unwrap();
        assert!(higher_poisson(&req).unwrap().is_zero());
        let req = HigherBracketRequest::new(p, vec![x1.scale(&rat(2))]).unwrap();
        assert!(higher_poisson(&req).unwrap().is_zero());
    }

    #[test]
    fn sign_exponent_display() {
        assert_eq!(CALIBRATED.schouten[0].to_string(), "1+u+a+ua");
        assert_eq!(SignExponent::new(0, 0, 0, 0).to_string(), "0");
    }
}
