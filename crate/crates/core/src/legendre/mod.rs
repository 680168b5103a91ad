//! The maps phi_P and psi_omega between the odd tangent and odd cotangent
//! bundles, their formal inversion and the fiberwise Legendre transform.

pub mod linalg;

use std::sync::Arc;

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{
    Chart, GradedPoly, Monomial, Parity, Rational, SubstitutionMap, Truncation, VarKind, Variable,
};
use linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    /// phi_P: pulls back `dx^a` to functions of `(x, x*)`.
    CotangentToTangent,
    /// psi_omega: pulls back `x*_a` to functions of `(x, dx)`.
    TangentToCotangent,
}

impl Direction {
    /// Variables replaced by the pullback.
    pub fn source_kind(self) -> VarKind {
        match self {
            Direction::CotangentToTangent => VarKind::Fiber,
            Direction::TangentToCotangent => VarKind::AntiFiber,
        }
    }

    /// Variables the images are written in.
    pub fn target_kind(self) -> VarKind {
        match self {
            Direction::CotangentToTangent => VarKind::AntiFiber,
            Direction::TangentToCotangent => VarKind::Fiber,
        }
    }
}

/// Fiber-preserving map given by its pullback on fiber coordinates; base
/// coordinates are fixed.
#[derive(Clone, Debug)]
pub struct FiberMap {
    direction: Direction,
    source: Option<GradedPoly>,
    subst: SubstitutionMap,
}

impl FiberMap {
    /// `phi_P^*(dx^a) = (-1)^{a~+1} dP/dx*_a`.
    pub fn phi(p: &GradedPoly) -> Result<Self> {
        if !p.is_homogeneous_of(Parity::Even) {
            return Err(Error::WrongParity {
                op: "phi",
                expected: Parity::Even,
            });
        }
        p.forbid(
            "phi",
            &[
                VarKind::Fiber,
                VarKind::MomentumBase,
                VarKind::MomentumFiber,
            ],
        )?;
        let chart = p.chart();
        let images = (0..chart.dim()).map(|a| {
            let d = p.left_deriv(chart.antifiber(a));
            if chart.parity(a).is_odd() {
                d
            } else {
                -d
            }
        });
        let mut map = Self::from_images(chart, Direction::CotangentToTangent, images)?;
        map.source = Some(p.clone());
        Ok(map)
    }

    /// `psi_w^*(x*_a) = dw/d(dx^a)`.
    pub fn psi(w: &GradedPoly) -> Result<Self> {
        if !w.is_homogeneous_of(Parity::Even) {
            return Err(Error::WrongParity {
                op: "psi",
                expected: Parity::Even,
            });
        }
        w.forbid(
            "psi",
            &[
                VarKind::AntiFiber,
                VarKind::MomentumBase,
                VarKind::MomentumFiber,
            ],
        )?;
        let chart = w.chart();
        let images = (0..chart.dim()).map(|a| w.left_deriv(chart.fiber(a)));
        let mut map = Self::from_images(chart, Direction::TangentToCotangent, images)?;
        map.source = Some(w.clone());
        Ok(map)
    }

    /// Map with explicit images of the source fiber coordinates, in
    /// coordinate order.
    pub fn from_images<I>(chart: &Arc<Chart>, direction: Direction, images: I) -> Result<Self>
    where
        I: IntoIterator<Item = GradedPoly>,
    {
        let src = direction.source_kind();
        let forbidden: Vec<VarKind> = VarKind::ALL
            .into_iter()
            .filter(|&k| k != VarKind::Base && k != direction.target_kind())
            .collect();
        let mut subst = SubstitutionMap::identity(chart);
        let mut count = 0;
        for (a, image) in images.into_iter().enumerate() {
            image.forbid("fiber map", &forbidden)?;
            subst.assign(chart.var(src, a), image)?;
            count += 1;
        }
        if count != chart.dim() {
            return Err(Error::Unsupported(format!(
                "fiber map needs {} images, got {count}",
                chart.dim()
            )));
        }
        Ok(FiberMap {
            direction,
            source: None,
            subst,
        })
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn source(&self) -> Option<&GradedPoly> {
        self.source.as_ref()
    }

    pub fn substitution(&self) -> &SubstitutionMap {
        &self.subst
    }

    pub fn chart(&self) -> &Arc<Chart> {
        self.subst.chart()
    }

    pub fn image(&self, a: usize) -> GradedPoly {
        self.subst
            .image(self.chart().var(self.direction.source_kind(), a))
    }

    pub fn pullback(&self, u: &GradedPoly) -> Result<GradedPoly> {
        u.substitute(&self.subst)
    }

    /// Coefficient matrix of the part linear in the target fiber
    /// coordinates, at the chart origin with parameters set to zero:
    /// `image_a = sum_b A[a][b] t_b + ...`.
    pub fn linear_part(&self) -> Matrix {
        let chart = self.chart();
        let n = chart.dim();
        let tgt = self.direction.target_kind();
        let origin = vec![Rational::zero(); n];
        (0..n)
            .map(|a| {
                let at0 = self.image(a).evaluate_base(&origin, true);
                (0..n)
                    .map(|b| at0.coefficient(&Monomial::var(chart.var(tgt, b))))
                    .collect()
            })
            .collect()
    }
}

pub fn phi_pullback(p: &GradedPoly, u: &GradedPoly) -> Result<GradedPoly> {
    FiberMap::phi(p)?.pullback(u)
}

pub fn psi_pullback(w: &GradedPoly, u: &GradedPoly) -> Result<GradedPoly> {
    FiberMap::psi(w)?.pullback(u)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HessianReport {
    pub nondegenerate: bool,
    /// `d^2 P / dx*_a dx*_b` at the evaluation point.
    pub matrix: Matrix,
}

/// Block invertibility of the fiber Hessian of `P` at `x* = 0`, odd base
/// coordinates zero, even base coordinates at `base_point` (missing
/// entries are zero) and parameters zero.
pub fn hessian_nondegenerate(p: &GradedPoly, base_point: &[Rational]) -> Result<HessianReport> {
    if !p.is_homogeneous_of(Parity::Even) {
        return Err(Error::WrongParity {
            op: "nondeg",
            expected: Parity::Even,
        });
    }
    let chart = p.chart();
    let n = chart.dim();
    let at = p.evaluate_base(base_point, true);
    let matrix: Matrix = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    at.left_deriv(chart.antifiber(b))
                        .left_deriv(chart.antifiber(a))
                        .constant_term()
                })
                .collect()
        })
        .collect();
    let block = |odd_fiber: bool| -> Vec<usize> {
        (0..n)
            .filter(|&a| chart.antifiber(a).is_odd() == odd_fiber)
            .collect()
    };
    let nondegenerate = n > 0
        && [block(false), block(true)]
            .iter()
            .all(|idx| linalg::invert(&linalg::submatrix(&matrix, idx)).is_some());
    Ok(HessianReport {
        nondegenerate,
        matrix,
    })
}

/// Formal inverse of a fiber map.
#[derive(Clone, Debug)]
pub struct InversionResult {
    /// Pullback of the inverse map: target fiber coordinates in terms of
    /// base and source fiber coordinates.
    pub inverse: SubstitutionMap,
    pub truncation: Truncation,
    pub iterations: usize,
    /// `m(h(s)) - s` per source coordinate, truncated.
    pub residual: Vec<GradedPoly>,
    /// `h(m(t)) - t` per target coordinate, truncated.
    pub reverse_residual: Vec<GradedPoly>,
}

impl InversionResult {
    pub fn is_exact(&self) -> bool {
        self.residual
            .iter()
            .chain(&self.reverse_residual)
            .all(GradedPoly::is_zero)
    }

    pub fn pullback(&self, u: &GradedPoly) -> Result<GradedPoly> {
        u.substitute_trunc(&self.inverse, &self.truncation)
    }
}

/// Solve `m(h) = id` by the fixed-point iteration
/// `h <- h + A0^{-1} (s - m(h))`, truncating every intermediate product.
pub fn invert_fiber_map(m: &FiberMap, t: &Truncation) -> Result<InversionResult> {
    let chart = m.chart().clone();
    let n = chart.dim();
    let src = m.direction.source_kind();
    let tgt = m.direction.target_kind();
    let b = linalg::invert(&m.linear_part()).ok_or(Error::SingularLinearPart)?;

    let src_vars: Vec<Variable> = chart.vars(src).collect();
    let tgt_vars: Vec<Variable> = chart.vars(tgt).collect();
    let images: Vec<GradedPoly> = (0..n).map(|a| m.image(a).truncate(t)).collect();
    let apply_b = |v: &[GradedPoly]| -> Vec<GradedPoly> {
        (0..n)
            .map(|i| {
                (0..n).fold(GradedPoly::zero(&chart), |acc, j| {
                    if b[i][j].is_zero() {
                        acc
                    } else {
                        acc + v[j].scale(&b[i][j])
                    }
                })
            })
            .collect()
    };
    let s: Vec<GradedPoly> = src_vars
        .iter()
        .map(|&v| GradedPoly::var(&chart, v))
        .collect();

    let forward_error = |h: &[GradedPoly]| -> Result<Vec<GradedPoly>> {
        let map = SubstitutionMap::new(&chart, tgt_vars.iter().copied().zip(h.iter().cloned()))?;
        (0..n)
            .map(|a| Ok((&s[a] - &images[a].substitute_trunc(&map, t)?).truncate(t)))
            .collect()
    };

    let mut h: Vec<GradedPoly> = apply_b(&s).iter().map(|g| g.truncate(t)).collect();
    let cap = t.total_order() as usize + 2 * n + 8;
    let mut iterations = 0;
    loop {
        let err = forward_error(&h)?;
        if err.iter().all(GradedPoly::is_zero) {
            break;
        }
        iterations += 1;
        if iterations > cap {
            return Err(Error::NoStabilization(cap));
        }
        let step = apply_b(&err);
        for (hi, di) in h.iter_mut().zip(step) {
            *hi = (&*hi + &di).truncate(t);
        }
    }

    let inverse = SubstitutionMap::new(&chart, tgt_vars.iter().copied().zip(h.iter().cloned()))?;
    let residual = forward_error(&h)?.into_iter().map(|e| -e).collect();
    let reverse_residual = tgt_vars
        .iter()
        .zip(&h)
        .map(|(&tv, hb)| {
            let back = hb.substitute_trunc(m.substitution(), t)?;
            Ok((&back - &GradedPoly::var(&chart, tv)).truncate(t))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InversionResult {
        inverse,
        truncation: *t,
        iterations,
        residual,
        reverse_residual,
    })
}

/// `w = (phi_P^*)^{-1}(E(P) - P)` with `E` the Euler field in `x*`.
pub fn legendre_transform(p: &GradedPoly, t: &Truncation) -> Result<GradedPoly> {
    let inv = invert_fiber_map(&FiberMap::phi(p)?, t)?;
    inv.pullback(&(&p.fiber_euler(VarKind::AntiFiber) - p))
}

/// `P = (psi_w^*)^{-1}(E(w) - w)` with `E` the Euler field in `dx`.
pub fn legendre_inverse(w: &GradedPoly, t: &Truncation) -> Result<GradedPoly> {
    let inv = invert_fiber_map(&FiberMap::psi(w)?, t)?;
    inv.pullback(&(&w.fiber_euler(VarKind::Fiber) - w))
}

/// `w' = (phi_P^*)^{-1} P`.
pub fn omega_prime(p: &GradedPoly, t: &Truncation) -> Result<GradedPoly> {
    let inv = invert_fiber_map(&FiberMap::phi(p)?, t)?;
    inv.pullback(p)
}

/// Components `P^{ab}` of a fiber-quadratic multivector, read off from
/// `phi_P^*(dx^a) = P^{ab} x*_b` (coefficient written to the left of
/// `x*_b`). Parts of other fiber degree are ignored.
pub fn bivector_components(p: &GradedPoly) -> Result<Vec<Vec<GradedPoly>>> {
    let phi = FiberMap::phi(p)?;
    Ok(linear_components(&phi))
}

/// Components `w_{ba}` of a fiber-quadratic form, read off from
/// `psi_w^*(x*_a) = dx^b w_{ba}`; entry `[b][a]` holds `w_{ba}`.
pub fn form_components(w: &GradedPoly) -> Result<Vec<Vec<GradedPoly>>> {
    let psi = FiberMap::psi(w)?;
    let chart = psi.chart().clone();
    let n = chart.dim();
    let mut out = vec![vec![GradedPoly::zero(&chart); n]; n];
    for a in 0..n {
        let image = psi.image(a);
        for (b, row) in out.iter_mut().enumerate() {
            let dx = chart.fiber(b);
            row[a] = image
                .filter(|m| m.degree_in(|k| k == VarKind::Fiber) == 1)
                .left_deriv(dx);
        }
    }
    Ok(out)
}

fn linear_components(m: &FiberMap) -> Vec<Vec<GradedPoly>> {
    let chart = m.chart().clone();
    let n = chart.dim();
    let tgt = m.direction.target_kind();
    (0..n)
        .map(|a| {
            let image = m.image(a);
            (0..n)
                .map(|b| {
                    let v = chart.var(tgt, b);
                    let mut out = GradedPoly::zero(&chart);
                    for (mono, c) in image.terms() {
                        let vars = mono.vars();
                        if vars.last().map(|&(w, e)| (w, e)) == Some((v, 1))
                            && mono.degree_in(|k| k == tgt) == 1
                        {
                            let rest = Monomial::from_factors(&vars[..vars.len() - 1])
                                .expect("prefix of a canonical monomial")
                                .0
                                .mul(&mono.params_only())
                                .expect("params commute")
                                .0;
                            out = out + GradedPoly::monomial(&chart, rest, c.clone());
                        }
                    }
                    out
                })
                .collect()
        })
        .collect()
}

/// Constant terms of a matrix of polynomials.
pub fn constant_matrix(m: &[Vec<GradedPoly>]) -> Matrix {
    m.iter()
        .map(|row| row.iter().map(GradedPoly::constant_term).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{rat, DEFAULT_TRUNCATION};

    fn r2() -> Arc<Chart> {
        Arc::new(Chart::standard(2, 0))
    }

    #[test]
    fn phi_on_example_bivector() {
        let c = r2();
        let p = GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
        let dx1 = GradedPoly::var(&c, c.fiber(0));
        let dx2 = GradedPoly::var(&c, c.fiber(1));
        let xs1 = GradedPoly::var(&c, c.antifiber(0));
        let xs2 = GradedPoly::var(&c, c.antifiber(1));
        assert_eq!(phi_pullback(&p, &dx1).unwrap(), xs2);
        assert_eq!(phi_pullback(&p, &dx2).unwrap(), -xs1.clone());
        let f = GradedPoly::var(&c, c.base(0)).pow(2);
        assert_eq!(phi_pullback(&p, &f).unwrap(), f);
        assert!(matches!(
            phi_pullback(&xs1, &dx1),
            Err(Error::WrongParity { .. })
        ));
    }

    #[test]
    fn psi_on_constant_form() {
        let c = r2();
        let w = -GradedPoly::product(&c, &[c.fiber(0), c.fiber(1)]);
        let xs1 = GradedPoly::var(&c, c.antifiber(0));
        // w_12 = 1, so x*_1 -> dx^2 w_21 = -dx^2
        assert_eq!(
            psi_pullback(&w, &xs1).unwrap(),
            -GradedPoly::var(&c, c.fiber(1))
        );
        let f = GradedPoly::var(&c, c.base(1));
        assert_eq!(psi_pullback(&w, &f).unwrap(), f);
        assert!(psi_pullback(&f, &xs1).unwrap().is_zero());
    }

    #[test]
    fn hessian_examples() {
        let c = r2();
        let p = GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
        assert!(hessian_nondegenerate(&p, &[]).unwrap().nondegenerate);
        let q = GradedPoly::product(&c, &[c.base(0), c.antifiber(0), c.antifiber(1)]);
        assert!(!hessian_nondegenerate(&q, &[rat(0)]).unwrap().nondegenerate);
        assert!(hessian_nondegenerate(&q, &[rat(1)]).unwrap().nondegenerate);
        assert!(
            !hessian_nondegenerate(&GradedPoly::zero(&c), &[])
                .unwrap()
                .nondegenerate
        );
    }

    #[test]
    fn classical_transform_and_back() {
        let c = r2();
        let p = GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
        let w = legendre_transform(&p, &DEFAULT_TRUNCATION).unwrap();
        assert_eq!(w, -GradedPoly::product(&c, &[c.fiber(0), c.fiber(1)]));
        assert_eq!(legendre_inverse(&w, &DEFAULT_TRUNCATION).unwrap(), p);
        assert_eq!(omega_prime(&p, &DEFAULT_TRUNCATION).unwrap(), w);
    }

    #[test]
    fn linear_map_inverse_is_exact() {
        let c = r2();
        let xs = |a| GradedPoly::var(&c, c.antifiber(a));
        let images = vec![
            xs(0).scale_int(2) + xs(1),
            xs(0).scale_int(7) + xs(1).scale_int(4),
        ];
        let m = FiberMap::from_images(&c, Direction::CotangentToTangent, images).unwrap();
        let inv = invert_fiber_map(&m, &Truncation::none()).unwrap();
        assert!(inv.is_exact());
        let dx = |a| GradedPoly::var(&c, c.fiber(a));
        assert_eq!(
            inv.inverse.image(c.antifiber(0)),
            dx(0).scale_int(4) - dx(1)
        );
    }

    #[test]
    fn components_of_example() {
        let c = r2();
        let p = GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
        let pm = constant_matrix(&bivector_components(&p).unwrap());
        assert_eq!(pm, vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]);
        let w = legendre_transform(&p, &Truncation::none()).unwrap();
        let wm = constant_matrix(&form_components(&w).unwrap());
        assert_eq!(wm, vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]);
    }

    #[test]
    fn singular_linear_part_is_an_error() {
        let c = r2();
        let p = GradedPoly::product(&c, &[c.base(0), c.antifiber(1), c.antifiber(0)]);
        assert_eq!(
            legendre_transform(&p, &DEFAULT_TRUNCATION).unwrap_err(),
            Error::SingularLinearPart
        );
    }
}
