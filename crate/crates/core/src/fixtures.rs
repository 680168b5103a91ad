//! Worked instances: the classical planar bivector, the shifted quadratic
//! form, and the cubic form with a formal parameter.

use std::sync::Arc;

use num::Zero;

use crate::error::Result;
use crate::graded::{ratio, Chart, GradedPoly, Parity};
use crate::legendre::{self, linalg};

/// `R^2` with `P = x*_2 x*_1`.
pub fn classical() -> (Arc<Chart>, GradedPoly) {
    let c = Arc::new(Chart::standard(2, 0));
    let p = GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
    (c, p)
}

/// `R^{2|2}`: `x1, x2` even, `x3, x4` odd.
pub fn superplane() -> Arc<Chart> {
    Arc::new(Chart::standard(2, 2))
}

/// `R^{2|2}` with a formal parameter `lambda`.
pub fn superplane_lambda() -> Arc<Chart> {
    Arc::new(
        Chart::standard(2, 2)
            .with_params(["lambda"])
            .expect("valid parameter name"),
    )
}

fn v(c: &Arc<Chart>, kind: crate::graded::VarKind, a: usize) -> GradedPoly {
    GradedPoly::var(c, c.var(kind, a))
}

/// Constant symplectic `dx1 dx2 + dx3 dx4` on a `R^{2|2}` chart.
pub fn omega2(c: &Arc<Chart>) -> GradedPoly {
    use crate::graded::VarKind::Fiber;
    &v(c, Fiber, 0) * &v(c, Fiber, 1) + &v(c, Fiber, 2) * &v(c, Fiber, 3)
}

#[derive(Clone, Debug)]
pub struct ShiftedInstance {
    pub chart: Arc<Chart>,
    /// Odd potential of the linear part.
    pub chi: GradedPoly,
    pub omega1: GradedPoly,
    pub omega2: GradedPoly,
    pub omega: GradedPoly,
}

/// `w = d chi + w_2` on `R^{2|2}` with `chi = x1 x3 + x2^2 x4`.
pub fn shifted() -> Result<ShiftedInstance> {
    use crate::graded::VarKind::Base;
    let c = superplane();
    let chi = &v(&c, Base, 0) * &v(&c, Base, 2) + &v(&c, Base, 1).pow(2) * &v(&c, Base, 3);
    debug_assert_eq!(chi.parity_of(), Some(Parity::Odd));
    let omega1 = crate::brackets::de_rham(&chi)?;
    let omega2 = omega2(&c);
    let omega = &omega1 + &omega2;
    Ok(ShiftedInstance {
        chart: c,
        chi,
        omega1,
        omega2,
        omega,
    })
}

impl ShiftedInstance {
    /// `P = 1/2 (-1)^{a~+1} w^{ab} (x*_b - d_b chi)(x*_a - d_a chi)` with
    /// `w^{ab}` the inverse of the components of `w_2`.
    pub fn closed_form(&self) -> Result<GradedPoly> {
        let c = &self.chart;
        let comps = legendre::constant_matrix(&legendre::form_components(&self.omega2)?);
        let inv = linalg::invert(&comps).ok_or(crate::error::Error::SingularLinearPart)?;
        let shifted =
            |a: usize| GradedPoly::var(c, c.antifiber(a)) - self.chi.left_deriv(c.base(a));
        let mut p = GradedPoly::zero(c);
        for a in 0..c.dim() {
            for b in 0..c.dim() {
                if inv[a][b].is_zero() {
                    continue;
                }
                let mut coeff = &inv[a][b] * ratio(1, 2);
                if !c.parity(a).is_odd() {
                    coeff = -coeff;
                }
                p = p + (&shifted(b) * &shifted(a)).scale(&coeff);
            }
        }
        Ok(p)
    }
}

#[derive(Clone, Debug)]
pub struct CubicInstance {
    pub chart: Arc<Chart>,
    pub omega1: GradedPoly,
    pub omega2: GradedPoly,
    /// Cubic part without the parameter.
    pub omega3: GradedPoly,
    /// `w_1 + w_2 + lambda w_3`.
    pub omega: GradedPoly,
}

/// Constant-coefficient `w = dx3 + (dx1 dx2 + dx3 dx4) + lambda (dx1 dx2 dx3
/// + dx3^2 dx4)` on `R^{2|2}`.
pub fn cubic() -> CubicInstance {
    use crate::graded::VarKind::Fiber;
    let c = superplane_lambda();
    let omega1 = v(&c, Fiber, 2);
    let omega2 = omega2(&c);
    let omega3 = &(&v(&c, Fiber, 0) * &v(&c, Fiber, 1)) * &v(&c, Fiber, 2)
        + &v(&c, Fiber, 2).pow(2) * &v(&c, Fiber, 3);
    let lambda = GradedPoly::param(&c, 0);
    let omega = &omega1 + &omega2 + &lambda * &omega3;
    CubicInstance {
        chart: c,
        omega1,
        omega2,
        omega3,
        omega,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_parities() {
        let s = shifted().unwrap();
        assert_eq!(s.omega.parity_of(), Some(Parity::Even));
        let k = cubic();
        assert_eq!(k.omega.parity_of(), Some(Parity::Even));
        assert_eq!(k.omega3.parity_of(), Some(Parity::Even));
    }
}
