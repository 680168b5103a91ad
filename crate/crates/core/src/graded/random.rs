//! Seeded fixture generator for property tests and checker fixtures.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::chart::{Chart, Parity, VarKind, Variable};
use super::monomial::Monomial;
use super::poly::{rat, ratio, GradedPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RandomSpec {
    /// Variable families to draw from, each with a maximal degree.
    pub kinds: Vec<(VarKind, u32)>,
    pub max_terms: usize,
    /// Maximal degree in the chart's `lambda` parameter (ignored when the
    /// chart has none).
    pub lambda_degree: u32,
    /// Integer coefficients are drawn from `-coeff_bound..=coeff_bound`.
    pub coeff_bound: i64,
}

impl RandomSpec {
    pub fn new(kinds: &[(VarKind, u32)]) -> Self {
        RandomSpec {
            kinds: kinds.to_vec(),
            max_terms: 4,
            lambda_degree: 0,
            coeff_bound: 3,
        }
    }

    pub fn terms(mut self, n: usize) -> Self {
        self.max_terms = n.max(1);
        self
    }

    pub fn lambda(mut self, d: u32) -> Self {
        self.lambda_degree = d;
        self
    }

    /// Multivector fields: base coordinates and `x*`.
    pub fn multivector(base: u32, fiber: u32) -> Self {
        Self::new(&[(VarKind::Base, base), (VarKind::AntiFiber, fiber)])
    }

    /// Forms: base coordinates and `dx`.
    pub fn form(base: u32, fiber: u32) -> Self {
        Self::new(&[(VarKind::Base, base), (VarKind::Fiber, fiber)])
    }

    /// Functions on the base.
    pub fn function(base: u32) -> Self {
        Self::new(&[(VarKind::Base, base)])
    }
}

fn odd_available(chart: &Chart, spec: &RandomSpec) -> Option<Variable> {
    spec.kinds
        .iter()
        .filter(|(_, d)| *d >= 1)
        .flat_map(|&(k, _)| chart.vars(k).collect::<Vec<_>>())
        .find(|v| v.is_odd())
}

/// Deterministic random polynomial of the requested parity.
pub fn random_poly(
    chart: &Arc<Chart>,
    spec: &RandomSpec,
    parity: Parity,
    seed: u64,
) -> Result<GradedPoly> {
    let odd_var = odd_available(chart, spec);
    if parity == Parity::Odd && odd_var.is_none() {
        return Err(Error::UnachievableParity(parity));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lambda = chart.lambda();
    let nterms = rng.gen_range(1..=spec.max_terms);
    let mut out = GradedPoly::zero(chart);
    for _ in 0..nterms {
        for _attempt in 0..24 {
            let mut factors: Vec<(Variable, u32)> = Vec::new();
            for &(kind, maxdeg) in &spec.kinds {
                if chart.dim() == 0 {
                    break;
                }
                let d = rng.gen_range(0..=maxdeg);
                for _ in 0..d {
                    let v = chart.var(kind, rng.gen_range(0..chart.dim()));
                    match factors.iter_mut().find(|(w, _)| *w == v) {
                        Some(_) if v.is_odd() => {}
                        Some(entry) => entry.1 += 1,
                        None => factors.push((v, 1)),
                    }
                }
            }
            let Some((mut mono, neg)) = Monomial::from_factors(&factors) else {
                continue;
            };
            if mono.parity() != parity {
                continue;
            }
            if let (Some(l), true) = (lambda, spec.lambda_degree > 0) {
                let e = rng.gen_range(0..=spec.lambda_degree);
                mono = mono.mul(&Monomial::param(l, e)).expect("params commute").0;
            }
            let mut n = 0;
            while n == 0 {
                n = rng.gen_range(-spec.coeff_bound..=spec.coeff_bound);
            }
            let c = if rng.gen_bool(0.25) {
                ratio(n, 2)
            } else {
                rat(n)
            };
            out.add_term(mono, if neg { -c } else { c });
            break;
        }
    }
    if out.is_zero() {
        out = match parity {
            Parity::Even => GradedPoly::one(chart),
            Parity::Odd => GradedPoly::var(chart, odd_var.expect("checked above")),
        };
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        let c = Arc::new(Chart::standard(2, 0));
        let spec = RandomSpec::new(&[(VarKind::AntiFiber, 2)]);
        let a = random_poly(&c, &spec, Parity::Even, 7).unwrap();
        let b = random_poly(&c, &spec, Parity::Even, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.parity_of(), Some(Parity::Even));
    }

    #[test]
    fn degree_zero_gives_constant() {
        let c = Arc::new(Chart::standard(2, 0));
        let spec = RandomSpec::new(&[(VarKind::AntiFiber, 0)]);
        let p = random_poly(&c, &spec, Parity::Even, 1).unwrap();
        assert!(p.terms().all(|(m, _)| m.is_one()));
    }

    #[test]
    fn odd_request_on_superchart() {
        let c = Arc::new(Chart::standard(1, 1));
        let spec = RandomSpec::multivector(2, 2);
        let p = random_poly(&c, &spec, Parity::Odd, 3).unwrap();
        assert_eq!(p.parity_of(), Some(Parity::Odd));
    }

    #[test]
    fn unachievable_parity() {
        let c = Arc::new(Chart::standard(2, 0));
        let spec = RandomSpec::function(3);
        assert_eq!(
            random_poly(&c, &spec, Parity::Odd, 0).unwrap_err(),
            Error::UnachievableParity(Parity::Odd)
        );
    }
}
