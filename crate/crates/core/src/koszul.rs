//! The odd Hamiltonian `K_P` on the cotangent bundle of the odd tangent
//! bundle and the higher Koszul brackets it generates on forms.

use serde::Serialize;

use crate::brackets::{self, BracketSigns, HigherBracketRequest, CALIBRATED};
use crate::error::{Error, Result};
use crate::graded::{GradedPoly, Parity, SubstitutionMap, VarKind};

const MOMENTA: [VarKind; 2] = [VarKind::MomentumBase, VarKind::MomentumFiber];

/// `K = alpha(P)`, a function of `(x, dx, p, pi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OddHamiltonian {
    k: GradedPoly,
    source: GradedPoly,
}

impl OddHamiltonian {
    pub fn k(&self) -> &GradedPoly {
        &self.k
    }

    pub fn source(&self) -> &GradedPoly {
        &self.source
    }

    pub fn into_poly(self) -> GradedPoly {
        self.k
    }
}

/// Sign `s` in `alpha([P,Q]) = s (alpha(P), alpha(Q))` under the calibrated
/// brackets. It does not depend on the parities.
pub fn morphism_sign(_p: Parity, _q: Parity) -> i64 {
    1
}

/// `K = (-1)^{a~ (P~+1)} dP/dx*_a(x,pi) p_a + dx^a dP/dx^a(x,pi)`, extended
/// linearly over the parity parts. For even `P` the sign is `(-1)^{a~}`.
pub fn alpha(p: &GradedPoly) -> Result<OddHamiltonian> {
    p.forbid(
        "alpha",
        &[
            VarKind::Fiber,
            VarKind::MomentumBase,
            VarKind::MomentumFiber,
        ],
    )?;
    let chart = p.chart();
    let to_pi = SubstitutionMap::new(
        chart,
        (0..chart.dim()).map(|a| {
            (
                chart.antifiber(a),
                GradedPoly::var(chart, chart.var(VarKind::MomentumFiber, a)),
            )
        }),
    )?;
    let mut k = GradedPoly::zero(chart);
    let (even, odd) = p.split_parity();
    for a in 0..chart.dim() {
        let pa = GradedPoly::var(chart, chart.var(VarKind::MomentumBase, a));
        for (part, flip) in [(&even, chart.parity(a).is_odd()), (&odd, false)] {
            let dstar = part.left_deriv(chart.antifiber(a)).substitute(&to_pi)?;
            if !dstar.is_zero() {
                let term = &dstar * &pa;
                k = if flip { k - term } else { k + term };
            }
        }
        let dbase = p.left_deriv(chart.base(a)).substitute(&to_pi)?;
        if !dbase.is_zero() {
            k = k + &GradedPoly::var(chart, chart.fiber(a)) * &dbase;
        }
    }
    Ok(OddHamiltonian {
        k,
        source: p.clone(),
    })
}

/// `[w_1,...,w_n]_P = (...(K,w_1),...,w_n)|_{p=pi=0}`.
pub fn higher_koszul(p: &GradedPoly, forms: &[GradedPoly]) -> Result<GradedPoly> {
    higher_koszul_with(&CALIBRATED.poisson, p, forms)
}

pub fn higher_koszul_with(
    signs: &BracketSigns,
    p: &GradedPoly,
    forms: &[GradedPoly],
) -> Result<GradedPoly> {
    for w in forms {
        w.forbid(
            "koszul",
            &[
                VarKind::AntiFiber,
                VarKind::MomentumBase,
                VarKind::MomentumFiber,
            ],
        )?;
    }
    let mut acc = alpha(p)?.into_poly();
    for (i, w) in forms.iter().enumerate() {
        let remaining = (forms.len() - i) as u32;
        acc = acc.filter(|m| m.degree_in(|k| k.is_momentum()) <= remaining);
        acc = brackets::canonical_poisson_with(signs, &acc, w)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc.restrict(&MOMENTA))
}

/// Which arguments of a Koszul bracket are differentials of the given
/// functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DifferentialPattern {
    /// `[f_1,...,f_n]`: compared against `(-1)^eps {f_1}` for `n = 1` and
    /// zero otherwise.
    Functions,
    /// `[f_1, df_2, ..., df_n]` against `(-1)^eps {f_1,...,f_n}`.
    LeadingFunction,
    /// `[df_1, ..., df_n]` against `(-1)^{eps+1} d{f_1,...,f_n}`.
    Differentials,
}

/// Sign rule for the function/differential formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EpsilonRule {
    /// `eps = (n-1) f~_1 + ... + f~_{n-1} + n`.
    Displayed,
    /// `eps = 1` for every `n` and parity pattern, which is what the
    /// calibrated brackets produce.
    Calibrated,
}

impl EpsilonRule {
    pub fn eval(self, parities: &[Parity]) -> u32 {
        match self {
            EpsilonRule::Displayed => epsilon(parities),
            EpsilonRule::Calibrated => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KoszulComparison {
    pub lhs: GradedPoly,
    pub rhs: GradedPoly,
    pub difference: GradedPoly,
    pub epsilon: u32,
}

/// `eps = (n-1) f~_1 + (n-2) f~_2 + ... + f~_{n-1} + n (mod 2)`.
pub fn epsilon(parities: &[Parity]) -> u32 {
    let n = parities.len();
    let weighted: usize = parities
        .iter()
        .enumerate()
        .map(|(i, p)| (n - 1 - i) * p.bit() as usize)
        .sum();
    ((weighted + n) % 2) as u32
}

/// Compares a Koszul bracket of functions and differentials against the
/// higher Poisson bracket, with the displayed sign.
pub fn koszul_on_differentials(
    p: &GradedPoly,
    functions: &[GradedPoly],
    pattern: DifferentialPattern,
) -> Result<KoszulComparison> {
    koszul_on_differentials_with(p, functions, pattern, EpsilonRule::Displayed)
}

pub fn koszul_on_differentials_with(
    p: &GradedPoly,
    functions: &[GradedPoly],
    pattern: DifferentialPattern,
    rule: EpsilonRule,
) -> Result<KoszulComparison> {
    let parities = functions
        .iter()
        .map(|f| f.parity_of().ok_or(Error::MixedParity { op: "koszul" }))
        .collect::<Result<Vec<_>>>()?;
    let eps = rule.eval(&parities);
    let n = functions.len();
    let forms = functions
        .iter()
        .enumerate()
        .map(|(i, f)| match pattern {
            DifferentialPattern::Functions => Ok(f.clone()),
            DifferentialPattern::LeadingFunction if i == 0 => Ok(f.clone()),
            _ => brackets::de_rham(f),
        })
        .collect::<Result<Vec<_>>>()?;
    let lhs = higher_koszul(p, &forms)?;

    let poisson =
        || brackets::higher_poisson(&HigherBracketRequest::new(p.clone(), functions.to_vec())?);
    let sign = |e: u32, u: GradedPoly| if e % 2 == 0 { u } else { -u };
    let rhs = match pattern {
        DifferentialPattern::Functions if n == 1 => sign(eps, poisson()?),
        DifferentialPattern::Functions => GradedPoly::zero(p.chart()),
        DifferentialPattern::LeadingFunction => sign(eps, poisson()?),
        DifferentialPattern::Differentials => sign(eps + 1, brackets::de_rham(&poisson()?)?),
    };
    let difference = &lhs - &rhs;
    Ok(KoszulComparison {
        lhs,
        rhs,
        difference,
        epsilon: eps,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graded::{ratio, Chart};

    #[test]
    fn alpha_of_a_function_is_its_differential() {
        let c = Arc::new(Chart::standard(2, 0));
        let f = &GradedPoly::var(&c, c.base(0)).pow(2) * &GradedPoly::var(&c, c.base(1));
        assert_eq!(
            alpha(&f).unwrap().into_poly(),
            brackets::de_rham(&f).unwrap()
        );
        assert!(alpha(&GradedPoly::zero(&c)).unwrap().k().is_zero());
    }

    #[test]
    fn alpha_of_quadratic_bivector() {
        // P = 1/2 P^{ab} x*_b x*_a with P^{12} = x1 = -P^{21}
        let c = Arc::new(Chart::standard(2, 0));
        let x1 = GradedPoly::var(&c, c.base(0));
        let p = &x1 * &GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
        let k = alpha(&p).unwrap().into_poly();
        let v = |kind, a| GradedPoly::var(&c, c.var(kind, a));
        // -P^{ab} pi_b p_a + 1/2 dP^{ab} pi_b pi_a
        let expected = -(&(&x1 * &v(VarKind::MomentumFiber, 1)) * &v(VarKind::MomentumBase, 0))
            + &(&x1 * &v(VarKind::MomentumFiber, 0)) * &v(VarKind::MomentumBase, 1)
            + (&v(VarKind::Fiber, 0)
                * &(&v(VarKind::MomentumFiber, 1) * &v(VarKind::MomentumFiber, 0)))
                .scale(&ratio(1, 2))
                .scale_int(2);
        assert_eq!(k, expected);
    }

    #[test]
    fn epsilon_values() {
        use Parity::*;
        assert_eq!(epsilon(&[Even]), 1);
        assert_eq!(epsilon(&[Even, Even]), 0);
        assert_eq!(epsilon(&[Odd, Even]), 1);
        assert_eq!(epsilon(&[Odd, Odd, Even]), 0);
    }

    #[test]
    fn classical_relations() {
        let c = Arc::new(Chart::standard(2, 0));
        let x1 = GradedPoly::var(&c, c.base(0));
        let x2 = GradedPoly::var(&c, c.base(1));
        let p = &x1 * &GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
        let dx1 = GradedPoly::var(&c, c.fiber(0));
        let dx2 = GradedPoly::var(&c, c.fiber(1));
        assert!(higher_koszul(&p, &[x1.clone(), x2.clone()])
            .unwrap()
            .is_zero());
        // P^{12} = x1
        assert_eq!(
            higher_koszul(&p, &[x1.clone(), dx2.clone()]).unwrap(),
            -x1.clone()
        );
        assert_eq!(higher_koszul(&p, &[dx1.clone(), dx2]).unwrap(), dx1);
    }
}
