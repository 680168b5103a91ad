use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::chart::{Chart, Parity, VarKind, Variable};
use super::monomial::Monomial;
use super::subst::SubstitutionMap;
use super::trunc::{Grading, Truncation};
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Element of the supercommutative polynomial algebra of a chart, with
/// coefficients in Q[params].
///
/// Always normalized: monomials are canonical and no stored coefficient is
/// zero, so `==` is equality of the underlying algebra elements.
#[derive(Clone, Debug)]
pub struct GradedPoly {
    chart: Arc<Chart>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for GradedPoly {
    fn eq(&self, other: &Self) -> bool {
        same_chart(&self.chart, &other.chart) && self.terms == other.terms
    }
}

impl Eq for GradedPoly {}

fn same_chart(a: &Arc<Chart>, b: &Arc<Chart>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl GradedPoly {
    pub fn zero(chart: &Arc<Chart>) -> Self {
        GradedPoly {
            chart: chart.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(chart: &Arc<Chart>) -> Self {
        Self::constant(chart, Rational::one())
    }

    pub fn constant(chart: &Arc<Chart>, c: Rational) -> Self {
        Self::monomial(chart, Monomial::one(), c)
    }

    pub fn int(chart: &Arc<Chart>, n: i64) -> Self {
        Self::constant(chart, rat(n))
    }

    pub fn var(chart: &Arc<Chart>, v: Variable) -> Self {
        Self::monomial(chart, Monomial::var(v), Rational::one())
    }

    pub fn param(chart: &Arc<Chart>, index: usize) -> Self {
        Self::monomial(chart, Monomial::param(index, 1), Rational::one())
    }

    pub fn monomial(chart: &Arc<Chart>, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(chart);
        p.add_term(m, c);
        p
    }

    /// Product of variables in the given left-to-right order.
    pub fn product(chart: &Arc<Chart>, factors: &[Variable]) -> Self {
        let f: Vec<_> = factors.iter().map(|&v| (v, 1)).collect();
        match Monomial::from_factors(&f) {
            Some((m, neg)) => Self::monomial(
                chart,
                m,
                if neg {
                    -Rational::one()
                } else {
                    Rational::one()
                },
            ),
            None => Self::zero(chart),
        }
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term (coefficient of the empty monomial).
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_chart(&self, other: &GradedPoly) -> Result<()> {
        if same_chart(&self.chart, &other.chart) {
            Ok(())
        } else {
            Err(Error::ChartMismatch(
                self.chart.name().to_string(),
                other.chart.name().to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_chart(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_chart(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_chart(other)?;
        Ok(self.mul_filtered(other, |_| true))
    }

    /// Product keeping only monomials accepted by `keep`. Used to truncate
    /// while multiplying.
    pub(crate) fn mul_filtered(
        &self,
        other: &GradedPoly,
        mut keep: impl FnMut(&Monomial) -> bool,
    ) -> GradedPoly {
        let mut out = GradedPoly::zero(&self.chart);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, neg)) = ma.mul(mb) {
                    if !keep(&m) {
                        continue;
                    }
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> GradedPoly {
        if c.is_zero() {
            return GradedPoly::zero(&self.chart);
        }
        GradedPoly {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> GradedPoly {
        self.scale(&rat(n))
    }

    pub fn pow(&self, e: u32) -> GradedPoly {
        let mut acc = GradedPoly::one(&self.chart);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Left derivative with respect to `z`.
    pub fn left_deriv(&self, z: Variable) -> GradedPoly {
        let mut out = GradedPoly::zero(&self.chart);
        for (m, c) in &self.terms {
            if let Some((k, rest)) = m.left_deriv(z) {
                out.add_term(rest, c * rat(k));
            }
        }
        out
    }

    /// Parity if homogeneous; `None` for mixed. Zero counts as even.
    pub fn parity_of(&self) -> Option<Parity> {
        let mut parities = self.terms.keys().map(Monomial::parity);
        match parities.next() {
            None => Some(Parity::Even),
            Some(first) => parities.all(|p| p == first).then_some(first),
        }
    }

    pub fn is_homogeneous_of(&self, parity: Parity) -> bool {
        self.is_zero() || self.parity_of() == Some(parity)
    }

    pub fn parity_part(&self, parity: Parity) -> GradedPoly {
        self.filter(|m| m.parity() == parity)
    }

    /// `(even part, odd part)`
    pub fn split_parity(&self) -> (GradedPoly, GradedPoly) {
        (
            self.parity_part(Parity::Even),
            self.parity_part(Parity::Odd),
        )
    }

    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> GradedPoly {
        GradedPoly {
            chart: self.chart.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn contains_kind(&self, kind: VarKind) -> bool {
        self.terms.keys().any(|m| m.contains_kind(kind))
    }

    /// First variable (in canonical order) of one of the listed kinds.
    pub fn find_kind(&self, kinds: &[VarKind]) -> Option<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.vars().iter().map(|&(v, _)| v))
            .find(|v| kinds.contains(&v.kind))
    }

    pub(crate) fn forbid(&self, op: &'static str, kinds: &[VarKind]) -> Result<()> {
        match self.find_kind(kinds) {
            Some(v) => Err(Error::ForbiddenVariable {
                op,
                var: self.chart.var_name(v),
            }),
            None => Ok(()),
        }
    }

    /// Set every variable of the listed kinds to zero.
    pub fn restrict(&self, kinds: &[VarKind]) -> GradedPoly {
        self.filter(|m| !m.vars().iter().any(|(v, _)| kinds.contains(&v.kind)))
    }

    /// Fiberwise Euler field `sum_a z^a d/dz^a` over one family.
    pub fn fiber_euler(&self, family: VarKind) -> GradedPoly {
        let mut out = GradedPoly::zero(&self.chart);
        for (m, c) in &self.terms {
            let k = m.degree_in(|kind| kind == family);
            out.add_term(m.clone(), c * rat(k as i64));
        }
        out
    }

    pub fn degree_slice(&self, grading: Grading, k: u32) -> GradedPoly {
        self.filter(|m| grading.degree(m) == k)
    }

    pub fn max_degree(&self, grading: Grading) -> Option<u32> {
        self.terms.keys().map(|m| grading.degree(m)).max()
    }

    pub fn truncate(&self, t: &Truncation) -> GradedPoly {
        self.filter(|m| t.keeps(m))
    }

    pub fn mul_trunc(&self, other: &GradedPoly, t: &Truncation) -> GradedPoly {
        self.mul_filtered(other, |m| t.keeps(m))
    }

    /// Apply a substitution homomorphically.
    pub fn substitute(&self, s: &SubstitutionMap) -> Result<GradedPoly> {
        self.substitute_trunc(s, &Truncation::none())
    }

    /// Substitute, truncating every intermediate product.
    pub fn substitute_trunc(&self, s: &SubstitutionMap, t: &Truncation) -> Result<GradedPoly> {
        if !same_chart(&self.chart, s.chart()) {
            return Err(Error::ChartMismatch(
                self.chart.name().to_string(),
                s.chart().name().to_string(),
            ));
        }
        let mut cache: HashMap<(Variable, u32), GradedPoly> = HashMap::new();
        let mut out = GradedPoly::zero(&self.chart);
        for (m, c) in &self.terms {
            let mut acc = GradedPoly::monomial(&self.chart, m.params_only(), c.clone());
            for &(v, e) in m.vars() {
                let factor = cache
                    .entry((v, e))
                    .or_insert_with(|| {
                        let image = s.image(v);
                        let mut pw = GradedPoly::one(&self.chart);
                        for _ in 0..e {
                            pw = pw.mul_trunc(&image, t);
                        }
                        pw
                    })
                    .clone();
                acc = acc.mul_trunc(&factor, t);
                if acc.is_zero() {
                    break;
                }
            }
            for (mm, cc) in acc.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Evaluate base coordinates at rational values (odd ones must be zero
    /// or absent in `values`) and parameters at zero when `drop_params`.
    pub fn evaluate_base(&self, values: &[Rational], drop_params: bool) -> GradedPoly {
        let mut out = GradedPoly::zero(&self.chart);
        'terms: for (m, c) in &self.terms {
            if drop_params && !m.params().is_empty() {
                continue;
            }
            let mut coeff = c.clone();
            let mut kept = Vec::new();
            for &(v, e) in m.vars() {
                if v.kind == VarKind::Base {
                    if v.is_odd() {
                        continue 'terms;
                    }
                    let x = values
                        .get(v.index())
                        .cloned()
                        .unwrap_or_else(Rational::zero);
                    if x.is_zero() {
                        continue 'terms;
                    }
                    coeff *= num::pow(x, e as usize);
                } else {
                    kept.push((v, e));
                }
            }
            let (mut mono, neg) =
                Monomial::from_factors(&kept).expect("subset of a valid monomial");
            if !drop_params {
                mono = mono.mul(&m.params_only()).expect("params commute").0;
            }
            out.add_term(mono, if neg { -coeff } else { coeff });
        }
        out
    }

    /// Coefficients grouped by chart-variable monomial: each value is a
    /// polynomial in the formal parameters.
    pub fn coefficients(&self) -> BTreeMap<Monomial, GradedPoly> {
        let mut out: BTreeMap<Monomial, GradedPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.without_params())
                .or_insert_with(|| GradedPoly::zero(&self.chart))
                .add_term(m.params_only(), c.clone());
        }
        out
    }

    /// Largest absolute numerator/denominator, for diagnostics.
    pub fn height(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.numer().abs().max(c.denom().abs()))
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&GradedPoly> for &GradedPoly {
            type Output = GradedPoly;
            fn $method(self, rhs: &GradedPoly) -> GradedPoly {
                self.$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<GradedPoly> for GradedPoly {
            type Output = GradedPoly;
            fn $method(self, rhs: GradedPoly) -> GradedPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&GradedPoly> for GradedPoly {
            type Output = GradedPoly;
            fn $method(self, rhs: &GradedPoly) -> GradedPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<GradedPoly> for &GradedPoly {
            type Output = GradedPoly;
            fn $method(self, rhs: GradedPoly) -> GradedPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        GradedPoly {
            chart: self.chart.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        -&self
    }
}
