//! Identity checkers. Each evaluates both sides of an identity along
//! independent paths and reports the exact residual.

use std::fmt;
use std::sync::Arc;

use num::Zero;
use serde::Serialize;

use crate::brackets::{self, HigherBracketRequest};
use crate::error::{Error, Result};
use crate::graded::{
    random_poly, rat, ratio, Chart, GradedPoly, Monomial, Parity, RandomSpec, Truncation, VarKind,
    Variable,
};
use crate::koszul::{self, DifferentialPattern};
use crate::legendre::{self, linalg, linalg::Matrix};

#[derive(Clone, Debug, PartialEq)]
pub struct BracketReport {
    pub identity: String,
    pub chart: String,
    pub inputs: Vec<String>,
    /// First nonzero case residual, or zero when every case passes.
    pub residual: GradedPoly,
    pub truncation: Option<Truncation>,
    pub pass: bool,
    pub cases: usize,
    pub failures: usize,
    /// Label of the case `residual` belongs to.
    pub failing_case: Option<String>,
}

#[derive(Serialize)]
struct Record<'a> {
    identity: &'a str,
    chart: &'a str,
    status: &'a str,
    residual: String,
    inputs: &'a [String],
    truncation: Option<String>,
    cases: usize,
    failures: usize,
    failing_case: Option<&'a str>,
}

impl BracketReport {
    pub fn status(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// `CHECK <name> <chart> PASS|FAIL residual=<poly>`
    pub fn to_line(&self) -> String {
        format!(
            "CHECK {} {} {} residual={}",
            self.identity,
            self.chart,
            self.status(),
            self.residual
        )
    }

    pub fn to_json(&self) -> String {
        let rec = Record {
            identity: &self.identity,
            chart: &self.chart,
            status: self.status(),
            residual: self.residual.to_string(),
            inputs: &self.inputs,
            truncation: self.truncation.map(|t| t.to_string()),
            cases: self.cases,
            failures: self.failures,
            failing_case: self.failing_case.as_deref(),
        };
        serde_json::to_string(&rec).expect("report fields serialize")
    }
}

impl fmt::Display for BracketReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

struct Builder {
    identity: String,
    chart: Arc<Chart>,
    inputs: Vec<String>,
    truncation: Option<Truncation>,
    residual: Option<(String, GradedPoly)>,
    cases: usize,
    failures: usize,
}

impl Builder {
    fn new(identity: &str, chart: &Arc<Chart>) -> Self {
        Builder {
            identity: identity.to_string(),
            chart: chart.clone(),
            inputs: Vec::new(),
            truncation: None,
            residual: None,
            cases: 0,
            failures: 0,
        }
    }

    fn input(mut self, label: &str, value: impl fmt::Display) -> Self {
        self.inputs.push(format!("{label}={value}"));
        self
    }

    fn truncation(mut self, t: Truncation) -> Self {
        self.truncation = Some(t);
        self
    }

    fn case(&mut self, label: impl FnOnce() -> String, residual: GradedPoly) {
        self.cases += 1;
        if !residual.is_zero() {
            self.failures += 1;
            if self.residual.is_none() {
                self.residual = Some((label(), residual));
            }
        }
    }

    fn finish(self) -> BracketReport {
        let (failing_case, residual) = match self.residual {
            Some((l, r)) => (Some(l), r),
            None => (None, GradedPoly::zero(&self.chart)),
        };
        BracketReport {
            identity: self.identity,
            chart: self.chart.name().to_string(),
            inputs: self.inputs,
            pass: failing_case.is_none(),
            residual,
            truncation: self.truncation,
            cases: self.cases,
            failures: self.failures,
            failing_case,
        }
    }
}

fn parity_of(u: &GradedPoly, op: &'static str) -> Result<Parity> {
    u.parity_of().ok_or(Error::MixedParity { op })
}

fn signed(bit: u8, u: GradedPoly) -> GradedPoly {
    if bit % 2 == 0 {
        u
    } else {
        -u
    }
}

fn half() -> crate::graded::Rational {
    ratio(1, 2)
}

// ---------------------------------------------------------------- fixtures

/// All monomials in the listed kinds with total degree at most `max_deg`,
/// unit coefficients.
pub fn monomials(chart: &Arc<Chart>, kinds: &[VarKind], max_deg: u32) -> Vec<GradedPoly> {
    let vars: Vec<Variable> = kinds.iter().flat_map(|&k| chart.vars(k)).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<(Variable, u32)>, u32)> = vec![(0, Vec::new(), 0)];
    while let Some((i, factors, deg)) = stack.pop() {
        if i == vars.len() {
            let (m, _) = Monomial::from_factors(&factors).expect("distinct variables");
            out.push(GradedPoly::monomial(chart, m, rat(1)));
            continue;
        }
        let v = vars[i];
        let max_e = if v.is_odd() { 1 } else { max_deg - deg };
        for e in (0..=max_e.min(max_deg - deg)).rev() {
            let mut f = factors.clone();
            if e > 0 {
                f.push((v, e));
            }
            stack.push((i + 1, f, deg + e));
        }
    }
    out.sort_by(|a, b| a.terms().cmp(b.terms()));
    out
}

/// Forms: every monomial of base degree <= 2 times every monomial of fiber
/// degree <= 2.
pub fn default_forms(chart: &Arc<Chart>) -> Vec<GradedPoly> {
    let base = monomials(chart, &[VarKind::Base], 2);
    let fiber = monomials(chart, &[VarKind::Fiber], 2);
    let mut out = Vec::with_capacity(base.len() * fiber.len());
    for f in &base {
        for w in &fiber {
            out.push(f * w);
        }
    }
    out
}

/// Non-constant base monomials of degree <= 2 plus two seeded random
/// functions of each available parity.
pub fn default_functions(chart: &Arc<Chart>) -> Vec<GradedPoly> {
    let mut out: Vec<GradedPoly> = monomials(chart, &[VarKind::Base], 2)
        .into_iter()
        .filter(|f| f.constant_term().is_zero() || f.len() > 1)
        .collect();
    let spec = RandomSpec::function(3).terms(3);
    for (seed, parity) in [(11, Parity::Even), (12, Parity::Odd)] {
        if let Ok(f) = random_poly(chart, &spec, parity, seed) {
            out.push(f);
        }
    }
    out
}

fn nondecreasing_tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in out {
            let start = t.last().copied().unwrap_or(0);
            for i in start..m {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// Evenly spaced sample of at most `cap` items, keeping order.
fn sample<T: Clone>(items: Vec<T>, cap: usize) -> Vec<T> {
    if items.len() <= cap {
        return items;
    }
    let step = items.len() as f64 / cap as f64;
    (0..cap)
        .map(|i| items[(i as f64 * step) as usize].clone())
        .collect()
}

/// Up to `cap` functions taken from the end, alternating even and odd while
/// both are available.
fn mixed_parities(functions: &[GradedPoly], cap: usize) -> Vec<GradedPoly> {
    let (mut even, mut odd): (Vec<_>, Vec<_>) = functions
        .iter()
        .filter(|f| f.parity_of().is_some())
        .partition(|f| f.parity_of() == Some(Parity::Even));
    let mut out = Vec::new();
    while out.len() < cap && !(even.is_empty() && odd.is_empty()) {
        let from_odd = out.len() % 2 == 1 && !odd.is_empty() || even.is_empty();
        let f = if from_odd { odd.pop() } else { even.pop() };
        out.extend(f.cloned());
    }
    out
}

fn pick(functions: &[GradedPoly], idx: &[usize]) -> Vec<GradedPoly> {
    idx.iter().map(|&i| functions[i].clone()).collect()
}

// -------------------------------------------------------------- checkers

/// `phi_P^* d w - [P, phi_P^* w] + 1/2 phi_P^* kappa_{[P,P]} w = 0` for
/// every test form.
pub fn check_discrepancy(p: &GradedPoly, forms: &[GradedPoly]) -> Result<BracketReport> {
    let phi = legendre::FiberMap::phi(p)?;
    let pp = brackets::schouten(p, p)?;
    let mut b = Builder::new("discrepancy", p.chart())
        .input("P", p)
        .input("forms", forms.len());
    for w in forms {
        let lhs = phi.pullback(&brackets::de_rham(w)?)?;
        let mid = brackets::lichnerowicz(p, &phi.pullback(w)?)?;
        let rhs = phi.pullback(&brackets::kappa(&pp, w)?)?.scale(&half());
        b.case(|| format!("w={w}"), lhs - mid + rhs);
    }
    Ok(b.finish())
}

/// `d w + 1/2 (phi_P^*)^{-1} [P,P] = 0` for `w` the Legendre transform of
/// `P`, together with `[P,P] = 0 <=> dw = 0`. The comparison drops one
/// base degree since `d` lowers it.
pub fn check_domega(p: &GradedPoly, t: &Truncation) -> Result<BracketReport> {
    let inv = legendre::invert_fiber_map(&legendre::FiberMap::phi(p)?, t)?;
    let w = inv.pullback(&(&p.fiber_euler(VarKind::AntiFiber) - p))?;
    let cmp = Truncation {
        base: t.base.map(|b| b.saturating_sub(1)),
        ..*t
    };
    let dw = brackets::de_rham(&w)?.truncate(&cmp);
    let pp = brackets::schouten(p, p)?;
    let rhs = inv.pullback(&pp)?.scale(&half()).truncate(&cmp);
    let mut b = Builder::new("domega", p.chart())
        .input("P", p)
        .truncation(cmp);
    b.case(|| "theorem".into(), &dw + &rhs);
    let pp_vanishes = pp.truncate(&cmp).is_zero();
    let corollary = match (pp_vanishes, dw.is_zero()) {
        (true, false) => dw.clone(),
        (false, true) => pp.truncate(&cmp),
        _ => GradedPoly::zero(p.chart()),
    };
    b.case(|| "corollary".into(), corollary);
    for r in inv.residual.iter().chain(&inv.reverse_residual) {
        b.case(|| "inversion".into(), r.clone());
    }
    Ok(b.finish())
}

/// Iterated brackets `[...[[P,P],f_1],...,f_n]|_M` for `n <= max_n` over
/// nondecreasing tuples of test functions, plus graded antisymmetry of the
/// higher Poisson brackets under adjacent transpositions.
pub fn check_linfty(
    p: &GradedPoly,
    max_n: usize,
    functions: &[GradedPoly],
) -> Result<BracketReport> {
    let pp = brackets::schouten(p, p)?;
    let parities = functions
        .iter()
        .map(|f| parity_of(f, "check_linfty"))
        .collect::<Result<Vec<_>>>()?;
    let mut b = Builder::new("linfty", p.chart())
        .input("P", p)
        .input("N", max_n)
        .input("functions", functions.len());
    for n in 0..=max_n {
        for idx in nondecreasing_tuples(functions.len(), n) {
            let r = brackets::nested_restricted(
                &brackets::CALIBRATED.schouten,
                &pp,
                &pick(functions, &idx),
            )?;
            b.case(|| format!("n={n} args={idx:?}"), r);
        }
    }
    for n in 2..=max_n {
        for idx in sample(nondecreasing_tuples(functions.len(), n), 40) {
            let base = brackets::higher_poisson(&HigherBracketRequest::new(
                p.clone(),
                pick(functions, &idx),
            )?)?;
            for k in 0..n - 1 {
                let mut swapped = idx.clone();
                swapped.swap(k, k + 1);
                let other = brackets::higher_poisson(&HigherBracketRequest::new(
                    p.clone(),
                    pick(functions, &swapped),
                )?)?;
                let e = (parities[idx[k]].bit() + 1) * (parities[idx[k + 1]].bit() + 1);
                b.case(
                    || format!("swap n={n} args={idx:?} at {k}"),
                    &base - &signed(e, other),
                );
            }
        }
    }
    Ok(b.finish())
}

/// Koszul bracket bundle: classical relations (for fiber-quadratic `P`),
/// the function/differential formulas with sign eps for `n <= max_n`, the
/// alpha morphism identity on seeded random `Q`, `(K,K) = 0` when
/// `[P,P] = 0`, and the derivation rule in the last slot over `forms`.
pub fn check_koszul_suite(
    p: &GradedPoly,
    forms: &[GradedPoly],
    functions: &[GradedPoly],
    max_n: usize,
) -> Result<BracketReport> {
    let chart = p.chart().clone();
    let mut b = Builder::new("koszul", &chart)
        .input("P", p)
        .input("N", max_n)
        .input("forms", forms.len())
        .input("functions", functions.len());

    // (a) classical relations
    let quadratic = !p.is_zero()
        && p.terms()
            .all(|(m, _)| m.degree_in(|k| k == VarKind::AntiFiber) == 2);
    if quadratic {
        let comps = legendre::bivector_components(p)?;
        for a in 0..chart.dim() {
            for c in 0..chart.dim() {
                let xa = GradedPoly::var(&chart, chart.base(a));
                let xc = GradedPoly::var(&chart, chart.base(c));
                let da = GradedPoly::var(&chart, chart.fiber(a));
                let dc = GradedPoly::var(&chart, chart.fiber(c));
                b.case(
                    || format!("[x{},x{}]", a + 1, c + 1),
                    koszul::higher_koszul(p, &[xa.clone(), xc])?,
                );
                b.case(
                    || format!("[x{},dx{}]", a + 1, c + 1),
                    koszul::higher_koszul(p, &[xa, dc.clone()])? + comps[a][c].clone(),
                );
                b.case(
                    || format!("[dx{},dx{}]", a + 1, c + 1),
                    koszul::higher_koszul(p, &[da, dc])? - brackets::de_rham(&comps[a][c])?,
                );
            }
        }
    }

    // (b) eps formulas
    let small = mixed_parities(functions, 4);
    for n in 1..=max_n {
        for idx in sample(nondecreasing_tuples(small.len(), n), 12) {
            let fs = pick(&small, &idx);
            for pattern in [
                DifferentialPattern::LeadingFunction,
                DifferentialPattern::Differentials,
                DifferentialPattern::Functions,
            ] {
                let cmp = koszul::koszul_on_differentials(p, &fs, pattern)?;
                b.case(|| format!("{pattern:?} n={n} args={idx:?}"), cmp.difference);
            }
        }
    }

    // (c) alpha morphism on random Q
    let kp = koszul::alpha(p)?;
    let pb = parity_of(p, "koszul")?.bit();
    let spec = RandomSpec::multivector(2, 3).terms(3);
    for seed in 0..20u64 {
        let parity = if seed % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        let q = match random_poly(&chart, &spec, parity, 900 + seed) {
            Ok(q) => q,
            Err(Error::UnachievableParity(_)) => continue,
            Err(e) => return Err(e),
        };
        let lhs = koszul::alpha(&brackets::schouten(p, &q)?)?.into_poly();
        let rhs = brackets::canonical_poisson(kp.k(), koszul::alpha(&q)?.k())?;
        let s = koszul::morphism_sign(Parity::from_bit(pb), parity);
        b.case(|| format!("alpha Q={q}"), lhs - rhs.scale_int(s));
    }

    // (d) (K,K) = 0 when [P,P] = 0
    if brackets::schouten(p, p)?.is_zero() {
        b.case(
            || "(K,K)".into(),
            brackets::canonical_poisson(kp.k(), kp.k())?,
        );
    }

    // derivation in the last slot
    let prefixes: Vec<Vec<GradedPoly>> = std::iter::once(vec![])
        .chain(forms.iter().take(3).map(|w| vec![w.clone()]))
        .collect();
    for prefix in &prefixes {
        let mut shift = 1u8;
        for w in prefix {
            shift += parity_of(w, "koszul")?.bit();
        }
        for eta in forms.iter().take(4) {
            for theta in forms.iter().take(4) {
                let with = |last: GradedPoly| {
                    let mut v = prefix.clone();
                    v.push(last);
                    koszul::higher_koszul(p, &v)
                };
                let lhs = with(eta * theta)?;
                let rhs = &with(eta.clone())? * theta
                    + signed(
                        shift * parity_of(eta, "koszul")?.bit(),
                        eta * &with(theta.clone())?,
                    );
                b.case(|| format!("derivation eta={eta} theta={theta}"), lhs - rhs);
            }
        }
    }
    Ok(b.finish())
}

/// `E[P,Q] = [E P,Q] + [P,E Q] - [P,Q]`, and for even `P`
/// `[P, E P - P] = 1/2 (E[P,P] - [P,P])`, with `[P, E P] = 0` when
/// `[P,P] = 0`.
pub fn check_weight_identities(p: &GradedPoly, q: &GradedPoly) -> Result<BracketReport> {
    let e = |u: &GradedPoly| u.fiber_euler(VarKind::AntiFiber);
    let br = brackets::schouten;
    let mut b = Builder::new("weight", p.chart())
        .input("P", p)
        .input("Q", q);
    let pq = br(p, q)?;
    b.case(
        || "weight".into(),
        e(&pq) - br(&e(p), q)? - br(p, &e(q))? + pq.clone(),
    );
    if p.is_homogeneous_of(Parity::Even) {
        let pp = br(p, p)?;
        b.case(
            || "euler".into(),
            br(p, &(e(p) - p.clone()))? - (e(&pp) - pp.clone()).scale(&half()),
        );
        if pp.is_zero() {
            b.case(|| "poisson".into(), br(p, &e(p))?);
        }
    }
    Ok(b.finish())
}

/// `{f,g} = -(-1)^{f~(a~+1)} d_a f w^{ab} d_b g` with `w^{ab}` the inverse
/// matrix of the constant form components.
pub fn symplectic_bracket(w_inv: &Matrix, f: &GradedPoly, g: &GradedPoly) -> Result<GradedPoly> {
    let chart = f.chart();
    let fp = parity_of(f, "symplectic")?.bit();
    let mut out = GradedPoly::zero(chart);
    for (a, row) in w_inv.iter().enumerate() {
        let df = f.left_deriv(chart.base(a));
        if df.is_zero() {
            continue;
        }
        for (c, wac) in row.iter().enumerate() {
            if wac.is_zero() {
                continue;
            }
            let term = (&df * &g.left_deriv(chart.base(c))).scale(wac);
            out = out - signed(fp * (chart.parity(a).bit() + 1), term);
        }
    }
    Ok(out)
}

/// Constant fiber-quadratic `P`: raising of indices by `phi_P`, the
/// component formula `w_{ab} = P_{ab} (-1)^{b~+1}` for its Legendre
/// transform, and the binary bracket against the symplectic display.
pub fn check_classical(p: &GradedPoly, functions: &[GradedPoly]) -> Result<BracketReport> {
    let chart = p.chart().clone();
    let n = chart.dim();
    let mut b = Builder::new("classical", &chart).input("P", p);

    // P^{ab} read from the monomial coefficients of P = 1/2 P^{ab} x*_b x*_a
    let mut upper = vec![vec![crate::graded::Rational::zero(); n]; n];
    for (m, c) in p.terms() {
        let stars: Vec<(Variable, u32)> = m.vars().to_vec();
        match stars.as_slice() {
            [(v, 2)] if v.kind == VarKind::AntiFiber => {
                upper[v.index()][v.index()] = c * rat(2);
            }
            [(vb, 1), (va, 1)]
                if vb.kind == VarKind::AntiFiber && va.kind == VarKind::AntiFiber =>
            {
                let (a, bb) = (va.index(), vb.index());
                upper[a][bb] = c.clone();
                let s = (chart.parity(a).bit() + 1) * (chart.parity(bb).bit() + 1);
                upper[bb][a] = if s % 2 == 0 { c.clone() } else { -c.clone() };
            }
            _ => {
                return Err(Error::Unsupported(
                    "check_classical expects a constant fiber-quadratic P".into(),
                ))
            }
        }
    }

    // phi_P^*(dx^a) = P^{ab} x*_b
    for (a, row) in upper.iter().enumerate() {
        let image = legendre::phi_pullback(p, &GradedPoly::var(&chart, chart.fiber(a)))?;
        let expected = row
            .iter()
            .enumerate()
            .fold(GradedPoly::zero(&chart), |acc, (c, pac)| {
                acc + GradedPoly::var(&chart, chart.antifiber(c)).scale(pac)
            });
        b.case(|| format!("raise dx{}", a + 1), image - expected);
    }

    // w_{ab} = P_{ab} (-1)^{b~+1}, compared as forms w = 1/2 dx^a dx^b w_{ba}
    let lower = linalg::invert(&upper).ok_or(Error::SingularLinearPart)?;
    let w = legendre::legendre_transform(p, &Truncation::none())?;
    let mut expected = GradedPoly::zero(&chart);
    for a in 0..n {
        for c in 0..n {
            // w_{ca} = P_{ca} (-1)^{a~+1}
            let wca = if chart.parity(a).is_odd() {
                lower[c][a].clone()
            } else {
                -lower[c][a].clone()
            };
            let dd =
                &GradedPoly::var(&chart, chart.fiber(a)) * &GradedPoly::var(&chart, chart.fiber(c));
            expected = expected + dd.scale(&(wca * half()));
        }
    }
    b.case(|| "legendre".into(), &w - &expected);

    // binary bracket against the symplectic display
    let w_inv = linalg::invert(&legendre::constant_matrix(&legendre::form_components(&w)?))
        .ok_or(Error::SingularLinearPart)?;
    for f in functions {
        for g in functions {
            let req = HigherBracketRequest::new(p.clone(), vec![f.clone(), g.clone()])?;
            let lhs = brackets::higher_poisson(&req)?;
            b.case(
                || format!("{{{f},{g}}}"),
                lhs - symplectic_bracket(&w_inv, f, g)?,
            );
        }
    }
    Ok(b.finish())
}

/// Legendre round trip `w -> P -> w`, both inversions exact at the
/// truncation. The comparison drops one fiber degree since `phi_P`
/// differentiates `P` in `x*`.
pub fn check_roundtrip(w: &GradedPoly, t: &Truncation) -> Result<BracketReport> {
    let psi = legendre::invert_fiber_map(&legendre::FiberMap::psi(w)?, t)?;
    let p = psi.pullback(&(&w.fiber_euler(VarKind::Fiber) - w))?;
    let phi = legendre::invert_fiber_map(&legendre::FiberMap::phi(&p)?, t)?;
    let back = phi.pullback(&(&p.fiber_euler(VarKind::AntiFiber) - &p))?;
    let cmp = Truncation {
        fiber: t.fiber.map(|f| f.saturating_sub(1)),
        ..*t
    };
    let mut b = Builder::new("roundtrip", w.chart())
        .input("w", w)
        .truncation(cmp);
    b.case(|| "w".into(), (&back - w).truncate(&cmp));
    for r in psi.residual.iter().chain(&psi.reverse_residual) {
        b.case(|| "psi inversion".into(), r.clone());
    }
    for r in phi.residual.iter().chain(&phi.reverse_residual) {
        b.case(|| "phi inversion".into(), r.truncate(&cmp));
    }
    Ok(b.finish())
}

/// `lhs - rhs = 0`.
pub fn check_equal(name: &str, lhs: &GradedPoly, rhs: &GradedPoly) -> Result<BracketReport> {
    let diff = lhs.try_sub(rhs)?;
    let mut b = Builder::new(name, lhs.chart())
        .input("lhs", lhs)
        .input("rhs", rhs);
    b.case(|| "difference".into(), diff);
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        let c = Arc::new(Chart::standard(2, 2));
        assert_eq!(monomials(&c, &[VarKind::Base], 2).len(), 13);
        assert_eq!(monomials(&c, &[VarKind::Fiber], 2).len(), 13);
        assert_eq!(default_forms(&c).len(), 169);
        let r2 = Arc::new(Chart::standard(2, 0));
        assert_eq!(monomials(&r2, &[VarKind::Base], 2).len(), 6);
    }

    #[test]
    fn tuples() {
        assert_eq!(nondecreasing_tuples(3, 2).len(), 6);
        assert_eq!(nondecreasing_tuples(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn report_line_format() {
        let c = Arc::new(Chart::standard(2, 0));
        let x = GradedPoly::var(&c, c.base(0));
        let r = check_equal("same", &x, &x).unwrap();
        assert_eq!(r.to_line(), "CHECK same R2 PASS residual=0");
        let r = check_equal("diff", &x, &GradedPoly::zero(&c)).unwrap();
        assert_eq!(r.to_line(), "CHECK diff R2 FAIL residual=x1");
        assert!(r.to_json().contains("\"status\":\"FAIL\""));
    }
}
