use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;

use num::{BigRational, Zero};

use super::parser::{Expr, Parser, Spanned, Statement, Stmt};
use super::{lexer, LangError, Pos};
use crate::brackets::{self, HigherBracketRequest};
use crate::graded::{
    render, Chart, GradedPoly, Grading, Parity, PrintMode, Rational, SubstitutionMap, Truncation,
    TruncationSpec, VarKind, DEFAULT_TRUNCATION,
};
use crate::verify::{self, BracketReport};
use crate::{koszul, legendre};

/// What a statement produced.
#[derive(Clone, Debug, PartialEq)]
pub enum Output {
    Value(GradedPoly),
    Report(BracketReport),
    Text(String),
}

/// Interpreter state: one chart, immutable bindings, and print settings.
#[derive(Clone, Debug)]
pub struct Session {
    coords: Vec<(String, Parity)>,
    params: Vec<String>,
    chart: Option<Arc<Chart>>,
    bindings: BTreeMap<String, GradedPoly>,
    truncation: Truncation,
    format: PrintMode,
    log: Vec<String>,
}

impl Default for Session {
    fn default() -> Self {
        Session::new(DEFAULT_TRUNCATION, PrintMode::Canonical)
    }
}

fn arity(name: &str) -> Option<(usize, Option<usize>)> {
    Some(match name {
        "schouten" | "poisson" | "dP" | "kappa" | "phi" | "psi" | "deriv" => (2, Some(2)),
        "alpha" | "d" | "euler" | "euler_d" | "legendre" | "invlegendre" | "omegap"
        | "restrict" | "trunc" => (1, Some(1)),
        "slice_fiber" | "slice_lambda" | "slice_base" => (2, Some(2)),
        "hp" | "koszul" => (1, None),
        "subst" => (3, Some(3)),
        "check_discrepancy" | "check_domega" | "check_classical" | "check_roundtrip" | "nondeg" => {
            (1, Some(1))
        }
        "check_linfty" | "check_koszul" | "check_weight" | "check_equal" => (2, Some(2)),
        _ => return None,
    })
}

impl Session {
    pub fn new(truncation: Truncation, format: PrintMode) -> Self {
        Session {
            coords: Vec::new(),
            params: Vec::new(),
            chart: None,
            bindings: BTreeMap::new(),
            truncation,
            format,
            log: Vec::new(),
        }
    }

    pub fn chart(&self) -> Option<&Arc<Chart>> {
        self.chart.as_ref()
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn format(&self) -> PrintMode {
        self.format
    }

    pub fn binding(&self, name: &str) -> Option<&GradedPoly> {
        self.bindings.get(name)
    }

    /// Canonical form of every evaluated value, in order.
    pub fn log(&self) -> &[String] {
        &self.log
    }

    pub fn render(&self, out: &Output) -> String {
        match out {
            Output::Value(u) => render(u, self.format),
            Output::Report(r) => r.to_line(),
            Output::Text(s) => s.clone(),
        }
    }

    /// Executes every statement of `src`, stopping at the first error.
    pub fn run(&mut self, src: &str) -> Result<Vec<Output>, LangError> {
        let mut out = Vec::new();
        let mut parser = Parser::new(lexer::lex(src)?);
        while !parser.is_done() {
            let stmt = parser.statement()?;
            out.extend(self.execute(&stmt)?);
        }
        Ok(out)
    }

    pub fn execute(&mut self, stmt: &Stmt) -> Result<Option<Output>, LangError> {
        let pos = stmt.pos;
        match &stmt.statement {
            Statement::Chart { even, odd } => {
                let c = Chart::standard(*even, *odd);
                self.declare(pos, c.coords().to_vec(), Vec::new())?;
                Ok(None)
            }
            Statement::Coords(coords) => {
                self.declare(pos, coords.clone(), Vec::new())?;
                Ok(None)
            }
            Statement::Param(names) => {
                self.declare(pos, Vec::new(), names.clone())?;
                Ok(None)
            }
            Statement::SetTrunc(cuts) => {
                for &(grading, order) in cuts {
                    self.truncation = self.truncation.with(TruncationSpec { grading, order });
                }
                Ok(None)
            }
            Statement::SetFormat(mode) => {
                self.format = *mode;
                Ok(None)
            }
            Statement::Let(name, e) => {
                if self.bindings.contains_key(name) {
                    return Err(LangError::semantic(
                        pos,
                        format!("`{name}` is already bound"),
                    ));
                }
                let chart = self.freeze(pos)?;
                if chart.lookup(name).is_some() || arity(name).is_some() {
                    return Err(LangError::semantic(pos, format!("`{name}` is reserved")));
                }
                let v = self.value(e)?;
                self.bindings.insert(name.clone(), v);
                Ok(None)
            }
            Statement::Eval(e) => {
                if let Expr::Call(name, args) = &e.expr {
                    if let Some(out) = self.top_level(name, args, e.pos)? {
                        return Ok(Some(out));
                    }
                }
                Ok(Some(Output::Value(self.value(e)?)))
            }
        }
    }

    fn declare(
        &mut self,
        pos: Pos,
        coords: Vec<(String, Parity)>,
        params: Vec<String>,
    ) -> Result<(), LangError> {
        if self.chart.is_some() {
            return Err(LangError::semantic(
                pos,
                "the chart is fixed once expressions have been evaluated",
            ));
        }
        if !coords.is_empty() && !self.coords.is_empty() {
            return Err(LangError::semantic(pos, "coordinates are already declared"));
        }
        self.coords.extend(coords);
        self.params.extend(params);
        Chart::new("check", self.coords.clone(), self.params.clone())
            .map_err(|e| LangError::semantic(pos, e))?;
        Ok(())
    }

    fn freeze(&mut self, pos: Pos) -> Result<Arc<Chart>, LangError> {
        if let Some(c) = &self.chart {
            return Ok(c.clone());
        }
        if self.coords.is_empty() {
            return Err(LangError::semantic(pos, "no coordinates declared"));
        }
        let even = self.coords.iter().filter(|(_, p)| !p.is_odd()).count();
        let odd = self.coords.len() - even;
        let name = if odd == 0 {
            format!("R{even}")
        } else {
            format!("R{even}|{odd}")
        };
        let c = Arc::new(
            Chart::new(name, self.coords.clone(), self.params.clone())
                .map_err(|e| LangError::semantic(pos, e))?,
        );
        self.chart = Some(c.clone());
        Ok(c)
    }

    fn value(&mut self, e: &Spanned) -> Result<GradedPoly, LangError> {
        let chart = self.freeze(e.pos)?;
        let v = self.eval(&chart, e)?;
        self.log.push(render(&v, PrintMode::Canonical));
        Ok(v)
    }

    fn eval(&self, chart: &Arc<Chart>, e: &Spanned) -> Result<GradedPoly, LangError> {
        let pos = e.pos;
        let engine = |r: crate::Result<GradedPoly>| r.map_err(|err| LangError::semantic(pos, err));
        Ok(match &e.expr {
            Expr::Num(n, d) => {
                let q = match d {
                    Some(d) => BigRational::new(n.clone(), d.clone()),
                    None => BigRational::from_integer(n.clone()),
                };
                GradedPoly::constant(chart, q)
            }
            Expr::Name(name) => {
                if let Some(v) = self.bindings.get(name) {
                    v.clone()
                } else {
                    match chart.lookup(name) {
                        Some(crate::graded::Symbol::Var(v)) => GradedPoly::var(chart, v),
                        Some(crate::graded::Symbol::Param(i)) => GradedPoly::param(chart, i),
                        None => {
                            return Err(LangError::semantic(
                                pos,
                                format!("unknown identifier `{name}`"),
                            ))
                        }
                    }
                }
            }
            Expr::Neg(a) => -self.eval(chart, a)?,
            Expr::Add(a, b) => &self.eval(chart, a)? + &self.eval(chart, b)?,
            Expr::Sub(a, b) => &self.eval(chart, a)? - &self.eval(chart, b)?,
            Expr::Mul(a, b) => &self.eval(chart, a)? * &self.eval(chart, b)?,
            Expr::Pow(a, k) => self.eval(chart, a)?.pow(*k),
            Expr::Call(name, args) => {
                let (lo, hi) = arity(name).ok_or_else(|| {
                    LangError::semantic(pos, format!("unknown function `{name}`"))
                })?;
                check_arity(name, args.len(), lo, hi, pos)?;
                if name.starts_with("check_") || name == "nondeg" {
                    return Err(LangError::semantic(
                        pos,
                        format!("`{name}` must be a statement of its own"),
                    ));
                }
                let slice = |g: Grading| -> Result<GradedPoly, LangError> {
                    let k = self.integer(chart, &args[1])?;
                    Ok(self.eval(chart, &args[0])?.degree_slice(g, k))
                };
                match name.as_str() {
                    "slice_fiber" => return slice(Grading::FiberDegree),
                    "slice_lambda" => return slice(Grading::LambdaDegree),
                    "slice_base" => return slice(Grading::BaseDegree),
                    "deriv" => {
                        let u = self.eval(chart, &args[0])?;
                        let v = self.variable(chart, &args[1])?;
                        return Ok(u.left_deriv(v));
                    }
                    "subst" => {
                        let u = self.eval(chart, &args[0])?;
                        let v = self.variable(chart, &args[1])?;
                        let image = self.eval(chart, &args[2])?;
                        let map = SubstitutionMap::new(chart, [(v, image)]);
                        return engine(map.and_then(|m| u.substitute(&m)));
                    }
                    _ => {}
                }
                let a = args
                    .iter()
                    .map(|x| self.eval(chart, x))
                    .collect::<Result<Vec<_>, _>>()?;
                let t = &self.truncation;
                match name.as_str() {
                    "schouten" => engine(brackets::schouten(&a[0], &a[1]))?,
                    "poisson" => engine(brackets::canonical_poisson(&a[0], &a[1]))?,
                    "dP" => engine(brackets::lichnerowicz(&a[0], &a[1]))?,
                    "kappa" => engine(brackets::kappa(&a[0], &a[1]))?,
                    "hp" => engine(
                        HigherBracketRequest::new(a[0].clone(), a[1..].to_vec())
                            .and_then(|r| brackets::higher_poisson(&r)),
                    )?,
                    "koszul" => engine(koszul::higher_koszul(&a[0], &a[1..]))?,
                    "alpha" => engine(koszul::alpha(&a[0]).map(koszul::OddHamiltonian::into_poly))?,
                    "d" => engine(brackets::de_rham(&a[0]))?,
                    "euler" => a[0].fiber_euler(VarKind::AntiFiber),
                    "euler_d" => a[0].fiber_euler(VarKind::Fiber),
                    "legendre" => engine(legendre::legendre_transform(&a[0], t))?,
                    "invlegendre" => engine(legendre::legendre_inverse(&a[0], t))?,
                    "omegap" => engine(legendre::omega_prime(&a[0], t))?,
                    "phi" => engine(legendre::phi_pullback(&a[0], &a[1]))?,
                    "psi" => engine(legendre::psi_pullback(&a[0], &a[1]))?,
                    "restrict" => {
                        brackets::restrict(&a[0], &[VarKind::MomentumBase, VarKind::MomentumFiber])
                    }
                    "trunc" => a[0].truncate(t),
                    _ => unreachable!("arity table and dispatch agree"),
                }
            }
        })
    }

    fn integer(&self, chart: &Arc<Chart>, e: &Spanned) -> Result<u32, LangError> {
        let v = self.eval(chart, e)?;
        let c = v.constant_term();
        let ok = v.len() <= 1 && (v.is_zero() || v.terms().all(|(m, _)| m.is_one()));
        match (ok && c.is_integer())
            .then(|| u32::try_from(c.to_integer()).ok())
            .flatten()
        {
            Some(k) => Ok(k),
            None => Err(LangError::semantic(
                e.pos,
                format!("expected a non-negative integer, found `{v}`"),
            )),
        }
    }

    fn variable(
        &self,
        chart: &Arc<Chart>,
        e: &Spanned,
    ) -> Result<crate::graded::Variable, LangError> {
        if let Expr::Name(name) = &e.expr {
            if let Some(crate::graded::Symbol::Var(v)) = chart.lookup(name) {
                return Ok(v);
            }
        }
        Err(LangError::semantic(e.pos, "expected a coordinate name"))
    }

    fn top_level(
        &mut self,
        name: &str,
        args: &[Spanned],
        pos: Pos,
    ) -> Result<Option<Output>, LangError> {
        if !(name.starts_with("check_") || name == "nondeg") {
            return Ok(None);
        }
        let (lo, hi) = arity(name)
            .ok_or_else(|| LangError::semantic(pos, format!("unknown check `{name}`")))?;
        check_arity(name, args.len(), lo, hi, pos)?;
        let chart = self.freeze(pos)?;
        let engine =
            |r: crate::Result<BracketReport>| r.map_err(|err| LangError::semantic(pos, err));
        let t = self.truncation;
        if name == "nondeg" {
            let p = self.value(&args[0])?;
            let origin = vec![Rational::zero(); chart.dim()];
            let rep = legendre::hessian_nondegenerate(&p, &origin)
                .map_err(|e| LangError::semantic(pos, e))?;
            let word = if rep.nondegenerate {
                "nondegenerate"
            } else {
                "degenerate"
            };
            return Ok(Some(Output::Text(word.to_string())));
        }
        let report = match name {
            "check_discrepancy" => {
                let p = self.value(&args[0])?;
                engine(verify::check_discrepancy(
                    &p,
                    &verify::default_forms(&chart),
                ))?
            }
            "check_domega" => engine(verify::check_domega(&self.value(&args[0])?, &t))?,
            "check_classical" => {
                let p = self.value(&args[0])?;
                engine(verify::check_classical(
                    &p,
                    &verify::default_functions(&chart),
                ))?
            }
            "check_roundtrip" => engine(verify::check_roundtrip(&self.value(&args[0])?, &t))?,
            "check_linfty" => {
                let p = self.value(&args[0])?;
                let n = self.integer(&chart, &args[1])? as usize;
                engine(verify::check_linfty(
                    &p,
                    n,
                    &verify::default_functions(&chart),
                ))?
            }
            "check_koszul" => {
                let p = self.value(&args[0])?;
                let n = self.integer(&chart, &args[1])? as usize;
                let forms = verify::default_forms(&chart);
                let fs = verify::default_functions(&chart);
                engine(verify::check_koszul_suite(&p, &forms, &fs, n))?
            }
            "check_weight" => {
                let p = self.value(&args[0])?;
                let q = self.value(&args[1])?;
                engine(verify::check_weight_identities(&p, &q))?
            }
            "check_equal" => {
                let a = self.value(&args[0])?;
                let b = self.value(&args[1])?;
                engine(verify::check_equal("equal", &a, &b))?
            }
            _ => return Err(LangError::semantic(pos, format!("unknown check `{name}`"))),
        };
        Ok(Some(Output::Report(report)))
    }
}

fn check_arity(
    name: &str,
    got: usize,
    lo: usize,
    hi: Option<usize>,
    pos: Pos,
) -> Result<(), LangError> {
    let ok = got >= lo && hi.is_none_or(|h| got <= h);
    if ok {
        return Ok(());
    }
    let want = match hi {
        Some(h) if h == lo => format!("{lo}"),
        Some(h) => format!("{lo} to {h}"),
        None => format!("at least {lo}"),
    };
    Err(LangError::semantic(
        pos,
        format!("`{name}` takes {want} argument(s), got {got}"),
    ))
}

/// Result of a script run.
#[derive(Clone, Debug)]
pub struct SessionOutcome {
    pub exit_code: i32,
    pub reports: Vec<BracketReport>,
    pub error: Option<LangError>,
}

/// Runs `script`, writing each evaluation and report line to `out`.
/// Exit code 0 when everything passes, 1 when some check fails, 2 on the
/// first syntax or semantic error (which stops the run).
pub fn run_session(
    script: &str,
    session: &mut Session,
    out: &mut dyn Write,
) -> std::io::Result<SessionOutcome> {
    let mut reports = Vec::new();
    let tokens = match lexer::lex(script) {
        Ok(t) => t,
        Err(e) => {
            return Ok(SessionOutcome {
                exit_code: 2,
                reports,
                error: Some(e),
            })
        }
    };
    let mut parser = Parser::new(tokens);
    while !parser.is_done() {
        let step = parser.statement().and_then(|s| session.execute(&s));
        match step {
            Ok(None) => {}
            Ok(Some(o)) => {
                writeln!(out, "{}", session.render(&o))?;
                if let Output::Report(r) = o {
                    reports.push(r);
                }
            }
            Err(e) => {
                return Ok(SessionOutcome {
                    exit_code: 2,
                    reports,
                    error: Some(e),
                })
            }
        }
    }
    let exit_code = if reports.iter().all(|r| r.pass) { 0 } else { 1 };
    Ok(SessionOutcome {
        exit_code,
        reports,
        error: None,
    })
}
