//! Canonical and LaTeX rendering.

use std::fmt;

use num::{One, Signed};

use super::chart::Chart;
use super::monomial::Monomial;
use super::poly::{GradedPoly, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PrintMode {
    #[default]
    Canonical,
    Latex,
}

fn factor_names(chart: &Chart, m: &Monomial, latex: bool) -> Vec<String> {
    let power = |name: String, e: u32| match (e, latex) {
        (1, _) => name,
        (_, false) => format!("{name}^{e}"),
        (_, true) => format!("({name})^{{{e}}}"),
    };
    let params = m.params().iter().map(|&(i, e)| {
        let name = &chart.params()[i as usize];
        let name = if latex && is_greek(name) {
            format!("\\{name}")
        } else {
            name.clone()
        };
        power(name, e)
    });
    let vars = m.vars().iter().map(|&(v, e)| {
        let name = if latex {
            chart.var_latex(v)
        } else {
            chart.var_name(v)
        };
        power(name, e)
    });
    params.chain(vars).collect()
}

fn is_greek(name: &str) -> bool {
    matches!(
        name,
        "alpha" | "beta" | "gamma" | "delta" | "epsilon" | "lambda" | "mu" | "nu" | "tau" | "hbar"
    )
}

fn coeff_text(c: &Rational, latex: bool) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else if latex {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn render(p: &GradedPoly, mode: PrintMode) -> String {
    let latex = mode == PrintMode::Latex;
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = c.abs();
        let factors = factor_names(p.chart(), m, latex);
        let sep = if latex { " " } else { "*" };
        if factors.is_empty() {
            out.push_str(&coeff_text(&magnitude, latex));
        } else {
            if !magnitude.is_one() {
                out.push_str(&coeff_text(&magnitude, latex));
                out.push_str(sep);
            }
            out.push_str(&factors.join(sep));
        }
    }
    out
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, PrintMode::Canonical))
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graded::poly::ratio;

    #[test]
    fn canonical_examples() {
        let c = Arc::new(Chart::standard(2, 0));
        let p = GradedPoly::product(&c, &[c.antifiber(1), c.antifiber(0)]);
        assert_eq!(p.to_string(), "xs2*xs1");
        assert_eq!(GradedPoly::zero(&c).to_string(), "0");
        let q = GradedPoly::var(&c, c.base(0)).scale(&ratio(-3, 2)) + GradedPoly::int(&c, 2);
        assert_eq!(q.to_string(), "2 - 3/2*x1");
    }

    #[test]
    fn latex_names() {
        let c = Arc::new(Chart::standard(2, 0).with_params(["lambda"]).unwrap());
        let p = &GradedPoly::param(&c, 0) * &GradedPoly::product(&c, &[c.fiber(0), c.antifiber(1)]);
        assert_eq!(render(&p, PrintMode::Latex), "\\lambda dx^{1} x^*_{2}");
    }
}
