//! Charts, parities and the five variable families a chart induces.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of Z/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Self {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        Parity::from_bit(self.bit() ^ 1)
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Variable families, listed in canonical rank order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarKind {
    /// `x^a`
    Base,
    /// `dx^a`
    Fiber,
    /// `x*_a`
    AntiFiber,
    /// `p_a`, conjugate to `x^a`
    MomentumBase,
    /// `pi_a`, conjugate to `dx^a`
    MomentumFiber,
}

impl VarKind {
    pub const ALL: [VarKind; 5] = [
        VarKind::Base,
        VarKind::Fiber,
        VarKind::AntiFiber,
        VarKind::MomentumBase,
        VarKind::MomentumFiber,
    ];

    /// Whether a variable of this kind has the parity of its base coordinate
    /// flipped.
    pub fn shifts_parity(self) -> bool {
        matches!(
            self,
            VarKind::Fiber | VarKind::AntiFiber | VarKind::MomentumFiber
        )
    }

    pub fn is_momentum(self) -> bool {
        matches!(self, VarKind::MomentumBase | VarKind::MomentumFiber)
    }
}

/// A chart variable. Carries its parity so that algebra never needs to
/// consult the chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub kind: VarKind,
    pub index: u16,
    odd: bool,
}

impl Variable {
    pub fn parity(self) -> Parity {
        if self.odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self.odd
    }

    pub fn index(self) -> usize {
        self.index as usize
    }
}

// Kind rank first; within a kind, higher declaration index comes first so
// that the canonical form of x*_2 x*_1 reads `xs2*xs1`.
impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.kind
            .cmp(&other.kind)
            .then_with(|| other.index.cmp(&self.index))
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Names resolvable inside a chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Var(Variable),
    Param(usize),
}

/// A coordinate chart: ordered base coordinates with parities plus the
/// formal even parameters available to coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chart {
    name: String,
    coords: Vec<(String, Parity)>,
    params: Vec<String>,
}

impl Chart {
    pub fn new<S: Into<String>>(
        name: S,
        coords: Vec<(String, Parity)>,
        params: Vec<String>,
    ) -> Result<Self> {
        let chart = Chart {
            name: name.into(),
            coords,
            params,
        };
        chart.validate_names()?;
        Ok(chart)
    }

    /// `R^{m|n}`: `m` even coordinates `x1..xm` followed by `n` odd ones.
    pub fn standard(even: usize, odd: usize) -> Self {
        let coords = (0..even + odd)
            .map(|i| {
                let p = if i < even { Parity::Even } else { Parity::Odd };
                (format!("x{}", i + 1), p)
            })
            .collect();
        let name = if odd == 0 {
            format!("R{even}")
        } else {
            format!("R{even}|{odd}")
        };
        Chart::new(name, coords, Vec::new()).expect("standard chart names are unique")
    }

    /// Same chart with extra formal parameters appended.
    pub fn with_params<I, S>(mut self, params: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.params.extend(params.into_iter().map(Into::into));
        self.validate_names()?;
        Ok(self)
    }

    fn validate_names(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for name in self.coords.iter().map(|(n, _)| n).chain(self.params.iter()) {
            if !is_identifier(name) {
                return Err(Error::InvalidName(name.clone()));
            }
        }
        let derived = (0..self.dim())
            .flat_map(|i| VarKind::ALL.iter().map(move |&k| (i, k)))
            .map(|(i, k)| self.var_name(self.var(k, i)))
            .chain(self.params.iter().cloned());
        for name in derived {
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateName(name));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[(String, Parity)] {
        &self.coords
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    /// Parity of the base coordinate `x^a`.
    pub fn parity(&self, a: usize) -> Parity {
        self.coords[a].1
    }

    pub fn var(&self, kind: VarKind, a: usize) -> Variable {
        let base = self.coords[a].1;
        let parity = if kind.shifts_parity() {
            base.flip()
        } else {
            base
        };
        Variable {
            kind,
            index: a as u16,
            odd: parity.is_odd(),
        }
    }

    pub fn vars(&self, kind: VarKind) -> impl Iterator<Item = Variable> + '_ {
        (0..self.dim()).map(move |a| self.var(kind, a))
    }

    pub fn base(&self, a: usize) -> Variable {
        self.var(VarKind::Base, a)
    }

    pub fn fiber(&self, a: usize) -> Variable {
        self.var(VarKind::Fiber, a)
    }

    pub fn antifiber(&self, a: usize) -> Variable {
        self.var(VarKind::AntiFiber, a)
    }

    /// Name stem used for the `xs`, `p`, `pi` prefixes: a leading `x` is
    /// dropped when something remains (`x1` -> `1`).
    pub fn stem(&self, a: usize) -> &str {
        let name = self.coords[a].0.as_str();
        match name.strip_prefix('x') {
            Some(rest) if !rest.is_empty() => rest,
            _ => name,
        }
    }

    pub fn var_name(&self, v: Variable) -> String {
        let a = v.index();
        let base = &self.coords[a].0;
        let stem = self.stem(a);
        match v.kind {
            VarKind::Base => base.clone(),
            VarKind::Fiber => format!("d{base}"),
            VarKind::AntiFiber => format!("xs{stem}"),
            VarKind::MomentumBase => format!("p{stem}"),
            VarKind::MomentumFiber => format!("pi{stem}"),
        }
    }

    pub fn var_latex(&self, v: Variable) -> String {
        let a = v.index();
        let stem = self.stem(a);
        let base = &self.coords[a].0;
        let sup = if base.starts_with('x') && stem != base {
            format!("x^{{{stem}}}")
        } else {
            base.clone()
        };
        match v.kind {
            VarKind::Base => sup,
            VarKind::Fiber => format!("d{sup}"),
            VarKind::AntiFiber => format!("x^*_{{{stem}}}"),
            VarKind::MomentumBase => format!("p_{{{stem}}}"),
            VarKind::MomentumFiber => format!("\\pi_{{{stem}}}"),
        }
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        if let Some(i) = self.params.iter().position(|p| p == name) {
            return Some(Symbol::Param(i));
        }
        (0..self.dim())
            .flat_map(|a| VarKind::ALL.iter().map(move |&k| (a, k)))
            .map(|(a, k)| self.var(k, a))
            .find(|&v| self.var_name(v) == name)
            .map(Symbol::Var)
    }

    /// Index of the parameter named `lambda`, or the first parameter.
    pub fn lambda(&self) -> Option<usize> {
        self.params
            .iter()
            .position(|p| p == "lambda")
            .or(if self.params.is_empty() {
                None
            } else {
                Some(0)
            })
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_parities() {
        let chart = Chart::standard(1, 1);
        assert_eq!(chart.base(0).parity(), Parity::Even);
        assert_eq!(chart.fiber(0).parity(), Parity::Odd);
        assert_eq!(chart.antifiber(1).parity(), Parity::Even);
        assert_eq!(chart.var(VarKind::MomentumBase, 1).parity(), Parity::Odd);
        assert_eq!(chart.var(VarKind::MomentumFiber, 0).parity(), Parity::Odd);
    }

    #[test]
    fn names_and_lookup() {
        let chart = Chart::standard(2, 0);
        let xs2 = chart.antifiber(1);
        assert_eq!(chart.var_name(xs2), "xs2");
        assert_eq!(chart.var_name(chart.fiber(0)), "dx1");
        assert_eq!(
            chart.lookup("pi2"),
            Some(Symbol::Var(chart.var(VarKind::MomentumFiber, 1)))
        );
        assert_eq!(chart.lookup("y"), None);
    }

    #[test]
    fn duplicate_names_rejected() {
        let coords = vec![("x1".into(), Parity::Even), ("x1".into(), Parity::Odd)];
        assert!(matches!(
            Chart::new("M", coords, vec![]),
            Err(Error::DuplicateName(_))
        ));
        // `t` has stem `t`, so its momentum is `pt`; a coordinate named `pt` clashes.
        let coords = vec![("t".into(), Parity::Even), ("pt".into(), Parity::Even)];
        assert!(Chart::new("M", coords, vec![]).is_err());
    }

    #[test]
    fn canonical_order_is_kind_then_descending_index() {
        let chart = Chart::standard(3, 0);
        assert!(chart.antifiber(2) < chart.antifiber(0));
        assert!(chart.base(0) < chart.fiber(2));
        assert!(chart.fiber(0) < chart.antifiber(2));
    }
}
