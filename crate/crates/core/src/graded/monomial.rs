use std::cmp::Ordering;

use super::chart::{Parity, VarKind, Variable};

/// A product of chart variables (in canonical order) times a product of
/// formal parameters.
///
/// Odd variables appear with exponent exactly 1. Signs produced while
/// sorting are returned to the caller, which folds them into the term's
/// coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    vars: Vec<(Variable, u32)>,
    params: Vec<(u16, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial {
            vars: vec![(v, 1)],
            params: Vec::new(),
        }
    }

    pub fn param(index: usize, exp: u32) -> Self {
        Monomial {
            vars: Vec::new(),
            params: if exp == 0 {
                Vec::new()
            } else {
                vec![(index as u16, exp)]
            },
        }
    }

    /// Build from factors in the given (left to right) order. Returns the
    /// canonical monomial and whether sorting produced a minus sign, or
    /// `None` when an odd variable is repeated.
    pub fn from_factors(factors: &[(Variable, u32)]) -> Option<(Monomial, bool)> {
        let mut acc = Monomial::one();
        let mut negative = false;
        for &(v, e) in factors {
            if e == 0 {
                continue;
            }
            if v.is_odd() && e > 1 {
                return None;
            }
            let single = Monomial {
                vars: vec![(v, e)],
                params: Vec::new(),
            };
            let (m, neg) = acc.mul(&single)?;
            acc = m;
            negative ^= neg;
        }
        Some((acc, negative))
    }

    pub fn vars(&self) -> &[(Variable, u32)] {
        &self.vars
    }

    pub fn params(&self) -> &[(u16, u32)] {
        &self.params
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty() && self.params.is_empty()
    }

    pub fn parity(&self) -> Parity {
        let odd = self.vars.iter().filter(|(v, _)| v.is_odd()).count();
        Parity::from_bit((odd & 1) as u8)
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.vars
            .iter()
            .find(|(w, _)| *w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn degree_in(&self, mut pred: impl FnMut(VarKind) -> bool) -> u32 {
        self.vars
            .iter()
            .filter(|(v, _)| pred(v.kind))
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn param_degree(&self) -> u32 {
        self.params.iter().map(|&(_, e)| e).sum()
    }

    pub fn contains_kind(&self, kind: VarKind) -> bool {
        self.vars.iter().any(|(v, _)| v.kind == kind)
    }

    /// The chart-variable part alone.
    pub fn without_params(&self) -> Monomial {
        Monomial {
            vars: self.vars.clone(),
            params: Vec::new(),
        }
    }

    pub fn params_only(&self) -> Monomial {
        Monomial {
            vars: Vec::new(),
            params: self.params.clone(),
        }
    }

    /// Supercommutative product. The flag is true when reordering the odd
    /// factors of `other` past those of `self` costs a minus sign.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        // odd factors of `self` at or after position i
        let mut odd_suffix = vec![0usize; self.vars.len() + 1];
        for i in (0..self.vars.len()).rev() {
            odd_suffix[i] = odd_suffix[i + 1] + usize::from(self.vars[i].0.is_odd());
        }
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        let mut negative = false;
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() || j < other.vars.len() {
            let take_left = match (self.vars.get(i), other.vars.get(j)) {
                (Some(a), Some(b)) => match a.0.cmp(&b.0) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        if a.0.is_odd() {
                            return None;
                        }
                        vars.push((a.0, a.1 + b.1));
                        i += 1;
                        j += 1;
                        continue;
                    }
                },
                (Some(_), None) => true,
                (None, _) => false,
            };
            if take_left {
                vars.push(self.vars[i]);
                i += 1;
            } else {
                let b = other.vars[j];
                if b.0.is_odd() && odd_suffix[i] % 2 == 1 {
                    negative = !negative;
                }
                vars.push(b);
                j += 1;
            }
        }
        let params = merge_params(&self.params, &other.params);
        Some((Monomial { vars, params }, negative))
    }

    /// Left derivative `d/dz`: returns the multiplicity (as a signed integer)
    /// and the remaining monomial, or `None` when `z` does not occur.
    pub fn left_deriv(&self, z: Variable) -> Option<(i64, Monomial)> {
        let pos = self.vars.iter().position(|(v, _)| *v == z)?;
        let (_, e) = self.vars[pos];
        let mut rest = self.clone();
        let factor = if z.is_odd() {
            let before = self.vars[..pos].iter().filter(|(v, _)| v.is_odd()).count();
            rest.vars.remove(pos);
            if before % 2 == 1 {
                -1
            } else {
                1
            }
        } else {
            if e == 1 {
                rest.vars.remove(pos);
            } else {
                rest.vars[pos].1 = e - 1;
            }
            e as i64
        };
        Some((factor, rest))
    }
}

fn merge_params(a: &[(u16, u32)], b: &[(u16, u32)]) -> Vec<(u16, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                out.push((x.0, x.1 + y.1));
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                out.push(*x);
                i += 1;
            }
            (Some(_), Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (Some(x), None) => {
                out.push(*x);
                i += 1;
            }
            (None, Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Chart;

    #[test]
    fn odd_square_vanishes() {
        let chart = Chart::standard(2, 0);
        let xs1 = Monomial::var(chart.antifiber(0));
        assert!(xs1.mul(&xs1).is_none());
    }

    #[test]
    fn anticommuting_pair() {
        let chart = Chart::standard(2, 0);
        let d1 = Monomial::var(chart.fiber(0));
        let d2 = Monomial::var(chart.fiber(1));
        let (m12, n12) = d1.mul(&d2).unwrap();
        let (m21, n21) = d2.mul(&d1).unwrap();
        assert_eq!(m12, m21);
        assert_ne!(n12, n21);
    }

    #[test]
    fn left_derivative_signs() {
        let chart = Chart::standard(2, 0);
        let (xs2, xs1) = (chart.antifiber(1), chart.antifiber(0));
        let (m, neg) = Monomial::from_factors(&[(xs2, 1), (xs1, 1)]).unwrap();
        assert!(!neg);
        assert_eq!(m.left_deriv(xs1).unwrap(), (-1, Monomial::var(xs2)));
        assert_eq!(m.left_deriv(xs2).unwrap(), (1, Monomial::var(xs1)));
    }

    #[test]
    fn even_power_derivative() {
        let chart = Chart::standard(1, 0);
        let x = chart.base(0);
        let (m, _) = Monomial::from_factors(&[(x, 3)]).unwrap();
        let (c, rest) = m.left_deriv(x).unwrap();
        assert_eq!(c, 3);
        assert_eq!(rest.exponent(x), 2);
    }
}
