use std::fmt;

use serde::{Deserialize, Serialize};

use super::chart::VarKind;
use super::monomial::Monomial;

/// Z-gradings used for slicing and truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Grading {
    /// Total degree in `dx`, `x*` and `pi`.
    FiberDegree,
    /// Total degree in the formal parameters.
    LambdaDegree,
    /// Total degree in base coordinates.
    BaseDegree,
}

impl Grading {
    pub fn degree(self, m: &Monomial) -> u32 {
        match self {
            Grading::FiberDegree => m.degree_in(|k| {
                matches!(
                    k,
                    VarKind::Fiber | VarKind::AntiFiber | VarKind::MomentumFiber
                )
            }),
            Grading::LambdaDegree => m.param_degree(),
            Grading::BaseDegree => m.degree_in(|k| k == VarKind::Base),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncationSpec {
    pub grading: Grading,
    pub order: u32,
}

/// Simultaneous cutoffs: a monomial survives when every present cutoff
/// admits it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Truncation {
    pub fiber: Option<u32>,
    pub lambda: Option<u32>,
    pub base: Option<u32>,
}

impl Truncation {
    pub const fn none() -> Self {
        Truncation {
            fiber: None,
            lambda: None,
            base: None,
        }
    }

    pub const fn new(fiber: u32, lambda: u32, base: u32) -> Self {
        Truncation {
            fiber: Some(fiber),
            lambda: Some(lambda),
            base: Some(base),
        }
    }

    pub fn with(mut self, spec: TruncationSpec) -> Self {
        let slot = match spec.grading {
            Grading::FiberDegree => &mut self.fiber,
            Grading::LambdaDegree => &mut self.lambda,
            Grading::BaseDegree => &mut self.base,
        };
        *slot = Some(spec.order);
        self
    }

    pub fn keeps(&self, m: &Monomial) -> bool {
        let within = |cut: Option<u32>, g: Grading| cut.is_none_or(|c| g.degree(m) <= c);
        within(self.fiber, Grading::FiberDegree)
            && within(self.lambda, Grading::LambdaDegree)
            && within(self.base, Grading::BaseDegree)
    }

    /// Sum of all finite cutoffs; bounds the number of contracting
    /// iterations needed to reach a fixed point.
    pub fn total_order(&self) -> u32 {
        self.fiber.unwrap_or(0) + self.lambda.unwrap_or(0) + self.base.unwrap_or(0)
    }
}

impl Default for TruncationSpec {
    fn default() -> Self {
        TruncationSpec {
            grading: Grading::FiberDegree,
            order: 6,
        }
    }
}

impl From<TruncationSpec> for Truncation {
    fn from(spec: TruncationSpec) -> Self {
        Truncation::none().with(spec)
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(n) = self.fiber {
            parts.push(format!("fiber<={n}"));
        }
        if let Some(n) = self.lambda {
            parts.push(format!("lambda<={n}"));
        }
        if let Some(n) = self.base {
            parts.push(format!("base<={n}"));
        }
        if parts.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

/// Fiber order 6, lambda order 2, base order 4.
pub const DEFAULT_TRUNCATION: Truncation = Truncation::new(6, 2, 4);

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graded::{Chart, GradedPoly};

    #[test]
    fn truncation_is_idempotent() {
        let c = Arc::new(Chart::standard(2, 0));
        let x = GradedPoly::var(&c, c.base(0));
        let d = GradedPoly::var(&c, c.fiber(1));
        let u = x.pow(5) + &x.pow(2) * &d + GradedPoly::one(&c);
        let t = Truncation::from(TruncationSpec {
            grading: Grading::BaseDegree,
            order: 2,
        });
        let once = u.truncate(&t);
        assert_eq!(once.truncate(&t), once);
        assert_eq!(once, &x.pow(2) * &d + GradedPoly::one(&c));
    }
}
