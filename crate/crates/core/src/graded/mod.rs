//! Supercommutative polynomial algebra over a chart: canonical monomials
//! with Koszul signs, left derivatives, substitutions and gradings.

mod chart;
mod monomial;
mod poly;
mod print;
mod random;
mod subst;
mod trunc;

pub use chart::{Chart, Parity, Symbol, VarKind, Variable};
pub use monomial::Monomial;
pub use poly::{rat, ratio, GradedPoly, Rational};
pub use print::{render, PrintMode};
pub use random::{random_poly, RandomSpec};
pub use subst::SubstitutionMap;
pub use trunc::{Grading, Truncation, TruncationSpec, DEFAULT_TRUNCATION};
