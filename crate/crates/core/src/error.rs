use thiserror::Error;

use crate::graded::Parity;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live on different charts (`{0}` vs `{1}`)")]
    ChartMismatch(String, String),
    #[error("`{0}` is not a valid identifier")]
    InvalidName(String),
    #[error("name `{0}` is declared twice")]
    DuplicateName(String),
    #[error("substitution for `{var}` has parity {found}, expected {expected}")]
    ParityMismatch {
        var: String,
        expected: Parity,
        found: String,
    },
    #[error("{op}: input must be parity-homogeneous")]
    MixedParity { op: &'static str },
    #[error("{op}: input must be {expected}")]
    WrongParity { op: &'static str, expected: Parity },
    #[error("{op}: input may not contain `{var}`")]
    ForbiddenVariable { op: &'static str, var: String },
    #[error("requested parity {0} cannot be produced from the given variable kinds")]
    UnachievableParity(Parity),
    #[error("fiber map has a singular linear part at the chart origin")]
    SingularLinearPart,
    #[error("series inversion did not stabilize after {0} iterations at the requested truncation")]
    NoStabilization(usize),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
