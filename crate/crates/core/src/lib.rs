//! Exact symbolic engine for higher Poisson structures on supermanifolds:
//! supercommutative polynomial algebra, the Schouten and canonical Poisson
//! brackets, the fiberwise Legendre transform between multivector fields
//! and forms, higher Koszul brackets, and identity checkers.

pub mod brackets;
pub mod error;
pub mod fixtures;
pub mod graded;
pub mod koszul;
pub mod lang;
pub mod legendre;
pub mod verify;

pub use error::{Error, Result};
pub use graded::{Chart, GradedPoly, Parity, VarKind, Variable};
