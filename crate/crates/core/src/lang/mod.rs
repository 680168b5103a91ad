//! A small script language over the engine: chart and parameter
//! declarations, immutable bindings, bracket and Legendre operations, and
//! `check_*` statements that emit reports.

mod lexer;
mod parser;
mod session;

use std::fmt;

pub use lexer::{lex, Tok, Token};
pub use parser::{parse, parse_expr, Expr, Spanned, Statement, Stmt};
pub use session::{run_session, Output, Session, SessionOutcome};

use crate::graded::{GradedPoly, PrintMode};

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LangError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("error at {pos}: {msg}")]
    Semantic { pos: Pos, msg: String },
}

impl LangError {
    pub fn syntax(pos: Pos, msg: impl ToString) -> Self {
        LangError::Syntax {
            pos,
            msg: msg.to_string(),
        }
    }

    pub fn semantic(pos: Pos, msg: impl ToString) -> Self {
        LangError::Semantic {
            pos,
            msg: msg.to_string(),
        }
    }

    pub fn pos(&self) -> Option<Pos> {
        match self {
            LangError::Syntax { pos, .. } | LangError::Semantic { pos, .. } => Some(*pos),
        }
    }
}

/// Reads a polynomial written in canonical form on `session`'s chart.
pub fn read_poly(session: &mut Session, src: &str) -> Result<GradedPoly, LangError> {
    let e = parse_expr(src)?;
    match session.execute(&Stmt {
        statement: Statement::Eval(e),
        pos: Pos { line: 1, col: 1 },
    })? {
        Some(Output::Value(v)) => Ok(v),
        _ => Err(LangError::semantic(
            Pos { line: 1, col: 1 },
            "expected a polynomial expression",
        )),
    }
}

/// Canonical text of `u`, readable back with [`read_poly`].
pub fn print(u: &GradedPoly, mode: PrintMode) -> String {
    crate::graded::render(u, mode)
}
