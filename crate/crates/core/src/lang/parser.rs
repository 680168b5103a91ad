use num::BigInt;

use super::lexer::{Tok, Token};
use super::{LangError, Pos};
use crate::graded::{Grading, Parity, PrintMode};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt, Option<BigInt>),
    Name(String),
    Neg(Box<Spanned>),
    Add(Box<Spanned>, Box<Spanned>),
    Sub(Box<Spanned>, Box<Spanned>),
    Mul(Box<Spanned>, Box<Spanned>),
    Pow(Box<Spanned>, u32),
    Call(String, Vec<Spanned>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spanned {
    pub expr: Expr,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Statement {
    /// `chart R2|2;`
    Chart {
        even: usize,
        odd: usize,
    },
    /// `coords x: even, theta: odd;`
    Coords(Vec<(String, Parity)>),
    /// `param lambda, mu;`
    Param(Vec<String>),
    Let(String, Spanned),
    Eval(Spanned),
    /// `set trunc fiber 6 lambda 1;`
    SetTrunc(Vec<(Grading, u32)>),
    SetFormat(PrintMode),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Stmt {
    pub statement: Statement,
    pub pos: Pos,
}

pub struct Parser {
    tokens: Vec<Token>,
    at: usize,
    end: Pos,
}

impl Parser {
    pub fn new(tokens: Vec<Token>) -> Self {
        let end = tokens
            .last()
            .map(|t| Pos {
                line: t.pos.line,
                col: t.pos.col + 1,
            })
            .unwrap_or(Pos { line: 1, col: 1 });
        Parser { tokens, at: 0, end }
    }

    pub fn is_done(&self) -> bool {
        self.at >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> Pos {
        self.tokens.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), LangError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn unexpected(&self, wanted: &str) -> LangError {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::Num(n, None)) => format!("`{n}`"),
            Some(Tok::Num(n, Some(d))) => format!("`{n}/{d}`"),
            Some(Tok::Sym(c)) => format!("`{c}`"),
        };
        LangError::syntax(self.pos(), format!("expected {wanted}, found {found}"))
    }

    fn ident(&mut self) -> Result<String, LangError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    fn keyword(&self) -> Option<&str> {
        match self.peek() {
            Some(Tok::Ident(s)) => Some(s.as_str()),
            _ => None,
        }
    }

    fn small_int(&mut self) -> Result<u32, LangError> {
        let pos = self.pos();
        match self.bump().map(|t| t.tok) {
            Some(Tok::Num(n, None)) => {
                u32::try_from(n).map_err(|_| LangError::syntax(pos, "integer out of range"))
            }
            _ => {
                self.at -= 1;
                Err(self.unexpected("a non-negative integer"))
            }
        }
    }

    /// Parses one `;`-terminated statement.
    pub fn statement(&mut self) -> Result<Stmt, LangError> {
        let pos = self.pos();
        let next_is_sym =
            |p: &Parser, c| p.tokens.get(p.at + 1).map(|t| &t.tok) == Some(&Tok::Sym(c));
        let statement = match self.keyword() {
            Some("chart") => {
                self.at += 1;
                self.chart_name()?
            }
            Some("coords") => {
                self.at += 1;
                let mut coords = Vec::new();
                loop {
                    let name = self.ident()?;
                    self.expect(':')?;
                    let parity = match self.keyword() {
                        Some("even") => Parity::Even,
                        Some("odd") => Parity::Odd,
                        _ => return Err(self.unexpected("`even` or `odd`")),
                    };
                    self.at += 1;
                    coords.push((name, parity));
                    if !self.eat(',') {
                        break;
                    }
                }
                Statement::Coords(coords)
            }
            Some("param") => {
                self.at += 1;
                let mut names = vec![self.ident()?];
                while self.eat(',') {
                    names.push(self.ident()?);
                }
                Statement::Param(names)
            }
            Some("let") => {
                self.at += 1;
                let name = self.ident()?;
                self.expect('=')?;
                Statement::Let(name, self.expr()?)
            }
            Some("set") if !next_is_sym(self, '(') => {
                self.at += 1;
                match self.ident()?.as_str() {
                    "trunc" => {
                        let mut cuts = Vec::new();
                        while let Some(k) = self.keyword() {
                            let g = match k {
                                "fiber" => Grading::FiberDegree,
                                "lambda" => Grading::LambdaDegree,
                                "base" => Grading::BaseDegree,
                                _ => return Err(self.unexpected("`fiber`, `lambda` or `base`")),
                            };
                            self.at += 1;
                            cuts.push((g, self.small_int()?));
                        }
                        if cuts.is_empty() {
                            return Err(self.unexpected("`fiber`, `lambda` or `base`"));
                        }
                        Statement::SetTrunc(cuts)
                    }
                    "format" => match self.ident()?.as_str() {
                        "canonical" => Statement::SetFormat(PrintMode::Canonical),
                        "latex" => Statement::SetFormat(PrintMode::Latex),
                        _ => {
                            self.at -= 1;
                            return Err(self.unexpected("`canonical` or `latex`"));
                        }
                    },
                    _ => {
                        self.at -= 1;
                        return Err(self.unexpected("`trunc` or `format`"));
                    }
                }
            }
            _ => Statement::Eval(self.expr()?),
        };
        self.expect(';')?;
        Ok(Stmt { statement, pos })
    }

    fn chart_name(&mut self) -> Result<Statement, LangError> {
        let pos = self.pos();
        let name = self.ident()?;
        let bad = || {
            LangError::syntax(
                pos,
                format!("chart must be written `R<m>` or `R<m>|<n>`, found `{name}`"),
            )
        };
        let even = name
            .strip_prefix('R')
            .and_then(|m| m.parse::<usize>().ok())
            .ok_or_else(bad)?;
        let odd = if self.eat('|') {
            self.small_int()? as usize
        } else {
            0
        };
        Ok(Statement::Chart { even, odd })
    }

    pub fn expr(&mut self) -> Result<Spanned, LangError> {
        let mut lhs = self.term()?;
        loop {
            let pos = lhs.pos;
            let expr = if self.eat('+') {
                Expr::Add(Box::new(lhs), Box::new(self.term()?))
            } else if self.eat('-') {
                Expr::Sub(Box::new(lhs), Box::new(self.term()?))
            } else {
                return Ok(lhs);
            };
            lhs = Spanned { expr, pos };
        }
    }

    fn term(&mut self) -> Result<Spanned, LangError> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            let rhs = self.unary()?;
            lhs = Spanned {
                pos: lhs.pos,
                expr: Expr::Mul(Box::new(lhs), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Spanned, LangError> {
        let pos = self.pos();
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(Spanned {
                expr: Expr::Neg(Box::new(inner)),
                pos,
            });
        }
        let base = self.primary()?;
        if self.eat('^') {
            let e = self.small_int()?;
            return Ok(Spanned {
                expr: Expr::Pow(Box::new(base), e),
                pos,
            });
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Spanned, LangError> {
        let pos = self.pos();
        let expr = match self.bump().map(|t| t.tok) {
            Some(Tok::Num(n, d)) => Expr::Num(n, d),
            Some(Tok::Ident(name)) => {
                if self.eat('(') {
                    let mut args = Vec::new();
                    if !self.eat(')') {
                        loop {
                            args.push(self.expr()?);
                            if self.eat(')') {
                                break;
                            }
                            self.expect(',')?;
                        }
                    }
                    Expr::Call(name, args)
                } else {
                    Expr::Name(name)
                }
            }
            Some(Tok::Sym('(')) => {
                let inner = self.expr()?;
                self.expect(')')?;
                return Ok(Spanned { pos, ..inner });
            }
            _ => {
                self.at -= 1;
                return Err(self.unexpected("an expression"));
            }
        };
        Ok(Spanned { expr, pos })
    }
}

/// Parses a whole script into statements.
pub fn parse(src: &str) -> Result<Vec<Stmt>, LangError> {
    let mut p = Parser::new(super::lexer::lex(src)?);
    let mut out = Vec::new();
    while !p.is_done() {
        out.push(p.statement()?);
    }
    Ok(out)
}

/// Parses a single expression with no trailing `;`.
pub fn parse_expr(src: &str) -> Result<Spanned, LangError> {
    let mut p = Parser::new(super::lexer::lex(src)?);
    let e = p.expr()?;
    if !p.is_done() {
        return Err(p.unexpected("end of input"));
    }
    Ok(e)
}
