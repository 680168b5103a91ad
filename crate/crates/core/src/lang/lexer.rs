use std::str::FromStr;

use num::BigInt;

use super::{LangError, Pos};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Ident(String),
    /// Non-negative integer or `n/m` literal.
    Num(BigInt, Option<BigInt>),
    Sym(char),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

const SYMBOLS: &str = "()+-*^=,;:|";

/// Splits a script into tokens; `#` starts a comment running to the end of
/// the line.
pub fn lex(src: &str) -> Result<Vec<Token>, LangError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !(c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
                s.push(c);
                chars.next();
                col += 1;
            }
            out.push(Token {
                tok: Tok::Ident(s),
                pos,
            });
        } else if c.is_ascii_digit() {
            let mut num = digits(&mut chars, &mut col);
            let mut den = None;
            // `3/2` is a literal; there is no division operator
            let mut ahead = chars.clone();
            if ahead.next() == Some('/') && ahead.peek().is_some_and(char::is_ascii_digit) {
                chars.next();
                col += 1;
                den = Some(digits(&mut chars, &mut col));
            }
            let n = BigInt::from_str(&std::mem::take(&mut num)).expect("digits");
            let d = den.map(|d| BigInt::from_str(&d).expect("digits"));
            if d.as_ref().is_some_and(num::Zero::is_zero) {
                return Err(LangError::syntax(pos, "zero denominator"));
            }
            out.push(Token {
                tok: Tok::Num(n, d),
                pos,
            });
        } else if SYMBOLS.contains(c) {
            chars.next();
            col += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                pos,
            });
        } else {
            return Err(LangError::syntax(
                pos,
                format!("unexpected character `{c}`"),
            ));
        }
    }
    Ok(out)
}

fn digits(chars: &mut std::iter::Peekable<std::str::Chars<'_>>, col: &mut usize) -> String {
    let mut s = String::new();
    while let Some(&c) = chars.peek() {
        if !c.is_ascii_digit() {
            break;
        }
        s.push(c);
        chars.next();
        *col += 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_and_positions() {
        let toks = lex("let P = 3/2*xs1;\n  # note\nx1^2;").unwrap();
        assert_eq!(toks[3].tok, Tok::Num(3.into(), Some(2.into())));
        assert_eq!(toks[3].pos, Pos { line: 1, col: 9 });
        let x1 = toks
            .iter()
            .find(|t| t.tok == Tok::Ident("x1".into()))
            .unwrap();
        assert_eq!(x1.pos, Pos { line: 3, col: 1 });
        assert!(lex("1/0").is_err());
        assert!(lex("x $ y").is_err());
    }
}
