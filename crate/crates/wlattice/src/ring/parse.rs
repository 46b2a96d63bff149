//! Expression parser for rational functions in the canonical variable names.
//!
//! Accepts sums/products/quotients/integer powers with implicit multiplication
//! by juxtaposition, e.g. `(x1 + x2)(x2 + x3) / (x2 (x1 + x2 + x3))` or
//! `2 x1 x2^2`. Variables are `x1..`, `y1..`, `z1..`, `k1..` or `v{f}_{s}`.

use super::{RatFunc, Scalar, VarId};
use crate::error::{Error, Result};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number at {start}")))?;
                out.push(Tok::Num(n));
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_lowercase() {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'_' {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                out.push(Tok::Name(s[start..i].to_string()));
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    acc = acc.div(&self.factor()?)?;
                }
                Some(Tok::Num(_)) | Some(Tok::Name(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFunc> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let neg = if matches!(self.peek(), Some(Tok::Minus)) {
                self.pos += 1;
                true
            } else {
                false
            };
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: i64 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return base.pow(if neg { -e } else { e });
                }
                _ => return Err(Error::Parse("expected integer exponent after ^".into())),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<RatFunc> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(RatFunc::constant(Scalar::from_integer(n))),
            Some(Tok::Name(s)) => Ok(RatFunc::variable(VarId::from_name(&s)?)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn juxtaposition_and_powers() {
        let a = parse_ratfunc("2 x1 x2^2").unwrap();
        let b = parse_ratfunc("2*x1*x2^2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_normalizes() {
        let a = parse_ratfunc("(x1 + x2)(x2 + x3)/(x2 (x1 + x2 + x3))").unwrap();
        assert_eq!(a.den().num_terms(), 3);
        assert_eq!(a.num().num_terms(), 4);
    }

    #[test]
    fn unary_minus_and_nesting() {
        let a = parse_ratfunc("-(-1 + x1)(x2 - 1)").unwrap();
        let b = parse_ratfunc("(1 - x1)(x2 - 1)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn generic_family_names() {
        let a = parse_ratfunc("v5_2 + k1").unwrap();
        assert_eq!(a.num().num_terms(), 2);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfunc("x1 +").is_err());
        assert!(parse_ratfunc("(x1").is_err());
        assert!(parse_ratfunc("q9").is_err());
        assert!(parse_ratfunc("").is_err());
    }
}
