//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   = term { ("+" | "-") term }
//! term   = unary { "*" unary }
//! unary  = ("-" | "+") unary | power
//! power  = atom [ "^" integer ]
//! atom   = integer [ "/" integer ] | variable | "(" expr ")"
//! ```

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let skip_ws = |mut i: usize| {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        i
    };
    let digits = |mut i: usize| {
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        (start, i)
    };
    loop {
        i = skip_ws(i);
        if i >= bytes.len() {
            out.push((Token::End, i));
            return Ok(out);
        }
        let start = i;
        let c = bytes[i];
        let tok = match c {
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                let (s, e) = digits(i);
                let num: BigInt = src[s..e].parse().unwrap();
                i = e;
                let after = skip_ws(i);
                let value = if after < bytes.len() && bytes[after] == b'/' {
                    let (ds, de) = digits(skip_ws(after + 1));
                    if ds == de {
                        return Err(err(ds, "expected an integer denominator after '/'"));
                    }
                    let den: BigInt = src[ds..de].parse().unwrap();
                    if den.is_zero() {
                        return Err(err(ds, "zero denominator"));
                    }
                    i = de;
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                out.push((Token::Number(value), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(src[start..i].to_string()), start));
                continue;
            }
            b'/' => return Err(err(i, "'/' is only allowed inside a rational coefficient")),
            _ => {
                let ch = src[i..].chars().next().unwrap();
                return Err(err(i, format!("unexpected character '{ch}'")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while *self.peek() == Token::Star {
            self.bump();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Token::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Token::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Token::Number(n) if n.is_integer() => {
                let e = n.numer().to_u32().ok_or_else(|| err(at, "exponent too large"))?;
                Ok(base.pow(e))
            }
            Token::Minus => Err(err(at, "negative exponents are not allowed")),
            _ => Err(err(at, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Token::Number(n) => {
                let c = self
                    .ring
                    .field()
                    .try_normalize(&n)
                    .ok_or_else(|| err(at, "denominator vanishes in the coefficient field"))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Token::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(err(at, format!("unknown variable `{name}`"))),
            },
            Token::LParen => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Token::RParen => Ok(inner),
                    _ => Err(err(close, "expected ')'")),
                }
            }
            Token::End => Err(err(at, "unexpected end of input")),
            t => Err(err(at, format!("unexpected token {t:?}"))),
        }
    }
}

/// Parses a polynomial over `ring`. Whitespace is ignored.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, ring };
    let out = p.expr()?;
    match p.peek() {
        Token::End => Ok(out),
        _ => Err(err(p.offset(), "trailing input")),
    }
}
