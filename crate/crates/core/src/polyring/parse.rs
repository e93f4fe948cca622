//! Text grammar for polynomials:
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! coeff  := uint
//! ```
//!
//! Whitespace between tokens is ignored. Coefficients are reduced mod p.

use std::sync::Arc;

use super::{Monomial, Polynomial, RingContext};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a Arc<RingContext>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.pos, message: message.into() })
    }

    fn digits(&mut self) -> &'a [u8] {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn coeff(&mut self) -> u32 {
        let p = self.ctx.characteristic() as u64;
        self.digits().iter().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p) as u32
    }

    fn exponent(&mut self) -> Result<u32> {
        if !matches!(self.peek(), Some(b'0'..=b'9')) {
            return self.syntax("expected exponent");
        }
        let digits = self.digits();
        digits.iter().try_fold(0u32, |acc, d| {
            acc.checked_mul(10).and_then(|v| v.checked_add((d - b'0') as u32)).ok_or(Error::ExponentOverflow)
        })
    }

    fn factor(&mut self, mono: &mut Vec<u32>) -> Result<()> {
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return self.syntax("expected variable"),
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let idx =
            self.ctx.var_index(name).ok_or_else(|| Error::UnknownVariable { name: name.to_string(), offset: start })?;
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.exponent()?
        } else {
            1
        };
        mono[idx] = mono[idx].checked_add(exp).ok_or(Error::ExponentOverflow)?;
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, u32)> {
        let mut mono = vec![0u32; self.ctx.num_vars()];
        let coeff = match self.peek() {
            Some(b'0'..=b'9') => {
                let c = self.coeff();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.peek();
                    self.factor(&mut mono)?;
                }
                c
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.factor(&mut mono)?;
                1
            }
            _ => return self.syntax("expected term"),
        };
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.peek();
            self.factor(&mut mono)?;
        }
        Ok((Monomial::from(mono), coeff))
    }
}

/// Parses `text` into a canonical polynomial of `ctx`.
pub fn parse_polynomial(text: &str, ctx: &Arc<RingContext>) -> Result<Polynomial> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0, ctx };
    let mut terms = Vec::new();
    let (m, c) = parser.term()?;
    terms.push((m, c as i64));
    loop {
        match parser.peek() {
            None => break,
            Some(sign @ (b'+' | b'-')) => {
                parser.pos += 1;
                let (m, c) = parser.term()?;
                let c = if sign == b'-' { -(c as i64) } else { c as i64 };
                terms.push((m, c));
            }
            Some(_) => return parser.syntax("expected '+', '-' or end of input"),
        }
    }
    Ok(Polynomial::from_terms(ctx, terms))
}
