//! The cyclotomic literal syntax used by the JSON table files.
//!
//! Integer and rational literals, `E(n)` for zeta_n, `^` for powers, and
//! `*`, `+`, `-`; e.g. `3-E(5)^2-E(5)^3`.  Parsing is exact and
//! serialization round-trips.

use num::rational::BigRational;
use num::{One, Signed};

use super::{Cyclotomic, Int, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

pub fn parse_cyclotomic(input: &str) -> Result<Cyclotomic> {
    let mut p = Parser { bytes: input.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::parse(format!(
            "trailing input at byte {} in cyclotomic literal {:?}",
            p.pos, input
        )));
    }
    Ok(v)
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Cyclotomic> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op) = self.peek() {
            match op {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Cyclotomic> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            let mut acc = Cyclotomic::one();
            for _ in 0..e {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Cyclotomic> {
        match self.peek() {
            Some(b'E') => {
                self.pos += 1;
                self.expect(b'(')?;
                let n = self.uint()?;
                self.expect(b')')?;
                Cyclotomic::root_of_unity(n, 1)
                    .map_err(|e| Error::parse(e.to_string()))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.uint()?;
                    if den == 0 {
                        return Err(Error::parse("rational literal with denominator 0"));
                    }
                    Ok(Cyclotomic::from_rational(Rational::new(
                        Int::from(num),
                        Int::from(den),
                    )))
                } else {
                    Ok(Cyclotomic::from_rational(Rational::from_integer(Int::from(num))))
                }
            }
            other => Err(Error::parse(format!(
                "unexpected {:?} in cyclotomic literal",
                other.map(|b| b as char)
            ))),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse("expected an unsigned integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|e| Error::parse(format!("integer literal out of range: {}", e)))
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(format!("expected {:?}", b as char)))
        }
    }
}

fn rational_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical textual form; `parse_cyclotomic` inverts it exactly.
pub fn serialize_cyclotomic(x: &Cyclotomic) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let n = x.conductor();
    let mut out = String::new();
    for (e, c) in x.coefficients() {
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let root = if e == 0 {
            None
        } else if e == 1 {
            Some(format!("E({})", n))
        } else {
            Some(format!("E({})^{}", n, e))
        };
        match root {
            None => out.push_str(&rational_str(&abs)),
            Some(root) => {
                if !abs.is_one() {
                    out.push_str(&rational_str(&abs));
                    out.push('*');
                }
                out.push_str(&root);
            }
        }
    }
    out
}
