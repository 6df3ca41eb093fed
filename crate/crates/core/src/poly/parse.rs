//! Text grammar:
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coef | coef '*' mono | mono
//! coef   := integer | integer '/' positive-integer
//! mono   := factor ('*' factor)*
//! factor := var ('^' positive-integer)?
//! var    := 'x' | 'y' | 'z' | 'x1' .. 'xN'
//! ```
//!
//! Whitespace is ignored everywhere.

use super::{Monomial, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

pub(super) fn parse(text: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    if nvars == 0 {
        return Err(ParseError { position: 0, message: "variable count must be positive".into() });
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, nvars };
    p.poly()
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut out = Polynomial::zero(self.nvars);
        let mut negative = self.eat(b'-');
        loop {
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(c) => return self.err(format!("unexpected '{}'", c as char)),
            }
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coef = self.coef()?;
                if self.eat(b'*') {
                    Ok((self.mono()?, coef))
                } else {
                    Ok((Monomial::one(self.nvars), coef))
                }
            }
            Some(b'x' | b'y' | b'z') => Ok((self.mono()?, Rational::one())),
            Some(c) => self.err(format!("expected a term, found '{}'", c as char)),
            None => self.err("expected a term, found end of input"),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn coef(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ParseError { position: at, message: "zero denominator".into() });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn mono(&mut self) -> Result<Monomial, ParseError> {
        let mut exps = vec![0u32; self.nvars];
        loop {
            let at = self.pos;
            let (i, e) = self.factor()?;
            exps[i] = match exps[i].checked_add(e) {
                Some(v) => v,
                None => return Err(ParseError { position: at, message: "exponent overflow".into() }),
            };
            if !self.eat(b'*') {
                return Ok(Monomial::new(exps));
            }
        }
    }

    fn factor(&mut self) -> Result<(usize, u32), ParseError> {
        let i = self.var()?;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self.digits()?;
            let e: u32 = match u32::try_from(e) {
                Ok(v) => v,
                Err(_) => return Err(ParseError { position: at, message: "exponent overflow".into() }),
            };
            if e == 0 {
                return Err(ParseError { position: at, message: "exponent must be positive".into() });
            }
            Ok((i, e))
        } else {
            Ok((i, 1))
        }
    }

    fn var(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let Some(&c) = self.src.get(self.pos) else {
            return self.err("expected a variable");
        };
        self.pos += 1;
        let idx = match c {
            b'x' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                if end == self.pos {
                    0
                } else {
                    let s = std::str::from_utf8(&self.src[self.pos..end]).expect("ascii digits");
                    self.pos = end;
                    match s.parse::<usize>() {
                        Ok(k) if k >= 1 => k - 1,
                        _ => return Err(ParseError { position: start, message: format!("unknown variable 'x{s}'") }),
                    }
                }
            }
            b'y' if self.nvars <= 3 => 1,
            b'z' if self.nvars <= 3 => 2,
            _ => {
                self.pos = start;
                return self.err(format!("unknown variable '{}'", c as char));
            }
        };
        if idx >= self.nvars {
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("?").to_string();
            return Err(ParseError {
                position: start,
                message: format!("unknown variable '{name}' for {} variables", self.nvars),
            });
        }
        Ok(idx)
    }
}
