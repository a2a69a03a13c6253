//! Parser for the textual form of algebra elements.
//!
//! Grammar (whitespace is ignored between tokens):
//!
//! ```text
//! element := ['+' | '-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := integer ['/' integer] | name ['^' ['-'] integer]
//! ```
//!
//! In the Laurent basis the only admissible name is the expansion
//! parameter, spelled `e`, `eps` or `ε`. In the free commutative basis any
//! identifier is a symbol and exponents must be non-negative.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{AlgebraElement, BasisKind, Monomial, Rational};
use crate::error::{Error, Result};

pub fn parse_element(input: &str, kind: BasisKind) -> Result<AlgebraElement> {
    let mut p = Parser {
        src: input,
        pos: 0,
        kind,
    };
    let out = p.element()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    kind: BasisKind,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn element(&mut self) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(self.kind);
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty expression"));
        }
        let mut sign = Rational::one();
        match self.peek() {
            Some('-') => {
                self.bump();
                sign = -sign;
            }
            Some('+') => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, c * &sign);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => {
                    self.bump();
                    sign = Rational::one();
                }
                Some('-') => {
                    self.bump();
                    sign = -Rational::one();
                }
                Some(_) => return Err(self.error("expected `+`, `-` or end of input")),
            }
            self.skip_ws();
            if self.peek() == Some('-') {
                self.bump();
                sign = -sign;
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::one(self.kind);
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.integer()?;
                    self.skip_ws();
                    let den = if self.peek() == Some('/') {
                        self.bump();
                        self.skip_ws();
                        let at = self.pos;
                        let d = self.integer()?;
                        if d.is_zero() {
                            self.pos = at;
                            return Err(self.error("zero denominator"));
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    coeff *= Rational::new(num, den);
                }
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let start = self.pos;
                    let name = self.identifier();
                    self.skip_ws();
                    let exp = if self.peek() == Some('^') {
                        self.bump();
                        self.skip_ws();
                        let negative = if self.peek() == Some('-') {
                            self.bump();
                            true
                        } else {
                            false
                        };
                        let at = self.pos;
                        let v = self.integer()?;
                        let v: i64 = v.try_into().map_err(|_| {
                            self.pos = at;
                            self.error("exponent out of range")
                        })?;
                        if negative {
                            -v
                        } else {
                            v
                        }
                    } else {
                        1
                    };
                    let factor = match self.kind {
                        BasisKind::Laurent => {
                            if !matches!(name.as_str(), "e" | "eps" | "ε") {
                                self.pos = start;
                                return Err(self.error(&format!(
                                    "unknown variable `{name}` (Laurent elements use `e`)"
                                )));
                            }
                            Monomial::Laurent(exp)
                        }
                        BasisKind::FreeCommutative => {
                            if exp < 0 {
                                self.pos = start;
                                return Err(self.error("negative exponent on a symbol"));
                            }
                            Monomial::Symbols(vec![name; exp as usize])
                        }
                    };
                    mono = mono.checked_mul(&factor).expect("same basis");
                }
                _ => return Err(self.error("expected a number or a variable")),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
            } else {
                break;
            }
        }
        Ok((mono, coeff))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn identifier(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.bump();
        }
        self.src[start..self.pos].to_string()
    }
}
