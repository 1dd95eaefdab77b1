//! Polynomial expressions over the named generators.
//!
//! Grammar:
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := ('-' | '+') factor | atom ('^' integer)?
//! atom   := integer | name '(' integer ')' | '(' expr ')'
//! name   := h | hhat | hbar | hcheck | htilde | hhatc
//! ```
//! Division is only by nonzero rational constants.

use crate::commutative::{expand_hat_series, named_series, NamedSeries};
use crate::error::{Error, Result};
use crate::poly::GradedPolynomial;
use crate::rational::Q;
use crate::sequence::SequenceSpec;
use num_bigint::BigInt;
use num_traits::Zero;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| Error::Parse { pos: start, msg: "index too large".into() })
    }

    fn expr(&mut self) -> Result<GradedPolynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<GradedPolynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc * &self.factor()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.factor()?;
                let c = match (d.homogeneous_degree(), d.terms().next()) {
                    (Some(0), Some((_, c))) if !c.is_zero() => c.clone(),
                    _ => return Err(Error::Parse { pos: at, msg: "division by a non-constant or zero".into() }),
                };
                acc = acc.scale(&(Q::from_integer(1.into()) / c));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<GradedPolynomial> {
        if self.eat(b'-') {
            return Ok(-&self.factor()?);
        }
        if self.eat(b'+') {
            return self.factor();
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.small()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<GradedPolynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(GradedPolynomial::constant(Q::from_integer(self.integer()?))),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").to_ascii_lowercase();
                self.expect(b'(')?;
                let k = self.small()?;
                self.expect(b')')?;
                generator(&name, k).ok_or(Error::Parse { pos: start, msg: format!("unknown generator `{name}`") })
            }
            _ => Err(self.err("expected expression")),
        }
    }
}

fn generator(name: &str, k: u32) -> Option<GradedPolynomial> {
    let named = |s: NamedSeries| named_series(s, k as usize).coeff(k as usize).clone();
    Some(match name {
        "h" if k > 0 => GradedPolynomial::h(k),
        "hhat" => named(NamedSeries::Hat),
        "hbar" => named(NamedSeries::Bar),
        "hcheck" => named(NamedSeries::Check),
        "htilde" => named(NamedSeries::Tilde),
        "hhatc" => expand_hat_series(&SequenceSpec::Cpow2, k as usize).ok()?.coeff(k as usize).clone(),
        _ => return None,
    })
}

/// Parses an expression into a polynomial in the `h_r`.
pub fn parse_expression(s: &str) -> Result<GradedPolynomial> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}
