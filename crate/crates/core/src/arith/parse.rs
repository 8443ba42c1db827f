//! Recursive-descent parser for polynomial expressions:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := integer ['/' integer] | var ['^' integer]
//! var    := [a-zA-Z][a-zA-Z0-9_]*
//! ```
//!
//! Whitespace between tokens is ignored. The `integer/integer` literal exists
//! so that printed forms with non-integral coefficients re-parse.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ArithError, Monomial, PolyRing, Polynomial, Rational};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolyRing,
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

    fn error(&self, message: impl Into<String>) -> ArithError {
        ArithError::Syntax { offset: self.pos, message: message.into() }
    }

    fn integer(&mut self) -> Result<BigInt, ArithError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("validated digits"))
    }

    fn exponent(&mut self) -> Result<u32, ArithError> {
        self.skip_ws();
        let start = self.pos;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| ArithError::Syntax { offset: start, message: "exponent too large".into() })
    }

    fn factor(&mut self) -> Result<(Monomial, Rational), ArithError> {
        let nvars = self.ring.nvars();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(ArithError::Syntax { offset: at, message: "zero denominator".into() });
                    }
                    Ok((Monomial::one(nvars), Rational::new(num, den)))
                } else {
                    Ok((Monomial::one(nvars), Rational::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                let index = self.ring.var_index(name).ok_or_else(|| ArithError::UnknownVariable {
                    name: name.to_string(),
                    offset: start,
                })?;
                let mut exps = vec![0u32; nvars];
                exps[index] = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    exps[index] = self.exponent()?;
                }
                Ok((Monomial::from_exponents(&exps), Rational::one()))
            }
            Some(_) => Err(self.error("expected an integer or a variable")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ArithError> {
        let (mut m, mut c) = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let (m2, c2) = self.factor()?;
            m = m.mul(&m2);
            c *= c2;
        }
        Ok((m, c))
    }

    fn expr(&mut self) -> Result<Polynomial, ArithError> {
        let mut terms = Vec::new();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { -c } else { c }));
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return Err(self.error("expected `+`, `-`, `*` or end of input")),
                None => break,
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}

/// Parses `src` into a canonical polynomial of `ring`.
pub fn parse_polynomial(src: &str, ring: &PolyRing) -> Result<Polynomial, ArithError> {
    Parser { src: src.as_bytes(), pos: 0, ring }.expr()
}
