//! Parser for the printed forms produced by `to_y_string` / `to_q_string`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunction;
use crate::Error;

/// Which symbol a printed value is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    /// `y`, integer exponents.
    Y,
    /// `q`, integer or half-integer exponents, read through `y = -q^(1/2)`.
    Q,
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    symbol: Symbol,
}

impl<'a> Cursor<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn uint(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn int(&mut self) -> Result<i64, Error> {
        let neg = self.eat(b'-');
        let v: i64 = self
            .uint()?
            .try_into()
            .map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// Exponent in units of `y`.
    fn exponent(&mut self) -> Result<i64, Error> {
        if !self.eat(b'^') {
            return Ok(match self.symbol {
                Symbol::Y => 1,
                Symbol::Q => 2,
            });
        }
        match self.symbol {
            Symbol::Y => self.int(),
            Symbol::Q => {
                if self.eat(b'(') {
                    let k = self.int()?;
                    self.expect(b'/')?;
                    let two = self.uint()?;
                    if two != BigInt::from(2) {
                        return Err(self.err("half-integer exponent must be over 2"));
                    }
                    self.expect(b')')?;
                    Ok(k)
                } else {
                    Ok(2 * self.int()?)
                }
            }
        }
    }

    fn var_char(&self) -> u8 {
        match self.symbol {
            Symbol::Y => b'y',
            Symbol::Q => b'q',
        }
    }

    fn term(&mut self, negative: bool) -> Result<(i64, BigRational), Error> {
        let mut coeff = BigRational::one();
        let mut exp = 0;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.uint()?;
            let d = if self.eat(b'/') {
                self.uint()?
            } else {
                BigInt::one()
            };
            coeff = BigRational::new(n, d);
            if self.eat(b'*') {
                if !self.eat(self.var_char()) {
                    return Err(self.err("expected variable"));
                }
                exp = self.exponent()?;
            }
        } else if self.eat(self.var_char()) {
            exp = self.exponent()?;
        } else {
            return Err(self.err("expected term"));
        }
        if negative {
            coeff = -coeff;
        }
        if self.symbol == Symbol::Q && exp % 2 != 0 {
            // q^(k/2) = (-y)^k
            coeff = -coeff;
        }
        Ok((exp, coeff))
    }

    fn poly(&mut self) -> Result<LaurentPoly, Error> {
        let mut terms = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            terms.push(self.term(negative)?);
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

/// Parses `poly` or `(poly)/(poly)` written in the given symbol.
pub fn parse_rational_function(text: &str, symbol: Symbol) -> Result<RationalFunction, Error> {
    let mut c = Cursor {
        s: text.as_bytes(),
        pos: 0,
        symbol,
    };
    let value = if c.eat(b'(') {
        let num = c.poly()?;
        c.expect(b')')?;
        c.expect(b'/')?;
        c.expect(b'(')?;
        let den = c.poly()?;
        c.expect(b')')?;
        RationalFunction::new(num, den)?
    } else {
        c.poly()?.into()
    };
    if c.peek().is_some() {
        return Err(c.err("trailing input"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fixture_strings() {
        let y = parse_rational_function("y^26 + y^24 + 2*y^22", Symbol::Y).unwrap();
        let q = parse_rational_function("q^13 + q^12 + 2*q^11", Symbol::Q).unwrap();
        assert_eq!(y, q);
        let half = parse_rational_function("-q^(1/2)", Symbol::Q).unwrap();
        assert_eq!(half, RationalFunction::y());
    }

    #[test]
    fn round_trips_a_fraction() {
        let f = RationalFunction::new(
            LaurentPoly::from_int_terms([(1, 1), (-3, -2)]),
            LaurentPoly::from_int_terms([(0, 1), (1, 1), (4, 3)]),
        )
        .unwrap();
        for sym in [Symbol::Y, Symbol::Q] {
            let s = match sym {
                Symbol::Y => f.to_y_string(),
                Symbol::Q => f.to_q_string(),
            };
            assert_eq!(parse_rational_function(&s, sym).unwrap(), f, "{s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational_function("y^", Symbol::Y).is_err());
        assert!(parse_rational_function("q^(1/3)", Symbol::Q).is_err());
        assert!(parse_rational_function("1 + x", Symbol::Y).is_err());
    }
}
