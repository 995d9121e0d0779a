//! A small parser for polynomial expressions such as `c1*cb1 + 2*x_1^2 - 1/3`.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ['/' integer] | identifier | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::element::GradedElement;
use super::generator::Universe;
use crate::error::{Error, Result};

pub fn parse_element(universe: &Universe, input: &str) -> Result<GradedElement> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
        universe,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    universe: &'a Universe,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            column: self.pos + 1,
            message: message.to_string(),
        }
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

    fn expr(&mut self) -> Result<GradedElement> {
        let mut acc = GradedElement::zero(self.universe);
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<GradedElement> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GradedElement> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let exp = self.integer()?;
            let exp: u32 = exp.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<GradedElement> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = BigRational::from_integer(num);
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    value /= BigRational::from_integer(den);
                } else {
                    self.pos = save;
                }
                Ok(GradedElement::constant(self.universe, value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                GradedElement::generator(self.universe, name)
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generator::Generator;

    fn u() -> Universe {
        Universe::new(vec![
            Generator::new("c1", 2),
            Generator::new("c2", 4),
            Generator::new("x_1", 2),
        ])
        .unwrap()
    }

    #[test]
    fn parses_and_prints() {
        let e = parse_element(&u(), "c1^2 - 2*c2 + 1/2*(x_1 + c1)*c1").unwrap();
        assert_eq!(e.to_string(), "3/2*c1^2 + 1/2*c1*x_1 - 2*c2");
        assert_eq!(parse_element(&u(), "-1").unwrap().to_string(), "-1");
        assert!(parse_element(&u(), "0").unwrap().is_zero());
    }

    #[test]
    fn undeclared_symbol() {
        assert_eq!(
            parse_element(&u(), "c1 + cb1"),
            Err(Error::UndeclaredGenerator("cb1".into()))
        );
    }

    #[test]
    fn syntax_errors_carry_columns() {
        match parse_element(&u(), "c1 + * c2") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 6),
            other => panic!("unexpected {:?}", other),
        }
    }
}
