//! Text form of polynomials.
//!
//! ```text
//! expr  ::= ['+'|'-'] term (('+'|'-') term)*
//! term  ::= coeff | coeff '*' mono | mono
//! mono  ::= var ['^' nat] ('*' var ['^' nat])*
//! coeff ::= int | int '/' nat
//! ```
//!
//! Whitespace between tokens is ignored. In a ring whose variables are a
//! prefix of `x, y, z, w`, the names `x0..x3` are accepted as aliases.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{Monomial, Poly, Ring};
use super::scalar::Scalar;
use crate::error::ParseError;

const DEFAULT_NAMES: [&str; 4] = ["x", "y", "z", "w"];

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        self.pos += len;
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn identifier(&mut self) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .char_indices()
            .take_while(|&(i, c)| c == '_' || c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_digit()))
            .count();
        if len == 0 {
            return Err(self.error("expected a variable"));
        }
        self.pos += len;
        Ok((start, &rest[..len]))
    }

    fn resolve(&self, pos: usize, name: &str) -> Result<usize, ParseError> {
        if let Some(i) = self.ring.index_of(name) {
            return Ok(i);
        }
        let vars = self.ring.vars();
        let default_prefix = vars.len() <= DEFAULT_NAMES.len() && vars.iter().zip(DEFAULT_NAMES).all(|(v, d)| v == d);
        if default_prefix {
            if let Some(i) = name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                if i < vars.len() && name == format!("x{i}") {
                    return Ok(i);
                }
            }
        }
        Err(ParseError::UnknownVariable {
            pos,
            name: name.to_string(),
        })
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        let at = self.pos;
        let e = self.digits()?;
        u32::try_from(e).map_err(|_| ParseError::Syntax {
            pos: at,
            message: "exponent too large".into(),
        })
    }

    fn mono(&mut self) -> Result<Monomial, ParseError> {
        let mut exps = vec![0u32; self.ring.nvars()];
        loop {
            let (at, name) = self.identifier()?;
            let i = self.resolve(at, name)?;
            exps[i] = exps[i]
                .checked_add(self.exponent()?)
                .ok_or_else(|| self.error("exponent too large"))?;
            if self.peek() != Some('*') {
                return Ok(Monomial::new(exps));
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigRational), ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let mut coeff = BigRational::from_integer(num.clone());
                if self.peek() == Some('/') {
                    self.bump();
                    let at = self.pos;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return Err(ParseError::Syntax {
                            pos: at,
                            message: "zero denominator".into(),
                        });
                    }
                    coeff = BigRational::new(num, den);
                }
                if self.peek() == Some('*') {
                    self.bump();
                    Ok((self.mono()?, coeff))
                } else {
                    Ok((Monomial::one(self.ring.nvars()), coeff))
                }
            }
            Some(_) => Ok((self.mono()?, BigRational::from_integer(1.into()))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut out = self.ring.zero();
        let mut negate = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (mono, mut coeff) = self.term()?;
            if negate {
                coeff = -coeff;
            }
            let c = Scalar::from_rational(self.ring.field(), &coeff)
                .map_err(|_| ParseError::Coefficient(coeff.to_string()))?;
            out.add_term(mono, c);
            match self.bump() {
                None => return Ok(out),
                Some('+') => negate = false,
                Some('-') => negate = true,
                Some(c) => {
                    self.pos -= c.len_utf8();
                    return Err(self.error(format!("unexpected `{c}`")));
                }
            }
        }
    }
}

/// Parse an expression in the ring's variables.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly, ParseError> {
    Parser {
        src: text,
        pos: 0,
        ring,
    }
    .expr()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (mono, coeff)) in self.terms().enumerate() {
            let negative = coeff.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = coeff.abs();
            let factors: Vec<String> = mono
                .exps()
                .iter()
                .zip(self.ring().vars())
                .filter(|(e, _)| **e > 0)
                .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::scalar::Field;

    fn space() -> Ring {
        Ring::space(Field::Rational)
    }

    #[test]
    fn fermat_cubic() {
        let p = parse_poly("x^3 + y^3 + z^3 + w^3", &space()).unwrap();
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.homogeneous_degree().unwrap(), 3);
    }

    #[test]
    fn cancellation_gives_zero() {
        let p = parse_poly("x^2 - x^2", &space()).unwrap();
        assert!(p.is_zero());
        assert!(p.degree().is_err());
    }

    #[test]
    fn mixed_degrees() {
        let p = parse_poly("1/2*y^2 + y*x^2", &space()).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert!(!p.is_homogeneous());
    }

    #[test]
    fn aliases_and_whitespace() {
        let a = parse_poly("x0 * x1 ^ 2 - 3 * x3", &space()).unwrap();
        let b = parse_poly("x*y^2-3*w", &space()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(
            parse_poly("2x", &space()),
            Err(ParseError::Syntax {
                pos: 1,
                message: "unexpected `x`".into()
            })
        );
        assert!(matches!(
            parse_poly("x + q", &space()),
            Err(ParseError::UnknownVariable { pos: 4, .. })
        ));
        assert!(parse_poly("x*2", &space()).is_err());
        assert!(parse_poly("x +", &space()).is_err());
        assert!(parse_poly("1/0", &space()).is_err());
        assert!(parse_poly("x4", &space()).is_err());
    }

    #[test]
    fn printing_round_trips() {
        let r = space();
        for text in ["-x^3 + 1/2*y*z*w - 7", "0", "x", "-1/3", "x*y - w^2"] {
            let p = parse_poly(text, &r).unwrap();
            let printed = p.to_string();
            assert_eq!(parse_poly(&printed, &r).unwrap(), p, "{printed}");
        }
        assert_eq!(
            parse_poly("w^2 - 3*x*y + 2", &r).unwrap().to_string(),
            "-3*x*y + w^2 + 2"
        );
    }
}
