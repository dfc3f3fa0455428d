//! Text and JSON forms of polynomials.
//!
//! Text: `x1*x2 + 2*x3^2 - 1/3*x4`. Exponent 1 and coefficient 1 are elided,
//! terms are printed in descending order, and `parse(print(p)) == p`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Monomial, Polynomial, Rational, TermOrder};
use crate::error::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.abs();
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.monomial)?;
            } else {
                write!(f, "{abs}*{}", t.monomial)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn number(&mut self) -> Result<Rational> {
        let num: BigInt = self.digits()?.parse().expect("digits parse");
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den: BigInt = self.digits()?.parse().expect("digits parse");
            if den.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn small(&mut self) -> Result<usize> {
        let at = self.pos;
        self.digits()?.parse().map_err(|_| Error::Parse {
            pos: at,
            msg: "integer out of range".into(),
        })
    }

    fn factor(&mut self, exps: &mut [u16]) -> Result<()> {
        if self.peek() != Some(b'x') {
            return self.err("expected variable `x<i>`");
        }
        self.pos += 1;
        let at = self.pos;
        let i = self.small()?;
        if i == 0 || i > self.nvars {
            return Err(Error::Parse {
                pos: at,
                msg: format!("variable x{i} outside x1..x{}", self.nvars),
            });
        }
        let mut e = 1usize;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.small()?;
        }
        let total = exps[i - 1] as usize + e;
        if total > u16::MAX as usize {
            return self.err("exponent too large");
        }
        exps[i - 1] = total as u16;
        Ok(())
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u16; self.nvars];
        let mut first = true;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.number()?,
                Some(b'x') => self.factor(&mut exps)?,
                _ if first => return self.err("expected a term"),
                _ => return self.err("expected a factor after `*`"),
            }
            first = false;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((coeff, Monomial::new(exps)));
            }
        }
    }
}

/// Parses the text form into a polynomial over `order`'s ring.
pub fn parse_polynomial(src: &str, order: &TermOrder) -> Result<Polynomial> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        nvars: order.nvars(),
    };
    let mut terms = Vec::new();
    let mut sign = Rational::one();
    match p.peek() {
        None => return p.err("empty input"),
        Some(b'-') => {
            sign = -sign;
            p.pos += 1;
        }
        Some(b'+') => p.pos += 1,
        _ => {}
    }
    loop {
        let (c, m) = p.term()?;
        terms.push((c * &sign, m));
        match p.peek() {
            None => break,
            Some(b'+') => sign = Rational::one(),
            Some(b'-') => sign = -Rational::one(),
            Some(_) => return p.err("expected `+`, `-` or end of input"),
        }
        p.pos += 1;
    }
    Ok(Polynomial::from_terms(order, terms))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u16>,
}

/// `{"terms":[{"c":"num/den","e":[...]}]}`, terms in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub terms: Vec<TermJson>,
}

fn rational_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            terms: p
                .terms()
                .iter()
                .map(|t| TermJson {
                    c: rational_string(&t.coeff),
                    e: t.monomial.exponents().to_vec(),
                })
                .collect(),
        }
    }
}

impl PolynomialJson {
    pub fn to_polynomial(&self, order: &TermOrder) -> Result<Polynomial> {
        let n = order.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.e.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: t.e.len(),
                });
            }
            let c = parse_rational(&t.c)?;
            terms.push((c, Monomial::new(t.e.clone())));
        }
        Ok(Polynomial::from_terms(order, terms))
    }
}

/// Accepts `a`, `-a` and `a/b`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("bad rational `{s}`"),
    };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{linear_sum, rat, ratio};

    #[test]
    fn prints_example_form() {
        let o = TermOrder::degrevlex(3);
        let p = parse_polynomial("x1*x2 + 2*x3^2", &o).unwrap();
        assert_eq!(p.to_string(), "x1*x2 + 2*x3^2");
    }

    #[test]
    fn signs_and_fractions() {
        let o = TermOrder::degrevlex(2);
        let p = parse_polynomial("-1/3*x1 + x2 - 5", &o).unwrap();
        assert_eq!(p.coefficient(&Monomial::variable(2, 1)), ratio(-1, 3));
        assert_eq!(p.coefficient(&Monomial::one(2)), rat(-5));
        assert_eq!(p.to_string(), "-1/3*x1 + x2 - 5");
        assert_eq!(parse_polynomial(&p.to_string(), &o).unwrap(), p);
    }

    #[test]
    fn zero_and_constants() {
        let o = TermOrder::lex(2);
        assert!(parse_polynomial("0", &o).unwrap().is_zero());
        assert_eq!(Polynomial::zero(&o).to_string(), "0");
        assert_eq!(Polynomial::one(&o).to_string(), "1");
    }

    #[test]
    fn repeated_factors_merge() {
        let o = TermOrder::degrevlex(2);
        let p = parse_polynomial("x1*x1*2*x2", &o).unwrap();
        assert_eq!(p.to_string(), "2*x1^2*x2");
    }

    #[test]
    fn rejects_garbage() {
        let o = TermOrder::degrevlex(2);
        for bad in ["", "x3", "x0", "x1 +", "x1 x2", "1/0", "y1", "x1**x2"] {
            assert!(parse_polynomial(bad, &o).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_round_trip() {
        let o = TermOrder::degrevlex(4);
        let p = linear_sum(&o).pow(2).scale(&ratio(1, 2));
        let j = PolynomialJson::from(&p);
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.starts_with("{\"terms\":[{\"c\":\"1/2\",\"e\":[2,0,0,0]}"));
        let back: PolynomialJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_polynomial(&o).unwrap(), p);
    }

    #[test]
    fn json_length_checked() {
        let o = TermOrder::degrevlex(2);
        let j = PolynomialJson {
            terms: vec![TermJson {
                c: "1".into(),
                e: vec![1],
            }],
        };
        assert!(matches!(
            j.to_polynomial(&o),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
