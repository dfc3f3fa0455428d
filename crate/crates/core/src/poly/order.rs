use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderFamily {
    #[serde(rename = "degrevlex")]
    DegRevLex,
    Lex,
}

impl fmt::Display for OrderFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderFamily::DegRevLex => "degrevlex",
            OrderFamily::Lex => "lex",
        })
    }
}

impl FromStr for OrderFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" | "grevlex" | "drl" => Ok(OrderFamily::DegRevLex),
            "lex" | "plex" => Ok(OrderFamily::Lex),
            other => Err(Error::InvalidArgument(format!(
                "unsupported order family `{other}`"
            ))),
        }
    }
}

/// Sort key whose plain lexicographic comparison agrees with a [`TermOrder`].
pub type OrderKey = Box<[u16]>;

/// A monomial order: a family plus a variable ranking.
///
/// `ranking[0]` is the 0-based index of the largest variable, so the ranking
/// `[4, 3, 2, 1, 0]` means `x5 > x4 > x3 > x2 > x1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    family: OrderFamily,
    ranking: Arc<[usize]>,
}

impl TermOrder {
    pub fn new(family: OrderFamily, ranking: Vec<usize>) -> Result<Self> {
        let n = ranking.len();
        let mut seen = vec![false; n];
        for &v in &ranking {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{ranking:?} is not a ranking of 0..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(TermOrder {
            family,
            ranking: ranking.into(),
        })
    }

    /// Order with `x{sigma[0]} > x{sigma[1]} > ...`, `sigma` 1-based.
    pub fn from_sigma(family: OrderFamily, sigma: &[usize]) -> Result<Self> {
        let n = sigma.len();
        if sigma.iter().any(|&s| s == 0 || s > n) {
            return Err(Error::InvalidPermutation(format!(
                "{sigma:?} is not a permutation of 1..={n}"
            )));
        }
        Self::new(family, sigma.iter().map(|s| s - 1).collect()).map_err(|_| {
            Error::InvalidPermutation(format!("{sigma:?} is not a permutation of 1..={n}"))
        })
    }

    pub fn degrevlex(nvars: usize) -> Self {
        TermOrder {
            family: OrderFamily::DegRevLex,
            ranking: (0..nvars).collect::<Vec<_>>().into(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        TermOrder {
            family: OrderFamily::Lex,
            ranking: (0..nvars).collect::<Vec<_>>().into(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn family(&self) -> OrderFamily {
        self.family
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    /// The ranking as a 1-based permutation `sigma`.
    pub fn sigma(&self) -> Vec<usize> {
        self.ranking.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity_ranking(&self) -> bool {
        self.ranking.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn with_family(&self, family: OrderFamily) -> Self {
        TermOrder {
            family,
            ranking: self.ranking.clone(),
        }
    }

    /// Checked comparison of two monomials.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        a.check_len(self.nvars())?;
        b.check_len(self.nvars())?;
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; both monomials must live in this ring.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars());
        debug_assert_eq!(b.nvars(), self.nvars());
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.family {
            OrderFamily::Lex => {
                for &v in self.ranking.iter() {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderFamily::DegRevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for &v in self.ranking.iter().rev() {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn key(&self, m: &Monomial) -> OrderKey {
        let e = m.exponents();
        match self.family {
            OrderFamily::Lex => self.ranking.iter().map(|&v| e[v]).collect(),
            OrderFamily::DegRevLex => {
                let mut key = Vec::with_capacity(e.len() + 1);
                key.push(m.degree() as u16);
                key.extend(self.ranking.iter().rev().map(|&v| u16::MAX - e[v]));
                key.into_boxed_slice()
            }
        }
    }
}

impl fmt::Debug for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.family, self.sigma())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[usize]) -> Monomial {
        Monomial::from_var_set(5, v).unwrap()
    }

    #[test]
    fn degrevlex_identity_on_equal_degree() {
        let o = TermOrder::degrevlex(5);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 3])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 3]), &m(&[1, 3])), Ordering::Equal);
        assert_eq!(o.cmp(&m(&[4, 5]), &m(&[1, 2, 3])), Ordering::Less);
    }

    #[test]
    fn degrevlex_and_lex_differ() {
        // x1*x3^2 vs x2^3
        let a = Monomial::new(vec![1, 0, 2]);
        let b = Monomial::new(vec![0, 3, 0]);
        assert_eq!(TermOrder::lex(3).cmp(&a, &b), Ordering::Greater);
        assert_eq!(TermOrder::degrevlex(3).cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn keys_agree_with_comparison() {
        let o = TermOrder::from_sigma(OrderFamily::DegRevLex, &[3, 1, 5, 2, 4]).unwrap();
        let l = o.with_family(OrderFamily::Lex);
        let mons: Vec<Monomial> = (0..3u16)
            .flat_map(|a| {
                (0..3u16)
                    .flat_map(move |b| (0..2u16).map(move |c| Monomial::new(vec![a, b, 0, c, 1])))
            })
            .collect();
        for x in &mons {
            for y in &mons {
                assert_eq!(o.cmp(x, y), o.key(x).cmp(&o.key(y)));
                assert_eq!(l.cmp(x, y), l.key(x).cmp(&l.key(y)));
            }
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let o = TermOrder::degrevlex(3);
        assert!(matches!(
            o.compare(&Monomial::one(3), &Monomial::one(4)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn invalid_sigma_rejected() {
        assert!(TermOrder::from_sigma(OrderFamily::Lex, &[1, 1, 2]).is_err());
        assert!(TermOrder::from_sigma(OrderFamily::Lex, &[0, 1, 2]).is_err());
        assert!(TermOrder::from_sigma(OrderFamily::Lex, &[1, 4, 2]).is_err());
    }
}
