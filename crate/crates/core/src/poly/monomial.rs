use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x1^e1 * ... * xn^en` stored as a dense exponent vector.
///
/// Position `i` of the vector holds the exponent of `x{i+1}`. Subsets of
/// variables (`var_set`, `from_var_set`) use 1-based indices so they read
/// the same way as the variable names.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn new(exponents: Vec<u16>) -> Self {
        Monomial(exponents)
    }

    /// The variable `x{index}` (1-based).
    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index - 1] = 1;
        Monomial(e)
    }

    /// `x{i}^power` (1-based).
    pub fn power_of(nvars: usize, index: usize, power: u16) -> Self {
        let mut e = vec![0; nvars];
        e[index - 1] = power;
        Monomial(e)
    }

    /// The squarefree monomial `x_S` for a set of 1-based indices.
    pub fn from_var_set(nvars: usize, set: &[usize]) -> Result<Self> {
        let mut e = vec![0u16; nvars];
        for &i in set {
            if i == 0 || i > nvars {
                return Err(Error::InvalidArgument(format!(
                    "variable index {i} outside 1..={nvars}"
                )));
            }
            if e[i - 1] != 0 {
                return Err(Error::InvalidArgument(format!(
                    "repeated variable index {i}"
                )));
            }
            e[i - 1] = 1;
        }
        Ok(Monomial(e))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.0[index - 1]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// 1-based indices of the variables dividing the monomial, ascending.
    pub fn var_set(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Largest 1-based index of a variable dividing the monomial, 0 for `1`.
    pub fn max_index(&self) -> usize {
        self.0.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    pub fn check_len(&self, nvars: usize) -> Result<()> {
        if self.0.len() != nvars {
            return Err(Error::LengthMismatch {
                expected: nvars,
                found: self.0.len(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Product, or `None` when it would not be squarefree.
    pub fn mul_squarefree(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            let s = a + b;
            if s > 1 {
                return None;
            }
            e.push(s);
        }
        Some(Monomial(e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Relabels variables: `x{i}` becomes `x{map[i-1]}` (both 1-based).
    pub fn relabel(&self, map: &[usize]) -> Monomial {
        let mut e = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            e[map[i] - 1] = x;
        }
        Monomial(e)
    }

    /// `x{index}^e` is the only variable present.
    pub fn as_pure_power(&self) -> Option<(usize, u16)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i + 1, e));
            }
        }
        found
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
