use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::Rational;

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn full_rank(&self) -> usize {
        self.rows.min(self.cols)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Rational::zero(), |acc, j| acc + self.get(i, j) * &v[j]))
            .collect()
    }

    /// Integer matrix with each column scaled by the lcm of its denominators.
    /// Column scaling by nonzero constants preserves rank.
    fn integer_columns(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for j in 0..self.cols {
            let mut den = BigInt::one();
            for i in 0..self.rows {
                den = den.lcm(self.get(i, j).denom());
            }
            for (i, row) in out.iter_mut().enumerate() {
                let v = self.get(i, j);
                row[j] = v.numer() * (&den / v.denom());
            }
        }
        out
    }
}

/// Exact rank by fraction-free (Bareiss) elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut a = m.integer_columns();
    let (rows, cols) = (m.rows, m.cols);
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// A prime above 2^31 (2^61 - 1).
pub const FAST_PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn reduce_mod(v: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = v.numer().mod_floor(&pb).to_u64()?;
    let d = v.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(mulmod(n, powmod(d, p - 2, p), p))
}

/// Rank over `GF(p)`. Never exceeds the rational rank; `None` when some
/// denominator vanishes mod `p`.
pub fn rank_mod_p(m: &Matrix, p: u64) -> Option<usize> {
    let mut a: Vec<Vec<u64>> = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let mut row = Vec::with_capacity(m.cols);
        for j in 0..m.cols {
            row.push(reduce_mod(m.get(i, j), p)?);
        }
        a.push(row);
    }
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(piv) = (r..m.rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = powmod(a[r][c], p - 2, p);
        for i in r + 1..m.rows {
            if a[i][c] == 0 {
                continue;
            }
            let f = mulmod(a[i][c], inv, p);
            let (top, bottom) = a.split_at_mut(i);
            for (x, &y) in bottom[0][c..].iter_mut().zip(&top[r][c..]) {
                *x = (*x + p - mulmod(f, y, p)) % p;
            }
        }
        r += 1;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn from_rows(rows: &[&[i64]]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), rows[0].len());
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, rat(*v));
            }
        }
        m
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(rank(&Matrix::identity(5)), 5);
        assert_eq!(rank(&Matrix::zeros(3, 4)), 0);
        assert_eq!(rank_mod_p(&Matrix::zeros(3, 4), FAST_PRIME), Some(0));
    }

    #[test]
    fn dependent_rows() {
        let m = from_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank_mod_p(&m, FAST_PRIME), Some(2));
    }

    #[test]
    fn zero_first_column_and_zero_rows_below_pivot() {
        let m = from_rows(&[&[0, 1, 2], &[0, 0, 3], &[0, 2, 4], &[0, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let m = from_rows(&[&[2, 1, 1], &[0, 3, 1], &[0, 0, 5]]);
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn rational_entries() {
        let mut m = Matrix::zeros(2, 2);
        m.set(0, 0, ratio(1, 2));
        m.set(0, 1, ratio(1, 3));
        m.set(1, 0, ratio(3, 2));
        m.set(1, 1, rat(1));
        assert_eq!(rank(&m), 1);
        m.set(1, 1, rat(2));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn modular_rank_can_drop() {
        let p = 7;
        let m = from_rows(&[&[7, 0], &[0, 1]]);
        assert_eq!(rank_mod_p(&m, p), Some(1));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn apply_matches_columns() {
        let m = from_rows(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(m.apply(&[rat(1), rat(-1)]), vec![rat(-1), rat(-1), rat(-1)]);
    }
}
