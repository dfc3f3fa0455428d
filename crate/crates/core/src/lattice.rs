//! (N,E) lattice paths, Catalan convolutions and the counting results that
//! follow from them: generators per degree, standard monomials and the
//! Hilbert series of `R/I_{n,k}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::poly::Monomial;

/// Longest path a [`LatticePath`] can hold.
pub const MAX_PATH_LEN: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    N,
    E,
}

/// An (N,E) path of length `len`; bit `j` set means step `j+1` goes north.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticePath {
    len: usize,
    bits: u64,
}

impl LatticePath {
    pub fn new(len: usize, bits: u64) -> Result<Self> {
        if len > MAX_PATH_LEN {
            return Err(invalid(format!("path length {len} exceeds {MAX_PATH_LEN}")));
        }
        if len < 64 && bits >> len != 0 {
            return Err(invalid("path bits beyond its length"));
        }
        Ok(LatticePath { len, bits })
    }

    pub fn from_steps(steps: &[Step]) -> Result<Self> {
        let mut bits = 0u64;
        for (j, s) in steps.iter().enumerate().take(MAX_PATH_LEN) {
            if *s == Step::N {
                bits |= 1 << j;
            }
        }
        Self::new(steps.len(), bits)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Step `j`, 1-based.
    pub fn step(&self, j: usize) -> Step {
        if self.bits >> (j - 1) & 1 == 1 {
            Step::N
        } else {
            Step::E
        }
    }

    pub fn steps(&self) -> Vec<Step> {
        (1..=self.len).map(|j| self.step(j)).collect()
    }

    pub fn north_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// `(#E, #N)` after the first `j` steps.
    pub fn position(&self, j: usize) -> (usize, usize) {
        let mask = if j >= 64 { u64::MAX } else { (1u64 << j) - 1 };
        let north = (self.bits & mask).count_ones() as usize;
        (j - north, north)
    }

    /// The squarefree monomial with `x_j` for every north step `j`.
    pub fn tau(&self) -> Monomial {
        Monomial::new(
            (1..=self.len)
                .map(|j| u16::from(self.step(j) == Step::N))
                .collect(),
        )
    }

    pub fn tau_inverse(m: &Monomial) -> Result<Self> {
        if !m.is_squarefree() {
            return Err(Error::NotSquarefree(m.to_string()));
        }
        let mut bits = 0u64;
        for i in m.var_set() {
            if i > MAX_PATH_LEN {
                return Err(invalid(format!(
                    "path length {} exceeds {MAX_PATH_LEN}",
                    m.nvars()
                )));
            }
            bits |= 1 << (i - 1);
        }
        Self::new(m.nvars(), bits)
    }

    /// Smallest `j` (1-based) with `#N - #E = k` after `j` steps.
    pub fn first_touch(&self, k: usize) -> Option<usize> {
        let mut height: i64 = 0;
        for j in 1..=self.len {
            height += if self.step(j) == Step::N { 1 } else { -1 };
            if height == k as i64 {
                return Some(j);
            }
        }
        None
    }

    pub fn touches(&self, k: usize) -> bool {
        self.first_touch(k).is_some()
    }

    /// Grid drawing with `●` for visited points, north at the top.
    pub fn render(&self) -> String {
        let (w, h) = self.position(self.len);
        let mut grid = vec![vec!['·'; w + 1]; h + 1];
        for j in 0..=self.len {
            let (x, y) = self.position(j);
            grid[y][x] = '●';
        }
        let mut out = String::new();
        for row in grid.iter().rev() {
            out.extend(row.iter().flat_map(|c| [*c, ' ']));
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        out
    }

    /// Every path of length `len` in increasing bit order.
    pub fn all(len: usize) -> impl Iterator<Item = LatticePath> {
        assert!(len < 64, "exhaustive enumeration needs len < 64");
        (0u64..1 << len).map(move |bits| LatticePath { len, bits })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            f.write_str(if s == Step::N { "N" } else { "E" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({self})")
    }
}

/// Index sets (1-based) of paths with `d` north steps whose first touch of
/// `y = x + k` is exactly their last step `2d - k`.
pub fn first_touch_sets(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(
        len: usize,
        k: i64,
        j: usize,
        height: i64,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if j == len {
            if height == k {
                out.push(cur.clone());
            }
            return;
        }
        let left = (len - j) as i64;
        // north; touching early is forbidden
        if height + 1 < k || (height + 1 == k && j + 1 == len) {
            cur.push(j + 1);
            rec(len, k, j + 1, height + 1, cur, out);
            cur.pop();
        }
        // east; must still be able to climb back to k
        if k - (height - 1) < left {
            rec(len, k, j + 1, height - 1, cur, out);
        }
    }
    if k == 0 || d < k {
        return Vec::new();
    }
    let len = 2 * d - k;
    let mut out = Vec::new();
    rec(len, k as i64, 0, 0, &mut Vec::with_capacity(d), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial with the convention `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial_i(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        BigUint::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, i| a * i)
}

/// Catalan numbers `C_0..=C_r`.
pub fn catalan_numbers(r: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::one()];
    for i in 1..=r {
        let next = &c[i - 1] * (2 * (2 * i as u64) - 2) / (i as u64 + 1);
        c.push(next);
    }
    c
}

/// `C_0^fold ..= C_r^fold`: coefficients of the `(fold+1)`-st power of the
/// Catalan generating function.
pub fn catalan_table(r: usize, fold: usize) -> Vec<BigUint> {
    let base = catalan_numbers(r);
    let mut acc = base.clone();
    for _ in 0..fold {
        let mut next = vec![BigUint::zero(); r + 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in base.iter().enumerate().take(r + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc
}

pub fn catalan_convolution(r: usize, fold: usize) -> BigUint {
    catalan_table(r, fold).pop().expect("table has r+1 entries")
}

/// Non-square generators of the reduced basis of `I_{n,k}` per degree:
/// degree `k+r` maps to `C_r^{k-1}` while `2r + k <= n`.
pub fn count_generators_by_degree(n: usize, k: usize) -> Result<BTreeMap<usize, BigUint>> {
    if k < 2 {
        return Err(invalid(format!("generator counts need k >= 2, got {k}")));
    }
    let mut out = BTreeMap::new();
    if k > n {
        return Ok(out);
    }
    let rmax = (n - k) / 2;
    for (r, c) in catalan_table(rmax, k - 1).into_iter().enumerate() {
        out.insert(k + r, c);
    }
    Ok(out)
}

/// Degree-`d` standard monomials of `R/I_{n,k}`.
pub fn count_standard_monomials(n: usize, k: usize, d: usize) -> BigUint {
    if 2 * d as i64 - k as i64 >= n as i64 {
        return BigUint::zero();
    }
    binomial_i(n as i64, d as i64) - binomial_i(n as i64, d as i64 - k as i64)
}

/// Truncated Hilbert series `[(1+t)^n (1-t^k)]` of `R/I_{n,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub coefficients: Vec<BigUint>,
}

impl HilbertSeries {
    pub fn socle_degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn get(&self, d: usize) -> BigUint {
        self.coefficients.get(d).cloned().unwrap_or_default()
    }

    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.coefficients.iter().map(|c| c.to_u64()).collect()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn hilbert_series(n: usize, k: usize) -> Result<HilbertSeries> {
    if k < 1 {
        return Err(invalid("hilbert series needs k >= 1"));
    }
    let mut coefficients = Vec::new();
    for d in 0..=n {
        let c = BigInt::from(binomial(n as u64, d as u64))
            - BigInt::from(binomial_i(n as i64, d as i64 - k as i64));
        if !c.is_positive() {
            break;
        }
        coefficients.push(c.magnitude().clone());
    }
    Ok(HilbertSeries { coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn tau_round_trip_small() {
        for n in 0..=8 {
            for p in LatticePath::all(n) {
                assert_eq!(LatticePath::tau_inverse(&p.tau()).unwrap(), p);
            }
        }
    }

    #[test]
    fn path_of_x1x3x4() {
        let m = Monomial::from_var_set(5, &[1, 3, 4]).unwrap();
        let p = LatticePath::tau_inverse(&m).unwrap();
        assert_eq!(p.to_string(), "NENNE");
        assert_eq!(p.first_touch(2), Some(4));
        assert!(LatticePath::tau_inverse(&Monomial::power_of(3, 1, 2)).is_err());
    }

    #[test]
    fn touch_edge_cases() {
        let nn = LatticePath::from_steps(&[Step::N, Step::N]).unwrap();
        assert_eq!(nn.first_touch(2), Some(2));
        let ee = LatticePath::from_steps(&[Step::E; 4]).unwrap();
        assert_eq!(ee.first_touch(1), None);
        assert!(ee.tau().is_one());
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan_numbers(6), big(&[1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(catalan_table(4, 1), big(&[1, 2, 5, 14, 42]));
        assert_eq!(catalan_convolution(2, 2), BigUint::from(9u32));
    }

    #[test]
    fn generator_counts() {
        let c = count_generators_by_degree(8, 2).unwrap();
        assert_eq!(
            c.into_iter().collect::<Vec<_>>(),
            vec![
                (2, 1u32.into()),
                (3, 2u32.into()),
                (4, 5u32.into()),
                (5, 14u32.into())
            ]
        );
        let c = count_generators_by_degree(4, 4).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn first_touch_sets_match_counts() {
        assert_eq!(first_touch_sets(3, 2), vec![vec![1, 3, 4], vec![2, 3, 4]]);
        assert_eq!(first_touch_sets(2, 2), vec![vec![1, 2]]);
        assert_eq!(first_touch_sets(4, 2).len(), 5);
        for k in 2..=5 {
            for r in 0..=4 {
                assert_eq!(
                    BigUint::from(first_touch_sets(k + r, k).len()),
                    catalan_convolution(r, k - 1)
                );
            }
        }
    }

    #[test]
    fn standard_monomials() {
        assert_eq!(count_standard_monomials(5, 2, 3), BigUint::from(5u32));
        assert_eq!(count_standard_monomials(7, 3, 0), BigUint::one());
        assert_eq!(count_standard_monomials(4, 2, 3), BigUint::zero());
    }

    #[test]
    fn hilbert_truncation() {
        assert_eq!(
            hilbert_series(5, 2).unwrap().coefficients,
            big(&[1, 5, 9, 5])
        );
        assert_eq!(hilbert_series(4, 2).unwrap().coefficients, big(&[1, 4, 5]));
        assert_eq!(hilbert_series(3, 3).unwrap().coefficients, big(&[1, 3, 3]));
        assert_eq!(hilbert_series(5, 1).unwrap().coefficients, big(&[1, 4, 5]));
    }

    #[test]
    fn render_has_endpoints() {
        let p = LatticePath::from_steps(&[Step::N, Step::E]).unwrap();
        assert_eq!(p.render(), "● ●\n● ·\n");
    }
}
