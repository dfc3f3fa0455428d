//! Direct construction of the reduced Gröbner bases of
//! `I_{n,k} = (x1^2, ..., xn^2, (x1 + ... + xn)^k)`.
//!
//! For the identity ranking the basis is the squares together with one
//! elementary symmetric polynomial `g_A = e_d(x_i : i in A ∪ {2d-k+1..n})`
//! for every admissible set `A`, i.e. every `A` with `max A = 2|A| - k` that
//! is minimal under inclusion. Other rankings are handled by relabeling.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::groebner::GroebnerBasis;
use crate::lattice::{binomial, binomial_i, factorial, first_touch_sets};
use crate::poly::{
    elementary_symmetric, for_each_subset, linear_sum, Monomial, OrderFamily, Polynomial, Rational,
    TermOrder,
};

/// Admissible index sets grouped by their size `d`, for `k <= d <= k + (n-k)/2`.
pub fn admissible_sets(n: usize, k: usize) -> Result<BTreeMap<usize, Vec<Vec<usize>>>> {
    if k < 1 {
        return Err(invalid("admissible sets need k >= 1"));
    }
    let mut out = BTreeMap::new();
    if k > n {
        return Ok(out);
    }
    for d in k..=k + (n - k) / 2 {
        out.insert(d, first_touch_sets(d, k));
    }
    Ok(out)
}

fn check_set(set: &[usize], n: usize) -> Result<()> {
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid(format!(
            "index set {set:?} must be strictly increasing"
        )));
    }
    if set.iter().any(|&i| i == 0 || i > n) {
        return Err(invalid(format!("index set {set:?} not inside 1..={n}")));
    }
    Ok(())
}

fn g_support(a: &[usize], n: usize, k: usize) -> Result<(usize, Vec<usize>)> {
    check_set(a, n)?;
    let d = a.len();
    if d < k {
        return Err(invalid(format!(
            "index set {a:?} has fewer than k = {k} elements"
        )));
    }
    let top = 2 * d - k;
    if a.last().is_some_and(|&m| m > top) {
        return Err(invalid(format!("max of {a:?} exceeds 2|A| - k = {top}")));
    }
    let mut support = a.to_vec();
    support.extend(top + 1..=n);
    Ok((d, support))
}

/// `g_{A,n,k}`: `e_d` on `A ∪ {2d-k+1, ..., n}` with `d = |A|`.
pub fn g_polynomial(a: &[usize], n: usize, k: usize, order: &TermOrder) -> Result<Polynomial> {
    check_ring(order, n)?;
    let (d, support) = g_support(a, n, k)?;
    Ok(elementary_symmetric(order, &support, d))
}

fn check_ring(order: &TermOrder, n: usize) -> Result<()> {
    if order.nvars() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: order.nvars(),
        });
    }
    Ok(())
}

/// Caches `sfp((x1 + ... + xn)^k)` for repeated `f_S` evaluations.
pub struct FExpander {
    n: usize,
    k: usize,
    order: TermOrder,
    power: Polynomial,
    inv_k_factorial: Rational,
}

impl FExpander {
    pub fn new(n: usize, k: usize, order: &TermOrder) -> Result<Self> {
        check_ring(order, n)?;
        let power = linear_sum(order).pow_squarefree(k as u32);
        let inv_k_factorial = Rational::new(BigInt::one(), BigInt::from(factorial(k as u64)));
        Ok(FExpander {
            n,
            k,
            order: order.clone(),
            power,
            inv_k_factorial,
        })
    }

    /// `f_{S,n,k} = sfp(x_S (x1 + ... + xn)^k) / k!`.
    pub fn f(&self, s: &[usize]) -> Result<Polynomial> {
        check_set(s, self.n)?;
        let xs = Polynomial::monomial(&self.order, Monomial::from_var_set(self.n, s)?);
        Ok(xs.mul_squarefree(&self.power).scale(&self.inv_k_factorial))
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

pub fn f_polynomial(s: &[usize], n: usize, k: usize, order: &TermOrder) -> Result<Polynomial> {
    FExpander::new(n, k, order)?.f(s)
}

/// `λ_i = (-1)^i k / ((k+i) C(d, k+i))` for `i = 0..=d-k`.
pub fn lambda_coefficients(d: usize, k: usize) -> Result<Vec<Rational>> {
    if k > d {
        return Err(invalid(format!(
            "lambda coefficients need k <= d, got k = {k}, d = {d}"
        )));
    }
    Ok((0..=d - k)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let den =
                BigInt::from((k + i) as u64) * BigInt::from(binomial(d as u64, (k + i) as u64));
            Rational::new(BigInt::from(sign * k as i64), den)
        })
        .collect())
}

/// The same vector obtained by forward substitution in the lower-triangular
/// system `Σ_{i<=j} C(j,i) C(d-j, d-k-i) λ_i = [j = 0]`, `j = 0..=d-k`.
pub fn lambda_by_elimination(d: usize, k: usize) -> Result<Vec<Rational>> {
    if k > d {
        return Err(invalid(format!(
            "lambda coefficients need k <= d, got k = {k}, d = {d}"
        )));
    }
    let m = d - k;
    let entry = |j: usize, i: usize| {
        let v = binomial(j as u64, i as u64) * binomial_i((d - j) as i64, (m as i64) - i as i64);
        Rational::from_integer(BigInt::from(v))
    };
    let mut lam: Vec<Rational> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let mut rhs = if j == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
        for (i, l) in lam.iter().enumerate() {
            rhs -= entry(j, i) * l;
        }
        let pivot = entry(j, j);
        if pivot.is_zero() {
            return Err(Error::Internal(format!(
                "singular lambda system at row {j}"
            )));
        }
        lam.push(rhs / pivot);
    }
    Ok(lam)
}

/// `g_{A,n,k}` rebuilt as `Σ_i λ_i Σ_{S ∈ T_i(A)} f_S`, where `T_i(A)` holds the
/// `(d-k)`-subsets of `[n]` meeting `{1..2d-k} \ A` in exactly `i` elements.
pub fn g_via_f_expansion(a: &[usize], n: usize, k: usize, order: &TermOrder) -> Result<Polynomial> {
    check_ring(order, n)?;
    g_support(a, n, k)?;
    let d = a.len();
    let top = 2 * d - k;
    let gaps: Vec<usize> = (1..=top).filter(|i| !a.contains(i)).collect();
    let lambda = lambda_coefficients(d, k)?;
    let fx = FExpander::new(n, k, order)?;
    let all: Vec<usize> = (1..=n).collect();
    let mut acc = Polynomial::zero(order);
    let mut err = None;
    for_each_subset(&all, d - k, &mut |s| {
        if err.is_some() {
            return;
        }
        let i = s.iter().filter(|v| gaps.contains(v)).count();
        match fx.f(s) {
            Ok(f) => acc = &acc + &f.scale(&lambda[i]),
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}

/// Generators `x1^2, ..., xn^2, (x1 + ... + xn)^k` of `I_{n,k}`.
pub fn ideal_generators(n: usize, k: usize, order: &TermOrder) -> Result<Vec<Polynomial>> {
    check_ring(order, n)?;
    let mut gens: Vec<Polynomial> = (1..=n)
        .map(|i| Polynomial::monomial(order, Monomial::power_of(n, i, 2)))
        .collect();
    gens.push(linear_sum(order).pow(k as u32));
    Ok(gens)
}

/// Basis for the identity ranking, without sorting.
fn identity_basis(n: usize, k: usize, order: &TermOrder) -> Result<Vec<Polynomial>> {
    if k == 1 {
        // Σx is linear, so eliminating x1 leaves I_{n-1,2} on x2..xn.
        let mut gens = vec![linear_sum(order)];
        if n > 1 {
            let sub = TermOrder::degrevlex(n - 1);
            for g in identity_basis(n - 1, 2, &sub)? {
                gens.push(g.embed(order, 1));
            }
        }
        return Ok(gens);
    }
    let mut gens: Vec<Polynomial> = (1..=n)
        .map(|i| Polynomial::monomial(order, Monomial::power_of(n, i, 2)))
        .collect();
    for sets in admissible_sets(n, k)?.values() {
        for a in sets {
            gens.push(g_polynomial(a, n, k, order)?);
        }
    }
    Ok(gens)
}

/// The reduced Gröbner basis of `I_{n,k}` for `order`, built in closed form.
///
/// Only the order's variable ranking σ enters: the identity-ranking basis
/// is relabeled by `x_i -> x_{σ(i)}`.
pub fn closed_form_basis(n: usize, k: usize, order: &TermOrder) -> Result<GroebnerBasis> {
    check_ring(order, n)?;
    if n == 0 {
        return Err(invalid("need at least one variable"));
    }
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let id = TermOrder::new(order.family(), (0..n).collect())?;
    let sigma = order.sigma();
    let mut gens: Vec<Polynomial> = identity_basis(n, k, &id)?
        .into_iter()
        .map(|g| {
            if order.is_identity_ranking() {
                g.with_order(order)
            } else {
                g.relabel(&sigma, order)
            }
        })
        .collect();
    gens.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    Ok(GroebnerBasis::from_generators(order, gens, true))
}

/// `G_{n,k}^σ` for a 1-based permutation σ (`x_{σ(1)}` largest).
pub fn permuted_basis(
    n: usize,
    k: usize,
    sigma: &[usize],
    family: OrderFamily,
) -> Result<GroebnerBasis> {
    if sigma.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: sigma.len(),
        });
    }
    closed_form_basis(n, k, &TermOrder::from_sigma(family, sigma)?)
}

/// Block ranking `(k, 2, ..., 2[, 1])` induced by σ, as sets of 1-based
/// variables from largest to smallest. Two rankings with the same blocks
/// give the same basis.
pub fn block_ranking(n: usize, k: usize, order: &TermOrder) -> Vec<Vec<usize>> {
    let sigma = order.sigma();
    let k = k.min(n);
    let mut blocks = vec![sorted(&sigma[..k])];
    let mut i = k;
    while i < n {
        let j = (i + 2).min(n);
        blocks.push(sorted(&sigma[i..j]));
        i = j;
    }
    blocks
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Number of distinct reduced Gröbner bases of `I_{n,k}` over all rankings:
/// the multinomial `n! / (k! 2!^m)` with `m = (n-k)/2`.
pub fn count_distinct_bases(n: usize, k: usize) -> Result<BigUint> {
    if k < 2 {
        return Err(invalid(format!("basis count needs k >= 2, got {k}")));
    }
    if k > n {
        return Ok(BigUint::one());
    }
    let m = (n - k) / 2;
    Ok(factorial(n as u64) / (factorial(k as u64) << m))
}
