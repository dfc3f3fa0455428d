//! Explicit syzygies in `R/(x1^2, ..., xn^2)` that produce kernel elements
//! of `·ℓ^k` on `R/I_{n,2}`.
//!
//! * odd `n = 2p+1`: `ℓ^p ℓ' = (Σx)^2 g` with `ℓ'` linear and `deg g = p-1`;
//! * even `n = 2p`, `p >= 3`: `ℓ^(p-2) f = (Σx)^2 g` with `deg f = 2`,
//!   `f` not a multiple of `(Σx)^2`, and `deg g = p-2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closed_form::lambda_coefficients;
use crate::error::{Error, Result};
use crate::lattice::factorial;
use crate::poly::{
    for_each_subset, linear_form, linear_sum, Monomial, Polynomial, Rational, TermOrder,
};

/// Coefficients of `ℓ = a1 x1 + ... + an xn`, all nonzero and pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericLinearForm {
    coeffs: Vec<Rational>,
}

impl GenericLinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if let Some(i) = coeffs.iter().position(Zero::is_zero) {
            return Err(Error::Degenerate(format!("coefficient a{} is zero", i + 1)));
        }
        for i in 0..coeffs.len() {
            for j in i + 1..coeffs.len() {
                if coeffs[i] == coeffs[j] {
                    return Err(Error::Degenerate(format!(
                        "a{} = a{} = {}",
                        i + 1,
                        j + 1,
                        coeffs[i]
                    )));
                }
            }
        }
        Ok(GenericLinearForm { coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Distinct integers drawn uniformly from `1..=2^31`.
    pub fn random(n: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut picked: Vec<i64> = Vec::with_capacity(n);
        while picked.len() < n {
            let v = rng.random_range(1..=(1i64 << 31));
            if !picked.contains(&v) {
                picked.push(v);
            }
        }
        Self::from_integers(&picked).expect("distinct nonzero by construction")
    }

    pub fn seeded(n: usize, seed: u64) -> Self {
        Self::random(n, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn polynomial(&self, order: &TermOrder) -> Polynomial {
        linear_form(order, &self.coeffs)
    }

    fn product(&self, set: &[usize]) -> Rational {
        set.iter()
            .fold(Rational::one(), |acc, &i| acc * &self.coeffs[i - 1])
    }

    fn complement_product(&self, set: &[usize]) -> Rational {
        let all: Vec<usize> = (1..=self.nvars()).filter(|i| !set.contains(i)).collect();
        self.product(&all)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessVariant {
    Odd,
    Even,
}

#[derive(Clone, Debug)]
pub struct SyzygyWitness {
    pub variant: WitnessVariant,
    pub a: GenericLinearForm,
    /// `ℓ'` (odd case).
    pub lprime: Option<Polynomial>,
    /// `f` (even case).
    pub f: Option<Polynomial>,
    pub g: Polynomial,
    pub b: Vec<Rational>,
    /// `(λ0, λ1, λ2)` (even case).
    pub lambda: Option<Vec<Rational>>,
}

impl SyzygyWitness {
    pub fn nvars(&self) -> usize {
        self.a.nvars()
    }

    pub fn order(&self) -> TermOrder {
        TermOrder::degrevlex(self.nvars())
    }

    /// `p` with `n = 2p+1` (odd) or `n = 2p` (even).
    pub fn p(&self) -> usize {
        self.nvars() / 2
    }

    /// The form multiplied by a power of `ℓ`: `ℓ'` or `f`.
    pub fn kernel_seed(&self) -> &Polynomial {
        match self.variant {
            WitnessVariant::Odd => self.lprime.as_ref().expect("odd witness carries ℓ'"),
            WitnessVariant::Even => self.f.as_ref().expect("even witness carries f"),
        }
    }

    /// Exponent `e` in the identity `ℓ^e * seed = (Σx)^2 g`.
    pub fn exponent(&self) -> usize {
        match self.variant {
            WitnessVariant::Odd => self.p(),
            WitnessVariant::Even => self.p() - 2,
        }
    }

    pub fn lhs(&self) -> Polynomial {
        let o = self.order();
        let l = self.a.polynomial(&o);
        l.pow_squarefree(self.exponent() as u32)
            .mul_squarefree(self.kernel_seed())
    }

    pub fn rhs(&self) -> Polynomial {
        linear_sum(&self.order())
            .pow_squarefree(2)
            .mul_squarefree(&self.g)
    }

    /// Plain-text identity `lhs = rhs` in the squarefree quotient.
    pub fn identity_text(&self) -> String {
        let e = self.exponent();
        let seed = match self.variant {
            WitnessVariant::Odd => "l'",
            WitnessVariant::Even => "f",
        };
        format!(
            "l = {}\n{seed} = {}\ng = {}\nsfp(l^{e} * {seed}) = sfp((x1 + ... + x{})^2 * g)\n",
            self.a.polynomial(&self.order()),
            self.kernel_seed(),
            self.g,
            self.nvars()
        )
    }
}

/// `Σ_{|T|=t} x_T Σ_i b_i Σ_{|S|=t, |S∩T|=i} (a1...an)/a_S`, scaled.
fn g_form(
    a: &GenericLinearForm,
    t: usize,
    b: &[Rational],
    scale: &Rational,
    order: &TermOrder,
) -> Polynomial {
    let n = a.nvars();
    let all: Vec<usize> = (1..=n).collect();
    let subsets = crate::poly::subsets(&all, t);
    let weights: Vec<Rational> = subsets.iter().map(|s| a.complement_product(s)).collect();
    let mut terms = Vec::with_capacity(subsets.len());
    for tset in &subsets {
        let mut c = Rational::zero();
        for (s, w) in subsets.iter().zip(&weights) {
            let i = s.iter().filter(|v| tset.contains(v)).count();
            if let Some(bi) = b.get(i) {
                c += bi * w;
            }
        }
        terms.push((
            c * scale,
            Monomial::from_var_set(n, tset).expect("subset of 1..=n"),
        ));
    }
    Polynomial::from_terms(order, terms)
}

/// `b_i` for the odd witness, normalized by `C(p+1, p-1) b_0 = 1`.
pub fn odd_b(p: usize) -> Result<Vec<Rational>> {
    lambda_coefficients(p + 1, 2)
}

/// `b_i` for the even witness, normalized by `C(p, p-2) b_0 = 1`.
pub fn even_b(p: usize) -> Result<Vec<Rational>> {
    lambda_coefficients(p, 2)
}

/// `(λ0, λ1, λ2)` for `f`, normalized by `C(p, 2) λ0 = 1`.
pub fn even_lambda(p: usize) -> Vec<Rational> {
    let r = |v: u64| Rational::from_integer(BigInt::from(v));
    let c = |n: usize, k: usize| {
        Rational::from_integer(BigInt::from(crate::lattice::binomial(n as u64, k as u64)))
    };
    let l0 = Rational::one() / c(p, 2);
    // (p-1) λ1 + C(p-1,2) λ0 = 0
    let l1 = -(c(p - 1, 2) * &l0) / r(p as u64 - 1);
    // λ2 + 2(p-2) λ1 + C(p-2,2) λ0 = 0
    let l2 = -(r(2 * (p as u64 - 2)) * &l1 + c(p - 2, 2) * &l0);
    vec![l0, l1, l2]
}

fn check_odd(a: &GenericLinearForm) -> Result<usize> {
    let n = a.nvars();
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "odd witness needs odd n >= 3, got {n}"
        )));
    }
    Ok((n - 1) / 2)
}

/// Odd witness with the normalized `b` and the scale `-(p+1)!/2` that makes
/// the identity exact.
pub fn syzygy_witness_odd(a: &GenericLinearForm) -> Result<SyzygyWitness> {
    let p = check_odd(a)?;
    let scale = -Rational::from_integer(BigInt::from(factorial(p as u64 + 1)))
        / Rational::from_integer(2.into());
    syzygy_witness_odd_with(a, odd_b(p)?, &scale)
}

/// Odd witness with caller-chosen `b` and scale for `g`.
pub fn syzygy_witness_odd_with(
    a: &GenericLinearForm,
    b: Vec<Rational>,
    scale: &Rational,
) -> Result<SyzygyWitness> {
    let p = check_odd(a)?;
    let n = a.nvars();
    let o = TermOrder::degrevlex(n);
    let total: Rational = a.coeffs().iter().sum();
    let pr = Rational::from_integer(BigInt::from(p));
    // ℓ' = Σ (p a_i - Σ_{j≠i} a_j) a_i x_i
    let lp: Vec<Rational> = a
        .coeffs()
        .iter()
        .map(|ai| (&pr * ai - (&total - ai)) * ai)
        .collect();
    let lprime = linear_form(&o, &lp);
    let g = g_form(a, p - 1, &b, scale, &o);
    Ok(SyzygyWitness {
        variant: WitnessVariant::Odd,
        a: a.clone(),
        lprime: Some(lprime),
        f: None,
        g,
        b,
        lambda: None,
    })
}

/// `-(p+1)! Σ_{|T|=p+1} a_T x_T Σ_{j∉T} a_j`, the closed form of `ℓ^p ℓ'`.
pub fn odd_lhs_closed_form(a: &GenericLinearForm) -> Result<Polynomial> {
    let p = check_odd(a)?;
    let n = a.nvars();
    let o = TermOrder::degrevlex(n);
    let all: Vec<usize> = (1..=n).collect();
    let c = -Rational::from_integer(BigInt::from(factorial(p as u64 + 1)));
    let mut terms = Vec::new();
    for_each_subset(&all, p + 1, &mut |t| {
        let outside: Rational = (1..=n)
            .filter(|j| !t.contains(j))
            .map(|j| a.coeffs()[j - 1].clone())
            .sum();
        terms.push((
            &c * a.product(t) * outside,
            Monomial::from_var_set(n, t).expect("subset"),
        ));
    });
    Ok(Polynomial::from_terms(&o, terms))
}

pub fn syzygy_witness_even(a: &GenericLinearForm) -> Result<SyzygyWitness> {
    let n = a.nvars();
    if n < 6 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "even witness needs even n >= 6, got {n}"
        )));
    }
    let p = n / 2;
    let o = TermOrder::degrevlex(n);
    let lambda = even_lambda(p);
    let all: Vec<usize> = (1..=n).collect();
    let pairs = crate::poly::subsets(&all, 2);
    let mut terms = Vec::with_capacity(pairs.len());
    for t in &pairs {
        let mut c = Rational::zero();
        for s in &pairs {
            let i = s.iter().filter(|v| t.contains(v)).count();
            c += &lambda[i] * a.product(s);
        }
        terms.push((
            a.product(t) * c,
            Monomial::from_var_set(n, t).expect("pair"),
        ));
    }
    let f = Polynomial::from_terms(&o, terms);
    let b = even_b(p)?;
    let scale = Rational::from_integer(BigInt::from(factorial(p as u64 - 2)))
        / Rational::from_integer(2.into());
    let g = g_form(a, p - 2, &b, &scale, &o);
    Ok(SyzygyWitness {
        variant: WitnessVariant::Even,
        a: a.clone(),
        lprime: None,
        f: Some(f),
        g,
        b,
        lambda: Some(lambda),
    })
}

/// `f` is a multiple of `sfp((Σx)^2) = 2 e_2` exactly when all its
/// coefficients coincide.
pub fn has_coefficient_spread(f: &Polynomial) -> bool {
    let n = f.nvars();
    let all: Vec<usize> = (1..=n).collect();
    let coeffs: Vec<Rational> = crate::poly::subsets(&all, 2)
        .iter()
        .map(|s| f.coefficient(&Monomial::from_var_set(n, s).expect("pair")))
        .collect();
    coeffs.windows(2).any(|w| w[0] != w[1]) || f.terms().iter().any(|t| t.monomial.degree() != 2)
}

/// `sfp(ℓ^e * seed - (Σx)^2 g) == 0`, exact.
pub fn verify_witness(w: &SyzygyWitness) -> bool {
    (&w.lhs() - &w.rhs()).sfp().is_zero()
}
