use std::collections::HashMap;

use num_traits::Zero;

use super::rank::Matrix;
use crate::error::{invalid, Error, Result};
use crate::groebner::{GroebnerBasis, MonomialIdeal};
use crate::poly::{Monomial, Polynomial, Rational, TermOrder};

/// Sparse vector: (index, nonzero coefficient).
type Sparse = Vec<(usize, Rational)>;

/// An Artinian graded quotient `R/I` given by a Gröbner basis, with the
/// standard monomials of each degree as its vector-space basis.
///
/// `NF(x_i * m)` is precomputed for every standard monomial `m`, so
/// multiplying by a linear form is a sparse matrix-vector product.
pub struct QuotientAlgebra {
    order: TermOrder,
    basis: Vec<Polynomial>,
    staircase: MonomialIdeal,
    monomials: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    // times[d][j][i] = coordinates of NF(x_{i+1} * monomials[d][j]) in degree d+1
    times: Vec<Vec<Vec<Sparse>>>,
}

impl QuotientAlgebra {
    /// `R/I` for the ideal with reduced Gröbner basis `g`.
    pub fn from_basis(g: &GroebnerBasis) -> Result<Self> {
        Self::build(g.order(), g.generators().to_vec(), g.initial_ideal())
    }

    /// `R/J` for a monomial ideal `J`.
    pub fn monomial(ideal: &MonomialIdeal, order: &TermOrder) -> Result<Self> {
        let n = ideal.nvars();
        let basis = ideal
            .generators()
            .iter()
            .map(|m| Polynomial::monomial(order, m.clone()))
            .collect();
        debug_assert_eq!(order.nvars(), n);
        Self::build(order, basis, ideal.clone())
    }

    fn build(order: &TermOrder, basis: Vec<Polynomial>, staircase: MonomialIdeal) -> Result<Self> {
        let n = order.nvars();
        for i in 1..=n {
            let artinian = staircase
                .generators()
                .iter()
                .any(|g| g.as_pure_power().is_some_and(|(v, _)| v == i));
            if !artinian {
                return Err(invalid(format!(
                    "quotient is not Artinian: no pure power of x{i} in the initial ideal"
                )));
            }
        }
        let mut monomials = Vec::new();
        for d in 0.. {
            let ms = staircase.standard_monomials(d, order);
            if ms.is_empty() {
                break;
            }
            monomials.push(ms);
        }
        let index: Vec<HashMap<Monomial, usize>> = monomials
            .iter()
            .map(|ms| ms.iter().enumerate().map(|(j, m)| (m.clone(), j)).collect())
            .collect();
        let mut alg = QuotientAlgebra {
            order: order.clone(),
            basis,
            staircase,
            monomials,
            index,
            times: Vec::new(),
        };
        let mut times = Vec::with_capacity(alg.monomials.len());
        for d in 0..alg.monomials.len() {
            let mut per_mono = Vec::with_capacity(alg.monomials[d].len());
            for m in &alg.monomials[d] {
                let mut per_var = Vec::with_capacity(n);
                for i in 1..=n {
                    let prod = m.mul(&Monomial::variable(n, i));
                    per_var.push(alg.coordinates_of_monomial(&prod, d + 1)?);
                }
                per_mono.push(per_var);
            }
            times.push(per_mono);
        }
        alg.times = times;
        Ok(alg)
    }

    fn coordinates_of_monomial(&self, m: &Monomial, d: usize) -> Result<Sparse> {
        if d >= self.monomials.len() {
            // past the socle every normal form vanishes
            return Ok(Vec::new());
        }
        if let Some(&j) = self.index[d].get(m) {
            return Ok(vec![(j, Rational::from_integer(1.into()))]);
        }
        let nf = Polynomial::monomial(&self.order, m.clone()).normal_form(&self.basis);
        self.sparse_coordinates(&nf, d)
    }

    fn sparse_coordinates(&self, nf: &Polynomial, d: usize) -> Result<Sparse> {
        let mut out = Vec::with_capacity(nf.len());
        for t in nf.terms() {
            let j = self
                .index
                .get(d)
                .and_then(|ix| ix.get(&t.monomial))
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "normal form term {} is not standard in degree {d}",
                        t.monomial
                    ))
                })?;
            out.push((*j, t.coeff.clone()));
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn staircase(&self) -> &MonomialIdeal {
        &self.staircase
    }

    /// Highest degree with a nonzero graded piece.
    pub fn socle_degree(&self) -> usize {
        self.monomials.len() - 1
    }

    pub fn dim(&self, d: usize) -> usize {
        self.monomials.get(d).map_or(0, Vec::len)
    }

    pub fn hilbert_function(&self) -> Vec<usize> {
        self.monomials.iter().map(Vec::len).collect()
    }

    /// Standard monomials of degree `d`, descending in the order.
    pub fn standard_basis(&self, d: usize) -> &[Monomial] {
        self.monomials.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        f.with_order(&self.order).normal_form(&self.basis)
    }

    /// Coordinates of a homogeneous degree-`d` polynomial after reduction.
    pub fn coordinates(&self, f: &Polynomial, d: usize) -> Result<Vec<Rational>> {
        if !f.is_homogeneous() || f.terms().iter().any(|t| t.monomial.degree() as usize != d) {
            return Err(invalid(format!(
                "expected a homogeneous polynomial of degree {d}"
            )));
        }
        let mut v = vec![Rational::zero(); self.dim(d)];
        for (j, c) in self.sparse_coordinates(&self.normal_form(f), d)? {
            v[j] = c;
        }
        Ok(v)
    }

    pub fn from_coordinates(&self, v: &[Rational], d: usize) -> Polynomial {
        let ms = self.standard_basis(d);
        Polynomial::from_terms(
            &self.order,
            v.iter().zip(ms).map(|(c, m)| (c.clone(), m.clone())),
        )
    }

    /// `ℓ * v` for `v` in degree `d`, with `ℓ = Σ coeffs[i] x_{i+1}`.
    pub fn multiply_linear(&self, v: &[Rational], d: usize, coeffs: &[Rational]) -> Vec<Rational> {
        assert_eq!(coeffs.len(), self.nvars());
        let mut out = vec![Rational::zero(); self.dim(d + 1)];
        if d >= self.times.len() {
            return out;
        }
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (i, a) in coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let s = vj * a;
                for (t, c) in &self.times[d][j][i] {
                    out[*t] += &s * c;
                }
            }
        }
        out
    }

    /// Matrix of `·ℓ^power : A_d -> A_{d+power}` in the standard bases.
    pub fn multiplication_matrix(&self, coeffs: &[Rational], power: usize, d: usize) -> Matrix {
        let cols = self.dim(d);
        let rows = self.dim(d + power);
        let mut columns = Vec::with_capacity(cols);
        for j in 0..cols {
            let mut v = vec![Rational::zero(); cols];
            v[j] = Rational::from_integer(1.into());
            for step in 0..power {
                v = self.multiply_linear(&v, d + step, coeffs);
            }
            columns.push(v);
        }
        Matrix::from_columns(rows, &columns)
    }
}
