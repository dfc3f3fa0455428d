use std::fmt;

use crate::poly::{Monomial, TermOrder};

/// A monomial ideal stored by its minimal generators.
///
/// Generators are kept sorted by degree, then lexicographically descending
/// on exponent vectors, which is deterministic and independent of any term
/// order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let gens = minimalize(
            gens.into_iter()
                .inspect(|m| assert_eq!(m.nvars(), nvars))
                .collect(),
        );
        MonomialIdeal { nvars, gens }
    }

    /// `(x1^2, ..., xn^2)`.
    pub fn squares(nvars: usize) -> Self {
        Self::new(nvars, (1..=nvars).map(|i| Monomial::power_of(nvars, i, 2)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Generators that are squarefree, as their own ideal.
    pub fn squarefree_part(&self) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars,
            gens: self
                .gens
                .iter()
                .filter(|m| m.is_squarefree())
                .cloned()
                .collect(),
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.nvars, other.nvars);
        Self::new(
            self.nvars,
            self.gens.iter().chain(other.gens.iter()).cloned(),
        )
    }

    /// Number of minimal generators in each degree, indexed by degree.
    pub fn degree_counts(&self) -> Vec<usize> {
        let top = self
            .gens
            .iter()
            .map(|g| g.degree() as usize)
            .max()
            .unwrap_or(0);
        let mut out = vec![0; top + 1];
        for g in &self.gens {
            out[g.degree() as usize] += 1;
        }
        out
    }

    /// Degree-`d` monomials outside the ideal, sorted descending for `order`.
    pub fn standard_monomials(&self, d: u32, order: &TermOrder) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut e = vec![0u16; self.nvars];
        self.enumerate(0, d, &mut e, &mut out);
        out.sort_by_cached_key(|m| std::cmp::Reverse(order.key(m)));
        out
    }

    fn enumerate(&self, i: usize, left: u32, e: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == self.nvars {
            if left == 0 {
                let m = Monomial::new(e.clone());
                if !self.contains(&m) {
                    out.push(m);
                }
            }
            return;
        }
        for a in 0..=left {
            // a pure power already in the ideal kills the rest of the branch
            if a > 0 && self.contains(&Monomial::power_of(self.nvars, i + 1, a as u16)) {
                break;
            }
            e[i] = a as u16;
            self.enumerate(i + 1, left - a, e, out);
        }
        e[i] = 0;
    }

    /// Hilbert function of `R / self` in degrees `0..=max_degree`.
    pub fn hilbert_function(&self, max_degree: u32, order: &TermOrder) -> Vec<usize> {
        (0..=max_degree)
            .map(|d| self.standard_monomials(d, order).len())
            .collect()
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
