use std::collections::BTreeSet;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::poly::{rat, Monomial, Polynomial, TermOrder};

/// A Gröbner basis together with its order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: TermOrder,
    generators: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps generators that the caller asserts form a Gröbner basis.
    /// Generators are re-sorted into `order`.
    pub fn from_generators(order: &TermOrder, generators: Vec<Polynomial>, reduced: bool) -> Self {
        let generators = generators
            .into_iter()
            .map(|g| g.with_order(order))
            .collect();
        GroebnerBasis {
            order: order.clone(),
            generators,
            reduced,
        }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars(), self.leading_monomials())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        f.with_order(&self.order).normal_form(&self.generators)
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.generators;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let (a, b) = (g[i].leading_monomial(), g[j].leading_monomial());
                if let (Some(a), Some(b)) = (a, b) {
                    if a.is_coprime(b) {
                        continue;
                    }
                }
                let s = match s_polynomial(&g[i], &g[j]) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                if !s.normal_form(g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the defining properties of a reduced basis: monic, leading
    /// monomials an antichain, no tail term in the initial ideal.
    pub fn check_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        if lms.len() != self.generators.len() {
            return false;
        }
        let ideal = MonomialIdeal::new(self.nvars(), lms.iter().cloned());
        if ideal.len() != lms.len() {
            return false;
        }
        self.generators.iter().all(|g| {
            g.leading_coeff() == Some(&rat(1))
                && g.tail().iter().all(|t| !ideal.contains(&t.monomial))
        })
    }

    /// Sets of generators agree as sets (orders may differ).
    pub fn same_generators(&self, other: &GroebnerBasis) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut a: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.with_order(&TermOrder::degrevlex(g.nvars())).to_string())
            .collect();
        let mut b: Vec<String> = other
            .generators
            .iter()
            .map(|g| g.with_order(&TermOrder::degrevlex(g.nvars())).to_string())
            .collect();
        a.sort();
        b.sort();
        a == b
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.generators == other.generators
    }
}

/// `S(f, g) = lcm/lt(f) * f - lcm/lt(g) * g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (Some(tf), Some(tg)) = (f.leading_term(), g.leading_term()) else {
        return Err(Error::ZeroPolynomial);
    };
    let g = g.with_order(f.order());
    let l = tf.monomial.lcm(&tg.monomial);
    let mf = tf.monomial.quotient_of(&l).expect("lcm is a multiple");
    let mg = tg.monomial.quotient_of(&l).expect("lcm is a multiple");
    let a = f.mul_term(&tf.coeff.recip(), &mf);
    let b = g.mul_term(&tg.coeff.recip(), &mg);
    Ok(&a - &b)
}

/// Buchberger's algorithm followed by [`reduce_basis`].
pub fn buchberger(gens: &[Polynomial], order: &TermOrder) -> Result<GroebnerBasis> {
    let g = buchberger_unreduced(gens, order)?;
    Ok(reduce_basis(&g))
}

/// Plain Buchberger with the normal selection strategy, the coprime
/// criterion and the chain criterion. Input zeros are ignored; an input that
/// is entirely zero is rejected.
pub fn buchberger_unreduced(gens: &[Polynomial], order: &TermOrder) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if g.nvars() != order.nvars() {
            return Err(Error::LengthMismatch {
                expected: order.nvars(),
                found: g.nvars(),
            });
        }
        if !g.is_zero() {
            basis.push(g.with_order(order).primitive());
        }
    }
    if basis.is_empty() {
        return Err(Error::ZeroPolynomial);
    }

    let lm = |b: &[Polynomial], i: usize| b[i].leading_monomial().expect("nonzero").clone();
    // (lcm degree, i, j) with i < j; BTreeSet pops the normal-strategy choice first.
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let add_pairs = |lms: &[Monomial], pending: &mut BTreeSet<(u32, usize, usize)>, j: usize| {
        for i in 0..j {
            pending.insert((lms[i].lcm(&lms[j]).degree(), i, j));
        }
    };
    for j in 0..basis.len() {
        lms.push(lm(&basis, j));
        add_pairs(&lms, &mut pending, j);
    }

    let has_pair =
        |pending: &BTreeSet<(u32, usize, usize)>, lms: &[Monomial], a: usize, b: usize| {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            pending.contains(&(lms[i].lcm(&lms[j]).degree(), i, j))
        };

    while let Some(pair) = pending.pop_first() {
        let (_, i, j) = pair;
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        let l = lms[i].lcm(&lms[j]);
        let chain = (0..lms.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&l)
                && !has_pair(&pending, &lms, i, k)
                && !has_pair(&pending, &lms, j, k)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = s.normal_form(&basis);
        if r.is_zero() {
            continue;
        }
        basis.push(r.primitive());
        let j = basis.len() - 1;
        lms.push(lm(&basis, j));
        add_pairs(&lms, &mut pending, j);
    }
    Ok(GroebnerBasis {
        order: order.clone(),
        generators: basis,
        reduced: false,
    })
}

/// Minimizes, tail-reduces and normalizes a Gröbner basis. The result is
/// the unique reduced basis, listed by leading monomial descending.
pub fn reduce_basis(g: &GroebnerBasis) -> GroebnerBasis {
    let order = g.order.clone();
    let mut gens: Vec<Polynomial> = g
        .generators
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic())
        .collect();
    gens.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    // Smallest leading monomials first, so a duplicate keeps its earliest copy.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in gens {
        let m = p.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().unwrap().divides(m))
        {
            minimal.push(p);
        }
    }

    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        reduced.push(minimal[i].normal_form(&others).monic());
    }
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    GroebnerBasis {
        order,
        generators: reduced,
        reduced: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{linear_sum, parse_polynomial};

    fn p(s: &str, o: &TermOrder) -> Polynomial {
        parse_polynomial(s, o).unwrap()
    }

    #[test]
    fn s_poly_of_self_is_zero() {
        let o = TermOrder::degrevlex(3);
        let f = p("x1*x2 + x3^2", &o);
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        assert!(s_polynomial(&f, &Polynomial::zero(&o)).is_err());
    }

    #[test]
    fn coprime_squares_reduce_to_zero() {
        let o = TermOrder::degrevlex(2);
        let g = [p("x1^2", &o), p("x2^2", &o)];
        let s = s_polynomial(&g[0], &g[1]).unwrap();
        assert!(s.normal_form(&g).is_zero());
    }

    #[test]
    fn monomial_input_is_minimized() {
        let o = TermOrder::degrevlex(3);
        let g = buchberger(&[p("x1^2*x2", &o), p("x1^2", &o), p("x3", &o)], &o).unwrap();
        let gens: Vec<String> = g.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["x1^2", "x3"]);
    }

    #[test]
    fn five_two_initial_ideal() {
        let o = TermOrder::degrevlex(5);
        let mut gens: Vec<Polynomial> = (1..=5).map(|i| p(&format!("x{i}^2"), &o)).collect();
        gens.push(linear_sum(&o).pow(2));
        let g = buchberger(&gens, &o).unwrap();
        assert!(g.check_reduced());
        assert!(g.satisfies_buchberger_criterion());
        let expected = MonomialIdeal::new(
            5,
            [
                "x1^2", "x2^2", "x3^2", "x4^2", "x5^2", "x1*x2", "x1*x3*x4", "x2*x3*x4",
            ]
            .iter()
            .map(|s| p(s, &o).leading_monomial().unwrap().clone()),
        );
        assert_eq!(g.initial_ideal(), expected);
    }

    #[test]
    fn reduce_is_idempotent() {
        let o = TermOrder::lex(3);
        let g = buchberger(&[p("x1^2 - x2", &o), p("x1*x2 - x3", &o)], &o).unwrap();
        assert_eq!(reduce_basis(&g), g);
        assert!(g.check_reduced());
    }

    #[test]
    fn twisted_cubic_lex() {
        // (x2 - x1^2, x3 - x1^3) under lex x1 > x2 > x3
        let o = TermOrder::lex(3);
        let g = buchberger(&[p("x2 - x1^2", &o), p("x3 - x1^3", &o)], &o).unwrap();
        let s: Vec<String> = g.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            s,
            ["x1^2 - x2", "x1*x2 - x3", "x1*x3 - x2^2", "x2^3 - x3^2"]
        );
    }
}
