use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, OrderKey, TermOrder};
use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

/// Sparse polynomial over the rationals.
///
/// Terms are kept sorted in descending order for the polynomial's
/// [`TermOrder`], with distinct monomials and nonzero coefficients, so the
/// leading term is always `terms()[0]`.
#[derive(Clone, Debug)]
pub struct Polynomial {
    order: TermOrder,
    terms: Vec<Term>,
}

#[allow(clippy::len_without_is_empty)] // `is_zero` plays that role
impl Polynomial {
    pub fn zero(order: &TermOrder) -> Self {
        Polynomial {
            order: order.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(order: &TermOrder) -> Self {
        Self::constant(order, rat(1))
    }

    pub fn constant(order: &TermOrder, c: Rational) -> Self {
        Self::term(order, c, Monomial::one(order.nvars()))
    }

    pub fn term(order: &TermOrder, c: Rational, m: Monomial) -> Self {
        debug_assert_eq!(m.nvars(), order.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term {
                coeff: c,
                monomial: m,
            }]
        };
        Polynomial {
            order: order.clone(),
            terms,
        }
    }

    pub fn monomial(order: &TermOrder, m: Monomial) -> Self {
        Self::term(order, rat(1), m)
    }

    /// `x{index}`, 1-based.
    pub fn variable(order: &TermOrder, index: usize) -> Self {
        Self::monomial(order, Monomial::variable(order.nvars(), index))
    }

    /// Collects terms, merging equal monomials and dropping zeros.
    pub fn from_terms<I>(order: &TermOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (c, m) in terms {
            debug_assert_eq!(m.nvars(), order.nvars());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(order, acc)
    }

    fn from_map(order: &TermOrder, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coeff)| Term { coeff, monomial })
            .collect();
        terms.sort_by_cached_key(|t| std::cmp::Reverse(order.key(&t.monomial)));
        Polynomial {
            order: order.clone(),
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Every term except the leading one.
    pub fn tail(&self) -> &[Term] {
        if self.terms.is_empty() {
            &[]
        } else {
            &self.terms[1..]
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.monomial == m)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree; rejects the zero polynomial.
    pub fn degree(&self) -> Result<u32> {
        self.terms
            .iter()
            .map(|t| t.monomial.degree())
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|s| s.monomial.degree() == d)
            }
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Same polynomial, terms re-sorted for another order on the same ring.
    pub fn with_order(&self, order: &TermOrder) -> Polynomial {
        assert_eq!(
            order.nvars(),
            self.nvars(),
            "order lives in a different ring"
        );
        if *order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by_cached_key(|t| std::cmp::Reverse(order.key(&t.monomial)));
        Polynomial {
            order: order.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: &t.coeff * c,
                monomial: t.monomial.clone(),
            })
            .collect();
        Polynomial {
            order: self.order.clone(),
            terms,
        }
    }

    /// `c * m * self`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: &t.coeff * c,
                monomial: t.monomial.mul(m),
            })
            .collect();
        Polynomial {
            order: self.order.clone(),
            terms,
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert_eq!(
            self.nvars(),
            other.nvars(),
            "polynomials live in different rings"
        );
        let converted;
        let rhs = if other.order == self.order {
            &other.terms
        } else {
            converted = other.with_order(&self.order);
            &converted.terms
        };
        let sign = |c: &Rational| if negate { -c } else { c.clone() };
        let mut out = Vec::with_capacity(self.terms.len() + rhs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.len() {
            let (a, b) = (&self.terms[i], &rhs[j]);
            match self.order.cmp(&a.monomial, &b.monomial) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(Term {
                        coeff: sign(&b.coeff),
                        monomial: b.monomial.clone(),
                    });
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a.coeff + sign(&b.coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a.monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs[j..].iter().map(|b| Term {
            coeff: sign(&b.coeff),
            monomial: b.monomial.clone(),
        }));
        Polynomial {
            order: self.order.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(
            self.nvars(),
            other.nvars(),
            "polynomials live in different rings"
        );
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for a in &self.terms {
            for b in &other.terms {
                *acc.entry(a.monomial.mul(&b.monomial))
                    .or_insert_with(Rational::zero) += &a.coeff * &b.coeff;
            }
        }
        Self::from_map(&self.order, acc)
    }

    /// Remainder of multivariate division by `divisors`.
    ///
    /// At each step the largest remaining term is reduced by the first divisor
    /// whose leading monomial divides it; terms nobody divides go to the
    /// remainder. Zero divisors are ignored.
    pub fn normal_form(&self, divisors: &[Polynomial]) -> Polynomial {
        let order = &self.order;
        let divs: Vec<Polynomial> = divisors
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.with_order(order).monic())
            .collect();
        let mut work: BTreeMap<OrderKey, (Monomial, Rational)> = self
            .terms
            .iter()
            .map(|t| {
                (
                    order.key(&t.monomial),
                    (t.monomial.clone(), t.coeff.clone()),
                )
            })
            .collect();
        let mut rem = Vec::new();
        while let Some((_, (m, c))) = work.pop_last() {
            let hit = divs.iter().find(|g| g.terms[0].monomial.divides(&m));
            let Some(g) = hit else {
                rem.push(Term {
                    coeff: c,
                    monomial: m,
                });
                continue;
            };
            let q = g.terms[0]
                .monomial
                .quotient_of(&m)
                .expect("leading monomial divides");
            for t in &g.terms[1..] {
                let mm = t.monomial.mul(&q);
                let delta = -(&c * &t.coeff);
                match work.entry(order.key(&mm)) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert((mm, delta));
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        o.get_mut().1 += delta;
                        if o.get().1.is_zero() {
                            o.remove();
                        }
                    }
                }
            }
        }
        Polynomial {
            order: order.clone(),
            terms: rem,
        }
    }

    /// Leading-term-only reduction test: true when no divisor's leading
    /// monomial divides any term.
    pub fn is_reduced_by(&self, divisors: &[Polynomial]) -> bool {
        self.terms.iter().all(|t| {
            divisors
                .iter()
                .filter_map(|g| g.with_order(&self.order).leading_monomial().cloned())
                .all(|lm| !lm.divides(&t.monomial))
        })
    }

    pub fn is_squarefree(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_squarefree())
    }

    /// Squarefree part: the normal form modulo `(x1^2, ..., xn^2)`, i.e. the
    /// polynomial with every term containing a square removed.
    pub fn sfp(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.monomial.is_squarefree())
            .cloned()
            .collect();
        Polynomial {
            order: self.order.clone(),
            terms,
        }
    }

    /// `sfp(self * other)` without forming the non-squarefree products.
    pub fn mul_squarefree(&self, other: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for a in &self.terms {
            if !a.monomial.is_squarefree() {
                continue;
            }
            for b in &other.terms {
                if let Some(m) = a.monomial.mul_squarefree(&b.monomial) {
                    *acc.entry(m).or_insert_with(Rational::zero) += &a.coeff * &b.coeff;
                }
            }
        }
        Self::from_map(&self.order, acc)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn pow_squarefree(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.order);
        for _ in 0..k {
            acc = acc.mul_squarefree(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Content removal: rescales to integer coefficients with gcd 1 and a
    /// positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for t in &self.terms {
            den = den.lcm(t.coeff.denom());
            num = num.gcd(t.coeff.numer());
        }
        let mut factor = Rational::new(den, num);
        if self.terms[0].coeff.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Substitutes `x{i} -> x{map[i-1]}` (1-based), re-sorting for `order`.
    pub fn relabel(&self, map: &[usize], order: &TermOrder) -> Polynomial {
        Polynomial::from_terms(
            order,
            self.terms
                .iter()
                .map(|t| (t.coeff.clone(), t.monomial.relabel(map))),
        )
    }

    /// Embeds into a ring with more variables; variable `i` goes to `offset + i`.
    pub fn embed(&self, order: &TermOrder, offset: usize) -> Polynomial {
        let n = order.nvars();
        assert!(offset + self.nvars() <= n);
        Polynomial::from_terms(
            order,
            self.terms.iter().map(|t| {
                let mut e = vec![0u16; n];
                e[offset..offset + self.nvars()].copy_from_slice(t.monomial.exponents());
                (t.coeff.clone(), Monomial::new(e))
            }),
        )
    }

    /// Term-wise equality that ignores the attached order.
    pub fn same_terms(&self, other: &Polynomial) -> bool {
        if self.nvars() != other.nvars() || self.len() != other.len() {
            return false;
        }
        if self.order == other.order {
            return self.terms == other.terms;
        }
        self.terms == other.with_order(&self.order).terms
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_terms(other)
    }
}

impl Eq for Polynomial {}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.product(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&rat(-1))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `e_d` on the variables in `set` (1-based).
pub fn elementary_symmetric(order: &TermOrder, set: &[usize], d: usize) -> Polynomial {
    let n = order.nvars();
    let mut terms = Vec::new();
    for_each_subset(set, d, &mut |s| {
        terms.push((
            rat(1),
            Monomial::from_var_set(n, s).expect("valid variable set"),
        ));
    });
    Polynomial::from_terms(order, terms)
}

/// `x1 + ... + xn`.
pub fn linear_sum(order: &TermOrder) -> Polynomial {
    linear_form(order, &vec![rat(1); order.nvars()])
}

pub fn linear_form(order: &TermOrder, coeffs: &[Rational]) -> Polynomial {
    let n = order.nvars();
    assert_eq!(coeffs.len(), n);
    Polynomial::from_terms(
        order,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), Monomial::variable(n, i + 1))),
    )
}

/// `(a1*x1 + ... + an*xn)^k`.
pub fn expand_power_linear(order: &TermOrder, coeffs: &[Rational], k: u32) -> Polynomial {
    linear_form(order, coeffs).pow(k)
}

/// Calls `f` on every `d`-subset of `items`, in lexicographic order.
pub fn for_each_subset<T: Clone>(items: &[T], d: usize, f: &mut dyn FnMut(&[T])) {
    fn rec<T: Clone>(
        items: &[T],
        d: usize,
        start: usize,
        cur: &mut Vec<T>,
        f: &mut dyn FnMut(&[T]),
    ) {
        if cur.len() == d {
            f(cur);
            return;
        }
        let need = d - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i].clone());
            rec(items, d, i + 1, cur, f);
            cur.pop();
        }
    }
    if d <= items.len() {
        rec(items, d, 0, &mut Vec::with_capacity(d), f);
    }
}

pub fn subsets<T: Clone>(items: &[T], d: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for_each_subset(items, d, &mut |s| out.push(s.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(o: &TermOrder, i: usize) -> Polynomial {
        Polynomial::variable(o, i)
    }

    #[test]
    fn arithmetic_basics() {
        let o = TermOrder::degrevlex(3);
        let s = linear_sum(&o);
        let sq = s.pow(2);
        assert_eq!(sq.len(), 6);
        assert_eq!(sq.coefficient(&Monomial::new(vec![1, 1, 0])), rat(2));
        assert!((&s - &s).is_zero());
        let p = &x(&o, 1) + &x(&o, 2);
        assert_eq!(
            &(&p * &p) - &(&x(&o, 1) * &x(&o, 1)),
            &(&x(&o, 2) * &x(&o, 2)) + &x(&o, 1).mul_term(&rat(2), &Monomial::variable(3, 2))
        );
    }

    #[test]
    fn terms_sorted_and_leading() {
        let o = TermOrder::lex(3);
        let p = &(&x(&o, 3) * &x(&o, 3)) + &x(&o, 1);
        assert_eq!(p.leading_monomial(), Some(&Monomial::variable(3, 1)));
        let q = p.with_order(&TermOrder::degrevlex(3));
        assert_eq!(q.leading_monomial(), Some(&Monomial::power_of(3, 3, 2)));
        assert_eq!(p, q);
    }

    #[test]
    fn sfp_matches_mul_squarefree() {
        let o = TermOrder::degrevlex(4);
        let s = linear_sum(&o);
        let a = s.pow(3).sfp();
        let b = s.pow_squarefree(3);
        assert_eq!(a, b);
        // (sum x)^3 squarefree part is 6 e3
        assert_eq!(a, elementary_symmetric(&o, &[1, 2, 3, 4], 3).scale(&rat(6)));
    }

    #[test]
    fn primitive_and_monic() {
        let o = TermOrder::degrevlex(2);
        let p = &x(&o, 1).scale(&ratio(-2, 3)) + &x(&o, 2).scale(&ratio(4, 9));
        let pp = p.primitive();
        assert_eq!(pp, &x(&o, 1).scale(&rat(3)) - &x(&o, 2).scale(&rat(2)));
        assert_eq!(p.monic().leading_coeff(), Some(&rat(1)));
    }

    #[test]
    fn normal_form_squares() {
        let o = TermOrder::degrevlex(3);
        let squares: Vec<_> = (1..=3).map(|i| &x(&o, i) * &x(&o, i)).collect();
        let s = linear_sum(&o).pow(2);
        assert_eq!(s.normal_form(&squares), s.sfp());
    }

    #[test]
    fn normal_form_division() {
        let o = TermOrder::lex(2);
        // x1^2 mod (x1 - x2) -> x2^2
        let g = &x(&o, 1) - &x(&o, 2);
        let f = &x(&o, 1) * &x(&o, 1);
        assert_eq!(f.normal_form(&[g]), &x(&o, 2) * &x(&o, 2));
    }

    #[test]
    fn degree_of_zero_errors() {
        let o = TermOrder::degrevlex(2);
        assert!(matches!(
            Polynomial::zero(&o).degree(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(
            subsets(&[1, 2, 3], 2),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(subsets(&[1, 2], 3).len(), 0);
        assert_eq!(subsets::<usize>(&[], 0), vec![Vec::<usize>::new()]);
    }
}
