use num_traits::ToPrimitive;
use serde::Serialize;

use super::betti::BettiTable;
use crate::closed_form::admissible_sets;
use crate::error::{invalid, Error, Result};
use crate::groebner::MonomialIdeal;
use crate::lattice::{catalan_convolution, hilbert_series};
use crate::poly::{for_each_subset, Monomial};

fn choose(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

fn catalan(r: usize, fold: usize) -> u64 {
    catalan_convolution(r, fold)
        .to_u64()
        .expect("Catalan convolution fits in u64 at desk scale")
}

fn need_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(invalid(format!(
            "Betti computations need k >= 2, got k = {k}"
        )));
    }
    Ok(())
}

/// `J_{n,k}`: the squarefree minimal generators of `in(I_{n,k})`, read off
/// the admissible index sets.
pub fn squarefree_part(n: usize, k: usize) -> Result<MonomialIdeal> {
    need_k(k)?;
    let mut gens = Vec::new();
    for sets in admissible_sets(n, k)?.into_values() {
        for a in sets {
            gens.push(Monomial::from_var_set(n, &a)?);
        }
    }
    Ok(MonomialIdeal::new(n, gens))
}

/// `in(I_{n,k}) = J_{n,k} + (x1^2, ..., xn^2)` under degrevlex.
pub fn initial_ideal(n: usize, k: usize) -> Result<MonomialIdeal> {
    Ok(squarefree_part(n, k)?.sum(&MonomialIdeal::squares(n)))
}

/// Strong squarefree stability: for every generator `u x_j` and `i < j` with
/// `x_i ∤ u`, the monomial `u x_i` lies in the ideal.
pub fn is_strongly_squarefree_stable(ideal: &MonomialIdeal) -> Result<bool> {
    let n = ideal.nvars();
    for g in ideal.generators() {
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.to_string()));
        }
        for j in g.var_set() {
            let u = Monomial::variable(n, j)
                .quotient_of(g)
                .expect("x_j divides g");
            for i in 1..j {
                if u.exponent(i) == 0 && !ideal.contains(&u.mul(&Monomial::variable(n, i))) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `β_{p,p+s}(J) = Σ_{u ∈ G(J), deg u = s} C(max u - s, p)` for a strongly
/// squarefree stable `J`.
pub fn ghp_sum(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !is_strongly_squarefree_stable(ideal)? {
        return Err(invalid(
            "the generator-sum formula needs a strongly squarefree stable ideal",
        ));
    }
    let mut t = BettiTable::new();
    for u in ideal.generators() {
        let s = u.degree() as usize;
        let free = u.max_index() - s;
        for p in 0..=free {
            t.add(p, s, choose(free as i64, p as i64) as u64);
        }
    }
    Ok(t)
}

/// `β_{p,p+s}(J_{n,k}) = C_{s-k}^{k-1} C(s-k, p)`, zero when `n < 2s - k`.
pub fn ghp_closed(n: usize, k: usize) -> Result<BettiTable> {
    need_k(k)?;
    let mut t = BettiTable::new();
    let mut s = k;
    while 2 * s - k <= n {
        let c = catalan(s - k, k - 1);
        for p in 0..=s - k {
            t.add(p, s, c * choose((s - k) as i64, p as i64) as u64);
        }
        s += 1;
    }
    Ok(t)
}

/// Betti table of `J_{n,k}` by both the generator sum and the closed form,
/// which must agree.
pub fn betti_ghp(n: usize, k: usize) -> Result<BettiTable> {
    let sum = ghp_sum(&squarefree_part(n, k)?)?;
    let closed = ghp_closed(n, k)?;
    if sum != closed {
        return Err(Error::Internal(format!(
            "generator-sum and closed Betti tables of J_{{{n},{k}}} differ"
        )));
    }
    Ok(closed)
}

/// `A_p(u) = Σ_j C(i_j - 1, p - j)` with the support `i_1 > ... > i_t` of `u`.
pub fn a_p(u: &Monomial, p: usize) -> Result<u64> {
    if !u.is_squarefree() {
        return Err(Error::NotSquarefree(u.to_string()));
    }
    let support = u.var_set();
    let total: i128 = support
        .iter()
        .rev()
        .enumerate()
        .map(|(j, &i)| choose(i as i64 - 1, p as i64 - (j as i64 + 1)))
        .sum();
    Ok(total as u64)
}

/// Every squarefree monomial of `J` (not only minimal generators).
pub fn squarefree_monomials_in(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let n = ideal.nvars();
    let vars: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for d in 1..=n {
        for_each_subset(&vars, d, &mut |s: &[usize]| {
            let m = Monomial::from_var_set(n, s).expect("subset of 1..=n");
            if ideal.contains(&m) {
                out.push(m);
            }
        });
    }
    out
}

/// Betti table of `J + (x1^2, ..., xn^2)` for a squarefree strongly stable `J`:
///
/// `β_{p,p+s} = Σ_{deg u = s} A_{p+1}(u) - Σ_{deg u = s-1} (C(n,p+1) - A_{p+2}(u)) + δ_{s-1,p+1} C(n,p+1)`
///
/// with `u` ranging over all squarefree monomials of `J`.
pub fn murai(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let n = ideal.nvars();
    let sfp = squarefree_monomials_in(ideal);
    let mut by_degree = vec![Vec::new(); n + 1];
    for u in sfp {
        by_degree[u.degree() as usize].push(u);
    }
    let mut t = BettiTable::new();
    for s in 1..=n + 1 {
        for p in 0..=n {
            let cn = choose(n as i64, p as i64 + 1);
            let mut v: i128 = 0;
            if s <= n {
                for u in &by_degree[s] {
                    v += a_p(u, p + 1)? as i128;
                }
            }
            for u in &by_degree[s - 1] {
                v -= cn - a_p(u, p + 2)? as i128;
            }
            if s == p + 2 {
                v += cn;
            }
            if v < 0 {
                return Err(Error::Internal(format!(
                    "negative Betti number {v} at p = {p}, s = {s}"
                )));
            }
            t.add(p, s, v as u64);
        }
    }
    Ok(t)
}

pub fn betti_murai(n: usize, k: usize) -> Result<BettiTable> {
    murai(&squarefree_part(n, k)?)
}

/// `(pd, reg)` of `in(I_{n,k})`. For `n = k + 2m` this is `(n-1, k+m)`; for
/// `n = k + 2m + 1` adjoining `x_n^2` adds one to both, giving `(n-1, k+m+1)`.
/// For `n < k` the ideal is `(x1^2, ..., xn^2)`.
pub fn pd_reg(n: usize, k: usize) -> Result<(usize, usize)> {
    need_k(k)?;
    if n == 0 {
        return Err(invalid("pd and reg need n >= 1"));
    }
    if n < k {
        return Ok((n - 1, n + 1));
    }
    let m = (n - k) / 2;
    Ok(if (n - k) % 2 == 0 {
        (n - 1, k + m)
    } else {
        (n - 1, k + m + 1)
    })
}

/// Betti table of `J + (y^2)` for a new variable `y`, from the table of `J`.
///
/// The quotient rings tensor, so in ideal indexing
/// `β_{i,j} = β'_{i,j} + β'_{i-1,j-2}` for `i >= 1` and
/// `β_{0,j} = β'_{0,j} + δ_{j,2}` (the new generator `y^2`).
pub fn adjoin_square(base: &BettiTable) -> BettiTable {
    let mut t = base.clone();
    for e in base.entries() {
        // β'_{p,p+s} feeds β_{p+1,(p+1)+(s+1)}
        t.add(e.p + 1, e.s + 1, e.value);
    }
    t.add(0, 2, 1);
    t
}

/// Table of `in(I_{n,k})` from that of `in(I_{n-1,k})` when `n - k` is odd,
/// where `in(I_{n,k}) = in(I_{n-1,k}) + (x_n^2)`.
pub fn betti_recursion(n: usize, k: usize, base: &BettiTable) -> Result<BettiTable> {
    need_k(k)?;
    if n <= k || (n - k) % 2 == 0 {
        return Err(invalid(format!(
            "the recursion needs n = k + 2m + 1, got n = {n}, k = {k}"
        )));
    }
    Ok(adjoin_square(base))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeItem {
    pub item: String,
    pub expected: String,
    pub found: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub n: usize,
    pub k: usize,
    pub items: Vec<ShapeItem>,
}

impl ShapeReport {
    pub fn holds(&self) -> bool {
        self.items.iter().all(|i| i.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ShapeItem> {
        self.items.iter().filter(|i| !i.holds)
    }

    fn expect_eq(&mut self, item: String, expected: u64, found: u64) {
        self.items.push(ShapeItem {
            item,
            expected: expected.to_string(),
            found: found.to_string(),
            holds: expected == found,
        });
    }

    fn nonzero(&mut self, item: String, found: u64) {
        self.items.push(ShapeItem {
            item,
            expected: "nonzero".into(),
            found: found.to_string(),
            holds: found != 0,
        });
    }
}

/// Extremal diagonal `β_{k-1+2i, k-1+2i+k+i} = C_{i+1}^{k-1}` for `i = 0..=m`,
/// as `(p, s, expected, found)`.
pub fn extremal_diagonal(
    n: usize,
    k: usize,
    table: &BettiTable,
) -> Result<Vec<(usize, usize, u64, u64)>> {
    need_k(k)?;
    if n < k || (n - k) % 2 != 0 {
        return Err(invalid(format!(
            "the extremal diagonal needs n = k + 2m, got n = {n}, k = {k}"
        )));
    }
    let m = (n - k) / 2;
    Ok((0..=m)
        .map(|i| {
            let (p, s) = (k - 1 + 2 * i, k + i);
            (p, s, catalan(i + 1, k - 1), table.get(p, s))
        })
        .collect())
}

/// Checks every structural claim about the Betti table of `in(I_{n,k})`
/// for `n = k + 2m` against `table`.
pub fn betti_shape_check(n: usize, k: usize, table: &BettiTable) -> Result<ShapeReport> {
    let diagonal = extremal_diagonal(n, k, table)?;
    let m = (n - k) / 2;
    let pd = n - 1;
    let reg = k + m;
    let mut r = ShapeReport {
        n,
        k,
        items: Vec::new(),
    };

    let squares = if k == 2 { n as u64 + 1 } else { n as u64 };
    r.expect_eq("β_{0,2}".into(), squares, table.get(0, 2));
    for j in k.max(3)..=k + m {
        r.expect_eq(
            format!("β_{{0,{j}}}"),
            catalan(j - k, k - 1),
            table.get(0, j),
        );
    }
    for i in 1..k.saturating_sub(2) {
        r.expect_eq(
            format!("β_{{{i},{}}}", 2 * (i + 1)),
            choose(n as i64, i as i64 + 1) as u64,
            table.get(i, i + 2),
        );
        for s in 1..k {
            if s != i + 2 {
                r.expect_eq(format!("β_{{{i},{}}}", i + s), 0, table.get(i, s));
            }
        }
    }
    for (p, s, expected, found) in diagonal {
        r.expect_eq(format!("β_{{{p},{}}}", p + s), expected, found);
    }
    for i in 0..=m {
        let c = k - 1 + 2 * i;
        for s in 1..k + i {
            r.expect_eq(format!("β_{{{c},{}}}", c + s), 0, table.get(c, s));
        }
        for s in k + i + 1..=reg {
            r.nonzero(format!("β_{{{c},{}}}", c + s), table.get(c, s));
        }
        for j in c + 1..=pd {
            r.expect_eq(format!("β_{{{j},{}}}", j + k + i), 0, table.get(j, k + i));
        }
        for j in 0..c {
            r.nonzero(format!("β_{{{j},{}}}", j + k + i), table.get(j, k + i));
        }
    }
    Ok(r)
}

/// Numerator `K(t) = (1-t)^n HS(t)` of `R/in(I_{n,k})` from the Hilbert
/// series, and `1 - Σ_j c_j t^j` from the alternating Betti sums; both as
/// coefficient vectors.
pub fn hilbert_numerators(
    n: usize,
    k: usize,
    table: &BettiTable,
) -> Result<(Vec<i128>, Vec<i128>)> {
    let hs = hilbert_series(n, k)?;
    let h: Vec<i128> = hs
        .coefficients
        .iter()
        .map(|c| c.to_i128().expect("small Hilbert coefficient"))
        .collect();
    let mut from_series = vec![0i128; h.len() + n];
    for (d, hd) in h.iter().enumerate() {
        for i in 0..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            from_series[d + i] += sign * choose(n as i64, i as i64) * hd;
        }
    }
    let c = table.alternating_sums();
    let mut from_betti = vec![0i128; from_series.len().max(c.len())];
    from_betti[0] = 1;
    for (j, cj) in c.iter().enumerate() {
        from_betti[j] -= cj;
    }
    from_series.resize(from_betti.len(), 0);
    while from_series.len() > 1 && from_series.last() == Some(&0) && from_betti.last() == Some(&0) {
        from_series.pop();
        from_betti.pop();
    }
    Ok((from_series, from_betti))
}
