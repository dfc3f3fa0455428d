use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::betti::BettiTable;
use crate::groebner::MonomialIdeal;
use crate::poly::Monomial;

/// A node of a Mayer-Vietoris tree. Generators are stored as a common factor
/// times residual monomials.
#[derive(Clone, Debug)]
pub struct MvtNode {
    pub position: BigUint,
    pub dimension: usize,
    pub common: Monomial,
    pub residual: Vec<Monomial>,
    /// Full pivot monomial; `None` for leaves.
    pub pivot: Option<Monomial>,
    /// Every residual generator is squarefree.
    pub is_final: bool,
    /// Left child `(2p, d+1)` and right child `(2p+1, d)`.
    pub children: Option<Box<(MvtNode, MvtNode)>>,
}

impl MvtNode {
    pub fn is_relevant(&self) -> bool {
        self.position.is_one() || (&self.position % 2u32).is_zero()
    }

    pub fn generators(&self) -> Vec<Monomial> {
        self.residual.iter().map(|r| r.mul(&self.common)).collect()
    }

    pub fn left(&self) -> Option<&MvtNode> {
        self.children.as_deref().map(|c| &c.0)
    }

    pub fn right(&self) -> Option<&MvtNode> {
        self.children.as_deref().map(|c| &c.1)
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, f: &mut dyn FnMut(&'a MvtNode)) {
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            f(node);
            if let Some(c) = node.children.as_deref() {
                stack.push(&c.1);
                stack.push(&c.0);
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct MvtTree {
    pub nvars: usize,
    pub root: MvtNode,
}

impl MvtTree {
    pub fn node_count(&self) -> usize {
        let mut count = 0;
        self.root.visit(&mut |_| count += 1);
        count
    }

    pub fn find(&self, position: u64) -> Option<&MvtNode> {
        let target = BigUint::from(position);
        let mut found = None;
        self.root.visit(&mut |n| {
            if found.is_none() && n.position == target {
                found = Some(n);
            }
        });
        found
    }

    /// Positions of the final nodes that are not inside another final
    /// node's subtree, ascending.
    pub fn top_final_positions(&self) -> Vec<BigUint> {
        let mut out = Vec::new();
        let mut stack = vec![&self.root];
        while let Some(node) = stack.pop() {
            if node.is_final {
                out.push(node.position.clone());
                continue;
            }
            if let Some(c) = node.children.as_deref() {
                stack.push(&c.1);
                stack.push(&c.0);
            }
        }
        out.sort();
        out
    }
}

/// The residual generator to split off next.
///
/// While some residual is a pure square `x_i^2` the one with largest `i` is
/// chosen. Otherwise the node lies in a final subtree, whose residual ideal
/// is squarefree stable; the pivot is the last generator in the order
/// "degree ascending, then lexicographically descending", which for a
/// residual of variables is the largest-index variable.
fn choose_pivot(residual: &[Monomial]) -> usize {
    let square = residual
        .iter()
        .enumerate()
        .filter_map(|(j, r)| {
            r.as_pure_power()
                .filter(|&(_, e)| e >= 2)
                .map(|(i, _)| (i, j))
        })
        .max();
    if let Some((_, j)) = square {
        return j;
    }
    residual
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)))
        .map(|(j, _)| j)
        .expect("nonempty residual")
}

fn gcd_all(gens: &[Monomial]) -> Monomial {
    let mut it = gens.iter();
    let first = it.next().expect("nonempty generator list").clone();
    it.fold(first, |acc, g| acc.gcd(g))
}

fn build(nvars: usize, gens: Vec<Monomial>, position: BigUint, dimension: usize) -> MvtNode {
    let common = gcd_all(&gens);
    let residual: Vec<Monomial> = gens
        .iter()
        .map(|g| common.quotient_of(g).expect("gcd divides"))
        .collect();
    let is_final = residual.iter().all(Monomial::is_squarefree);
    if gens.len() < 2 {
        return MvtNode {
            position,
            dimension,
            common,
            residual,
            pivot: None,
            is_final,
            children: None,
        };
    }
    let j = choose_pivot(&residual);
    let pivot = gens[j].clone();
    let others: Vec<Monomial> = gens
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .map(|(_, g)| g.clone())
        .collect();
    let meet = MonomialIdeal::new(nvars, others.iter().map(|g| g.lcm(&pivot)))
        .generators()
        .to_vec();
    let left_pos = &position << 1u32;
    let right_pos = &left_pos + 1u32;
    let (left, right) = if gens.len() >= 8 {
        rayon::join(
            || build(nvars, meet, left_pos, dimension + 1),
            || build(nvars, others, right_pos, dimension),
        )
    } else {
        (
            build(nvars, meet, left_pos, dimension + 1),
            build(nvars, others, right_pos, dimension),
        )
    };
    MvtNode {
        position,
        dimension,
        common,
        residual,
        pivot: Some(pivot),
        is_final,
        children: Some(Box::new((left, right))),
    }
}

/// Mayer-Vietoris tree of a monomial ideal given by its minimal generators.
pub fn build_mvt(ideal: &MonomialIdeal) -> MvtTree {
    let n = ideal.nvars();
    let gens = ideal.generators().to_vec();
    let root = if gens.is_empty() {
        MvtNode {
            position: BigUint::one(),
            dimension: 0,
            common: Monomial::one(n),
            residual: Vec::new(),
            pivot: None,
            is_final: true,
            children: None,
        }
    } else {
        build(n, gens, BigUint::one(), 0)
    };
    MvtTree { nvars: n, root }
}

/// Graded Betti table read from the relevant nodes of a tree, with the
/// minimality certificate.
#[derive(Clone, Debug)]
pub struct MvtBetti {
    pub table: BettiTable,
    /// Multigraded counts `(dimension, multidegree) -> occurrences`.
    pub multigraded: BTreeMap<(usize, Monomial), u64>,
    /// No multidegree occurs in relevant nodes of consecutive dimensions.
    pub minimal_certified: bool,
    /// Multidegrees that break the certificate, with the lower dimension.
    pub repeated: Vec<(usize, Monomial)>,
}

pub fn betti_from_mvt(tree: &MvtTree) -> MvtBetti {
    let mut multigraded: BTreeMap<(usize, Monomial), u64> = BTreeMap::new();
    tree.root.visit(&mut |node| {
        if node.is_relevant() {
            for g in node.generators() {
                *multigraded.entry((node.dimension, g)).or_insert(0) += 1;
            }
        }
    });
    let keys: BTreeSet<&(usize, Monomial)> = multigraded.keys().collect();
    let repeated: Vec<(usize, Monomial)> = keys
        .iter()
        .filter(|(d, m)| keys.contains(&(d + 1, m.clone())))
        .map(|&(d, m)| (*d, m.clone()))
        .collect();
    let mut table = BettiTable::new();
    for ((d, m), c) in &multigraded {
        table.add(*d, m.degree() as usize - d, *c);
    }
    MvtBetti {
        table,
        minimal_certified: repeated.is_empty(),
        multigraded,
        repeated,
    }
}
