use proptest::prelude::*;

use gbsf::closed_form::{
    admissible_sets, block_ranking, closed_form_basis, g_polynomial, g_via_f_expansion,
    ideal_generators,
};
use gbsf::groebner::{buchberger, buchberger_unreduced, reduce_basis, s_polynomial};
use gbsf::poly::{rat, OrderFamily, Polynomial, TermOrder};

/// Generators printed under a common order so that bases computed under
/// different orders compare as sets.
fn sorted_text(gens: &[Polynomial], common: &TermOrder) -> Vec<String> {
    let mut v: Vec<String> = gens.iter().map(|g| g.with_order(common).to_string()).collect();
    v.sort();
    v
}

fn family() -> impl Strategy<Value = OrderFamily> {
    prop_oneof![Just(OrderFamily::DegRevLex), Just(OrderFamily::Lex)]
}

fn case() -> impl Strategy<Value = (usize, usize, Vec<usize>, OrderFamily)> {
    (2usize..=6).prop_flat_map(|n| {
        (
            Just(n),
            2..=n,
            Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(),
            family(),
        )
    })
}

#[test]
fn closed_form_matches_oracle_identity_ranking() {
    for n in 2..=7 {
        for k in 1..=n {
            for f in [OrderFamily::DegRevLex, OrderFamily::Lex] {
                let o = TermOrder::from_sigma(f, &(1..=n).collect::<Vec<_>>()).unwrap();
                let closed = closed_form_basis(n, k, &o).unwrap();
                let oracle = buchberger(&ideal_generators(n, k, &o).unwrap(), &o).unwrap();
                assert!(closed.same_generators(&oracle), "({n},{k}) {f}");
            }
        }
    }
}

#[test]
fn buchberger_criterion_holds_on_closed_form() {
    for n in 2..=7 {
        for k in 2..=n {
            let o = TermOrder::degrevlex(n);
            let g = closed_form_basis(n, k, &o).unwrap();
            let gens = g.generators();
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    let s = s_polynomial(&gens[i], &gens[j]).unwrap();
                    assert!(s.normal_form(gens).is_zero(), "({n},{k}) pair {i},{j}");
                }
            }
        }
    }
}

#[test]
fn closed_form_is_reduced() {
    for n in 2..=8 {
        for k in 2..=n {
            let o = TermOrder::degrevlex(n);
            let g = closed_form_basis(n, k, &o).unwrap();
            let init = g.initial_ideal();
            for p in g.generators() {
                assert_eq!(p.leading_coeff(), Some(&rat(1)));
                for t in &p.terms()[1..] {
                    assert!(!init.contains(&t.monomial), "({n},{k}) tail {} of {p}", t.monomial);
                }
            }
            assert_eq!(init.len(), g.len(), "leading monomials form an antichain");
        }
    }
}

#[test]
fn f_expansion_reproduces_every_g() {
    for n in 2..=10 {
        for k in 2..=n.min(6) {
            let o = TermOrder::degrevlex(n);
            for sets in admissible_sets(n, k).unwrap().values() {
                for a in sets {
                    assert_eq!(
                        g_via_f_expansion(a, n, k, &o).unwrap(),
                        g_polynomial(a, n, k, &o).unwrap(),
                        "A = {a:?}, n = {n}, k = {k}"
                    );
                }
            }
        }
    }
}

#[test]
fn every_g_lies_in_the_ideal() {
    for n in 2..=7 {
        for k in 2..=n {
            let o = TermOrder::degrevlex(n);
            let oracle = buchberger(&ideal_generators(n, k, &o).unwrap(), &o).unwrap();
            for sets in admissible_sets(n, k).unwrap().values() {
                for a in sets {
                    let g = g_polynomial(a, n, k, &o).unwrap();
                    assert!(oracle.normal_form(&g).is_zero(), "A = {a:?}");
                }
            }
        }
    }
}

#[test]
fn admissible_sets_satisfy_the_degree_bound() {
    for n in 2..=12 {
        for k in 2..=n {
            for (&d, sets) in &admissible_sets(n, k).unwrap() {
                for a in sets {
                    assert_eq!(a.len(), d);
                    assert_eq!(a.iter().max(), Some(&(2 * d - k)), "A = {a:?}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_rankings_match_oracle((n, k, sigma, f) in case()) {
        let o = TermOrder::from_sigma(f, &sigma).unwrap();
        let closed = closed_form_basis(n, k, &o).unwrap();
        let oracle = buchberger(&ideal_generators(n, k, &o).unwrap(), &o).unwrap();
        prop_assert!(closed.same_generators(&oracle));
    }

    #[test]
    fn only_the_block_ranking_matters((n, k, sigma, f) in case(), seed in any::<u64>()) {
        let o = TermOrder::from_sigma(f, &sigma).unwrap();
        let blocks = block_ranking(n, k, &o);
        // reverse inside every block, then rotate by the seed
        let mut other = Vec::new();
        for b in &blocks {
            let mut b = b.clone();
            b.reverse();
            let r = (seed as usize) % b.len().max(1);
            b.rotate_left(r);
            other.extend(b);
        }
        let o2 = TermOrder::from_sigma(f, &other).unwrap();
        let a = closed_form_basis(n, k, &o).unwrap();
        let b = closed_form_basis(n, k, &o2).unwrap();
        let c = TermOrder::degrevlex(n);
        prop_assert_eq!(sorted_text(a.generators(), &c), sorted_text(b.generators(), &c));
        let oracle = buchberger(&ideal_generators(n, k, &o2).unwrap(), &o2).unwrap();
        prop_assert_eq!(sorted_text(a.generators(), &c), sorted_text(oracle.generators(), &c));
    }

    #[test]
    fn reduced_basis_is_unique((n, k, sigma, f) in case(), scale in 1i64..5) {
        let o = TermOrder::from_sigma(f, &sigma).unwrap();
        let gens = ideal_generators(n, k, &o).unwrap();
        let mut noisy: Vec<Polynomial> = gens.iter().rev().map(|g| g.scale(&rat(scale))).collect();
        noisy.push(&gens[0] + &gens[gens.len() - 1]);
        let a = reduce_basis(&buchberger_unreduced(&noisy, &o).unwrap());
        let b = buchberger(&gens, &o).unwrap();
        prop_assert!(a.same_generators(&b));
    }
}
