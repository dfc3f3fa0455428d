use num_bigint::BigUint;
use proptest::prelude::*;

use gbsf::closed_form::{closed_form_basis, ideal_generators};
use gbsf::groebner::buchberger;
use gbsf::lattice::{
    catalan_convolution, catalan_numbers, count_generators_by_degree, count_standard_monomials,
    hilbert_series, LatticePath, Step,
};
use gbsf::poly::{Monomial, TermOrder};

fn binom(n: u64, k: i64) -> u64 {
    if k < 0 || k as u64 > n {
        return 0;
    }
    (0..k as u64).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Height `#N - #E` reaches `k` somewhere along the path.
fn reaches(path: &LatticePath, k: i64) -> bool {
    let mut h = 0;
    path.steps().iter().any(|s| {
        h += if *s == Step::N { 1 } else { -1 };
        h == k
    })
}

#[test]
fn squarefree_membership_is_touching() {
    for n in 2..=10 {
        for k in 2..=n {
            let o = TermOrder::degrevlex(n);
            let init = buchberger(&ideal_generators(n, k, &o).unwrap(), &o)
                .unwrap()
                .initial_ideal();
            for path in LatticePath::all(n) {
                let m = path.tau();
                assert_eq!(init.contains(&m), reaches(&path, k as i64), "n={n} k={k} {m}");
                assert_eq!(path.touches(k), reaches(&path, k as i64));
            }
        }
    }
}

#[test]
fn ballot_identity() {
    for n in 1..=14u64 {
        for k in 1..=n as i64 {
            for d in 0..=n as i64 {
                if 2 * d - k >= n as i64 {
                    continue;
                }
                let count = LatticePath::all(n as usize)
                    .filter(|p| p.north_count() as i64 == d && reaches(p, k))
                    .count() as u64;
                assert_eq!(count, binom(n, d - k), "n={n} k={k} d={d}");
            }
        }
    }
}

#[test]
fn hilbert_series_matches_standard_monomial_counts() {
    for n in 1..=16 {
        for k in 1..=n + 1 {
            let h = hilbert_series(n, k).unwrap();
            for d in 0..=n + 1 {
                assert_eq!(h.get(d), count_standard_monomials(n, k, d), "n={n} k={k} d={d}");
            }
        }
    }
}

#[test]
fn generator_counts_add_up_to_basis_size() {
    for n in 2..=12 {
        for k in 2..=n {
            let total: BigUint = count_generators_by_degree(n, k).unwrap().values().sum();
            let basis = closed_form_basis(n, k, &TermOrder::degrevlex(n)).unwrap();
            assert_eq!(total + BigUint::from(n), BigUint::from(basis.len()), "n={n} k={k}");
        }
    }
}

#[test]
fn catalan_convolution_identities() {
    let c = catalan_numbers(20);
    for r in 0..=19 {
        assert_eq!(catalan_convolution(r, 0), c[r]);
        assert_eq!(catalan_convolution(r, 1), c[r + 1]);
    }
    // coefficients of the (f+1)-st power of Σ C_i t^i by direct multiplication
    for f in 0..5 {
        let mut power = vec![BigUint::from(1u32)];
        for _ in 0..=f {
            let mut next = vec![BigUint::from(0u32); 13];
            for (i, a) in power.iter().enumerate() {
                for (j, b) in c.iter().enumerate() {
                    if i + j < next.len() {
                        next[i + j] += a * b;
                    }
                }
            }
            power = next;
        }
        for (r, want) in power.iter().enumerate() {
            assert_eq!(&catalan_convolution(r, f), want, "r={r} f={f}");
        }
    }
    assert_eq!(catalan_numbers(6), [1u32, 1, 2, 5, 14, 42, 132].map(BigUint::from));
}

#[test]
fn reference_path() {
    let m = Monomial::from_var_set(5, &[1, 3, 4]).unwrap();
    let p = LatticePath::tau_inverse(&m).unwrap();
    assert_eq!(p.to_string(), "NENNE");
    assert_eq!(p.first_touch(2), Some(4));
    assert_eq!(p.position(5), (2, 3));
}

proptest! {
    #[test]
    fn tau_round_trip(n in 1usize..20, bits in any::<u64>()) {
        let p = LatticePath::new(n, bits & ((1 << n) - 1)).unwrap();
        prop_assert_eq!(LatticePath::tau_inverse(&p.tau()).unwrap(), p);
        prop_assert_eq!(LatticePath::from_steps(&p.steps()).unwrap(), p);
        prop_assert_eq!(p.position(0), (0, 0));
        for j in 1..=n {
            let (e, north) = p.position(j);
            prop_assert_eq!(e + north, j);
            let counted = p.steps()[..j].iter().filter(|s| **s == Step::N).count();
            prop_assert_eq!(north, counted);
        }
    }
}
