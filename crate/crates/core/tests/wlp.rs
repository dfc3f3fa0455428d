use gbsf::closed_form::closed_form_basis;
use gbsf::lefschetz::witness::{syzygy_witness_even, syzygy_witness_odd, verify_witness};
use gbsf::lefschetz::{
    classify_wlp, generic_rank, kernel_witness, map_rank, quotient_by_power_hilbert,
    switched_algebra, switched_initial_algebra, verify_wlp, GenericLinearForm, QuotientAlgebra,
    RankAlgebra, WlpOptions,
};
use gbsf::poly::{rat, Monomial, Polynomial};
use gbsf::Error;

/// `B = R/(x1^2, ..., xn^2, (x1 + ... + xn)^2)`.
fn b_algebra(n: usize) -> QuotientAlgebra {
    let g = closed_form_basis(n, 2, &gbsf::poly::TermOrder::degrevlex(n)).unwrap();
    QuotientAlgebra::from_basis(&g).unwrap()
}

#[test]
fn odd_witness_lifts_to_kernel_elements() {
    for p in 3..=4 {
        let n = 2 * p + 2;
        let a = switched_algebra(n).unwrap();
        for k in 2..p {
            let w = kernel_witness(n, k, 7, &a).unwrap().expect("witness predicted");
            assert!(w.identity_holds, "n={n} k={k}");
            assert!(w.nonzero_in_quotient, "n={n} k={k}");
            assert!(w.killed_by_power, "n={n} k={k}");
            assert_eq!(w.degree, p - k + 1);
        }
    }
}

#[test]
fn degree_one_maps_are_injective() {
    for p in 1..=3 {
        for n in 2 * p + 2..=9 {
            let b = b_algebra(n);
            let form = GenericLinearForm::seeded(n, 11);
            let (r, _) = map_rank(&b, form.coeffs(), p, 1);
            assert_eq!(r, b.dim(1), "·ℓ^{p}: B_1 -> B_{} for n={n}", p + 1);
        }
    }
}

#[test]
fn degree_two_maps_are_injective() {
    for p in [4usize, 5] {
        let n = 2 * p;
        let b = b_algebra(n);
        let form = GenericLinearForm::seeded(n, 13);
        for q in 3..p {
            let (r, _) = map_rank(&b, form.coeffs(), q - 2, 2);
            assert_eq!(r, b.dim(2), "·ℓ^{}: B_2 -> B_{q} for n={n}", q - 2);
        }
    }
}

#[test]
fn sum_form_attains_generic_rank_on_initial_algebra() {
    for n in 3..=9 {
        let init = switched_initial_algebra(n).unwrap();
        let ones = vec![rat(1); n - 1];
        for k in 1..=4 {
            for from in 0..=init.socle_degree().saturating_sub(k) {
                let (special, _) = map_rank(&init, &ones, k, from);
                let (generic, _) = generic_rank(&init, k, from, 3, 5);
                assert_eq!(special, generic, "n={n} k={k} from={from}");
            }
        }
    }
}

#[test]
fn quotient_by_power_exceeds_thin_series_exactly_when_wlp_fails() {
    for n in 4..=10 {
        let h = switched_algebra(n).unwrap().hilbert_function();
        for k in 2..=5 {
            let found = quotient_by_power_hilbert(n, k, 3).unwrap();
            let thin: Vec<usize> = (0..h.len())
                .map(|d| h[d].saturating_sub(if d >= k { h[d - k] } else { 0 }))
                .collect();
            let exceeds = found.iter().zip(&thin).any(|(f, t)| f > t);
            assert_eq!(exceeds, !classify_wlp(n, k).unwrap(), "n={n} k={k}: {found:?} vs {thin:?}");
        }
    }
}

#[test]
fn witness_identities_hold_and_tampering_is_caught() {
    for n in [5usize, 7, 9] {
        let w = syzygy_witness_odd(&GenericLinearForm::seeded(n, 21)).unwrap();
        assert!(verify_witness(&w), "odd n={n}");
        let mut bad = w.clone();
        let o = bad.g.order().clone();
        let bump = Polynomial::monomial(&o, Monomial::from_var_set(n, &[1, 2]).unwrap());
        bad.g = &bad.g + &bump;
        assert!(!verify_witness(&bad), "tampered odd n={n}");
    }
    for n in [6usize, 8] {
        let w = syzygy_witness_even(&GenericLinearForm::seeded(n, 22)).unwrap();
        assert!(verify_witness(&w), "even n={n}");
    }
}

#[test]
fn degenerate_forms_are_rejected() {
    assert!(matches!(GenericLinearForm::from_integers(&[1, 2, 2]), Err(Error::Degenerate(_))));
    assert!(matches!(GenericLinearForm::from_integers(&[0, 1]), Err(Error::Degenerate(_))));
    assert!(syzygy_witness_odd(&GenericLinearForm::seeded(6, 1)).is_err());
}

#[test]
fn verdicts_are_reproducible_and_algebra_independent() {
    for (n, k) in [(6, 2), (8, 2), (7, 2), (8, 4), (9, 3)] {
        let opts = WlpOptions { seed: 99, ..WlpOptions::default() };
        let a = verify_wlp(n, k, &opts).unwrap();
        let b = verify_wlp(n, k, &opts).unwrap();
        let ranks = |v: &gbsf::lefschetz::WlpVerdict| v.maps.iter().map(|m| m.rank).collect::<Vec<_>>();
        assert_eq!(ranks(&a), ranks(&b));
        let original = verify_wlp(
            n,
            k,
            &WlpOptions { algebra: RankAlgebra::Original, ..opts.clone() },
        )
        .unwrap();
        assert_eq!(original.holds, a.holds, "n={n} k={k}");
        assert!(a.agrees() && original.agrees());
    }
}
