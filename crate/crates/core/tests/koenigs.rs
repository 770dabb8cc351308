mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use qnet::construction::*;
use qnet::invariants::*;
use qnet::net::diagonal_intersection_net;
use qnet::projective::scalar::frac;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn random_koenigs_nets_and_their_diagonal_nets(seed in any::<u64>(), n in 3usize..6) {
        let net = random_bs_koenigs(3, 3, n, seed).unwrap();
        prop_assert!(is_bs_koenigs(&net).unwrap());
        let diag = diagonal_intersection_net(&net).unwrap();
        prop_assert!(diag.is_qnet());
        prop_assert!(is_d_koenigs(&diag).unwrap());
        prop_assert!(conic_violations(&diag).unwrap().is_empty());
    }

    #[test]
    fn strip_completion_is_koenigs_for_any_parameters(seed in any::<u64>(), num in -9i64..9, den in 1i64..5) {
        let base = random_qnet(3, 2, 3, seed).unwrap();
        let params: BTreeMap<_, _> = koenigs_free_sites(base.domain())
            .into_iter()
            .enumerate()
            .map(|(k, s)| (s, frac(num + k as i64, den)))
            .collect();
        if let Ok(net) = extend_bs_koenigs(&koenigs_boundary(&base), &Choices::Explicit(params)) {
            prop_assert!(is_bs_koenigs(&net).unwrap());
            for (s, p) in koenigs_boundary(&base).points() {
                prop_assert_eq!(p, net.at(s));
            }
        }
    }

    #[test]
    fn invariant_symmetry_base_case(seed in any::<u64>()) {
        let net = random_bs_koenigs(3, 3, 4, seed).unwrap();
        let check = invariant_symmetry_check(&net, 0).unwrap();
        prop_assert!(check.holds(), "{:?}", check);
        prop_assert!(check.compared > 0);
    }
}

#[test]
fn invariant_symmetry_one_step() {
    for seed in 0..8 {
        let net = random_bs_koenigs(4, 4, 4, seed).unwrap();
        let check = invariant_symmetry_check(&net, 1).unwrap();
        assert!(check.holds() && check.compared > 0, "seed {seed}: {check:?}");
    }
}

#[test]
fn generic_nets_fail_the_koenigs_conditions() {
    let mut symmetric = 0;
    for seed in 0..10 {
        let net = random_qnet(3, 3, 3, seed).unwrap();
        assert!(!is_bs_koenigs(&net).unwrap());
        let diag = diagonal_intersection_net(&net).unwrap();
        assert!(!is_d_koenigs(&diag).is_ok_and(|ok| ok));
        if invariant_symmetry_check(&net, 0).is_ok_and(|c| c.holds()) {
            symmetric += 1;
        }
    }
    assert_eq!(symmetric, 0);
}

#[test]
fn conic_check_agrees_with_the_d_condition() {
    for seed in 0..10 {
        let net = random_qnet(4, 4, 3, seed).unwrap();
        let field = laplace_invariants(&net).unwrap();
        let d_bad = d_koenigs_violations(&field);
        let conic_bad = conic_violations(&net).unwrap();
        assert_eq!(d_bad.is_empty(), conic_bad.is_empty());
        for s in conic_sites(&net) {
            assert_eq!(six_point_conic_check(&net, s).unwrap(), !conic_bad.contains(&s));
        }
    }
}
