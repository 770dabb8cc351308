mod common;

use common::{is_laplace, random_invertible, transform};
use num_traits::One;
use proptest::prelude::*;
use qnet::construction::{random_first_laplace_degenerate, random_goursat, random_qnet};
use qnet::invariants::*;
use qnet::lift::embed_and_lift;
use qnet::net::QNet;
use qnet::projective::{cross_ratio, Extended, HPoint, Scalar, Subspace};
use qnet::sample;

fn all_one(layer: &Layer) -> bool {
    !layer.is_empty() && layer.values().all(One::is_one)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn recurrence_reproduces_the_next_layer(seed in any::<u64>()) {
        let net = random_qnet(4, 4, 3, seed).unwrap();
        prop_assume!(transform(&net, 2).is_some() && transform(&net, -2).is_some());
        let field = laplace_invariants(&net).unwrap();
        let fwd = transform(&net, 1).unwrap();
        let bwd = transform(&net, -1).unwrap();
        let h_next = h_field(&fwd).unwrap();
        let predicted = forward_recurrence(&field).unwrap();
        prop_assert!(!predicted.is_empty());
        for (s, v) in &predicted {
            prop_assert_eq!(Some(v), h_next.get(s));
        }
        let h_prev = h_field(&bwd).unwrap();
        for (s, v) in recurrence_layer(&h_prev, &field.h).unwrap() {
            prop_assert_eq!(Some(&v), h_next.get(&s));
        }
        let k_prev = k_field(&bwd).unwrap();
        let back = backward_recurrence(&field).unwrap();
        prop_assert!(!back.is_empty());
        for (s, v) in &back {
            prop_assert_eq!(Some(v), k_prev.get(s));
        }
    }

    #[test]
    fn shift_identities_hold(seed in any::<u64>()) {
        let net = random_qnet(3, 3, 3, seed).unwrap();
        prop_assume!(transform(&net, 1).is_some_and(|t| t.is_nondegenerate()));
        prop_assume!(transform(&net, -1).is_some_and(|t| t.is_nondegenerate()));
        prop_assert!(hk_shift_check(&net).unwrap());
    }

    #[test]
    fn invariants_are_projective_invariants(seed in any::<u64>()) {
        let net = random_qnet(3, 3, 3, seed).unwrap();
        let moved = apply_projective_map(&net, &random_invertible(3, seed)).unwrap();
        prop_assert_eq!(laplace_invariants(&net).unwrap(), laplace_invariants(&moved).unwrap());
    }

    #[test]
    fn lifts_keep_invariants(seed in any::<u64>()) {
        let net = random_qnet(2, 3, 3, seed).unwrap();
        let lifted = embed_and_lift(&net, seed).unwrap().lifted;
        let (a, b) = (laplace_invariants(&net).unwrap(), laplace_invariants(&lifted).unwrap());
        prop_assert_eq!(a.h, b.h);
        prop_assert_eq!(a.k, b.k);
    }
}

#[test]
fn corrupted_layer_is_reported() {
    let net = random_qnet(3, 3, 3, 4).unwrap();
    let field = laplace_invariants(&net).unwrap();
    let fwd = transform(&net, 1).unwrap();
    let bwd = transform(&net, -1).unwrap();
    let mut k_fwd = k_field(&fwd).unwrap();
    let mut h_bwd = h_field(&bwd).unwrap();
    assert!(hk_shift_mismatch(&field.h, &field.k, &k_fwd, &h_bwd).is_none());
    let site = *k_fwd.keys().next().unwrap();
    k_fwd.insert(site, k_fwd[&site].clone() + Scalar::one());
    let mismatch = hk_shift_mismatch(&field.h, &field.k, &k_fwd, &h_bwd).unwrap();
    assert_eq!(mismatch.site, site);
    k_fwd = k_field(&fwd).unwrap();
    let site = *h_bwd.keys().next().unwrap();
    h_bwd.insert(site, Scalar::from_integer(7.into()));
    assert!(hk_shift_mismatch(&field.h, &field.k, &k_fwd, &h_bwd).is_some());
}

#[test]
fn h_is_one_exactly_for_laplace_degenerate_first_transforms() {
    for seed in 0..15 {
        let positive = random_first_laplace_degenerate(3, 3, 3, seed).unwrap();
        assert!(is_laplace(&positive, 1));
        assert!(all_one(&h_field(&positive).unwrap()));
        let mirrored = positive.transpose();
        assert!(is_laplace(&mirrored, -1));
        assert!(all_one(&k_field(&mirrored).unwrap()));

        let negative = random_qnet(3, 3, 3, seed).unwrap();
        assert!(!is_laplace(&negative, 1));
        assert!(!all_one(&h_field(&negative).unwrap()));
        assert!(!is_laplace(&negative, -1));
        assert!(!all_one(&k_field(&negative).unwrap()));
    }
}

#[test]
fn recurrence_right_hand_side_is_one_for_goursat_first_transforms() {
    for seed in 0..10 {
        let net = random_goursat(3, 4, 1, 3, seed).unwrap();
        let rhs = forward_recurrence(&laplace_invariants(&net).unwrap()).unwrap();
        assert!(all_one(&rhs), "seed {seed}: {rhs:?}");
    }
}

#[test]
fn cross_ratio_survives_projection_to_a_line() {
    for seed in 0..10 {
        let net = random_qnet(2, 1, 3, seed).unwrap();
        let fwd = transform(&net, 1).unwrap();
        let quad = [net.at((1, 0)), fwd.at((1, 0)), net.at((1, 1)), fwd.at((0, 0))];
        let direct = cross_ratio(quad[0], quad[1], quad[2], quad[3]).unwrap();
        let mut rng = sample::rng(seed);
        let line = Subspace::span(quad[..2].iter().copied()).unwrap();
        let (center, screen) = loop {
            let c = Subspace::span([&sample::random_point(&mut rng, 3), &sample::random_point(&mut rng, 3)]).unwrap();
            let s = Subspace::span([&sample::random_point(&mut rng, 3), &sample::random_point(&mut rng, 3)]).unwrap();
            if c.meet(&line).unwrap().is_empty() && qnet::projective::are_supplementary(&c, &s).unwrap() {
                break (c, s);
            }
        };
        let image: Vec<HPoint> = quad
            .iter()
            .map(|p| qnet::projective::central_projection(p, &center, &screen).unwrap())
            .collect();
        assert_eq!(direct, cross_ratio(&image[0], &image[1], &image[2], &image[3]).unwrap());
        assert!(matches!(direct, Extended::Finite(_)));
    }
}

#[test]
fn affine_grid_has_unit_invariants() {
    let net = QNet::from_fn(qnet::net::GridDomain::sigma(3, 3), |(i, j)| HPoint::from_ints(&[i, j, 1])).unwrap();
    let field = laplace_invariants(&net).unwrap();
    assert!(all_one(&field.h) && all_one(&field.k));
    assert!(is_bs_koenigs(&net).unwrap() && is_d_koenigs(&net).unwrap());
    assert!(hk_shift_check(&net).unwrap());
}
