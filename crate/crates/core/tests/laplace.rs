mod common;

use common::{random_invertible, transform};
use proptest::prelude::*;
use qnet::construction::{random_goursat, random_qnet};
use qnet::invariants::apply_projective_map;
use qnet::lift::embed_and_lift;
use qnet::net::*;
use qnet::projective::{HPoint, Subspace};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn transforms_are_mutually_inverse(seed in any::<u64>(), a in 1usize..4, b in 1usize..4, n in 2usize..5) {
        let net = random_qnet(a, b, n, seed).unwrap();
        let fwd = laplace_forward(&net).unwrap();
        let bwd = laplace_backward(&net).unwrap();
        prop_assert!(fwd.is_qnet() && bwd.is_qnet());
        if a >= 2 && b >= 2 && fwd.is_nondegenerate() {
            let back = laplace_backward(&fwd).unwrap();
            for (s, p) in back.sites() {
                prop_assert_eq!(p, net.at((s.0 + 1, s.1 + 1)));
            }
        }
        if a >= 2 && b >= 2 && bwd.is_nondegenerate() {
            let back = laplace_forward(&bwd).unwrap();
            for (s, p) in back.sites() {
                prop_assert_eq!(p, net.at((s.0 + 1, s.1 + 1)));
            }
        }
    }

    #[test]
    fn transpose_swaps_directions(seed in any::<u64>()) {
        let net = random_qnet(3, 2, 3, seed).unwrap();
        prop_assert_eq!(laplace_backward(&net.transpose()).unwrap(), laplace_forward(&net).unwrap().transpose());
    }

    #[test]
    fn transforms_commute_with_projective_maps(seed in any::<u64>()) {
        let net = random_qnet(2, 3, 3, seed).unwrap();
        let map = random_invertible(3, seed ^ 1);
        let moved = apply_projective_map(&net, &map).unwrap();
        prop_assert_eq!(
            laplace_forward(&moved).unwrap(),
            apply_projective_map(&laplace_forward(&net).unwrap(), &map).unwrap()
        );
        prop_assert_eq!(
            diagonal_intersection_net(&moved).unwrap(),
            apply_projective_map(&diagonal_intersection_net(&net).unwrap(), &map).unwrap()
        );
    }
}

#[test]
fn explicit_formula_matches_iteration_on_lifts() {
    for m in 1..=3usize {
        for seed in 0..4 {
            let net = random_qnet(m, m, 3, seed).unwrap();
            let lifted = embed_and_lift(&net, seed).unwrap().lifted;
            assert!(lifted.is_extensive());
            let Some(pm) = transform(&lifted, m as i64) else { continue };
            match explicit_laplace(&lifted, m).unwrap() {
                ExplicitLaplace::Point(p) => assert_eq!(&p, pm.at((0, 0)), "m = {m}, seed {seed}"),
                ExplicitLaplace::Degenerate(s) => panic!("degenerate meet {s:?}"),
            }
        }
    }
}

#[test]
fn explicit_formula_on_shifted_windows() {
    let net = embed_and_lift(&random_qnet(4, 4, 3, 2).unwrap(), 2).unwrap().lifted;
    let p2 = transform(&net, 2).unwrap();
    for (site, p) in p2.sites() {
        match explicit_laplace_at(&net, 2, site).unwrap() {
            ExplicitLaplace::Point(q) => assert_eq!(&q, p),
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn concurrent_columns_give_a_fixed_explicit_point() {
    let apex = HPoint::from_ints(&[1, 2, 3, 4, 1]).unwrap();
    let net = random_qnet(2, 3, 4, 11).unwrap();
    let through_apex = QNet::from_fn(net.domain(), |(i, j)| {
        if j == 0 {
            Ok(net.at((i, 0)).clone())
        } else {
            let line = Subspace::span([net.at((i, 0)), &apex]).unwrap();
            Ok(HPoint::new(line.basis()[0].iter().zip(apex.coords()).map(|(x, y)| x + y * qnet::projective::scalar::int(j)).collect()).unwrap())
        }
    })
    .unwrap();
    for j in 0..=1 {
        match explicit_laplace_at(&through_apex, 1, (0, j)).unwrap() {
            ExplicitLaplace::Point(p) => assert_eq!(p, apex),
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn goursat_characterization() {
    for m in 1..=2usize {
        for seed in 0..10 {
            let net = random_goursat(m + 2, m + 2, m, m + 2, seed).unwrap();
            assert!(net.is_extensive_sub(m, m));
            let pm = transform(&net, m as i64).unwrap();
            let report = classify_degeneracy(&pm, Direction::Forward);
            assert_eq!(report.kind, DegeneracyKind::Goursat);
            for i in 0..=net.domain().i_max {
                assert_eq!(net.parameter_space(Axis::Column, i).unwrap().projective_dim(), m as isize);
            }
        }
    }
    for seed in 0..10 {
        let net = random_qnet(3, 3, 4, seed).unwrap();
        let p1 = laplace_forward(&net).unwrap();
        assert_eq!(classify_degeneracy(&p1, Direction::Forward).kind, DegeneracyKind::None);
        assert!(net.parameter_space(Axis::Column, 0).unwrap().projective_dim() > 1);
    }
}

#[test]
fn forward_transforms_are_qnets_in_three_and_four_space() {
    for n in 3..=4 {
        for seed in 0..60 {
            let net = random_qnet(3, 3, n, seed).unwrap();
            assert!(laplace_forward(&net).unwrap().is_qnet());
            assert!(laplace_backward(&net).unwrap().is_qnet());
        }
    }
}
