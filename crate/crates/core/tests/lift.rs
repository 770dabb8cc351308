mod common;

use proptest::prelude::*;
use qnet::construction::{random_bs_koenigs, random_goursat, random_qnet};
use qnet::invariants::laplace_invariants;
use qnet::lift::*;
use qnet::net::{classify_degeneracy, diagonal_intersection_net, laplace_forward, DegeneracyKind, Direction, QNet};
use qnet::projective::Subspace;
use qnet::sample;

fn koenigs_lift(a: usize, b: usize, seed: u64) -> QNet {
    let net = random_bs_koenigs(a, b, (a + b).min(3), seed).unwrap();
    embed_and_lift(&net, seed).unwrap().lifted
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn lift_round_trip_and_invariants(seed in any::<u64>(), n in 2usize..5) {
        let net = random_qnet(3, 3, n, seed).unwrap();
        let lift = embed_and_lift(&net, seed).unwrap();
        prop_assert_eq!(lift.lifted.ambient_dim(), n.max(6));
        prop_assert!(lift.lifted.is_extensive());
        prop_assert!(lift.lifted.is_nondegenerate());
        prop_assert_eq!(&lift.project_net(&lift.lifted).unwrap(), &net);
        prop_assert_eq!(laplace_invariants(&lift.lifted).unwrap(), laplace_invariants(&net).unwrap());
    }

    #[test]
    fn koenigs_lifts_alternate_between_two_hyperplanes(seed in any::<u64>()) {
        let lifted = koenigs_lift(3, 3, seed);
        let pair = koenigs_hyperplanes(&lifted).unwrap();
        prop_assert!(parity_containment(&lifted, &pair));
        prop_assert_eq!(pair.u1.projective_dim(), 5);
        let sing = pair.singular_locus();
        for (_, p) in diagonal_intersection_net(&lifted).unwrap().sites() {
            prop_assert!(sing.contains_point(p));
        }
    }
}

#[test]
fn lifting_an_extensive_net_changes_nothing() {
    let lifted = koenigs_lift(2, 2, 4);
    let again = embed_and_lift(&lifted, 9).unwrap();
    assert_eq!(again.lifted, lifted);
    assert!(again.center.is_empty());
}

#[test]
fn generic_lifts_are_not_split_by_hyperplanes() {
    for seed in 0..10 {
        let net = random_qnet(3, 3, 3, seed).unwrap();
        let lifted = embed_and_lift(&net, seed).unwrap().lifted;
        assert!(koenigs_hyperplanes(&lifted).is_err(), "seed {seed}");
    }
}

#[test]
fn goursat_lifts_become_laplace_one_step_later() {
    for seed in 0..10 {
        let net = random_goursat(4, 4, 1, 3, seed).unwrap();
        let lifted = embed_and_lift(&net, seed).unwrap().lifted;
        let first = laplace_forward(&lifted).unwrap();
        assert!(first.is_nondegenerate(), "seed {seed}");
        let second = laplace_forward(&first).unwrap();
        assert_eq!(classify_degeneracy(&second, Direction::Forward).kind, DegeneracyKind::Laplace);
        let d = second.domain();
        for j in d.j_min..d.j_max {
            assert_ne!(second.at((d.i_min, j)), second.at((d.i_min, j + 1)), "seed {seed}");
        }
    }
}

#[test]
fn quadric_conjugacy_on_koenigs_windows() {
    for m in 1..=2 {
        for seed in 0..10 {
            let lifted = koenigs_lift(m, m, seed);
            let pair = koenigs_hyperplanes(&lifted).unwrap();
            let verdict = quadric_conjugacy_check(&lifted, &pair.quadric).unwrap();
            assert!(verdict.corner_on_quadric && verdict.agrees(), "m {m} seed {seed}");
        }
    }
}

#[test]
fn moving_the_corner_off_the_quadric_breaks_conjugacy() {
    let mut rng = sample::rng(3);
    for seed in 0..10 {
        let mut lifted = koenigs_lift(2, 2, seed);
        let pair = koenigs_hyperplanes(&lifted).unwrap();
        let plane = Subspace::span([lifted.at((1, 1)), lifted.at((2, 1)), lifted.at((1, 2))]).unwrap();
        loop {
            let p = sample::random_point_in(&mut rng, &plane).unwrap();
            if !pair.quadric.contains(&p).unwrap() {
                lifted.set((2, 2), p).unwrap();
                break;
            }
        }
        if !lifted.is_nondegenerate() {
            continue;
        }
        let verdict = quadric_conjugacy_check(&lifted, &pair.quadric).unwrap();
        assert!(!verdict.corner_on_quadric && verdict.agrees(), "seed {seed}: {verdict:?}");
    }
}

#[test]
fn singular_point_equivalence() {
    for m in 1..=2 {
        let mut decided = 0;
        for seed in 0..10 {
            let lifted = koenigs_lift(m, m + 1, seed);
            let pair = koenigs_hyperplanes(&lifted).unwrap();
            let report = singular_point_checks(&lifted, &pair).unwrap();
            assert_ne!(report.equivalence_holds(), Some(false), "m {m} seed {seed}: {report:?}");
            decided += report.equivalence_holds().is_some() as usize;
        }
        assert!(decided > 0);
    }
}
