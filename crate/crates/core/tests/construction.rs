mod common;

use common::{is_laplace, kind, transform};
use qnet::construction::*;
use qnet::invariants::is_bs_koenigs;
use qnet::net::{diagonal_intersection_net, DegeneracyKind, QNet};

fn forward_degenerate(m: usize, seed: u64) -> QNet {
    let (a, b) = (m + 1, m + 2);
    let boundary = random_laplace_boundary(a, b, 3, m, seed).unwrap();
    if m == 1 {
        extend_laplace_degenerate_first(&boundary, &Choices::Seeded(seed)).unwrap()
    } else {
        extend_laplace_degenerate(&boundary, m).unwrap()
    }
}

/// `D_{-m}` agrees with `P_{-m-1}` wherever both are defined.
fn diagonal_identity(net: &QNet, m: usize) -> Option<bool> {
    let back = transform(net, -(m as i64) - 1)?;
    let diag = transform(&diagonal_intersection_net(net).ok()?, -(m as i64))?;
    let same = diag.sites().all(|(s, p)| back.get(s).is_none_or(|q| q == p));
    Some(same)
}

#[test]
fn forward_termination_forces_backward_termination() {
    for m in 1..=3 {
        let mut checked = 0;
        for seed in 0..6 {
            let net = forward_degenerate(m, seed);
            assert!(is_bs_koenigs(&net).unwrap());
            assert!(is_laplace(&net, m as i64), "m {m} seed {seed}");
            if let Some(k) = kind(&net, -(m as i64) - 1) {
                assert_eq!(k, DegeneracyKind::Laplace, "m {m} seed {seed}");
                checked += 1;
            }
        }
        assert!(checked >= 4, "m {m}: only {checked} instances had the backward transform");
    }
}

#[test]
fn goursat_termination_forces_backward_termination() {
    for m in 1..=2 {
        let mut checked = 0;
        for seed in 0..6 {
            let net = goursat_koenigs(m + 2, m + 3, m, seed).unwrap();
            assert_eq!(kind(&net, m as i64), Some(DegeneracyKind::Goursat));
            if let Some(k) = kind(&net, -(m as i64) - 2) {
                assert_eq!(k, DegeneracyKind::Laplace, "m {m} seed {seed}");
                checked += 1;
            }
        }
        assert!(checked >= 3, "m {m}: only {checked} instances had the backward transform");
    }
}

#[test]
fn diagonal_net_couples_with_the_backward_sequence() {
    let mut identities = 0;
    for m in 1..=2 {
        for seed in 0..4 {
            let net = forward_degenerate(m, seed);
            let diag = diagonal_intersection_net(&net).unwrap();
            if let Some(k) = kind(&diag, -(m as i64)) {
                assert_eq!(k, DegeneracyKind::Laplace, "m {m} seed {seed}");
            }
            let identity = diagonal_identity(&net, m);
            assert_ne!(identity, Some(false), "m {m} seed {seed}");
            identities += identity.is_some() as usize;
        }
    }
    assert!(identities >= 6);
    for seed in 0..4 {
        let net = random_bs_koenigs(3, 4, 3, seed).unwrap();
        let diag = diagonal_intersection_net(&net).unwrap();
        assert!(!is_laplace(&net, 2));
        assert!(!is_laplace(&diag, -2), "seed {seed}");
    }
}

#[test]
fn double_termination() {
    for m in 2..=3 {
        for seed in 0..3 {
            let boundary = random_double_boundary(m + 1, m + 1, 3, m, seed).unwrap();
            let net = construct_double_degenerate(&boundary, m).unwrap();
            assert!(is_bs_koenigs(&net).unwrap());
            assert!(is_laplace(&net, m as i64) && is_laplace(&net, -(m as i64)), "m {m} seed {seed}");
            assert_eq!(construct_double_degenerate(&boundary, m).unwrap(), net);
        }
    }
    for seed in 0..3 {
        let net = random_double_degenerate_first(3, 3, 3, seed).unwrap();
        assert!(is_bs_koenigs(&net).unwrap());
        assert!(is_laplace(&net, 1) && is_laplace(&net, -1));
    }
}

#[test]
fn backward_coincidence_propagates_across_columns() {
    let m = 2;
    for seed in 0..3 {
        let boundary = random_double_boundary(4, 4, 3, m, seed).unwrap();
        let net = construct_double_degenerate(&boundary, m).unwrap();
        let back = transform(&net, -(m as i64)).unwrap();
        let d = back.domain();
        let column_constant = |i| (d.j_min..d.j_max).all(|j| back.at((i, j)) == back.at((i, j + 1)));
        assert!(column_constant(d.i_min));
        assert!((d.i_min..=d.i_max).all(column_constant), "seed {seed}");
    }
}

#[test]
fn one_sided_termination_is_generically_one_sided() {
    let mut two_sided = 0;
    for seed in 0..6 {
        let net = forward_degenerate(2, seed);
        if is_laplace(&net, -2) {
            two_sided += 1;
        }
    }
    assert!(two_sided <= 1);
}
