#![allow(dead_code)]

use qnet::net::{classify_degeneracy, laplace_iterate, DegeneracyKind, Direction, LaplaceOutcome, QNet};
use qnet::projective::linalg::{self, Row};
use qnet::projective::scalar::int;
use qnet::sample;

/// The `m`-th transform when it exists.
pub fn transform(net: &QNet, m: i64) -> Option<QNet> {
    match laplace_iterate(net, m) {
        Ok(LaplaceOutcome::Net(t)) => Some(t),
        _ => None,
    }
}

pub fn kind(net: &QNet, m: i64) -> Option<DegeneracyKind> {
    transform(net, m).map(|t| classify_degeneracy(&t, Direction::of_step(m)).kind)
}

pub fn is_laplace(net: &QNet, m: i64) -> bool {
    kind(net, m) == Some(DegeneracyKind::Laplace)
}

/// Random invertible integer matrix of size `n+1`.
pub fn random_invertible(n: usize, seed: u64) -> Vec<Row> {
    let mut rng = sample::rng(seed);
    loop {
        let m: Vec<Row> = (0..=n)
            .map(|_| (0..=n).map(|_| int(sample::random_int(&mut rng) % 5)).collect())
            .collect();
        if linalg::rank(&m, n + 1) == n + 1 {
            return m;
        }
    }
}
