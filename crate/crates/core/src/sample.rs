//! Seeded sampling of rational points and subspaces.

use num_traits::Zero;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::projective::linalg::Row;
use crate::projective::scalar::{frac, int};
use crate::projective::{HPoint, Scalar, Subspace};

pub type Rng = ChaCha8Rng;

/// Coordinates are drawn from `[-COORD_BOUND, COORD_BOUND]`.
pub const COORD_BOUND: i64 = 20;

/// Rejection budget for every free choice.
pub const RETRIES: usize = 64;

pub fn rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_int(rng: &mut Rng) -> i64 {
    rng.gen_range(-COORD_BOUND..=COORD_BOUND)
}

/// A nonzero rational `p/q` with `|p| <= COORD_BOUND`, `1 <= q <= 7`.
pub fn random_scalar(rng: &mut Rng) -> Scalar {
    loop {
        let p = random_int(rng);
        if p != 0 {
            return frac(p, rng.gen_range(1..=7));
        }
    }
}

pub fn random_vector(rng: &mut Rng, len: usize) -> Row {
    loop {
        let v: Row = (0..len).map(|_| int(random_int(rng))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

pub fn random_point(rng: &mut Rng, ambient_dim: usize) -> HPoint {
    HPoint::new(random_vector(rng, ambient_dim + 1)).expect("nonzero vector")
}

/// Random vector of the linear span behind `space` (possibly zero when the
/// draw cancels; callers reject that).
pub fn random_vector_in(rng: &mut Rng, space: &Subspace) -> Row {
    let mut v = vec![Scalar::zero(); space.ambient_dim() + 1];
    for row in space.basis() {
        let c = int(random_int(rng));
        for (x, r) in v.iter_mut().zip(row) {
            *x += &c * r;
        }
    }
    v
}

pub fn random_point_in(rng: &mut Rng, space: &Subspace) -> Result<HPoint> {
    if space.is_empty() {
        return Err(Error::InvalidArgument("random point of the empty subspace".into()));
    }
    retry(rng, "random point in a subspace", |rng| {
        HPoint::new(random_vector_in(rng, space)).ok()
    })
}

/// Run `attempt` until it yields a value, at most [`RETRIES`] times.
pub fn retry<T>(
    rng: &mut Rng,
    context: &str,
    mut attempt: impl FnMut(&mut Rng) -> Option<T>,
) -> Result<T> {
    for _ in 0..RETRIES {
        if let Some(v) = attempt(rng) {
            return Ok(v);
        }
    }
    Err(Error::GeneralPosition {
        attempts: RETRIES,
        context: context.to_string(),
    })
}

/// A subspace of rank `rank` meeting `avoid` trivially and joining it to
/// the whole space; `avoid.rank() + rank` must be `n + 1`.
pub fn random_supplement(rng: &mut Rng, avoid: &Subspace) -> Result<Subspace> {
    let n = avoid.ambient_dim();
    let rank = n + 1 - avoid.rank();
    if rank == 0 {
        return Ok(Subspace::empty(n));
    }
    retry(rng, "supplementary center", |rng| {
        let vectors = (0..rank).map(|_| random_vector(rng, n + 1)).collect();
        let c = Subspace::from_vectors(n, vectors).ok()?;
        (c.rank() == rank && c.join(avoid).ok()?.is_full()).then_some(c)
    })
}
