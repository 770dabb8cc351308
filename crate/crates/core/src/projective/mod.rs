//! Exact projective linear algebra over the rationals.

pub mod linalg;
mod point;
mod quadric;
mod ratio;
pub mod scalar;
mod subspace;

pub use point::HPoint;
pub use quadric::Quadric;
pub use ratio::{cross_ratio, multi_ratio};
pub use scalar::{Extended, Scalar};
pub use subspace::{join, join_points, meet, meet_all, Subspace};

use crate::error::{Error, Result};

pub fn are_supplementary(a: &Subspace, b: &Subspace) -> Result<bool> {
    Ok(a.meet(b)?.is_empty() && a.join(b)?.is_full())
}

/// Central projection `P ↦ (P ∨ C) ∩ E` with center `C` onto screen `E`.
pub fn central_projection(p: &HPoint, center: &Subspace, screen: &Subspace) -> Result<HPoint> {
    if !are_supplementary(center, screen)? {
        return Err(Error::NotSupplementary);
    }
    project_unchecked(p, center, screen)
}

/// [`central_projection`] without re-verifying that center and screen are
/// supplementary; for hot loops where the caller has already checked.
pub(crate) fn project_unchecked(p: &HPoint, center: &Subspace, screen: &Subspace) -> Result<HPoint> {
    if center.contains_point(p) {
        return Err(Error::ProjectionUndefined);
    }
    if center.is_empty() {
        return Ok(p.clone());
    }
    center
        .join_point(p)?
        .meet(screen)?
        .expect_point(|| "central projection".into())
}
