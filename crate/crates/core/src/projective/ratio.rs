//! Cross-ratios and multi-ratios of collinear points.

use num_traits::Zero;

use super::linalg::det2;
use super::point::HPoint;
use super::scalar::{Extended, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Two-coordinate chart of the line through `points`: each point is
/// replaced by its entries at the two pivot columns of the line's canonical
/// basis. All points equal is reported as a degenerate line with a single
/// pivot, which the callers turn into a 0/0 error.
fn line_chart(points: &[&HPoint]) -> Result<Vec<(Scalar, Scalar)>> {
    let n = points[0].ambient_dim();
    if points.iter().any(|p| p.ambient_dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: points.iter().map(|p| p.ambient_dim()).find(|&d| d != n).unwrap_or(n),
        });
    }
    let line = Subspace::span(points.iter().copied())?;
    match line.rank() {
        1 => Err(Error::UndefinedRatio),
        2 => {
            let pivots = line.pivots();
            Ok(points
                .iter()
                .map(|p| (p.coords()[pivots[0]].clone(), p.coords()[pivots[1]].clone()))
                .collect())
        }
        _ => Err(Error::NotCollinear),
    }
}

fn d(a: &(Scalar, Scalar), b: &(Scalar, Scalar)) -> Scalar {
    det2((&a.0, &a.1), (&b.0, &b.1))
}

fn ratio(num: Scalar, den: Scalar) -> Result<Extended> {
    match (num.is_zero(), den.is_zero()) {
        (true, true) => Err(Error::UndefinedRatio),
        (false, true) => Ok(Extended::Infinity),
        _ => Ok(Extended::Finite(num / den)),
    }
}

/// `cr(p1,p2,p3,p4) = det(p1,p2) det(p3,p4) / (det(p2,p3) det(p4,p1))`.
pub fn cross_ratio(p1: &HPoint, p2: &HPoint, p3: &HPoint, p4: &HPoint) -> Result<Extended> {
    let c = line_chart(&[p1, p2, p3, p4])?;
    let num = d(&c[0], &c[1]) * d(&c[2], &c[3]);
    let den = d(&c[1], &c[2]) * d(&c[3], &c[0]);
    ratio(num, den)
}

/// `mr(A1..A6) = det(A1,A2)/det(A2,A3) · det(A3,A4)/det(A4,A5) · det(A5,A6)/det(A6,A1)`.
pub fn multi_ratio(points: [&HPoint; 6]) -> Result<Extended> {
    let c = line_chart(&points)?;
    let num = d(&c[0], &c[1]) * d(&c[2], &c[3]) * d(&c[4], &c[5]);
    let den = d(&c[1], &c[2]) * d(&c[3], &c[4]) * d(&c[5], &c[0]);
    ratio(num, den)
}
