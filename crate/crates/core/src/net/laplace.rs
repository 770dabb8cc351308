use super::degeneracy::{classify_degeneracy, DegeneracyReport};
use super::domain::Site;
use super::qnet::QNet;
use crate::error::{Error, Result};
use crate::projective::{HPoint, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn of_step(m: i64) -> Direction {
        if m >= 0 {
            Direction::Forward
        } else {
            Direction::Backward
        }
    }
}

fn line(a: &HPoint, b: &HPoint) -> Result<Subspace> {
    Subspace::span([a, b])
}

fn meet_point(l1: Subspace, l2: Subspace, what: &str, site: Site) -> Result<HPoint> {
    l1.meet(&l2)?
        .expect_point(|| format!("{what} at face {site:?}"))
}

fn transform(net: &QNet, what: &str, f: impl Fn(&QNet, Site) -> Result<HPoint>) -> Result<QNet> {
    net.require_nondegenerate()?;
    let domain = net
        .domain()
        .shrink(1)
        .filter(|_| net.domain().a() >= 1 && net.domain().b() >= 1)
        .ok_or_else(|| Error::WindowTooSmall(format!("{what} needs a >= 1 and b >= 1")))?;
    QNet::from_fn(domain, |s| f(net, s))
}

/// `L+P(i,j) = (P(i,j) ∨ P(i,j+1)) ∩ (P(i+1,j) ∨ P(i+1,j+1))`.
pub fn laplace_forward(net: &QNet) -> Result<QNet> {
    transform(net, "forward Laplace transform", |p, (i, j)| {
        meet_point(
            line(p.at((i, j)), p.at((i, j + 1)))?,
            line(p.at((i + 1, j)), p.at((i + 1, j + 1)))?,
            "forward Laplace transform",
            (i, j),
        )
    })
}

/// `L-P(i,j) = (P(i,j) ∨ P(i+1,j)) ∩ (P(i,j+1) ∨ P(i+1,j+1))`.
pub fn laplace_backward(net: &QNet) -> Result<QNet> {
    transform(net, "backward Laplace transform", |p, (i, j)| {
        meet_point(
            line(p.at((i, j)), p.at((i + 1, j)))?,
            line(p.at((i, j + 1)), p.at((i + 1, j + 1)))?,
            "backward Laplace transform",
            (i, j),
        )
    })
}

/// Diagonal meets `(P(i,j) ∨ P(i+1,j+1)) ∩ (P(i+1,j) ∨ P(i,j+1))`.
pub fn diagonal_intersection_net(net: &QNet) -> Result<QNet> {
    transform(net, "diagonal intersection net", |p, (i, j)| {
        meet_point(
            line(p.at((i, j)), p.at((i + 1, j + 1)))?,
            line(p.at((i + 1, j)), p.at((i, j + 1)))?,
            "diagonal intersection",
            (i, j),
        )
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaplaceOutcome {
    Net(QNet),
    /// `P_at` exists but is degenerate, so `P_{at±1}` is undefined.
    Terminated { at: i64, report: DegeneracyReport },
}

impl LaplaceOutcome {
    pub fn net(self) -> Option<QNet> {
        match self {
            LaplaceOutcome::Net(n) => Some(n),
            LaplaceOutcome::Terminated { .. } => None,
        }
    }

    /// The net, or [`Error::Terminated`].
    pub fn into_result(self) -> Result<QNet> {
        match self {
            LaplaceOutcome::Net(n) => Ok(n),
            LaplaceOutcome::Terminated { at, report } => Err(Error::Terminated { step: at, report }),
        }
    }
}

/// `P_m` for signed `m`: forward transforms for `m > 0`, backward for `m < 0`.
pub fn laplace_iterate(net: &QNet, m: i64) -> Result<LaplaceOutcome> {
    let steps = m.unsigned_abs() as usize;
    let d = net.domain();
    if steps > d.a().min(d.b()) {
        return Err(Error::WindowTooSmall(format!(
            "{steps} Laplace steps on a {}x{} window",
            d.a(),
            d.b()
        )));
    }
    let direction = Direction::of_step(m);
    let sign = if m >= 0 { 1 } else { -1 };
    let mut current = net.clone();
    for k in 0..steps {
        if k > 0 && !current.is_nondegenerate() {
            let report = classify_degeneracy(&current, direction);
            return Ok(LaplaceOutcome::Terminated {
                at: sign * k as i64,
                report,
            });
        }
        current = match direction {
            Direction::Forward => laplace_forward(&current)?,
            Direction::Backward => laplace_backward(&current)?,
        };
    }
    Ok(LaplaceOutcome::Net(current))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExplicitLaplace {
    Point(HPoint),
    /// The column joins meet in more than a point (or in nothing).
    Degenerate(Subspace),
}

/// Meet over `k` of the column joins `⋁_l P(i+k, j+l)`, `0 <= k,l <= m`.
pub fn explicit_laplace_at(net: &QNet, m: usize, (i, j): Site) -> Result<ExplicitLaplace> {
    let m = m as i64;
    for corner in [(i, j), (i + m, j + m)] {
        net.try_at(corner)?;
    }
    let mut acc = Subspace::full(net.ambient_dim());
    for k in 0..=m {
        let column = Subspace::span((0..=m).map(|l| net.at((i + k, j + l))))?;
        acc = acc.meet(&column)?;
    }
    Ok(match acc.as_point() {
        Some(p) => ExplicitLaplace::Point(p),
        None => ExplicitLaplace::Degenerate(acc),
    })
}

/// [`explicit_laplace_at`] at the lower corner of the window.
pub fn explicit_laplace(net: &QNet, m: usize) -> Result<ExplicitLaplace> {
    let d = net.domain();
    explicit_laplace_at(net, m, (d.i_min, d.j_min))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::{DegeneracyKind, GridDomain};

    fn pt(c: &[i64]) -> HPoint {
        HPoint::from_ints(c).unwrap()
    }

    fn affine(a: usize, b: usize) -> QNet {
        QNet::from_fn(GridDomain::sigma(a, b), |(i, j)| HPoint::from_ints(&[i, j, 1])).unwrap()
    }

    #[test]
    fn unit_square_transforms() {
        let sq = affine(1, 1);
        assert_eq!(laplace_forward(&sq).unwrap().at((0, 0)), &pt(&[0, 1, 0]));
        assert_eq!(laplace_backward(&sq).unwrap().at((0, 0)), &pt(&[1, 0, 0]));
        assert_eq!(diagonal_intersection_net(&sq).unwrap().at((0, 0)), &pt(&[1, 1, 2]));
    }

    #[test]
    fn affine_grid_forward_is_constant_and_terminates() {
        let net = affine(3, 3);
        let p1 = laplace_forward(&net).unwrap();
        assert!(p1.points().iter().all(|p| p == &pt(&[0, 1, 0])));
        match laplace_iterate(&net, 2).unwrap() {
            LaplaceOutcome::Terminated { at, report } => {
                assert_eq!(at, 1);
                assert_eq!(report.kind, DegeneracyKind::Laplace);
            }
            other => panic!("expected termination, got {other:?}"),
        }
    }

    #[test]
    fn affine_diagonal_midpoints() {
        let d = diagonal_intersection_net(&affine(3, 2)).unwrap();
        for ((i, j), p) in d.sites() {
            assert_eq!(p, &pt(&[2 * i + 1, 2 * j + 1, 2]));
        }
    }

    #[test]
    fn zero_steps_is_identity() {
        let net = affine(2, 2);
        assert_eq!(laplace_iterate(&net, 0).unwrap(), LaplaceOutcome::Net(net));
    }

    #[test]
    fn too_many_steps() {
        assert!(matches!(laplace_iterate(&affine(2, 1), 2), Err(Error::WindowTooSmall(_))));
    }

    #[test]
    fn explicit_formula_on_unit_square() {
        assert_eq!(explicit_laplace(&affine(1, 1), 1).unwrap(), ExplicitLaplace::Point(pt(&[0, 1, 0])));
    }

    #[test]
    fn degenerate_input_rejected() {
        let mut net = affine(1, 1);
        net.set((1, 0), pt(&[0, 0, 1])).unwrap();
        assert!(matches!(laplace_forward(&net), Err(Error::Degenerate { .. })));
    }
}
