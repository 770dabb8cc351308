use super::field::{laplace_invariants, InvariantField};
use crate::error::{Error, Result};
use crate::net::{diagonal_intersection_net, laplace_backward, laplace_forward, QNet, Site};
use crate::projective::linalg::determinant;
use crate::projective::{HPoint, Scalar, Subspace};

/// Sites where `H(i,j) H(i,j+1) = K(i,j+1) K(i-1,j+1)` fails.
pub fn bs_koenigs_violations(field: &InvariantField) -> Vec<Site> {
    let d = field.domain;
    let mut out = Vec::new();
    for i in d.i_min + 1..d.i_max {
        for j in d.j_min..d.j_max - 1 {
            let terms = (
                field.h((i, j)),
                field.h((i, j + 1)),
                field.k((i, j + 1)),
                field.k((i - 1, j + 1)),
            );
            if let (Some(h0), Some(h1), Some(k0), Some(k1)) = terms {
                if h0 * h1 != k0 * k1 {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

/// Sites where `H(i,j) H(i+1,j) = K(i,j) K(i,j+1)` fails.
pub fn d_koenigs_violations(field: &InvariantField) -> Vec<Site> {
    let d = field.domain;
    let mut out = Vec::new();
    for i in d.i_min + 1..d.i_max - 1 {
        for j in d.j_min + 1..d.j_max - 1 {
            let terms = (
                field.h((i, j)),
                field.h((i + 1, j)),
                field.k((i, j)),
                field.k((i, j + 1)),
            );
            if let (Some(h0), Some(h1), Some(k0), Some(k1)) = terms {
                if h0 * h1 != k0 * k1 {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

pub fn is_bs_koenigs(net: &QNet) -> Result<bool> {
    Ok(bs_koenigs_violations(&laplace_invariants(net)?).is_empty())
}

pub fn is_d_koenigs(net: &QNet) -> Result<bool> {
    Ok(d_koenigs_violations(&laplace_invariants(net)?).is_empty())
}

/// Sites at which the conic test applies: both neighbouring transforms must
/// exist around the face.
pub fn conic_sites(net: &QNet) -> Vec<Site> {
    let d = net.domain();
    (d.i_min + 1..d.i_max - 1)
        .flat_map(|i| (d.j_min + 1..d.j_max - 1).map(move |j| (i, j)))
        .collect()
}

fn conic_row(x: &Scalar, y: &Scalar, z: &Scalar) -> Vec<Scalar> {
    vec![x * x, x * y, y * y, x * z, y * z, z * z]
}

/// Whether the six points `P1(i-1,j), P1(i,j), P1(i+1,j), P-1(i,j-1),
/// P-1(i,j), P-1(i,j+1)` of the face `(i,j)` lie on a conic.
pub fn six_point_conic_check(net: &QNet, site: Site) -> Result<bool> {
    let fwd = laplace_forward(net)?;
    let bwd = laplace_backward(net)?;
    conic_check_with(&fwd, &bwd, site)
}

pub(crate) fn conic_points<'a>(fwd: &'a QNet, bwd: &'a QNet, (i, j): Site) -> Result<[&'a HPoint; 6]> {
    Ok([
        fwd.try_at((i - 1, j))?,
        fwd.try_at((i, j))?,
        fwd.try_at((i + 1, j))?,
        bwd.try_at((i, j - 1))?,
        bwd.try_at((i, j))?,
        bwd.try_at((i, j + 1))?,
    ])
}

fn conic_check_with(fwd: &QNet, bwd: &QNet, site: Site) -> Result<bool> {
    let points = conic_points(fwd, bwd, site)?;
    let plane = Subspace::span(points)?;
    if plane.projective_dim() > 2 {
        return Err(Error::NotCoplanar);
    }
    if plane.projective_dim() < 2 {
        // points on a line always lie on a (degenerate) conic
        return Ok(true);
    }
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| {
            let c = plane.chart_coords(p.coords());
            conic_row(&c[0], &c[1], &c[2])
        })
        .collect();
    Ok(num_traits::Zero::is_zero(&determinant(&rows)))
}

/// Conic check at every applicable face; returns the failing sites.
pub fn conic_violations(net: &QNet) -> Result<Vec<Site>> {
    let fwd = laplace_forward(net)?;
    let bwd = laplace_backward(net)?;
    let mut out = Vec::new();
    for s in conic_sites(net) {
        if !conic_check_with(&fwd, &bwd, s)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// The diagonal net of `net` and whether it satisfies the D condition.
pub fn diagonal_is_d_koenigs(net: &QNet) -> Result<bool> {
    is_d_koenigs(&diagonal_intersection_net(net)?)
}
