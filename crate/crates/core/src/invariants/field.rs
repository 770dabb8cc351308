use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::net::{laplace_backward, laplace_forward, GridDomain, QNet, Site};
use crate::projective::{cross_ratio, Extended, HPoint, Scalar};

/// Values of one invariant indexed by the lower-left site of their edge.
pub type Layer = BTreeMap<Site, Scalar>;

/// `H` on vertical edges `(i,j)-(i,j+1)`, `K` on horizontal edges
/// `(i,j)-(i+1,j)`. Only edges whose flanking transform points exist are
/// present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantField {
    pub domain: GridDomain,
    pub h: Layer,
    pub k: Layer,
}

fn finite(value: Extended, edge: char, site: Site) -> Result<Scalar> {
    value
        .into_finite()
        .ok_or(Error::InfiniteInvariant { edge, site })
}

/// `H(i,j) = cr(P(i,j), P1(i,j), P(i,j+1), P1(i-1,j))`.
pub fn h_field(net: &QNet) -> Result<Layer> {
    let d = net.domain();
    let mut out = Layer::new();
    if d.a() < 2 || d.b() < 1 {
        return Ok(out);
    }
    let fwd = laplace_forward(net)?;
    for i in d.i_min + 1..d.i_max {
        for j in d.j_min..d.j_max {
            let h = h_at(net, &fwd, (i, j))?;
            out.insert((i, j), h);
        }
    }
    Ok(out)
}

pub(crate) fn h_at(net: &QNet, fwd: &QNet, (i, j): Site) -> Result<Scalar> {
    let cr = cross_ratio(net.at((i, j)), fwd.at((i, j)), net.at((i, j + 1)), fwd.at((i - 1, j)))?;
    finite(cr, 'H', (i, j))
}

/// `K(i,j) = cr(P(i,j), P-1(i,j), P(i+1,j), P-1(i,j-1))`.
pub fn k_field(net: &QNet) -> Result<Layer> {
    let d = net.domain();
    let mut out = Layer::new();
    if d.a() < 1 || d.b() < 2 {
        return Ok(out);
    }
    let bwd = laplace_backward(net)?;
    for i in d.i_min..d.i_max {
        for j in d.j_min + 1..d.j_max {
            let cr = cross_ratio(net.at((i, j)), bwd.at((i, j)), net.at((i + 1, j)), bwd.at((i, j - 1)))?;
            out.insert((i, j), finite(cr, 'K', (i, j))?);
        }
    }
    Ok(out)
}

pub fn laplace_invariants(net: &QNet) -> Result<InvariantField> {
    Ok(InvariantField {
        domain: net.domain(),
        h: h_field(net)?,
        k: k_field(net)?,
    })
}

/// Projective map sending `net` through an invertible matrix; for tests of
/// invariance.
pub fn apply_projective_map(net: &QNet, matrix: &[Vec<Scalar>]) -> Result<QNet> {
    net.map_points(|_, p: &HPoint| p.transform(matrix))
}

impl InvariantField {
    pub fn h(&self, site: Site) -> Option<&Scalar> {
        self.h.get(&site)
    }

    pub fn k(&self, site: Site) -> Option<&Scalar> {
        self.k.get(&site)
    }

    /// Rows `(i, j, edge, value)` sorted by edge then site.
    pub fn rows(&self) -> impl Iterator<Item = (Site, char, &Scalar)> + '_ {
        self.h
            .iter()
            .map(|(s, v)| (*s, 'H', v))
            .chain(self.k.iter().map(|(s, v)| (*s, 'K', v)))
    }
}
