use super::domain::Site;
use super::laplace::Direction;
use super::qnet::QNet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegeneracyKind {
    None,
    Laplace,
    Goursat,
    Mixed,
}

impl DegeneracyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            DegeneracyKind::None => "none",
            DegeneracyKind::Laplace => "laplace",
            DegeneracyKind::Goursat => "goursat",
            DegeneracyKind::Mixed => "mixed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegeneracyReport {
    pub kind: DegeneracyKind,
    pub direction: Direction,
    /// Two sites whose points coincide, exhibiting the verdict.
    pub witness: Option<(Site, Site)>,
}

/// Pairs `((i,j), (i+1,j))` with equal points.
fn coincidences_along_i(net: &QNet) -> (usize, Vec<(Site, Site)>) {
    let d = net.domain();
    let mut total = 0;
    let mut hits = Vec::new();
    for i in d.i_min..d.i_max {
        for j in d.j_min..=d.j_max {
            total += 1;
            if net.at((i, j)) == net.at((i + 1, j)) {
                hits.push(((i, j), (i + 1, j)));
            }
        }
    }
    (total, hits)
}

/// Classification as if `net` were a forward iterate: Laplace means constant
/// in `i`, Goursat means constant in `j` with no `i`-coincidence at all.
fn classify_forward(net: &QNet) -> (DegeneracyKind, Option<(Site, Site)>) {
    let (along_i, hits_i) = coincidences_along_i(net);
    if along_i > 0 && hits_i.len() == along_i {
        return (DegeneracyKind::Laplace, hits_i.first().cloned());
    }
    let (along_j, hits_j) = coincidences_along_i(&net.transpose());
    if along_j > 0 && hits_j.len() == along_j {
        if hits_i.is_empty() {
            let ((i0, j0), (i1, j1)) = hits_j[0];
            return (DegeneracyKind::Goursat, Some(((j0, i0), (j1, i1))));
        }
        return (DegeneracyKind::Mixed, hits_i.first().cloned());
    }
    (DegeneracyKind::None, None)
}

/// Classify `net` as a forward or backward Laplace iterate. A window that
/// is a single site wide in the relevant direction has no pairs to compare
/// and never counts as constant.
pub fn classify_degeneracy(net: &QNet, direction: Direction) -> DegeneracyReport {
    let (kind, witness) = match direction {
        Direction::Forward => classify_forward(net),
        Direction::Backward => {
            let (kind, w) = classify_forward(&net.transpose());
            (kind, w.map(|((a, b), (c, d))| ((b, a), (d, c))))
        }
    };
    DegeneracyReport {
        kind,
        direction,
        witness,
    }
}
