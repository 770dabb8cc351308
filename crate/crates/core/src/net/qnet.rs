use super::domain::{GridDomain, Site};
use crate::error::{Error, Result};
use crate::projective::{HPoint, Subspace};

/// A map from a lattice window to `RP^n`.
///
/// Construction only checks shape and ambient dimension. Face planarity and
/// non-degeneracy are properties queried with [`QNet::validate`] and
/// [`QNet::check_nondegenerate`]; every transform checks what it needs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QNet {
    domain: GridDomain,
    ambient_dim: usize,
    points: Vec<HPoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    /// The four points of the face at this corner do not lie in a plane.
    NonPlanarFace(Site),
    /// The two endpoints of an edge coincide.
    CoincidentEdge(Site, Site),
    /// The three face vertices other than `omitted` do not span a plane.
    CollinearTriple { face: Site, omitted: Site },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// `pah P(j)`: join over `i` with `j` fixed.
    Row,
    /// `pav P(i)`: join over `j` with `i` fixed.
    Column,
}

impl QNet {
    /// Points are given in row-major order (`i` outer, `j` inner).
    pub fn new(domain: GridDomain, points: Vec<HPoint>) -> Result<Self> {
        if points.len() != domain.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} points for {:?}, got {}",
                domain.len(),
                domain,
                points.len()
            )));
        }
        let ambient_dim = points[0].ambient_dim();
        if let Some(p) = points.iter().find(|p| p.ambient_dim() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: p.ambient_dim(),
            });
        }
        Ok(QNet {
            domain,
            ambient_dim,
            points,
        })
    }

    pub fn from_fn(domain: GridDomain, mut f: impl FnMut(Site) -> Result<HPoint>) -> Result<Self> {
        let points = domain.sites().map(&mut f).collect::<Result<Vec<_>>>()?;
        QNet::new(domain, points)
    }

    pub fn domain(&self) -> GridDomain {
        self.domain
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn points(&self) -> &[HPoint] {
        &self.points
    }

    pub fn get(&self, site: Site) -> Option<&HPoint> {
        self.domain
            .contains(site)
            .then(|| &self.points[self.domain.index(site)])
    }

    /// Point at `site`; panics outside the domain.
    pub fn at(&self, site: Site) -> &HPoint {
        self.get(site)
            .unwrap_or_else(|| panic!("site {site:?} outside {:?}", self.domain))
    }

    pub fn try_at(&self, site: Site) -> Result<&HPoint> {
        self.get(site).ok_or(Error::OutOfRange(site))
    }

    pub fn set(&mut self, site: Site, p: HPoint) -> Result<()> {
        if !self.domain.contains(site) {
            return Err(Error::OutOfRange(site));
        }
        if p.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: p.ambient_dim(),
            });
        }
        let k = self.domain.index(site);
        self.points[k] = p;
        Ok(())
    }

    pub fn sites(&self) -> impl Iterator<Item = (Site, &HPoint)> + '_ {
        self.domain.sites().zip(&self.points)
    }

    /// Restriction to a subwindow.
    pub fn restrict(&self, window: GridDomain) -> Result<QNet> {
        QNet::from_fn(window, |s| self.try_at(s).cloned())
    }

    /// `Q(i, j) = P(j, i)`.
    pub fn transpose(&self) -> QNet {
        let domain = self.domain.transpose();
        QNet::from_fn(domain, |(i, j)| Ok(self.at((j, i)).clone())).expect("same points")
    }

    pub fn map_points(&self, mut f: impl FnMut(Site, &HPoint) -> Result<HPoint>) -> Result<QNet> {
        QNet::from_fn(self.domain, |s| f(s, self.at(s)))
    }

    /// Same points, window moved by `(di, dj)`.
    pub fn translate(&self, di: i64, dj: i64) -> QNet {
        let d = self.domain;
        QNet {
            domain: GridDomain {
                i_min: d.i_min + di,
                i_max: d.i_max + di,
                j_min: d.j_min + dj,
                j_max: d.j_max + dj,
            },
            ambient_dim: self.ambient_dim,
            points: self.points.clone(),
        }
    }

    pub fn face_points(&self, (i, j): Site) -> [&HPoint; 4] {
        [
            self.at((i, j)),
            self.at((i + 1, j)),
            self.at((i + 1, j + 1)),
            self.at((i, j + 1)),
        ]
    }

    /// Faces whose four points do not lie in a plane; empty for a Q-net.
    pub fn validate(&self) -> Vec<Violation> {
        self.domain
            .faces()
            .filter(|&f| {
                Subspace::span(self.face_points(f))
                    .map(|s| s.projective_dim() > 2)
                    .unwrap_or(true)
            })
            .map(Violation::NonPlanarFace)
            .collect()
    }

    pub fn is_qnet(&self) -> bool {
        self.validate().is_empty()
    }

    /// Coincident edges and face triples that fail to span a plane, plus any
    /// planarity violations.
    pub fn check_nondegenerate(&self) -> Vec<Violation> {
        let mut out = self.validate();
        let d = self.domain;
        for (i, j) in d.sites() {
            for next in [(i + 1, j), (i, j + 1)] {
                if d.contains(next) && self.at((i, j)) == self.at(next) {
                    out.push(Violation::CoincidentEdge((i, j), next));
                }
            }
        }
        for face in d.faces() {
            let (i, j) = face;
            let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            for omitted in corners {
                let triple = corners.iter().filter(|&&c| c != omitted).map(|&c| self.at(c));
                let dim = Subspace::span(triple).map(|s| s.projective_dim()).unwrap_or(-1);
                if dim != 2 {
                    out.push(Violation::CollinearTriple { face, omitted });
                }
            }
        }
        out
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.check_nondegenerate().is_empty()
    }

    pub(crate) fn require_nondegenerate(&self) -> Result<()> {
        let violations = self.check_nondegenerate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::Degenerate { violations })
        }
    }

    /// Join of all points.
    pub fn span(&self) -> Subspace {
        Subspace::span(&self.points).expect("nonempty net")
    }

    /// Non-degenerate and joining an `(a+b)`-dimensional subspace.
    pub fn is_extensive(&self) -> bool {
        let target = (self.domain.a() + self.domain.b()) as isize;
        self.ambient_dim as isize >= target
            && self.is_nondegenerate()
            && self.span().projective_dim() == target
    }

    /// Every `c x d` subwindow is extensive.
    pub fn is_extensive_sub(&self, c: usize, d: usize) -> bool {
        if c > self.domain.a() || d > self.domain.b() {
            return false;
        }
        self.domain.subwindows(c, d).into_iter().all(|w| {
            self.restrict(w)
                .map(|sub| sub.is_extensive())
                .unwrap_or(false)
        })
    }

    /// Join of a full column (`Axis::Column`, index `i`) or row
    /// (`Axis::Row`, index `j`).
    pub fn parameter_space(&self, axis: Axis, index: i64) -> Result<Subspace> {
        let d = self.domain;
        let sites: Vec<Site> = match axis {
            Axis::Column if (d.i_min..=d.i_max).contains(&index) => {
                (d.j_min..=d.j_max).map(|j| (index, j)).collect()
            }
            Axis::Row if (d.j_min..=d.j_max).contains(&index) => {
                (d.i_min..=d.i_max).map(|i| (i, index)).collect()
            }
            Axis::Column => return Err(Error::OutOfRange((index, d.j_min))),
            Axis::Row => return Err(Error::OutOfRange((d.i_min, index))),
        };
        Subspace::span(sites.into_iter().map(|s| self.at(s)))
    }
}
