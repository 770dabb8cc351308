use std::fmt;

use num_traits::Zero;

use super::linalg::{self, Row};
use super::point::HPoint;
use super::scalar::{format_scalar, Scalar};
use crate::error::{Error, Result};

/// A projective subspace of `RP^n`, stored as the reduced row echelon basis
/// of its representing linear subspace. The canonical form makes equality
/// structural; the empty subspace has no rows and projective dimension -1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Row>,
}

impl Subspace {
    pub fn empty(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..=ambient_dim)
            .map(|k| {
                let mut row = vec![Scalar::zero(); ambient_dim + 1];
                row[k] = num_traits::One::one();
                row
            })
            .collect();
        Subspace { ambient_dim, basis }
    }

    /// Span of arbitrary (possibly dependent, possibly zero) vectors.
    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Row>) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient_dim + 1 {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len().saturating_sub(1),
                });
            }
        }
        let (basis, _) = linalg::rref(vectors, ambient_dim + 1);
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn point(p: &HPoint) -> Self {
        let (basis, _) = linalg::rref(vec![p.coords().to_vec()], p.coords().len());
        Subspace {
            ambient_dim: p.ambient_dim(),
            basis,
        }
    }

    /// Join of a nonempty collection of points.
    pub fn span<'a>(points: impl IntoIterator<Item = &'a HPoint>) -> Result<Self> {
        let mut iter = points.into_iter().peekable();
        let Some(first) = iter.peek() else {
            return Err(Error::InvalidArgument("span of no points".into()));
        };
        let n = first.ambient_dim();
        Subspace::from_vectors(n, iter.map(|p| p.coords().to_vec()).collect())
    }

    /// The hyperplane `{x : normal · x = 0}`.
    pub fn hyperplane(normal: &[Scalar]) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        let n = normal.len() - 1;
        Subspace::from_vectors(n, linalg::nullspace(&[normal.to_vec()], n + 1))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Row] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn projective_dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim + 1
    }

    /// Pivot columns of the canonical basis.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect()
    }

    /// The single point of a 0-dimensional subspace.
    pub fn as_point(&self) -> Option<HPoint> {
        match self.basis.as_slice() {
            [row] => HPoint::new(row.clone()).ok(),
            _ => None,
        }
    }

    /// Like [`Subspace::as_point`], with an error naming the context.
    pub fn expect_point(&self, context: impl FnOnce() -> String) -> Result<HPoint> {
        self.as_point().ok_or_else(|| Error::NotAPoint {
            context: context(),
            dim: self.projective_dim(),
        })
    }

    /// Normal vectors of hyperplanes whose intersection is this subspace.
    pub fn annihilator(&self) -> Vec<Row> {
        linalg::nullspace(&self.basis, self.ambient_dim + 1)
    }

    /// Normal vector of a hyperplane.
    pub fn hyperplane_normal(&self) -> Option<Row> {
        match self.annihilator().as_slice() {
            [normal] => Some(normal.clone()),
            _ => None,
        }
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        linalg::rank(&rows, self.ambient_dim + 1) == self.basis.len()
    }

    pub fn contains_point(&self, p: &HPoint) -> bool {
        p.ambient_dim() == self.ambient_dim && self.contains_vector(p.coords())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        if other.ambient_dim != self.ambient_dim {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        linalg::rank(&rows, self.ambient_dim + 1) == self.basis.len()
    }

    fn check_dim(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient_dim, rows)
    }

    pub fn join_point(&self, p: &HPoint) -> Result<Subspace> {
        self.join(&Subspace::point(p))
    }

    /// Intersection: solutions of `Σ α_k a_k = Σ β_k b_k` over the two
    /// bases, mapped back through the first one.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim(other)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let (ra, rb) = (self.basis.len(), other.basis.len());
        if ra == 0 || rb == 0 {
            return Ok(Subspace::empty(self.ambient_dim));
        }
        let system: Vec<Row> = (0..=self.ambient_dim)
            .map(|c| {
                self.basis
                    .iter()
                    .map(|a| a[c].clone())
                    .chain(other.basis.iter().map(|b| -b[c].clone()))
                    .collect()
            })
            .collect();
        let vectors = linalg::nullspace(&system, ra + rb)
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![Scalar::zero(); self.ambient_dim + 1];
                for (alpha, a) in coeffs[..ra].iter().zip(&self.basis) {
                    if !alpha.is_zero() {
                        for (x, y) in v.iter_mut().zip(a) {
                            *x += alpha * y;
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.ambient_dim, vectors)
    }

    /// Coordinates of a vector of this subspace in the pivot chart: the
    /// entries at the pivot columns of the canonical basis.
    pub fn chart_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots().into_iter().map(|c| v[c].clone()).collect()
    }
}

/// Join of a list of subspaces; all must share the ambient dimension.
pub fn join(subspaces: &[Subspace]) -> Result<Subspace> {
    let Some(first) = subspaces.first() else {
        return Err(Error::InvalidArgument("join of no subspaces".into()));
    };
    subspaces[1..].iter().try_fold(first.clone(), |acc, s| acc.join(s))
}

pub fn meet(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.meet(b)
}

pub fn join_points(points: &[&HPoint]) -> Result<Subspace> {
    Subspace::span(points.iter().copied())
}

/// Meet of a nonempty list of subspaces.
pub fn meet_all(subspaces: &[Subspace]) -> Result<Subspace> {
    let Some(first) = subspaces.first() else {
        return Err(Error::InvalidArgument("meet of no subspaces".into()));
    };
    subspaces[1..].iter().try_fold(first.clone(), |acc, s| acc.meet(s))
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in RP^{}; ", self.projective_dim(), self.ambient_dim)?;
        for (k, row) in self.basis.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = row.iter().map(format_scalar).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> HPoint {
        HPoint::from_ints(c).unwrap()
    }

    #[test]
    fn join_of_axes_is_a_line() {
        let l = join(&[Subspace::point(&pt(&[1, 0, 0])), Subspace::point(&pt(&[0, 1, 0]))]).unwrap();
        assert_eq!(l.projective_dim(), 1);
        assert!(l.contains_point(&pt(&[3, -2, 0])));
        assert!(!l.contains_point(&pt(&[0, 0, 1])));
    }

    #[test]
    fn join_is_idempotent_on_points() {
        let p = Subspace::point(&pt(&[2, 3, 5]));
        let j = p.join(&p).unwrap();
        assert_eq!(j, p);
        assert_eq!(j.projective_dim(), 0);
    }

    #[test]
    fn meet_of_coordinate_planes() {
        let a = Subspace::span([&pt(&[1, 0, 0, 0]), &pt(&[0, 1, 0, 0])]).unwrap();
        let b = Subspace::span([&pt(&[0, 1, 0, 0]), &pt(&[0, 0, 1, 0])]).unwrap();
        let m = a.meet(&b).unwrap();
        assert_eq!(m.as_point(), Some(pt(&[0, 1, 0, 0])));
        assert_eq!(a.meet(&a).unwrap(), a);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Subspace::point(&pt(&[1, 0, 0]));
        let b = Subspace::point(&pt(&[1, 0, 0, 0]));
        assert!(matches!(a.join(&b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(a.meet(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn hyperplane_from_normal() {
        let h = Subspace::hyperplane(&[0.into(), 1.into(), 0.into(), 0.into()].map(Scalar::from_integer)).unwrap();
        assert_eq!(h.projective_dim(), 2);
        assert!(h.contains_point(&pt(&[1, 0, 4, 4])));
        assert!(!h.contains_point(&pt(&[0, 1, 0, 0])));
    }
}
