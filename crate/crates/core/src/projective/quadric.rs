use num_traits::Zero;

use super::linalg::{self, Row};
use super::point::HPoint;
use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Quadric `{[x] : b(x,x) = 0}` of a symmetric bilinear form `b`.
///
/// The form is stored scaled so that its first nonzero entry is 1, which
/// makes proportional forms compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quadric {
    form: Vec<Row>,
}

impl Quadric {
    pub fn new(form: Vec<Row>) -> Result<Self> {
        let n = form.len();
        if n < 2 || form.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("quadric form must be square of size >= 2".into()));
        }
        if (0..n).any(|i| (0..i).any(|j| form[i][j] != form[j][i])) {
            return Err(Error::InvalidArgument("quadric form is not symmetric".into()));
        }
        let lead = form
            .iter()
            .flatten()
            .find(|x| !x.is_zero())
            .cloned()
            .ok_or_else(|| Error::InvalidArgument("quadric form is zero".into()))?;
        let inv = lead.recip();
        let form = form
            .into_iter()
            .map(|r| r.into_iter().map(|x| x * &inv).collect())
            .collect();
        Ok(Quadric { form })
    }

    /// The rank-2 form `u vᵀ + v uᵀ` whose zero set is the union of the
    /// hyperplanes with normals `u` and `v`.
    pub fn hyperplane_pair(u: &[Scalar], v: &[Scalar]) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: u.len().saturating_sub(1),
                found: v.len().saturating_sub(1),
            });
        }
        let form = (0..u.len())
            .map(|i| (0..u.len()).map(|j| &u[i] * &v[j] + &v[i] * &u[j]).collect())
            .collect();
        Quadric::new(form)
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.len() - 1
    }

    pub fn form(&self) -> &[Row] {
        &self.form
    }

    fn check(&self, p: &HPoint) -> Result<()> {
        if p.ambient_dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: p.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn bilinear(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        linalg::dot(x, &linalg::mat_vec(&self.form, y))
    }

    pub fn contains(&self, p: &HPoint) -> Result<bool> {
        self.check(p)?;
        Ok(self.bilinear(p.coords(), p.coords()).is_zero())
    }

    /// Polar subspace of `p`: a hyperplane, or all of `RP^n` when `p` is
    /// singular.
    pub fn polar(&self, p: &HPoint) -> Result<Subspace> {
        self.check(p)?;
        let normal = linalg::mat_vec(&self.form, p.coords());
        if normal.iter().all(Zero::is_zero) {
            return Ok(Subspace::full(self.ambient_dim()));
        }
        Subspace::hyperplane(&normal)
    }

    pub fn is_conjugate(&self, p: &HPoint, q: &HPoint) -> Result<bool> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.bilinear(p.coords(), q.coords()).is_zero())
    }

    /// Projectivized kernel of the form.
    pub fn singular_locus(&self) -> Subspace {
        let n = self.ambient_dim();
        Subspace::from_vectors(n, linalg::nullspace(&self.form, n + 1))
            .expect("kernel vectors have the ambient length")
    }

    pub fn is_singular_point(&self, p: &HPoint) -> Result<bool> {
        self.check(p)?;
        Ok(linalg::mat_vec(&self.form, p.coords()).iter().all(Zero::is_zero))
    }
}
