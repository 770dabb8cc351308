use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg;
use super::scalar::{format_scalar, Scalar};
use crate::error::{Error, Result};

/// A point of real projective space `RP^n`, given by a nonzero vector of
/// `n + 1` homogeneous coordinates.
///
/// The stored representative is canonical: integer coordinates with no common
/// factor and a positive first nonzero entry. Two points compare equal iff
/// their coordinate vectors are proportional.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPoint {
    coords: Vec<Scalar>,
}

impl HPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.is_empty() || coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(HPoint {
            coords: normalize(coords),
        })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Scalar::from_integer(c.into())).collect())
    }

    /// Dimension `n` of the ambient projective space.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    /// Linear combination `Σ λ_k p_k` of representatives.
    pub fn combine(terms: &[(Scalar, &HPoint)]) -> Result<HPoint> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::ZeroVector);
        };
        let n = first.coords.len();
        let mut out = vec![Scalar::zero(); n];
        for (lambda, p) in terms {
            if p.coords.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n - 1,
                    found: p.ambient_dim(),
                });
            }
            if lambda.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(&p.coords) {
                *o += lambda * c;
            }
        }
        HPoint::new(out)
    }

    /// Appends zero coordinates to place the point in `RP^target`.
    pub fn embed(&self, target: usize) -> Result<HPoint> {
        if target < self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: target,
                found: self.ambient_dim(),
            });
        }
        let mut coords = self.coords.clone();
        coords.resize(target + 1, Scalar::zero());
        Ok(HPoint { coords })
    }

    /// Drops trailing coordinates; they must be zero.
    pub fn truncate(&self, target: usize) -> Result<HPoint> {
        if target > self.ambient_dim() || self.coords[target + 1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::DimensionMismatch {
                expected: target,
                found: self.ambient_dim(),
            });
        }
        HPoint::new(self.coords[..=target].to_vec())
    }

    /// Image under the linear map with the given `(n+1) x (n+1)` matrix.
    pub fn transform(&self, matrix: &[linalg::Row]) -> Result<HPoint> {
        if matrix.len() != self.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: matrix.len().saturating_sub(1),
            });
        }
        HPoint::new(linalg::mat_vec(matrix, &self.coords))
    }
}

fn normalize(coords: Vec<Scalar>) -> Vec<Scalar> {
    let lcm = coords
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let lead = ints.iter().find(|c| !c.is_zero()).expect("nonzero vector");
    if lead.is_negative() {
        gcd = -gcd;
    }
    ints.into_iter()
        .map(|c| Scalar::from_integer(c / &gcd))
        .collect()
}

impl fmt::Debug for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_scalar(c))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::scalar::{frac, int};

    #[test]
    fn equality_is_projective() {
        let p = HPoint::new(vec![frac(1, 2), int(-1), frac(3, 4)]).unwrap();
        let q = HPoint::from_ints(&[-2, 4, -3]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.coords(), &[int(2), int(-4), int(3)]);
        assert_ne!(p, HPoint::from_ints(&[2, 4, 3]).unwrap());
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(HPoint::from_ints(&[0, 0, 0]), Err(Error::ZeroVector));
    }

    #[test]
    fn embed_and_truncate() {
        let p = HPoint::from_ints(&[1, 2, 3]).unwrap();
        let e = p.embed(4).unwrap();
        assert_eq!(e.ambient_dim(), 4);
        assert_eq!(e.truncate(2).unwrap(), p);
        assert!(HPoint::from_ints(&[1, 0, 1]).unwrap().truncate(1).is_err());
    }
}
