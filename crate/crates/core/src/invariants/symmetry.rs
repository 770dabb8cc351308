use super::field::{h_field, k_field, Layer};
use crate::error::Result;
use crate::net::{diagonal_intersection_net, laplace_iterate, QNet, Site};

/// Which identity a mismatch belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryIdentity {
    /// `H^P_m(i+1,j) = K^D_{-m}(i,j)`.
    PrimalH,
    /// `H^D_m(i,j) = K^P_{-m}(i,j+1)`.
    DiagonalH,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCheck {
    pub m: i64,
    /// Number of site pairs at which both sides were defined.
    pub compared: usize,
    pub mismatch: Option<(SymmetryIdentity, Site)>,
}

impl SymmetryCheck {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn compare(
    lhs: &Layer,
    rhs: &Layer,
    shift: (i64, i64),
    which: SymmetryIdentity,
    compared: &mut usize,
) -> Option<(SymmetryIdentity, Site)> {
    for (&(i, j), right) in rhs {
        if let Some(left) = lhs.get(&(i + shift.0, j + shift.1)) {
            *compared += 1;
            if left != right {
                return Some((which, (i, j)));
            }
        }
    }
    None
}

/// Both identities between the invariants of `P_m`, `P_{-m}` and of the
/// diagonal net's `D_{-m}`, `D_m`. Transforms that do not exist surface as
/// errors.
pub fn invariant_symmetry_check(net: &QNet, m: i64) -> Result<SymmetryCheck> {
    let diag = diagonal_intersection_net(net)?;
    let p_m = laplace_iterate(net, m)?.into_result()?;
    let p_neg = laplace_iterate(net, -m)?.into_result()?;
    let d_m = laplace_iterate(&diag, m)?.into_result()?;
    let d_neg = laplace_iterate(&diag, -m)?.into_result()?;

    let mut compared = 0;
    let (h_p, k_d) = (h_field(&p_m)?, k_field(&d_neg)?);
    let (k_p, h_d) = (k_field(&p_neg)?, h_field(&d_m)?);
    let mismatch = compare(&h_p, &k_d, (1, 0), SymmetryIdentity::PrimalH, &mut compared)
        .or_else(|| compare(&k_p, &h_d, (0, 1), SymmetryIdentity::DiagonalH, &mut compared));
    Ok(SymmetryCheck { m, compared, mismatch })
}
