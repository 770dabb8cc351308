use crate::error::{Error, Result};
use crate::net::{laplace_iterate, QNet};
use crate::projective::{HPoint, Quadric, Subspace};

/// The two hyperplanes through the even and odd points of an extensive
/// BS-Kœnigs net, and the degenerate quadric formed by their union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplanePair {
    pub u1: Subspace,
    pub u2: Subspace,
    pub quadric: Quadric,
}

impl HyperplanePair {
    pub fn from_hyperplanes(u1: Subspace, u2: Subspace) -> Result<Self> {
        let (n1, n2) = match (u1.hyperplane_normal(), u2.hyperplane_normal()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::InvalidArgument("expected two hyperplanes".into())),
        };
        if u1 == u2 {
            return Err(Error::InvalidArgument("the two hyperplanes coincide".into()));
        }
        let quadric = Quadric::hyperplane_pair(&n1, &n2)?;
        Ok(HyperplanePair { u1, u2, quadric })
    }

    /// `U1 ∩ U2`, the singular points of the quadric.
    pub fn singular_locus(&self) -> Subspace {
        self.u1.meet(&self.u2).expect("same ambient space")
    }

    fn for_parity(&self, even: bool) -> &Subspace {
        if even {
            &self.u1
        } else {
            &self.u2
        }
    }
}

fn is_even(i: i64, j: i64) -> bool {
    (i + j).rem_euclid(2) == 0
}

/// Whether every point with even `i + j` lies in `u1` and every odd one in
/// `u2`.
pub fn parity_containment(net: &QNet, pair: &HyperplanePair) -> bool {
    net.sites()
        .all(|((i, j), p)| pair.for_parity(is_even(i, j)).contains_point(p))
}

/// `U1` and `U2` as joins of the even and odd points within two steps of
/// the lower axes, after checking that they contain the whole net.
pub fn koenigs_hyperplanes(net: &QNet) -> Result<HyperplanePair> {
    let d = net.domain();
    if net.ambient_dim() != d.a() + d.b() || !net.is_extensive() {
        return Err(Error::InvalidArgument(format!(
            "expected an extensive net in RP^{}",
            d.a() + d.b()
        )));
    }
    let near = |even: bool| {
        Subspace::span(
            net.sites()
                .filter(|&((i, j), _)| (i - d.i_min).min(j - d.j_min) < 2 && is_even(i, j) == even)
                .map(|(_, p)| p),
        )
    };
    let pair = HyperplanePair::from_hyperplanes(near(true)?, near(false)?)?;
    if let Some(((i, j), _)) = net
        .sites()
        .find(|&((i, j), p)| !pair.for_parity(is_even(i, j)).contains_point(p))
    {
        return Err(Error::NotKoenigs(format!(
            "point {:?} is not in the hyperplane of its parity",
            (i, j)
        )));
    }
    Ok(pair)
}

fn single(net: QNet) -> HPoint {
    let d = net.domain();
    net.at((d.i_min, d.j_min)).clone()
}

/// Both sides of "`P(m,m)` lies on the quadric iff `P_m(0,0)` and
/// `P_{-m}(0,0)` are conjugate".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugacyVerdict {
    pub corner_on_quadric: bool,
    pub conjugate: bool,
}

impl ConjugacyVerdict {
    pub fn agrees(&self) -> bool {
        self.corner_on_quadric == self.conjugate
    }
}

/// Evaluate both sides on a square window whose points, except possibly
/// the far corner, lie on `quadric`.
pub fn quadric_conjugacy_check(net: &QNet, quadric: &Quadric) -> Result<ConjugacyVerdict> {
    let d = net.domain();
    if d.a() != d.b() || d.a() == 0 {
        return Err(Error::InvalidArgument("expected a square window of positive size".into()));
    }
    let corner = (d.i_max, d.j_max);
    for (s, p) in net.sites() {
        if s != corner && !quadric.contains(p)? {
            return Err(Error::InvalidArgument(format!("point {s:?} is not on the quadric")));
        }
    }
    let m = d.a() as i64;
    let fwd = single(laplace_iterate(net, m)?.into_result()?);
    let bwd = single(laplace_iterate(net, -m)?.into_result()?);
    Ok(ConjugacyVerdict {
        corner_on_quadric: quadric.contains(net.at(corner))?,
        conjugate: quadric.is_conjugate(&fwd, &bwd)?,
    })
}

/// Singularity facts about the transforms of an extensive BS-Kœnigs net on
/// an `m x (m+1)` window. The line check is skipped (`None`) when the two
/// forward points coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityReport {
    pub forward_nonsingular: bool,
    pub backward_nonsingular: bool,
    /// The forward line `P_m(0,0) ∨ P_m(0,1)` meets `U1 ∩ U2`.
    pub line_meets_singular: Option<bool>,
    /// `P_{-m}(0,0) = P_{-m}(0,1)`.
    pub backward_coincide: bool,
}

impl SingularityReport {
    pub fn equivalence_holds(&self) -> Option<bool> {
        Some(self.line_meets_singular? == self.backward_coincide)
    }
}

pub fn singular_point_checks(net: &QNet, pair: &HyperplanePair) -> Result<SingularityReport> {
    let d = net.domain();
    if d.b() != d.a() + 1 || d.a() == 0 {
        return Err(Error::InvalidArgument("expected an m x (m+1) window".into()));
    }
    let m = d.a() as i64;
    let fwd = laplace_iterate(net, m)?.into_result()?;
    let bwd = laplace_iterate(net, -m)?.into_result()?;
    let (i0, j0) = (d.i_min, d.j_min);
    let sing = pair.singular_locus();
    let (f0, f1) = (fwd.at((i0, j0)), fwd.at((i0, j0 + 1)));
    let (b0, b1) = (bwd.at((i0, j0)), bwd.at((i0, j0 + 1)));
    let line_meets_singular = if f0 == f1 {
        None
    } else {
        Some(!Subspace::span([f0, f1])?.meet(&sing)?.is_empty())
    };
    Ok(SingularityReport {
        forward_nonsingular: !pair.quadric.is_singular_point(f0)?,
        backward_nonsingular: !pair.quadric.is_singular_point(b0)?,
        line_meets_singular,
        backward_coincide: b0 == b1,
    })
}
