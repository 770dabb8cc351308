use super::partial::PartialNet;
use crate::error::{Error, Result};
use crate::net::{QNet, Site};
use crate::projective::{project_unchecked, are_supplementary, HPoint, Subspace};
use crate::sample::{self, Rng};

/// A lifted net together with the projection that recovers the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftResult {
    pub lifted: QNet,
    pub center: Subspace,
    /// Join of the input net, embedded in the lift's space.
    pub screen: Subspace,
    pub seed: u64,
    /// Ambient dimension of the input.
    pub original_dim: usize,
}

/// Same as [`LiftResult`] for boundary data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialLift {
    pub lifted: PartialNet,
    pub center: Subspace,
    pub screen: Subspace,
    pub seed: u64,
    pub original_dim: usize,
}

/// Sends a lifted point back to the input's space.
pub(crate) fn project_back(center: &Subspace, screen: &Subspace, original_dim: usize, p: &HPoint) -> Result<HPoint> {
    project_unchecked(p, center, screen)?.truncate(original_dim)
}

impl LiftResult {
    pub fn project(&self, p: &HPoint) -> Result<HPoint> {
        project_back(&self.center, &self.screen, self.original_dim, p)
    }

    pub fn project_net(&self, net: &QNet) -> Result<QNet> {
        net.map_points(|_, p| self.project(p))
    }
}

impl PartialLift {
    pub fn project(&self, p: &HPoint) -> Result<HPoint> {
        project_back(&self.center, &self.screen, self.original_dim, p)
    }
}

fn axis_sites(data: &PartialNet) -> Vec<Site> {
    let d = data.domain();
    let mut sites: Vec<Site> = data
        .points()
        .map(|(s, _)| s)
        .filter(|&(i, j)| i == d.i_min || j == d.j_min)
        .collect();
    sites.sort_by_key(|&(i, j)| (i - d.i_min + j - d.j_min, i));
    sites
}

/// Dimension of the lift's space for boundary data on `data`'s window.
fn lift_dimension(data: &PartialNet) -> usize {
    let d = data.domain();
    data.ambient_dim().max(d.a() + d.b())
}

fn embedded(data: &PartialNet, target: usize) -> Result<PartialNet> {
    let mut out = PartialNet::new(data.domain(), target);
    for (s, p) in data.points() {
        out.insert(s, p.embed(target)?)?;
    }
    Ok(out)
}

/// Lift of down-closed boundary data, with `center` supplementary to the
/// join of the (already embedded) points.
fn lift_with_center(data: &PartialNet, center: &Subspace, rng: &mut Rng) -> Result<PartialNet> {
    let dim = data.ambient_dim();
    let mut out = PartialNet::new(data.domain(), dim);
    let mut chosen = Subspace::empty(dim);
    for site in axis_sites(data) {
        let p = data.try_at(site)?;
        let lifted = sample::retry(rng, "lifting an axis point", |rng| {
            let offset = sample::random_vector_in(rng, center);
            let v: Vec<_> = p.coords().iter().zip(&offset).map(|(a, b)| a + b).collect();
            let q = HPoint::new(v).ok()?;
            (!chosen.contains_point(&q)).then_some(q)
        })?;
        chosen = chosen.join_point(&lifted)?;
        out.insert(site, lifted)?;
    }
    let d = data.domain();
    let mut interior: Vec<Site> = data
        .points()
        .map(|(s, _)| s)
        .filter(|&(i, j)| i > d.i_min && j > d.j_min)
        .collect();
    interior.sort_by_key(|&(i, j)| (i + j, i));
    for (i, j) in interior {
        let ray = center.join_point(data.try_at((i, j))?)?;
        let plane = Subspace::span([
            out.try_at((i - 1, j - 1))?,
            out.try_at((i - 1, j))?,
            out.try_at((i, j - 1))?,
        ])?;
        let p = ray
            .meet(&plane)?
            .expect_point(|| format!("lift at {:?}", (i, j)))?;
        out.insert((i, j), p)?;
    }
    Ok(out)
}

fn check_down_closed(data: &PartialNet) -> Result<()> {
    if !data.is_down_closed() {
        return Err(Error::InvalidArgument("boundary data must be down-closed".into()));
    }
    if data.is_empty() {
        return Err(Error::InvalidArgument("no points to lift".into()));
    }
    Ok(())
}

/// Extensive lift of down-closed boundary data: the axis points are moved
/// off the data's join by random elements of a random supplementary center
/// and every other point is the meet of its ray from the center with the
/// plane of its three predecessors.
pub fn lift_partial(data: &PartialNet, seed: u64) -> Result<PartialLift> {
    check_down_closed(data)?;
    let dim = lift_dimension(data);
    let emb = embedded(data, dim)?;
    let screen = Subspace::span(emb.points().map(|(_, p)| p))?;
    let mut rng = sample::rng(seed);
    let axis = axis_sites(data).len();
    if screen.rank() == axis {
        return Ok(PartialLift {
            lifted: emb,
            center: Subspace::empty(dim),
            screen,
            seed,
            original_dim: data.ambient_dim(),
        });
    }
    let center = sample::random_supplement(&mut rng, &screen)?;
    let lifted = lift_with_center(&emb, &center, &mut rng)?;
    Ok(PartialLift {
        lifted,
        center,
        screen,
        seed,
        original_dim: data.ambient_dim(),
    })
}

/// Lift of a net already sitting in the lift's space (`RP^{a+b}` or
/// larger), from a given center supplementary to the net's join.
pub fn lift(net: &QNet, center: &Subspace, seed: u64) -> Result<LiftResult> {
    net.require_nondegenerate()?;
    let screen = net.span();
    if !are_supplementary(center, &screen)? {
        return Err(Error::NotSupplementary);
    }
    let data = PartialNet::from_net(net, |_| true);
    let lifted = if center.is_empty() {
        data
    } else {
        lift_with_center(&data, center, &mut sample::rng(seed))?
    };
    Ok(LiftResult {
        lifted: lifted.to_net()?,
        center: center.clone(),
        screen,
        seed,
        original_dim: net.ambient_dim(),
    })
}

/// Zero-pad `net` into `RP^{max(n, a+b)}`, draw a supplementary center and
/// lift. Extensive inputs come back unchanged apart from the padding.
pub fn embed_and_lift(net: &QNet, seed: u64) -> Result<LiftResult> {
    net.require_nondegenerate()?;
    let part = lift_partial(&PartialNet::from_net(net, |_| true), seed)?;
    Ok(LiftResult {
        lifted: part.lifted.to_net()?,
        center: part.center,
        screen: part.screen,
        seed,
        original_dim: net.ambient_dim(),
    })
}
