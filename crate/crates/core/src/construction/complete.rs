//! Point-by-point completion of boundary data inside an extensive lift.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::random::face_is_nondegenerate;
use crate::error::{Error, Result};
use crate::invariants::is_bs_koenigs;
use crate::lift::{lift_partial, PartialLift, PartialNet};
use crate::net::{GridDomain, QNet, Site};
use crate::projective::{HPoint, Scalar, Subspace};
use crate::sample::{self, Rng};

/// How free points on a Kœnigs line are picked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Choices {
    /// Seeded random line parameters.
    Seeded(u64),
    /// Line parameter `t` per site. On the admissible line through
    /// `P(i-1,j-1)` the new point is `r + t·P(i-1,j-1)`, with `r` the first
    /// reduced basis vector of that line other than `P(i-1,j-1)`.
    Explicit(BTreeMap<Site, Scalar>),
}

pub(crate) struct Workspace {
    lift: PartialLift,
    base: PartialNet,
    step: &'static str,
}

fn construction_error(step: &str, site: Site, reason: impl Into<String>) -> Error {
    Error::Construction {
        step: step.to_string(),
        site,
        reason: reason.into(),
    }
}

/// Planarity, face non-degeneracy and the Kœnigs condition on every
/// complete face and 2x2-quad window of the boundary.
pub fn validate_boundary(boundary: &PartialNet) -> Result<()> {
    if !boundary.is_down_closed() {
        return Err(Error::InvalidArgument("boundary data must be down-closed".into()));
    }
    for (i, j) in boundary.complete_faces() {
        let c = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
        let pts = c.map(|s| boundary.get(s).expect("complete face"));
        if !face_is_nondegenerate(pts) {
            return Err(Error::InvalidArgument(format!("boundary face {:?} is degenerate or not planar", (i, j))));
        }
    }
    let d = boundary.domain();
    if d.a() >= 2 && d.b() >= 2 {
        for w in d.subwindows(2, 2) {
            if w.sites().all(|s| boundary.contains(s)) {
                let sub = QNet::from_fn(w, |s| boundary.try_at(s).cloned())?;
                if !is_bs_koenigs(&sub)? {
                    return Err(Error::NotKoenigs(format!("boundary window at {:?}", (w.i_min, w.j_min))));
                }
            }
        }
    }
    Ok(())
}

impl Workspace {
    pub(crate) fn new(boundary: &PartialNet, seed: u64, step: &'static str) -> Result<Self> {
        validate_boundary(boundary)?;
        let lift = lift_partial(boundary, seed)?;
        Ok(Workspace {
            lift,
            base: boundary.clone(),
            step,
        })
    }

    pub(crate) fn domain(&self) -> GridDomain {
        self.base.domain()
    }

    pub(crate) fn has(&self, site: Site) -> bool {
        self.base.contains(site)
    }

    /// Lifted point, with coordinates transposed when `t` is set.
    pub(crate) fn lifted(&self, (i, j): Site, t: bool) -> Result<&HPoint> {
        let site = if t { (j, i) } else { (i, j) };
        self.lift
            .lifted
            .get(site)
            .ok_or_else(|| construction_error(self.step, site, "needed point is missing"))
    }

    pub(crate) fn error(&self, site: Site, reason: impl Into<String>) -> Error {
        construction_error(self.step, site, reason)
    }

    /// The line of admissible Kœnigs positions for `(i,j)`: the meet of the
    /// face plane with the join of `(i-2,j-2), (i-1,j-1), (i,j-2), (i-2,j)`.
    pub(crate) fn koenigs_line(&self, (i, j): Site) -> Result<Subspace> {
        let t = false;
        let plane = Subspace::span([
            self.lifted((i - 1, j - 1), t)?,
            self.lifted((i, j - 1), t)?,
            self.lifted((i - 1, j), t)?,
        ])?;
        let space = Subspace::span([
            self.lifted((i - 2, j - 2), t)?,
            self.lifted((i - 1, j - 1), t)?,
            self.lifted((i, j - 2), t)?,
            self.lifted((i - 2, j), t)?,
        ])?;
        let line = plane.meet(&space)?;
        if line.projective_dim() != 1 {
            return Err(self.error((i, j), format!("admissible locus has dimension {}", line.projective_dim())));
        }
        Ok(line)
    }

    /// Subspace containing `(i,j)` when the `m`-th transform is to be
    /// Laplace degenerate at the window ending in column `i`: the join of
    /// the `m`-th transform point of the previous window with the column
    /// points below `(i,j)`. With `t` set, rows and columns swap roles.
    pub(crate) fn degeneracy_space(&self, (i, j): Site, m: i64, t: bool) -> Result<Subspace> {
        let n = self.lift.lifted.ambient_dim();
        let mut focal = Subspace::full(n);
        for k in i - m - 1..i {
            let column = Subspace::span(
                (j - m..=j)
                    .map(|l| self.lifted((k, l), t))
                    .collect::<Result<Vec<_>>>()?,
            )?;
            focal = focal.meet(&column)?;
        }
        let focal = focal.as_point().ok_or_else(|| {
            self.error(if t { (j, i) } else { (i, j) }, "previous transform point is not a point")
        })?;
        let mut space = Subspace::point(&focal);
        for l in j - m..j {
            space = space.join_point(self.lifted((i, l), t)?)?;
        }
        Ok(space)
    }

    /// Place a lifted point, projecting it back into the input's space.
    pub(crate) fn place(&mut self, (i, j): Site, lifted: HPoint) -> Result<()> {
        let base = self.lift.project(&lifted)?;
        if self.domain().contains((i - 1, j - 1)) {
            let corners = |get: &dyn Fn(Site) -> Option<HPoint>| -> Option<[HPoint; 4]> {
                Some([get((i - 1, j - 1))?, get((i, j - 1))?, get((i, j))?, get((i - 1, j))?])
            };
            let lifted_face = corners(&|s| if s == (i, j) { Some(lifted.clone()) } else { self.lift.lifted.get(s).cloned() });
            let base_face = corners(&|s| if s == (i, j) { Some(base.clone()) } else { self.base.get(s).cloned() });
            for face in [lifted_face, base_face] {
                let face = face.ok_or_else(|| self.error((i, j), "face predecessors missing"))?;
                if !face_is_nondegenerate([&face[0], &face[1], &face[2], &face[3]]) {
                    return Err(self.error((i, j), "new point makes its face degenerate"));
                }
            }
        }
        self.lift.lifted.insert((i, j), lifted)?;
        self.base.insert((i, j), base)?;
        Ok(())
    }

    /// Image of a lifted subspace in the input's space.
    fn project_subspace(&self, space: &Subspace) -> Result<Subspace> {
        let pts = space
            .basis()
            .iter()
            .map(|row| HPoint::new(row.clone()).and_then(|p| self.lift.project(&p)))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(&pts)
    }

    /// The lifted point of `line` over the input-space point `q`.
    fn lift_onto(&self, site: Site, q: &HPoint, line: &Subspace) -> Result<HPoint> {
        let q = q.embed(line.ambient_dim())?;
        let meet = self.lift.center.join_point(&q)?.meet(line)?;
        meet.as_point()
            .ok_or_else(|| self.error(site, "chosen point does not lift uniquely"))
    }

    /// The point of the lifted `line` whose image is `r + t·anchor`, where
    /// `anchor` is a point of the image line in the input's space and `r`
    /// the first canonical basis vector of the image line not equal to it.
    pub(crate) fn point_on_line(&self, site: Site, line: &Subspace, anchor: &HPoint, t: &Scalar) -> Result<HPoint> {
        let image = self.project_subspace(line)?;
        if image.projective_dim() != 1 {
            return Err(self.error(site, "line collapses under projection"));
        }
        let r = image
            .basis()
            .iter()
            .find(|row| HPoint::new((*row).clone()).map(|p| &p != anchor).unwrap_or(false))
            .ok_or_else(|| self.error(site, "line has no second point"))?;
        let v: Vec<Scalar> = r
            .iter()
            .zip(anchor.coords())
            .map(|(x, y)| x + t * y)
            .collect();
        if v.iter().all(Zero::is_zero) {
            return Err(self.error(site, "parameter selects the zero vector"));
        }
        self.lift_onto(site, &HPoint::new(v)?, line)
    }

    /// Point of the input net at `site`.
    pub(crate) fn base(&self, site: Site) -> Result<&HPoint> {
        self.base
            .get(site)
            .ok_or_else(|| construction_error(self.step, site, "needed point is missing"))
    }

    /// Place a free point on the lifted `line`, picked by `choices`
    /// relative to the input-space point at `anchor`; seeded draws that
    /// break non-degeneracy are redrawn.
    pub(crate) fn place_free(&mut self, site: Site, line: &Subspace, anchor: Site, choices: &Choices, rng: &mut Rng) -> Result<()> {
        let anchor = self.base(anchor)?.clone();
        match choices {
            Choices::Explicit(params) => {
                let t = params
                    .get(&site)
                    .ok_or_else(|| self.error(site, "no line parameter given"))?;
                let p = self.point_on_line(site, line, &anchor, t)?;
                self.place(site, p)
            }
            Choices::Seeded(_) => {
                for _ in 0..sample::RETRIES {
                    let t = sample::random_scalar(rng);
                    let Ok(p) = self.point_on_line(site, line, &anchor, &t) else { continue };
                    if self.place(site, p).is_ok() {
                        return Ok(());
                    }
                }
                Err(Error::GeneralPosition {
                    attempts: sample::RETRIES,
                    context: format!("{} at {:?}", self.step, site),
                })
            }
        }
    }

    /// The unique point of `line ∩ space`.
    pub(crate) fn place_meet(&mut self, site: Site, line: &Subspace, space: &Subspace) -> Result<()> {
        let meet = line.meet(space)?;
        let p = meet
            .as_point()
            .ok_or_else(|| self.error(site, format!("constraint meets the Kœnigs line in dimension {}", meet.projective_dim())))?;
        self.place(site, p)
    }

    pub(crate) fn finish(self) -> Result<QNet> {
        let net = self.base.to_net()?;
        net.require_nondegenerate()?;
        Ok(net)
    }
}

/// Sites without a point yet, column by column.
pub(crate) fn missing_sites(ws: &Workspace) -> Vec<Site> {
    ws.domain().sites().filter(|&s| !ws.has(s)).collect()
}
