use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::net::{GridDomain, QNet, Site};
use crate::projective::HPoint;

/// Points on a subset of a window, used for boundary data. Lifting and
/// completion require the subset to be down-closed: with `(i, j)` it
/// contains every `(i', j')` of the window with `i' <= i`, `j' <= j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialNet {
    domain: GridDomain,
    ambient_dim: usize,
    points: BTreeMap<Site, HPoint>,
}

impl PartialNet {
    pub fn new(domain: GridDomain, ambient_dim: usize) -> Self {
        PartialNet {
            domain,
            ambient_dim,
            points: BTreeMap::new(),
        }
    }

    /// The sites of `net` selected by `keep`.
    pub fn from_net(net: &QNet, keep: impl Fn(Site) -> bool) -> Self {
        PartialNet {
            domain: net.domain(),
            ambient_dim: net.ambient_dim(),
            points: net
                .sites()
                .filter(|(s, _)| keep(*s))
                .map(|(s, p)| (s, p.clone()))
                .collect(),
        }
    }

    pub fn domain(&self) -> GridDomain {
        self.domain
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn get(&self, site: Site) -> Option<&HPoint> {
        self.points.get(&site)
    }

    pub fn try_at(&self, site: Site) -> Result<&HPoint> {
        self.get(site).ok_or(Error::OutOfRange(site))
    }

    pub fn contains(&self, site: Site) -> bool {
        self.points.contains_key(&site)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn insert(&mut self, site: Site, p: HPoint) -> Result<()> {
        if !self.domain.contains(site) {
            return Err(Error::OutOfRange(site));
        }
        if p.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: p.ambient_dim(),
            });
        }
        self.points.insert(site, p);
        Ok(())
    }

    pub fn points(&self) -> impl Iterator<Item = (Site, &HPoint)> + '_ {
        self.points.iter().map(|(s, p)| (*s, p))
    }

    pub fn is_down_closed(&self) -> bool {
        let d = self.domain;
        self.points.keys().all(|&(i, j)| {
            (i == d.i_min || self.contains((i - 1, j))) && (j == d.j_min || self.contains((i, j - 1)))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.points.len() == self.domain.len()
    }

    /// The full net once every site is present.
    pub fn to_net(&self) -> Result<QNet> {
        QNet::from_fn(self.domain, |s| {
            self.get(s)
                .cloned()
                .ok_or_else(|| Error::InvalidArgument(format!("site {s:?} has no point")))
        })
    }

    /// Faces with all four corners present.
    pub fn complete_faces(&self) -> Vec<Site> {
        self.domain
            .faces()
            .filter(|&(i, j)| {
                [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)]
                    .iter()
                    .all(|s| self.contains(*s))
            })
            .collect()
    }
}
