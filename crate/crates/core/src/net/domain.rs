use crate::error::{Error, Result};

/// Lattice site `(i, j)`.
pub type Site = (i64, i64);

/// Inclusive rectangular window `[i_min, i_max] x [j_min, j_max]` of `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridDomain {
    pub i_min: i64,
    pub i_max: i64,
    pub j_min: i64,
    pub j_max: i64,
}

impl GridDomain {
    pub fn new(i_min: i64, i_max: i64, j_min: i64, j_max: i64) -> Result<Self> {
        if i_min > i_max || j_min > j_max {
            return Err(Error::InvalidArgument(format!(
                "empty window [{i_min},{i_max}]x[{j_min},{j_max}]"
            )));
        }
        Ok(GridDomain {
            i_min,
            i_max,
            j_min,
            j_max,
        })
    }

    /// `Σ_{a,b} = {0..a} x {0..b}`.
    pub fn sigma(a: usize, b: usize) -> Self {
        GridDomain {
            i_min: 0,
            i_max: a as i64,
            j_min: 0,
            j_max: b as i64,
        }
    }

    /// Width `a = i_max - i_min`.
    pub fn a(&self) -> usize {
        (self.i_max - self.i_min) as usize
    }

    /// Width `b = j_max - j_min`.
    pub fn b(&self) -> usize {
        (self.j_max - self.j_min) as usize
    }

    pub fn len(&self) -> usize {
        (self.a() + 1) * (self.b() + 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, (i, j): Site) -> bool {
        (self.i_min..=self.i_max).contains(&i) && (self.j_min..=self.j_max).contains(&j)
    }

    pub(crate) fn index(&self, (i, j): Site) -> usize {
        ((i - self.i_min) as usize) * (self.b() + 1) + (j - self.j_min) as usize
    }

    /// Sites in row-major order (`i` outer, `j` inner).
    pub fn sites(&self) -> impl Iterator<Item = Site> + '_ {
        (self.i_min..=self.i_max).flat_map(move |i| (self.j_min..=self.j_max).map(move |j| (i, j)))
    }

    /// Lower-left corners of all unit faces.
    pub fn faces(&self) -> impl Iterator<Item = Site> + '_ {
        (self.i_min..self.i_max).flat_map(move |i| (self.j_min..self.j_max).map(move |j| (i, j)))
    }

    /// Window of an `m`-fold Laplace transform: `[i_min, i_max-m] x [j_min, j_max-m]`.
    pub fn shrink(&self, m: usize) -> Option<GridDomain> {
        let m = m as i64;
        (self.i_max - m >= self.i_min && self.j_max - m >= self.j_min).then_some(GridDomain {
            i_min: self.i_min,
            i_max: self.i_max - m,
            j_min: self.j_min,
            j_max: self.j_max - m,
        })
    }

    pub fn transpose(&self) -> GridDomain {
        GridDomain {
            i_min: self.j_min,
            i_max: self.j_max,
            j_min: self.i_min,
            j_max: self.i_max,
        }
    }

    /// All `c x d` subwindows.
    pub fn subwindows(&self, c: usize, d: usize) -> Vec<GridDomain> {
        let (c, d) = (c as i64, d as i64);
        let mut out = Vec::new();
        for i in self.i_min..=self.i_max - c {
            for j in self.j_min..=self.j_max - d {
                out.push(GridDomain {
                    i_min: i,
                    i_max: i + c,
                    j_min: j,
                    j_max: j + d,
                });
            }
        }
        out
    }
}
