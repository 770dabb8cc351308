//! JSON net files. Coordinates are strings, `"p/q"` or decimal.

use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use qnet::lift::PartialNet;
use qnet::net::{GridDomain, QNet};
use qnet::projective::{HPoint, Scalar, Subspace};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetFile {
    pub ambient_dim: usize,
    pub i_range: [i64; 2],
    pub j_range: [i64; 2],
    /// `points[i - i0][j - j0]`; `null` marks a missing point in boundary data.
    pub points: Vec<Vec<Option<Vec<String>>>>,
}

/// Parse `"p/q"`, an integer, or a decimal such as `-1.25` or `3e-2`,
/// exactly.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let s = text.trim();
    if s.contains('/') {
        let r = Scalar::from_str(s).map_err(|e| anyhow!("bad rational {text:?}: {e}"))?;
        return Ok(r);
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(k) => (&s[..k], s[k + 1..].parse::<i64>().with_context(|| format!("bad exponent in {text:?}"))?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() || !(whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())) {
        bail!("bad number {text:?}");
    }
    let numer = BigInt::from_str(&format!("{whole}{frac}0")).expect("digits") / 10;
    let scale = exponent - frac.len() as i64;
    let ten = Scalar::from_integer(BigInt::from(10));
    let factor: Scalar = if scale >= 0 {
        Pow::pow(&ten, scale as u64)
    } else {
        Scalar::one() / Pow::pow(&ten, scale.unsigned_abs())
    };
    let value = Scalar::from_integer(numer) * factor;
    Ok(if negative { -value } else { value })
}

pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

fn parse_point(coords: &[String], n: usize, site: (i64, i64)) -> Result<HPoint> {
    if coords.len() != n + 1 {
        bail!("point {site:?} has {} coordinates, expected {}", coords.len(), n + 1);
    }
    let v = coords.iter().map(|c| parse_scalar(c)).collect::<Result<Vec<_>>>()?;
    if v.iter().all(Zero::is_zero) {
        bail!("point {site:?} is the zero vector");
    }
    Ok(HPoint::new(v)?)
}

fn write_point(p: &HPoint) -> Vec<String> {
    p.coords().iter().map(format_scalar).collect()
}

impl NetFile {
    pub fn domain(&self) -> Result<GridDomain> {
        let [i0, i1] = self.i_range;
        let [j0, j1] = self.j_range;
        let d = GridDomain::new(i0, i1, j0, j1)?;
        if self.points.len() != d.a() + 1 || self.points.iter().any(|col| col.len() != d.b() + 1) {
            bail!("points array does not match i_range {:?} and j_range {:?}", self.i_range, self.j_range);
        }
        Ok(d)
    }

    pub fn to_partial(&self) -> Result<PartialNet> {
        let d = self.domain()?;
        let mut out = PartialNet::new(d, self.ambient_dim);
        for (i, j) in d.sites() {
            if let Some(coords) = &self.points[(i - d.i_min) as usize][(j - d.j_min) as usize] {
                out.insert((i, j), parse_point(coords, self.ambient_dim, (i, j))?)?;
            }
        }
        Ok(out)
    }

    pub fn to_net(&self) -> Result<QNet> {
        let part = self.to_partial()?;
        if !part.is_complete() {
            bail!("net file has missing points");
        }
        Ok(part.to_net()?)
    }

    pub fn from_partial(net: &PartialNet) -> Self {
        let d = net.domain();
        let points = (d.i_min..=d.i_max)
            .map(|i| (d.j_min..=d.j_max).map(|j| net.get((i, j)).map(write_point)).collect())
            .collect();
        NetFile {
            ambient_dim: net.ambient_dim(),
            i_range: [d.i_min, d.i_max],
            j_range: [d.j_min, d.j_max],
            points,
        }
    }

    pub fn from_net(net: &QNet) -> Self {
        Self::from_partial(&PartialNet::from_net(net, |_| true))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_json(path, self)
    }
}

/// A subspace as its reduced basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceFile {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl SubspaceFile {
    pub fn from_subspace(s: &Subspace) -> Self {
        SubspaceFile {
            ambient_dim: s.ambient_dim(),
            basis: s.basis().iter().map(|row| row.iter().map(format_scalar).collect()).collect(),
        }
    }
}

pub fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qnet::construction::random_qnet;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n.into(), d.into())
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("3/6").unwrap(), q(1, 2));
        assert_eq!(parse_scalar("-7").unwrap(), q(-7, 1));
        assert_eq!(parse_scalar("0.125").unwrap(), q(1, 8));
        assert_eq!(parse_scalar("-.5").unwrap(), q(-1, 2));
        assert_eq!(parse_scalar("1.5e2").unwrap(), q(150, 1));
        assert_eq!(parse_scalar("25e-2").unwrap(), q(1, 4));
        assert_eq!(parse_scalar("0.1").unwrap(), q(1, 10));
        for bad in ["", "1/0", "abc", "1.2.3", "-", "1e"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
        assert_eq!(format_scalar(&q(-3, 4)), "-3/4");
    }

    #[test]
    fn round_trip() {
        let net = random_qnet(2, 3, 3, 4).unwrap();
        let file = NetFile::from_net(&net);
        let text = serde_json::to_string(&file).unwrap();
        let back: NetFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_net().unwrap(), net);
    }

    #[test]
    fn malformed_files() {
        let mut file = NetFile::from_net(&random_qnet(1, 1, 2, 0).unwrap());
        file.points[0][0] = Some(vec!["0".into(), "0".into(), "0".into()]);
        assert!(file.to_net().is_err());
        file.points[0][0] = None;
        assert!(file.to_net().is_err());
        assert!(file.to_partial().is_ok());
        file.points.pop();
        assert!(file.domain().is_err());
    }
}
