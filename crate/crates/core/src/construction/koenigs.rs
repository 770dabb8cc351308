use super::complete::{missing_sites, Choices, Workspace};
#[cfg(test)]
use super::random::random_qnet;
use crate::error::{Error, Result};
use crate::lift::PartialNet;
use crate::net::{GridDomain, QNet, Site};
use crate::projective::linalg::Row;
use crate::projective::HPoint;
use crate::sample;

/// Free choices only move points along admissible lines, and the result
/// does not depend on the lift, so one fixed lift seed serves every call.
pub(crate) const LIFT_SEED: u64 = 0x1f7;

/// Copy of `boundary` restricted to the sites selected by `shape`
/// (relative to the window's lower corner), which must all be present.
pub(crate) fn take_shape(boundary: &PartialNet, shape: impl Fn(i64, i64) -> bool, what: &str) -> Result<PartialNet> {
    let d = boundary.domain();
    let mut out = PartialNet::new(d, boundary.ambient_dim());
    for (i, j) in d.sites() {
        if shape(i - d.i_min, j - d.j_min) {
            let p = boundary.get((i, j)).ok_or_else(|| {
                Error::InvalidArgument(format!("{what}: boundary point {:?} is missing", (i, j)))
            })?;
            out.insert((i, j), p.clone())?;
        }
    }
    Ok(out)
}

pub(crate) fn restrict_shape(net: &QNet, shape: impl Fn(i64, i64) -> bool) -> PartialNet {
    let d = net.domain();
    PartialNet::from_net(net, |(i, j)| shape(i - d.i_min, j - d.j_min))
}

/// Strips `i <= 1` and `j <= 1`.
pub(crate) fn koenigs_shape(i: i64, j: i64) -> bool {
    i <= 1 || j <= 1
}

/// Initial data for [`extend_bs_koenigs`]: the two strips of width one.
pub fn koenigs_boundary(net: &QNet) -> PartialNet {
    restrict_shape(net, koenigs_shape)
}

/// Complete data on the strips `i <= 1`, `j <= 1` to a BS-Kœnigs net.
/// Every further point lies on the admissible line through `P(i-1,j-1)`,
/// found in an extensive lift; its position on that line is a free choice.
pub fn extend_bs_koenigs(boundary: &PartialNet, choices: &Choices) -> Result<QNet> {
    let data = take_shape(boundary, koenigs_shape, "extend_bs_koenigs")?;
    let mut ws = Workspace::new(&data, LIFT_SEED, "extend_bs_koenigs")?;
    let mut rng = sample::rng(match choices {
        Choices::Seeded(seed) => *seed,
        Choices::Explicit(_) => 0,
    });
    for (i, j) in missing_sites(&ws) {
        let line = ws.koenigs_line((i, j))?;
        ws.place_free((i, j), &line, (i - 1, j - 1), choices, &mut rng)?;
    }
    ws.finish()
}

/// Random BS-Kœnigs net on `Σ_{a,b}` in `RP^n`. Representatives obey
/// `y(i+1,j+1) = y(i,j) + c(i,j)·(y(i+1,j) - y(i,j+1))` with random axis
/// vectors and random coefficients `c`, which keeps coordinates small.
pub fn random_bs_koenigs(a: usize, b: usize, n: usize, seed: u64) -> Result<QNet> {
    if n < 2 {
        return Err(Error::InvalidArgument("ambient dimension must be at least 2".into()));
    }
    let mut rng = sample::rng(seed);
    let d = GridDomain::sigma(a, b);
    sample::retry(&mut rng, "random BS-Kœnigs net", |rng| {
        let mut reps: Vec<Vec<Row>> = vec![Vec::with_capacity(b + 1); a + 1];
        for (i, col) in reps.iter_mut().enumerate() {
            for j in 0..=b {
                let v = if i == 0 || j == 0 {
                    sample::random_vector(rng, n + 1)
                } else {
                    Vec::new()
                };
                col.push(v);
            }
        }
        for i in 1..=a {
            for j in 1..=b {
                let c = sample::random_scalar(rng);
                let v = (0..=n)
                    .map(|k| &reps[i - 1][j - 1][k] + &c * (&reps[i][j - 1][k] - &reps[i - 1][j][k]))
                    .collect();
                reps[i][j] = v;
            }
        }
        let net = QNet::from_fn(d, |(i, j)| HPoint::new(reps[i as usize][j as usize].clone())).ok()?;
        net.is_nondegenerate().then_some(net)
    })
}

/// Sites of a window that [`extend_bs_koenigs`] fills in.
pub fn koenigs_free_sites(domain: GridDomain) -> Vec<Site> {
    domain
        .sites()
        .filter(|&(i, j)| !koenigs_shape(i - domain.i_min, j - domain.j_min))
        .collect()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::invariants::{is_bs_koenigs, is_d_koenigs};
    use crate::net::diagonal_intersection_net;
    use crate::projective::{scalar::int, Subspace};

    #[test]
    fn random_outputs_are_koenigs() {
        for seed in 0..4 {
            let net = random_bs_koenigs(3, 3, 3, seed).unwrap();
            assert!(net.is_nondegenerate());
            assert!(is_bs_koenigs(&net).unwrap(), "seed {seed}");
            let d = diagonal_intersection_net(&net).unwrap();
            assert!(is_d_koenigs(&d).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn single_window_locus_passes_through_the_center() {
        let base = random_qnet(2, 2, 4, 3).unwrap();
        let boundary = koenigs_boundary(&base);
        let nets: Vec<QNet> = [int(2), int(-3)]
            .into_iter()
            .map(|t| extend_bs_koenigs(&boundary, &Choices::Explicit(BTreeMap::from([((2, 2), t)]))).unwrap())
            .collect();
        for net in &nets {
            assert!(is_bs_koenigs(net).unwrap());
        }
        assert_ne!(nets[0], nets[1]);
        let line = Subspace::span([nets[0].at((2, 2)), nets[1].at((2, 2))]).unwrap();
        assert!(line.contains_point(base.at((1, 1))));
    }

    #[test]
    fn off_line_choice_is_not_koenigs() {
        let net = random_bs_koenigs(2, 2, 3, 8).unwrap();
        let plane = Subspace::span([net.at((1, 1)), net.at((2, 1)), net.at((1, 2))]).unwrap();
        let mut rng = sample::rng(1);
        let mut other = net.clone();
        loop {
            let p = sample::random_point_in(&mut rng, &plane).unwrap();
            let line = Subspace::span([net.at((1, 1)), net.at((2, 2))]).unwrap();
            if !line.contains_point(&p) {
                other.set((2, 2), p).unwrap();
                break;
            }
        }
        assert!(other.is_qnet());
        assert!(!is_bs_koenigs(&other).unwrap());
    }

    #[test]
    fn explicit_parameters_are_required() {
        let base = random_qnet(2, 2, 3, 1).unwrap();
        let err = extend_bs_koenigs(&koenigs_boundary(&base), &Choices::Explicit(BTreeMap::new()));
        assert!(matches!(err, Err(Error::Construction { .. })));
    }

    #[test]
    fn missing_strip_point_is_rejected() {
        let base = random_qnet(2, 2, 3, 1).unwrap();
        let mut boundary = PartialNet::from_net(&base, |(i, j)| koenigs_shape(i, j) && (i, j) != (0, 2));
        assert!(extend_bs_koenigs(&boundary, &Choices::Seeded(0)).is_err());
        boundary.insert((0, 2), base.at((0, 2)).clone()).unwrap();
        assert!(extend_bs_koenigs(&boundary, &Choices::Seeded(0)).is_ok());
    }
}
