use super::complete::{missing_sites, Choices, Workspace};
use super::koenigs::{random_bs_koenigs, restrict_shape, take_shape, LIFT_SEED};
use super::random::face_is_nondegenerate;
use crate::error::{Error, Result};
use crate::lift::PartialNet;
use crate::net::{classify_degeneracy, laplace_iterate, DegeneracyKind, Direction, GridDomain, LaplaceOutcome, QNet};
use crate::projective::{project_unchecked, HPoint, Subspace};
use crate::sample;

fn laplace_shape(m: i64) -> impl Fn(i64, i64) -> bool {
    move |i, j| i <= m || j < m
}

fn double_shape(m: i64) -> impl Fn(i64, i64) -> bool {
    move |i, j| i < m || j < m || (i, j) == (m, m)
}

/// Initial data for [`extend_laplace_degenerate`]: columns `0..=m` and
/// rows `0..m`.
pub fn laplace_boundary(net: &QNet, m: usize) -> PartialNet {
    restrict_shape(net, laplace_shape(m as i64))
}

/// Initial data for [`construct_double_degenerate`]: columns and rows
/// `0..m` and the site `(m,m)`.
pub fn double_boundary(net: &QNet, m: usize) -> PartialNet {
    restrict_shape(net, double_shape(m as i64))
}

fn require_window(d: GridDomain, a: usize, b: usize, what: &str) -> Result<()> {
    if d.a() < a || d.b() < b {
        return Err(Error::WindowTooSmall(format!(
            "{what} needs at least a {a}x{b} window, got {}x{}",
            d.a(),
            d.b()
        )));
    }
    Ok(())
}

/// The unique BS-Kœnigs completion of data on columns `0..=m` and rows
/// `0..m` whose `m`-th forward transform is Laplace degenerate.
pub fn extend_laplace_degenerate(boundary: &PartialNet, m: usize) -> Result<QNet> {
    if m < 2 {
        return Err(Error::InvalidArgument(
            "extend_laplace_degenerate needs m >= 2; use extend_laplace_degenerate_first for m = 1".into(),
        ));
    }
    require_window(boundary.domain(), m + 1, m, "extend_laplace_degenerate")?;
    let m = m as i64;
    let data = take_shape(boundary, laplace_shape(m), "extend_laplace_degenerate")?;
    let mut ws = Workspace::new(&data, LIFT_SEED, "extend_laplace_degenerate")?;
    for site in missing_sites(&ws) {
        let line = ws.koenigs_line(site)?;
        let space = ws.degeneracy_space(site, m, false)?;
        ws.place_meet(site, &line, &space)?;
    }
    ws.finish()
}

/// BS-Kœnigs net with Laplace degenerate first forward transform, from
/// data on columns `0..=1` and row `0`. Row `1` has one free point per
/// column, picked by `choices` relative to `P(i,0)`; the rest is unique.
pub fn extend_laplace_degenerate_first(boundary: &PartialNet, choices: &Choices) -> Result<QNet> {
    require_window(boundary.domain(), 2, 1, "extend_laplace_degenerate_first")?;
    let data = take_shape(boundary, laplace_shape(1), "extend_laplace_degenerate_first")?;
    let mut ws = Workspace::new(&data, LIFT_SEED, "extend_laplace_degenerate_first")?;
    let mut rng = sample::rng(match choices {
        Choices::Seeded(seed) => *seed,
        Choices::Explicit(_) => 0,
    });
    let j0 = data.domain().j_min;
    for (i, j) in missing_sites(&ws) {
        let space = ws.degeneracy_space((i, j), 1, false)?;
        if j == j0 + 1 {
            ws.place_free((i, j), &space, (i, j - 1), choices, &mut rng)?;
        } else {
            let line = ws.koenigs_line((i, j))?;
            ws.place_meet((i, j), &line, &space)?;
        }
    }
    ws.finish()
}

/// The unique BS-Kœnigs completion of data on columns and rows `0..m`
/// plus `(m,m)` with both the `m`-th forward and backward transforms
/// Laplace degenerate. Column `m` is fixed by the backward condition
/// along the first columns; every later column by the forward one.
pub fn construct_double_degenerate(boundary: &PartialNet, m: usize) -> Result<QNet> {
    if m < 2 {
        return Err(Error::InvalidArgument(
            "construct_double_degenerate needs m >= 2; use construct_double_degenerate_first for m = 1".into(),
        ));
    }
    require_window(boundary.domain(), m + 1, m + 1, "construct_double_degenerate")?;
    let m = m as i64;
    let data = take_shape(boundary, double_shape(m), "construct_double_degenerate")?;
    let d = data.domain();
    let mut ws = Workspace::new(&data, LIFT_SEED, "construct_double_degenerate")?;
    for (i, j) in missing_sites(&ws) {
        let line = ws.koenigs_line((i, j))?;
        let space = if i == d.i_min + m {
            ws.degeneracy_space((j, i), m, true)?
        } else {
            ws.degeneracy_space((i, j), m, false)?
        };
        ws.place_meet((i, j), &line, &space)?;
    }
    ws.finish()
}

fn meet_point(a: [&HPoint; 2], b: [&HPoint; 2], site: (i64, i64)) -> Result<HPoint> {
    Subspace::span(a)?.meet(&Subspace::span(b)?)?.as_point().ok_or_else(|| Error::Construction {
        step: "construct_double_degenerate_first".into(),
        site,
        reason: "edge lines do not meet in a point".into(),
    })
}

/// Fill `points` (all sites with `i >= 1` and `j >= 1` relative to the
/// window) from the axes and the focal points: vertical edges between rows
/// `j` and `j+1` pass through `rows[j]`, horizontal edges between columns
/// `i` and `i+1` through `cols[i]`.
fn fill_from_focal(axes: &PartialNet, rows: &[HPoint], cols: &[HPoint]) -> Result<QNet> {
    let d = axes.domain();
    let mut net = axes.clone();
    for (i, j) in d.sites() {
        if net.contains((i, j)) {
            continue;
        }
        let (ri, rj) = ((i - d.i_min) as usize, (j - d.j_min) as usize);
        let p = meet_point(
            [net.try_at((i, j - 1))?, &rows[rj - 1]],
            [net.try_at((i - 1, j))?, &cols[ri - 1]],
            (i, j),
        )?;
        let face = [(i - 1, j - 1), (i, j - 1), (i, j), (i - 1, j)];
        net.insert((i, j), p)?;
        let pts = face.map(|s| net.get(s).expect("filled"));
        if !face_is_nondegenerate(pts) {
            return Err(Error::Construction {
                step: "construct_double_degenerate_first".into(),
                site: (i, j),
                reason: "face is degenerate".into(),
            });
        }
    }
    let net = net.to_net()?;
    net.require_nondegenerate()?;
    Ok(net)
}

fn both_degenerate(net: &QNet) -> Result<bool> {
    let kind = |m: i64, dir| -> Result<bool> {
        let t = laplace_iterate(net, m)?.into_result()?;
        Ok(classify_degeneracy(&t, dir).kind == DegeneracyKind::Laplace)
    };
    Ok(kind(1, Direction::Forward)? && kind(-1, Direction::Backward)?)
}

/// Net with both first transforms Laplace degenerate from data on the
/// strips `i <= 1`, `j <= 1`. The strips must already be compatible: every
/// vertical edge between rows `j` and `j+1` of the strip `j <= 1` passes
/// through the first forward transform point of row `j`, and likewise for
/// the horizontal edges of the strip `i <= 1`.
pub fn construct_double_degenerate_first(boundary: &PartialNet) -> Result<QNet> {
    require_window(boundary.domain(), 1, 1, "construct_double_degenerate_first")?;
    let data = take_shape(boundary, |i, j| i <= 1 || j <= 1, "construct_double_degenerate_first")?;
    let d = data.domain();
    let (i0, j0) = (d.i_min, d.j_min);
    let rows = (j0..d.j_max)
        .map(|j| {
            meet_point(
                [data.try_at((i0, j))?, data.try_at((i0, j + 1))?],
                [data.try_at((i0 + 1, j))?, data.try_at((i0 + 1, j + 1))?],
                (i0, j),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = (i0..d.i_max)
        .map(|i| {
            meet_point(
                [data.try_at((i, j0))?, data.try_at((i + 1, j0))?],
                [data.try_at((i, j0 + 1))?, data.try_at((i + 1, j0 + 1))?],
                (i, j0),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let mut axes = PartialNet::new(d, data.ambient_dim());
    for (s, p) in data.points().filter(|&((i, j), _)| i == i0 || j == j0) {
        axes.insert(s, p.clone())?;
    }
    let net = fill_from_focal(&axes, &rows, &cols)?;
    for (s, p) in data.points() {
        if net.at(s) != p {
            return Err(Error::Construction {
                step: "construct_double_degenerate_first".into(),
                site: s,
                reason: "strips are not compatible with a doubly degenerate net".into(),
            });
        }
    }
    if !both_degenerate(&net)? {
        return Err(Error::Construction {
            step: "construct_double_degenerate_first".into(),
            site: (i0, j0),
            reason: "result is not doubly Laplace degenerate".into(),
        });
    }
    Ok(net)
}

/// Random net on `Σ_{a,b}` in `RP^n` with both first transforms Laplace
/// degenerate: random focal points and axes, everything else forced.
pub fn random_double_degenerate_first(a: usize, b: usize, n: usize, seed: u64) -> Result<QNet> {
    if n < 2 || a == 0 || b == 0 {
        return Err(Error::InvalidArgument("need n >= 2 and a positive window".into()));
    }
    let mut rng = sample::rng(seed);
    sample::retry(&mut rng, "random doubly degenerate net", |rng| {
        let rows: Vec<HPoint> = (0..b).map(|_| sample::random_point(rng, n)).collect();
        let cols: Vec<HPoint> = (0..a).map(|_| sample::random_point(rng, n)).collect();
        let d = GridDomain::sigma(a, b);
        let mut axes = PartialNet::new(d, n);
        let origin = sample::random_point(rng, n);
        axes.insert((0, 0), origin).ok()?;
        for j in 0..b as i64 {
            let line = Subspace::span([axes.get((0, j))?, &rows[j as usize]]).ok()?;
            axes.insert((0, j + 1), sample::random_point_in(rng, &line).ok()?).ok()?;
        }
        for i in 0..a as i64 {
            let line = Subspace::span([axes.get((i, 0))?, &cols[i as usize]]).ok()?;
            axes.insert((i + 1, 0), sample::random_point_in(rng, &line).ok()?).ok()?;
        }
        let net = fill_from_focal(&axes, &rows, &cols).ok()?;
        both_degenerate(&net).ok()?.then_some(net)
    })
}

/// Seeds derived from `seed` for redraws.
fn attempts(seed: u64) -> impl Iterator<Item = u64> {
    (0..sample::RETRIES as u64).map(move |k| seed.wrapping_add(k.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

fn transforms_exist(net: &QNet, steps: &[i64]) -> bool {
    steps
        .iter()
        .all(|&m| matches!(laplace_iterate(net, m), Ok(LaplaceOutcome::Net(_))))
}

fn random_koenigs_with(a: usize, b: usize, n: usize, seed: u64, steps: &[i64], what: &str) -> Result<QNet> {
    for s in attempts(seed) {
        let net = random_bs_koenigs(a, b, n, s)?;
        if transforms_exist(&net, steps) {
            return Ok(net);
        }
    }
    Err(Error::GeneralPosition {
        attempts: sample::RETRIES,
        context: what.into(),
    })
}

/// Random BS-Kœnigs data on `Σ_{a,b}` in `RP^n` whose `m`-th forward
/// transform exists, restricted to the initial data of
/// [`extend_laplace_degenerate`].
pub fn random_laplace_boundary(a: usize, b: usize, n: usize, m: usize, seed: u64) -> Result<PartialNet> {
    let net = random_koenigs_with(a, b, n, seed, &[m as i64], "random_laplace_boundary")?;
    Ok(laplace_boundary(&net, m))
}

/// Random BS-Kœnigs data whose `m`-th forward and backward transforms
/// exist, restricted to the initial data of [`construct_double_degenerate`].
pub fn random_double_boundary(a: usize, b: usize, n: usize, m: usize, seed: u64) -> Result<PartialNet> {
    let net = random_koenigs_with(a, b, n, seed, &[m as i64, -(m as i64)], "random_double_boundary")?;
    Ok(double_boundary(&net, m))
}

fn goursat_attempt(a: usize, b: usize, m: usize, seed: u64) -> Result<QNet> {
    let step = |reason: &str| Error::Construction {
        step: "goursat_koenigs".into(),
        site: (0, 0),
        reason: reason.into(),
    };
    let boundary = random_laplace_boundary(a, b, a + b, m + 1, seed)?;
    let lifted = extend_laplace_degenerate(&boundary, m + 1)?;
    if !lifted.is_extensive() {
        return Err(step("intermediate net is not extensive"));
    }
    let top = laplace_iterate(&lifted, m as i64 + 1)?.into_result()?;
    let d = top.domain();
    let focal: Vec<&HPoint> = (d.j_min..=d.j_max).map(|j| top.at((d.i_min, j))).collect();
    let center = Subspace::span(focal.iter().copied())?;
    if center.rank() != focal.len() {
        return Err(step("degeneracy points are dependent"));
    }
    let screen = sample::random_supplement(&mut sample::rng(seed), &center)?;
    let net = lifted.map_points(|_, p| {
        let q = project_unchecked(p, &center, &screen)?;
        HPoint::new(screen.chart_coords(q.coords()))
    })?;
    net.require_nondegenerate()?;
    let pm = laplace_iterate(&net, m as i64)?.into_result()?;
    if classify_degeneracy(&pm, Direction::Forward).kind != DegeneracyKind::Goursat {
        return Err(step("projected transform is not Goursat degenerate"));
    }
    Ok(net)
}

/// BS-Kœnigs net on `Σ_{a,b}` in `RP^{a+m}` whose `m`-th forward transform
/// is Goursat degenerate: an extensive net with Laplace degenerate
/// `(m+1)`-th transform, projected from the join of that transform's
/// points. Draws where an intermediate transform degenerates are redrawn.
pub fn goursat_koenigs(a: usize, b: usize, m: usize, seed: u64) -> Result<QNet> {
    if m == 0 {
        return Err(Error::InvalidArgument("goursat_koenigs needs m >= 1".into()));
    }
    require_window(GridDomain::sigma(a, b), m + 2, m + 1, "goursat_koenigs")?;
    let mut last = None;
    for s in attempts(seed) {
        match goursat_attempt(a, b, m, s) {
            Ok(net) => return Ok(net),
            Err(e) => last = Some(e),
        }
    }
    Err(Error::GeneralPosition {
        attempts: sample::RETRIES,
        context: format!("goursat_koenigs: {}", last.expect("at least one attempt")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::is_bs_koenigs;

    fn kind(net: &QNet, m: i64) -> DegeneracyKind {
        let t = laplace_iterate(net, m).unwrap().into_result().unwrap();
        classify_degeneracy(&t, Direction::of_step(m)).kind
    }

    #[test]
    fn laplace_degenerate_completion_is_unique_and_degenerate() {
        let boundary = random_laplace_boundary(3, 2, 3, 2, 4).unwrap();
        let net = extend_laplace_degenerate(&boundary, 2).unwrap();
        assert_eq!(net, extend_laplace_degenerate(&boundary, 2).unwrap());
        assert!(is_bs_koenigs(&net).unwrap());
        assert_eq!(kind(&net, 2), DegeneracyKind::Laplace);
        assert!(extend_laplace_degenerate(&boundary, 1).is_err());
    }

    #[test]
    fn first_step_variant() {
        let boundary = random_laplace_boundary(3, 3, 3, 1, 6).unwrap();
        let net = extend_laplace_degenerate_first(&boundary, &Choices::Seeded(2)).unwrap();
        assert!(is_bs_koenigs(&net).unwrap());
        assert_eq!(kind(&net, 1), DegeneracyKind::Laplace);
    }

    #[test]
    fn double_degenerate_completion() {
        let boundary = random_double_boundary(3, 3, 3, 2, 1).unwrap();
        let net = construct_double_degenerate(&boundary, 2).unwrap();
        assert!(is_bs_koenigs(&net).unwrap());
        assert_eq!(kind(&net, 2), DegeneracyKind::Laplace);
        assert_eq!(kind(&net, -2), DegeneracyKind::Laplace);
    }

    #[test]
    fn doubly_degenerate_first_step_from_strips() {
        let net = random_double_degenerate_first(3, 3, 3, 5).unwrap();
        assert!(is_bs_koenigs(&net).unwrap());
        let strips = restrict_shape(&net, |i, j| i <= 1 || j <= 1);
        assert_eq!(construct_double_degenerate_first(&strips).unwrap(), net);
        let generic = random_bs_koenigs(3, 3, 3, 5).unwrap();
        assert!(construct_double_degenerate_first(&restrict_shape(&generic, |i, j| i <= 1 || j <= 1)).is_err());
    }

    #[test]
    fn goursat_construction() {
        let net = goursat_koenigs(3, 4, 1, 3).unwrap();
        assert_eq!(net.ambient_dim(), 4);
        assert!(is_bs_koenigs(&net).unwrap());
        assert_eq!(kind(&net, 1), DegeneracyKind::Goursat);
    }
}
