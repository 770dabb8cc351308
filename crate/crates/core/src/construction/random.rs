use crate::error::{Error, Result};
use crate::net::{GridDomain, QNet, Site};
use crate::projective::{HPoint, Subspace};
use crate::sample;

/// Whether the four corners of a face (counter-clockwise from the lower
/// left) lie in a plane with every three of them spanning it.
pub(crate) fn face_is_nondegenerate(corners: [&HPoint; 4]) -> bool {
    let span = |pts: &[&HPoint]| Subspace::span(pts.iter().copied()).map(|s| s.projective_dim());
    if span(&corners) != Ok(2) {
        return false;
    }
    (0..4).all(|skip| {
        let triple: Vec<&HPoint> = (0..4).filter(|&k| k != skip).map(|k| corners[k]).collect();
        span(&triple) == Ok(2)
    })
}

fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument("ambient dimension must be at least 2".into()));
    }
    Ok(())
}

fn grid(a: usize, b: usize, n: usize, mut fill: impl FnMut(Site, &[Vec<Option<HPoint>>]) -> Result<HPoint>) -> Result<QNet> {
    let mut rows: Vec<Vec<Option<HPoint>>> = vec![vec![None; b + 1]; a + 1];
    for i in 0..=a {
        for j in 0..=b {
            let p = fill((i as i64, j as i64), &rows)?;
            debug_assert_eq!(p.ambient_dim(), n);
            rows[i][j] = Some(p);
        }
    }
    QNet::from_fn(GridDomain::sigma(a, b), |(i, j)| {
        Ok(rows[i as usize][j as usize].clone().expect("filled"))
    })
}

fn at(rows: &[Vec<Option<HPoint>>], (i, j): Site) -> &HPoint {
    rows[i as usize][j as usize].as_ref().expect("earlier site")
}

/// Random non-degenerate Q-net on `Σ_{a,b}` in `RP^n`: random axis points,
/// every other point random in the plane of its three predecessors.
pub fn random_qnet(a: usize, b: usize, n: usize, seed: u64) -> Result<QNet> {
    check_size(n)?;
    let mut rng = sample::rng(seed);
    grid(a, b, n, |(i, j), rows| {
        if i == 0 || j == 0 {
            let prev = if i > 0 { Some(at(rows, (i - 1, 0))) } else if j > 0 { Some(at(rows, (0, j - 1))) } else { None };
            return sample::retry(&mut rng, "random axis point", |rng| {
                let p = sample::random_point(rng, n);
                (Some(&p) != prev).then_some(p)
            });
        }
        let corners = [at(rows, (i - 1, j - 1)), at(rows, (i, j - 1)), at(rows, (i - 1, j))];
        let plane = Subspace::span(corners)?;
        if plane.projective_dim() != 2 {
            return Err(Error::Construction {
                step: "random_qnet".into(),
                site: (i, j),
                reason: "predecessors do not span a plane".into(),
            });
        }
        sample::retry(&mut rng, "random interior point", |rng| {
            let p = sample::random_point_in(rng, &plane).ok()?;
            face_is_nondegenerate([corners[0], corners[1], &p, corners[2]]).then_some(p)
        })
    })
}

/// Random net whose forward transform is Laplace degenerate: the edges of
/// row `j` all pass through a common point `X(j)`.
pub fn random_first_laplace_degenerate(a: usize, b: usize, n: usize, seed: u64) -> Result<QNet> {
    check_size(n)?;
    let mut rng = sample::rng(seed);
    let focal: Vec<HPoint> = (0..b.max(1)).map(|_| sample::random_point(&mut rng, n)).collect();
    let net = grid(a, b, n, |(i, j), rows| {
        if j == 0 {
            return sample::retry(&mut rng, "row point", |rng| {
                let p = sample::random_point(rng, n);
                let fresh = (0..i).all(|k| at(rows, (k, 0)) != &p) && !focal.contains(&p);
                fresh.then_some(p)
            });
        }
        let below = at(rows, (i, j - 1));
        let line = Subspace::span([below, &focal[(j - 1) as usize]])?;
        sample::retry(&mut rng, "point on a focal line", |rng| {
            let p = sample::random_point_in(rng, &line).ok()?;
            let ok = &p != below
                && p != focal[(j - 1) as usize]
                && (i == 0 || face_is_nondegenerate([at(rows, (i - 1, j - 1)), below, &p, at(rows, (i - 1, j))]));
            ok.then_some(p)
        })
    })?;
    Ok(net)
}

/// Random net whose column `i` lies in the `m`-space `Z(i) ∨ … ∨ Z(i+m)`
/// for random points `Z`, so that its `m`-th forward transform is Goursat
/// degenerate. Needs `n >= m + 1`.
pub fn random_goursat(a: usize, b: usize, m: usize, n: usize, seed: u64) -> Result<QNet> {
    check_size(n)?;
    if m == 0 || n < m + 1 {
        return Err(Error::InvalidArgument(format!("random_goursat needs 1 <= m < n, got m = {m}, n = {n}")));
    }
    let mut rng = sample::rng(seed);
    let z: Vec<HPoint> = sample::retry(&mut rng, "column spaces", |rng| {
        let z: Vec<HPoint> = (0..a + m + 1).map(|_| sample::random_point(rng, n)).collect();
        let ok = z
            .windows((m + 2).min(z.len()))
            .all(|w| Subspace::span(w.iter()).map(|s| s.rank() == w.len()).unwrap_or(false));
        ok.then_some(z)
    })?;
    let columns = (0..=a)
        .map(|i| Subspace::span(&z[i..=i + m]))
        .collect::<Result<Vec<_>>>()?;
    grid(a, b, n, |(i, j), rows| {
        let column = &columns[i as usize];
        let space = if i == 0 || j == 0 {
            column.clone()
        } else {
            let corners = [at(rows, (i - 1, j - 1)), at(rows, (i, j - 1)), at(rows, (i - 1, j))];
            Subspace::span(corners)?.meet(column)?
        };
        if space.projective_dim() < 1 {
            return Err(Error::Construction {
                step: "random_goursat".into(),
                site: (i, j),
                reason: "face plane meets the column space in a point".into(),
            });
        }
        sample::retry(&mut rng, "point in a column space", |rng| {
            let p = sample::random_point_in(rng, &space).ok()?;
            let on_neighbour = [i - 1, i + 1]
                .iter()
                .any(|&k| k >= 0 && k <= a as i64 && columns[k as usize].contains_point(&p));
            if on_neighbour {
                return None;
            }
            let ok = if i == 0 {
                j == 0 || at(rows, (0, j - 1)) != &p
            } else {
                j == 0
                    || face_is_nondegenerate([at(rows, (i - 1, j - 1)), at(rows, (i, j - 1)), &p, at(rows, (i - 1, j))])
            };
            ok.then_some(p)
        })
    })
}
