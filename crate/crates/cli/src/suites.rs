//! Seeded property checks behind `qnet verify`.

use num_traits::One;
use qnet::construction::*;
use qnet::invariants::*;
use qnet::lift::*;
use qnet::net::*;
use qnet::projective::Subspace;
use qnet::sample;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The instance does not exercise the property (a needed transform is
    /// undefined).
    Skip(String),
}

impl<E: std::fmt::Display> From<Result<Outcome, E>> for Outcome {
    fn from(r: Result<Outcome, E>) -> Self {
        r.unwrap_or_else(|e| Outcome::Fail(e.to_string()))
    }
}

type Check = fn(u64) -> Outcome;

pub struct Property {
    pub name: &'static str,
    pub suite: &'static str,
    /// Share of non-skipped seeds that must pass.
    pub min_pass_rate: f64,
    check: Check,
}

impl Property {
    pub fn run(&self, seed: u64) -> Outcome {
        (self.check)(seed)
    }
}

pub const SUITES: [&str; 4] = ["recurrence", "termination", "symmetry", "quadric"];

pub fn properties() -> Vec<Property> {
    let p = |suite, name, check: Check| Property { name, suite, min_pass_rate: 1.0, check };
    vec![
        p("recurrence", "mutual_inverse", mutual_inverse),
        p("recurrence", "recurrence", recurrence),
        p("recurrence", "explicit_transform", explicit_transform),
        p("recurrence", "unit_invariants", unit_invariants),
        p("recurrence", "goursat_columns_m1", |s| goursat_columns(1, s)),
        p("recurrence", "goursat_columns_m2", |s| goursat_columns(2, s)),
        p("termination", "laplace_termination_m1", |s| laplace_termination(1, s)),
        p("termination", "laplace_termination_m2", |s| laplace_termination(2, s)),
        p("termination", "laplace_termination_m3", |s| laplace_termination(3, s)),
        p("termination", "goursat_termination_m1", |s| goursat_termination(1, s)),
        p("termination", "goursat_termination_m2", |s| goursat_termination(2, s)),
        p("termination", "double_termination_m1", double_first),
        p("termination", "double_termination_m2", |s| double_termination(2, s)),
        p("termination", "double_termination_m3", |s| double_termination(3, s)),
        Property {
            suite: "termination",
            name: "one_sided_is_generic_m2",
            min_pass_rate: 0.95,
            check: |s| one_sided_generic(2, s),
        },
        p("symmetry", "invariant_symmetry_m0", |s| invariant_symmetry(0, s)),
        p("symmetry", "invariant_symmetry_m1", |s| invariant_symmetry(1, s)),
        p("symmetry", "diagonal_coupling_m1", |s| diagonal_coupling(1, s)),
        p("symmetry", "diagonal_coupling_m2", |s| diagonal_coupling(2, s)),
        p("symmetry", "diagonal_coupling_m3", |s| diagonal_coupling(3, s)),
        p("quadric", "lift_round_trip", lift_round_trip),
        p("quadric", "hyperplane_parity", hyperplane_parity),
        p("quadric", "goursat_lift", goursat_lift),
        p("quadric", "quadric_conjugacy_m1", |s| quadric_conjugacy(1, s)),
        p("quadric", "quadric_conjugacy_m2", |s| quadric_conjugacy(2, s)),
        p("quadric", "singular_points_m1", |s| singular_points(1, s)),
        p("quadric", "singular_points_m2", |s| singular_points(2, s)),
    ]
}

pub fn properties_of(suite: &str) -> Vec<Property> {
    properties().into_iter().filter(|p| suite == "all" || p.suite == suite).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Tally {
    pub suite: &'static str,
    pub property: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// `(seed, reason)` for each failure, by seed.
    pub failures: Vec<(u64, String)>,
    pub ok: bool,
}

/// Run `property` on `seeds` (in parallel, reported in seed order).
pub fn tally(property: &Property, seeds: &[u64]) -> Tally {
    let outcomes: Vec<Outcome> = seeds.par_iter().map(|&s| property.run(s)).collect();
    summarize(property, seeds.iter().copied().zip(outcomes))
}

fn summarize(property: &Property, results: impl IntoIterator<Item = (u64, Outcome)>) -> Tally {
    let mut t = Tally {
        suite: property.suite,
        property: property.name,
        passed: 0,
        failed: 0,
        skipped: 0,
        failures: Vec::new(),
        ok: false,
    };
    for (seed, outcome) in results {
        match outcome {
            Outcome::Pass => t.passed += 1,
            Outcome::Skip(_) => t.skipped += 1,
            Outcome::Fail(why) => {
                t.failed += 1;
                t.failures.push((seed, why));
            }
        }
    }
    let run = t.passed + t.failed;
    t.ok = run > 0 && t.passed as f64 >= property.min_pass_rate * run as f64;
    t
}

/// Run `property` on consecutive seeds from `first` until `wanted` of them
/// were not skipped, trying at most `budget` seeds.
pub fn tally_until(property: &Property, first: u64, wanted: usize, budget: usize) -> Tally {
    let mut results: Vec<(u64, Outcome)> = Vec::new();
    let mut counted = 0;
    let mut next = first;
    while counted < wanted && results.len() < budget {
        let batch: Vec<u64> = (next..).take((wanted - counted).min(budget - results.len())).collect();
        next += batch.len() as u64;
        let outcomes: Vec<Outcome> = batch.par_iter().map(|&s| property.run(s)).collect();
        for (seed, outcome) in batch.into_iter().zip(outcomes) {
            if counted == wanted {
                break;
            }
            counted += !matches!(outcome, Outcome::Skip(_)) as usize;
            results.push((seed, outcome));
        }
    }
    let mut t = summarize(property, results);
    t.ok &= counted == wanted;
    t
}

fn fail(msg: impl Into<String>) -> Outcome {
    Outcome::Fail(msg.into())
}

fn verdict(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(msg())
    }
}

fn transform(net: &QNet, m: i64) -> Option<QNet> {
    laplace_iterate(net, m).ok()?.net()
}

fn kind(net: &QNet, m: i64) -> Option<DegeneracyKind> {
    transform(net, m).map(|t| classify_degeneracy(&t, Direction::of_step(m)).kind)
}

fn is_laplace(net: &QNet, m: i64) -> bool {
    kind(net, m) == Some(DegeneracyKind::Laplace)
}

fn all_one(layer: &Layer) -> bool {
    !layer.is_empty() && layer.values().all(One::is_one)
}

fn mutual_inverse(seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let net = random_qnet(3, 3, 3, seed)?;
        let mut compared = 0;
        for (there, back) in [(laplace_forward as fn(&QNet) -> qnet::Result<QNet>, laplace_backward as fn(&QNet) -> qnet::Result<QNet>), (laplace_backward, laplace_forward)] {
            let t = there(&net)?;
            if !t.is_nondegenerate() {
                continue;
            }
            for ((i, j), p) in back(&t)?.sites() {
                compared += 1;
                if p != net.at((i + 1, j + 1)) {
                    return Ok(fail(format!("inverse differs at {:?}", (i, j))));
                }
            }
        }
        Ok(if compared == 0 { Outcome::Skip("degenerate transforms".into()) } else { Outcome::Pass })
    })())
}

fn recurrence(seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let net = random_qnet(4, 4, 3, seed)?;
        let (Some(fwd), Some(_)) = (transform(&net, 1), transform(&net, 2)) else {
            return Ok(Outcome::Skip("second transform undefined".into()));
        };
        let field = laplace_invariants(&net)?;
        let predicted = forward_recurrence(&field)?;
        let actual = h_field(&fwd)?;
        if predicted.is_empty() {
            return Ok(fail("no site for the recurrence"));
        }
        if let Some((s, _)) = predicted.iter().find(|(s, v)| actual.get(s) != Some(v)) {
            return Ok(fail(format!("forward recurrence differs at {s:?}")));
        }
        let k_fwd = k_field(&fwd)?;
        let h_bwd = match transform(&net, -1) {
            Some(bwd) if bwd.is_nondegenerate() => {
                if transform(&net, -2).is_some() {
                    let back = backward_recurrence(&field)?;
                    let k_prev = k_field(&bwd)?;
                    if let Some((s, _)) = back.iter().find(|(s, v)| k_prev.get(s) != Some(v)) {
                        return Ok(fail(format!("backward recurrence differs at {s:?}")));
                    }
                }
                h_field(&bwd)?
            }
            _ => Layer::new(),
        };
        Ok(match hk_shift_mismatch(&field.h, &field.k, &k_fwd, &h_bwd) {
            Some(m) => fail(format!("shift identity for {} fails at {:?}", m.edge, m.site)),
            None => Outcome::Pass,
        })
    })())
}

fn explicit_transform(seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        for m in 1..=3usize {
            let net = random_qnet(m + 1, m + 1, 3, seed)?;
            let lifted = embed_and_lift(&net, seed)?.lifted;
            if !lifted.is_extensive() {
                return Ok(fail("lift is not extensive"));
            }
            let Some(pm) = transform(&lifted, m as i64) else {
                return Ok(Outcome::Skip(format!("P_{m} undefined")));
            };
            for (site, p) in pm.sites() {
                match explicit_laplace_at(&lifted, m, site)? {
                    ExplicitLaplace::Point(q) if &q == p => {}
                    other => return Ok(fail(format!("m = {m} at {site:?}: {other:?}"))),
                }
            }
        }
        Ok(Outcome::Pass)
    })())
}

/// `H ≡ 1` iff the forward transform is Laplace degenerate, and `K ≡ 1`
/// iff the backward one is, on one degenerate and one generic net.
fn unit_invariants(seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let positive = random_first_laplace_degenerate(3, 3, 3, seed)?;
        let negative = random_qnet(3, 3, 3, seed)?;
        if !is_laplace(&positive, 1) || is_laplace(&negative, 1) {
            return Ok(fail("generators did not produce the expected degeneracy"));
        }
        for (label, net) in [("positive", &positive), ("negative", &negative)] {
            if all_one(&h_field(net)?) != is_laplace(net, 1) {
                return Ok(fail(format!("H vs forward degeneracy on the {label} net")));
            }
            let mirrored = net.transpose();
            if all_one(&k_field(&mirrored)?) != is_laplace(&mirrored, -1) {
                return Ok(fail(format!("K vs backward degeneracy on the mirrored {label} net")));
            }
        }
        Ok(Outcome::Pass)
    })())
}

fn columns_have_dim(net: &QNet, m: usize) -> qnet::Result<bool> {
    let d = net.domain();
    for i in d.i_min..=d.i_max {
        if net.parameter_space(Axis::Column, i)?.projective_dim() != m as isize {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Goursat degenerate `P_m` iff every column spans an `m`-space.
fn goursat_columns(m: usize, seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let positive = random_goursat(m + 2, m + 2, m, m + 2, seed)?;
        let negative = random_qnet(m + 2, m + 2, m + 2, seed)?;
        let goursat = |net: &QNet| kind(net, m as i64) == Some(DegeneracyKind::Goursat);
        if !goursat(&positive) || !columns_have_dim(&positive, m)? {
            return Ok(fail("constructed instance lacks the degeneracy"));
        }
        Ok(verdict(goursat(&negative) == columns_have_dim(&negative, m)?, || {
            "generic net breaks the equivalence".into()
        }))
    })())
}

/// Output of the one-sided construction on the smallest window where the
/// `(m+1)`-th backward transform can exist.
pub fn forward_degenerate(m: usize, seed: u64) -> qnet::Result<QNet> {
    let boundary = random_laplace_boundary(m + 1, m + 2, 3, m, seed)?;
    if m == 1 {
        extend_laplace_degenerate_first(&boundary, &Choices::Seeded(seed))
    } else {
        extend_laplace_degenerate(&boundary, m)
    }
}

fn laplace_termination(m: usize, seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let net = forward_degenerate(m, seed)?;
        if !is_bs_koenigs(&net)? || !is_laplace(&net, m as i64) {
            return Ok(fail("construction output lacks the prescribed degeneracy"));
        }
        Ok(match kind(&net, -(m as i64) - 1) {
            None => Outcome::Skip("backward transform undefined".into()),
            Some(DegeneracyKind::Laplace) => Outcome::Pass,
            Some(k) => fail(format!("backward transform is {}", k.as_str())),
        })
    })())
}

fn goursat_termination(m: usize, seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let net = goursat_koenigs(m + 2, m + 3, m, seed)?;
        if !is_bs_koenigs(&net)? || kind(&net, m as i64) != Some(DegeneracyKind::Goursat) {
            return Ok(fail("construction output lacks the prescribed degeneracy"));
        }
        Ok(match kind(&net, -(m as i64) - 2) {
            None => Outcome::Skip("backward transform undefined".into()),
            Some(DegeneracyKind::Laplace) => Outcome::Pass,
            Some(k) => fail(format!("backward transform is {}", k.as_str())),
        })
    })())
}

fn columns_constant(net: &QNet) -> bool {
    let d = net.domain();
    (d.i_min..=d.i_max).all(|i| (d.j_min..d.j_max).all(|j| net.at((i, j)) == net.at((i, j + 1))))
}

fn double_termination(m: usize, seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let boundary = random_double_boundary(m + 1, m + 1, 3, m, seed)?;
        let net = construct_double_degenerate(&boundary, m)?;
        if !is_bs_koenigs(&net)? {
            return Ok(fail("output is not BS-Kœnigs"));
        }
        let Some(back) = transform(&net, -(m as i64)) else {
            return Ok(fail("backward transform undefined"));
        };
        Ok(verdict(is_laplace(&net, m as i64) && columns_constant(&back), || {
            "one direction is not Laplace degenerate".into()
        }))
    })())
}

fn double_first(seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let net = random_double_degenerate_first(3, 3, 3, seed)?;
        Ok(verdict(is_bs_koenigs(&net)? && is_laplace(&net, 1) && is_laplace(&net, -1), || {
            "not doubly degenerate BS-Kœnigs".into()
        }))
    })())
}

fn one_sided_generic(m: usize, seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let net = forward_degenerate(m, seed)?;
        Ok(match kind(&net, -(m as i64)) {
            None => Outcome::Skip("backward transform undefined".into()),
            Some(DegeneracyKind::Laplace) => fail("backward transform is Laplace degenerate too"),
            Some(_) => Outcome::Pass,
        })
    })())
}

fn invariant_symmetry(m: i64, seed: u64) -> Outcome {
    let Ok(net) = random_bs_koenigs(4, 4, 4, seed) else {
        return fail("generator failed");
    };
    match invariant_symmetry_check(&net, m) {
        Ok(c) if c.compared == 0 => Outcome::Skip("no overlapping sites".into()),
        Ok(c) => verdict(c.holds(), || format!("{:?}", c.mismatch)),
        Err(qnet::Error::Terminated { .. } | qnet::Error::Degenerate { .. }) => {
            Outcome::Skip("a transform is undefined".into())
        }
        Err(e) => fail(e.to_string()),
    }
}

/// `P_m` Laplace degenerate iff `D_{-m}` is, on a Laplace degenerate, a
/// generic and (for `m <= 2`) a Goursat degenerate net, and
/// `P_{-m-1} = D_{-m}` on the Laplace degenerate one.
fn diagonal_coupling(m: usize, seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let mi = m as i64;
        let positive = forward_degenerate(m, seed)?;
        let mut others = vec![random_bs_koenigs(m + 1, m + 2, 3, seed)?];
        if m <= 2 {
            others.push(goursat_koenigs(m + 2, m + 3, m, seed)?);
        }
        let mut both_defined = false;
        for net in std::iter::once(&positive).chain(&others) {
            let diag = diagonal_intersection_net(net)?;
            let (p, d) = (kind(net, mi), kind(&diag, -mi));
            if p.is_some() && d.is_some() {
                both_defined = true;
                if is_laplace(net, mi) != is_laplace(&diag, -mi) {
                    return Ok(fail(format!("P_{m} is {p:?} but D_-{m} is {d:?}")));
                }
            }
        }
        let diag = diagonal_intersection_net(&positive)?;
        let (Some(back), Some(dm), true) = (transform(&positive, -mi - 1), transform(&diag, -mi), both_defined) else {
            return Ok(Outcome::Skip("transforms undefined".into()));
        };
        let mut compared = 0;
        for (s, p) in dm.sites() {
            if let Some(q) = back.get(s) {
                compared += 1;
                if p != q {
                    return Ok(fail(format!("P_-{} and D_-{m} differ at {s:?}", m + 1)));
                }
            }
        }
        Ok(verdict(compared > 0, || "no common sites for the point identity".into()))
    })())
}

fn lift_round_trip(seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let net = random_qnet(3, 3, 3, seed)?;
        let lift = embed_and_lift(&net, seed)?;
        if !lift.lifted.is_extensive() || !lift.lifted.is_nondegenerate() {
            return Ok(fail("lift is not an extensive non-degenerate net"));
        }
        if lift.project_net(&lift.lifted)? != net {
            return Ok(fail("projection does not recover the net"));
        }
        Ok(verdict(laplace_invariants(&lift.lifted)? == laplace_invariants(&net)?, || {
            "invariants changed".into()
        }))
    })())
}

fn koenigs_lift(a: usize, b: usize, seed: u64) -> qnet::Result<QNet> {
    let net = random_bs_koenigs(a, b, (a + b).min(3), seed)?;
    Ok(embed_and_lift(&net, seed)?.lifted)
}

fn hyperplane_parity(seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let lifted = koenigs_lift(3, 3, seed)?;
        let pair = koenigs_hyperplanes(&lifted)?;
        if !parity_containment(&lifted, &pair) {
            return Ok(fail("parity containment fails"));
        }
        let sing = pair.singular_locus();
        let diag = diagonal_intersection_net(&lifted)?;
        let inside = diag.sites().all(|(_, p)| sing.contains_point(p));
        Ok(verdict(inside, || "diagonal net leaves U1 ∩ U2".into()))
    })())
}

fn goursat_lift(seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let net = random_goursat(4, 4, 1, 3, seed)?;
        let lifted = embed_and_lift(&net, seed)?.lifted;
        let first = laplace_forward(&lifted)?;
        if !first.is_nondegenerate() {
            return Ok(fail("lifted first transform is degenerate"));
        }
        let second = laplace_forward(&first)?;
        if classify_degeneracy(&second, Direction::Forward).kind != DegeneracyKind::Laplace {
            return Ok(fail("lifted second transform is not Laplace degenerate"));
        }
        let d = second.domain();
        Ok(verdict(
            (d.j_min..d.j_max).all(|j| second.at((d.i_min, j)) != second.at((d.i_min, j + 1))),
            || "lifted second transform repeats a point".into(),
        ))
    })())
}

fn quadric_conjugacy(m: usize, seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let mut lifted = koenigs_lift(m, m, seed)?;
        let pair = koenigs_hyperplanes(&lifted)?;
        let on = quadric_conjugacy_check(&lifted, &pair.quadric)?;
        if !on.corner_on_quadric || !on.agrees() {
            return Ok(fail(format!("Kœnigs window: {on:?}")));
        }
        let corner = (m as i64, m as i64);
        let plane = Subspace::span([
            lifted.at((corner.0 - 1, corner.1 - 1)),
            lifted.at((corner.0, corner.1 - 1)),
            lifted.at((corner.0 - 1, corner.1)),
        ])?;
        let mut rng = sample::rng(seed);
        let moved = sample::retry(&mut rng, "corner off the quadric", |rng| {
            let p = sample::random_point_in(rng, &plane).ok()?;
            let mut trial = lifted.clone();
            trial.set(corner, p.clone()).ok()?;
            (!pair.quadric.contains(&p).ok()? && trial.is_nondegenerate()).then_some(p)
        })?;
        lifted.set(corner, moved)?;
        let off = quadric_conjugacy_check(&lifted, &pair.quadric)?;
        Ok(verdict(!off.corner_on_quadric && off.agrees(), || format!("moved corner: {off:?}")))
    })())
}

fn singular_points(m: usize, seed: u64) -> Outcome {
    Outcome::from((|| -> qnet::Result<Outcome> {
        let lifted = koenigs_lift(m, m + 1, seed)?;
        let pair = koenigs_hyperplanes(&lifted)?;
        let report = singular_point_checks(&lifted, &pair)?;
        Ok(match report.equivalence_holds() {
            Some(true) => Outcome::Pass,
            Some(false) => fail(format!("{report:?}")),
            None => Outcome::Skip("forward points coincide".into()),
        })
    })())
}
