//! Subcommands of the `qnet` tool.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{ToPrimitive, Zero};
use qnet::construction::*;
use qnet::invariants::{bs_koenigs_violations, d_koenigs_violations, laplace_invariants};
use qnet::lift::embed_and_lift;
use qnet::net::{diagonal_intersection_net, laplace_iterate, Direction, LaplaceOutcome, QNet};
use qnet::projective::{central_projection, HPoint, Scalar, Subspace};
use qnet::sample;
use serde_json::json;

use crate::netfile::{format_scalar, write_json, NetFile, SubspaceFile};
use crate::suites::{properties_of, tally, Tally};

#[derive(Debug, Parser)]
#[command(name = "qnet", version, about = "Exact Laplace transformations of quadrilateral nets")]
pub struct Cli {
    /// Report errors as JSON on stderr.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KoenigsKind {
    Bs,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Forward transform `m` Laplace degenerate.
    Laplace,
    /// Forward and backward transform `m` Laplace degenerate.
    Double,
    /// Forward transform `m` Goursat degenerate.
    Goursat,
    /// Plain BS-Kœnigs completion.
    Koenigs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Recurrence,
    Termination,
    Symmetry,
    Quadric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Obj,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Random non-degenerate net on a rows x cols window.
    Generate {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long, env = "QNET_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        koenigs: Option<KoenigsKind>,
        #[arg(short)]
        o: PathBuf,
    },
    /// Iterated Laplace transform; negative steps go backward.
    Laplace {
        #[arg(long, allow_negative_numbers = true)]
        steps: i64,
        #[arg(short)]
        i: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Laplace invariants as CSV.
    Invariants {
        #[arg(short)]
        i: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Validity report.
    Check {
        #[arg(short)]
        i: PathBuf,
        #[arg(long, value_enum)]
        koenigs: Option<KoenigsKind>,
        #[arg(long)]
        extensive: bool,
    },
    /// Diagonal intersection net.
    Diagonal {
        #[arg(short)]
        i: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Extensive lift.
    Lift {
        #[arg(short)]
        i: PathBuf,
        #[arg(long, env = "QNET_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(short)]
        o: PathBuf,
        #[arg(long)]
        emit_center: Option<PathBuf>,
    },
    /// BS-Kœnigs net with a prescribed degenerate transform.
    Construct {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, env = "QNET_SEED", default_value_t = 0)]
        seed: u64,
        /// Boundary data (missing points as null).
        #[arg(short)]
        b: Option<PathBuf>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(short)]
        o: PathBuf,
    },
    /// Seeded property suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 25)]
        seeds: u64,
        /// First seed.
        #[arg(long, env = "QNET_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// OBJ mesh or CSV point table.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        #[arg(short)]
        i: PathBuf,
        #[arg(short)]
        o: PathBuf,
        /// Seed of the projection to RP^3 for nets in higher dimension.
        #[arg(long, env = "QNET_SEED", default_value_t = 0)]
        seed: u64,
    },
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A check or verification failed.
    Failed,
}

fn read_net(path: &Path) -> Result<QNet> {
    NetFile::read(path)?.to_net()
}

fn write_net(path: &Path, net: &QNet) -> Result<()> {
    NetFile::from_net(net).write(path)
}

fn direction_name(d: Direction) -> &'static str {
    match d {
        Direction::Forward => "forward",
        Direction::Backward => "backward",
    }
}

pub fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Generate { rows, cols, dim, seed, koenigs, o } => {
            let net = match koenigs {
                None => random_qnet(rows, cols, dim, seed)?,
                Some(KoenigsKind::Bs) => random_bs_koenigs(rows, cols, dim, seed)?,
                Some(KoenigsKind::D) => {
                    let d = diagonal_intersection_net(&random_bs_koenigs(rows + 1, cols + 1, dim, seed)?)?;
                    if !d.is_nondegenerate() {
                        bail!("diagonal net is degenerate; try another seed");
                    }
                    d
                }
            };
            write_net(&o, &net)?;
        }
        Command::Laplace { steps, i, o } => match laplace_iterate(&read_net(&i)?, steps)? {
            LaplaceOutcome::Net(net) => write_net(&o, &net)?,
            LaplaceOutcome::Terminated { at, report } => {
                let value = json!({
                    "terminated_at": at,
                    "kind": report.kind.as_str(),
                    "direction": direction_name(report.direction),
                });
                write_json(&o, &value)?;
                println!("{value}");
            }
        },
        Command::Invariants { i, o } => {
            let field = laplace_invariants(&read_net(&i)?)?;
            let mut csv = String::from("i,j,edge,value\n");
            for ((i, j), edge, value) in field.rows() {
                writeln!(csv, "{i},{j},{edge},{}", format_scalar(value))?;
            }
            std::fs::write(&o, csv).with_context(|| format!("writing {}", o.display()))?;
        }
        Command::Check { i, koenigs, extensive } => return check(&read_net(&i)?, koenigs, extensive),
        Command::Diagonal { i, o } => write_net(&o, &diagonal_intersection_net(&read_net(&i)?)?)?,
        Command::Lift { i, seed, o, emit_center } => {
            let lift = embed_and_lift(&read_net(&i)?, seed)?;
            write_net(&o, &lift.lifted)?;
            if let Some(path) = emit_center {
                write_json(&path, &SubspaceFile::from_subspace(&lift.center))?;
            }
        }
        Command::Construct { mode, m, seed, b, rows, cols, dim, o } => {
            let boundary = b.map(|p| NetFile::read(&p).and_then(|f| f.to_partial())).transpose()?;
            let net = construct(mode, m, seed, boundary, rows, cols, dim)?;
            write_net(&o, &net)?;
        }
        Command::Verify { suite, seeds, seed } => return verify(suite, seed, seeds, cli.json),
        Command::Export { format, i, o, seed } => {
            let net = read_net(&i)?;
            let text = match format {
                Format::Csv => points_csv(&net),
                Format::Obj => obj(&net, seed)?,
            };
            std::fs::write(&o, text).with_context(|| format!("writing {}", o.display()))?;
        }
    }
    Ok(Status::Ok)
}

fn check(net: &QNet, koenigs: Option<KoenigsKind>, extensive: bool) -> Result<Status> {
    let planar = net.validate();
    let degenerate = net.check_nondegenerate();
    let mut ok = planar.is_empty() && degenerate.is_empty();
    let mut report = json!({
        "qnet": planar.is_empty(),
        "nondegenerate": degenerate.is_empty(),
        "violations": degenerate.iter().map(|v| format!("{v:?}")).collect::<Vec<_>>(),
    });
    if let Some(kind) = koenigs {
        let field = laplace_invariants(net)?;
        let (name, bad) = match kind {
            KoenigsKind::Bs => ("bs", bs_koenigs_violations(&field)),
            KoenigsKind::D => ("d", d_koenigs_violations(&field)),
        };
        ok &= bad.is_empty();
        report["koenigs"] = json!({ "kind": name, "holds": bad.is_empty(), "violations": bad });
    }
    if extensive {
        ok &= net.is_extensive();
        report["extensive"] = json!(net.is_extensive());
    }
    report["ok"] = json!(ok);
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if ok { Status::Ok } else { Status::Failed })
}

fn construct(
    mode: Mode,
    m: usize,
    seed: u64,
    boundary: Option<qnet::lift::PartialNet>,
    rows: Option<usize>,
    cols: Option<usize>,
    dim: Option<usize>,
) -> Result<QNet> {
    let n = dim.unwrap_or(3);
    if m == 0 && mode != Mode::Koenigs {
        bail!("--m must be at least 1");
    }
    let net = match mode {
        Mode::Koenigs => match boundary {
            Some(b) => extend_bs_koenigs(&b, &Choices::Seeded(seed))?,
            None => random_bs_koenigs(rows.unwrap_or(3), cols.unwrap_or(3), n, seed)?,
        },
        Mode::Laplace => {
            let b = match boundary {
                Some(b) => b,
                None => random_laplace_boundary(rows.unwrap_or(m + 1), cols.unwrap_or(m + 2), n, m, seed)?,
            };
            if m == 1 {
                extend_laplace_degenerate_first(&b, &Choices::Seeded(seed))?
            } else {
                extend_laplace_degenerate(&b, m)?
            }
        }
        Mode::Double => match (m, boundary) {
            (1, Some(b)) => construct_double_degenerate_first(&b)?,
            (1, None) => random_double_degenerate_first(rows.unwrap_or(3), cols.unwrap_or(3), n, seed)?,
            (_, Some(b)) => construct_double_degenerate(&b, m)?,
            (_, None) => {
                let b = random_double_boundary(rows.unwrap_or(m + 1), cols.unwrap_or(m + 1), n, m, seed)?;
                construct_double_degenerate(&b, m)?
            }
        },
        Mode::Goursat => {
            if boundary.is_some() {
                bail!("goursat mode draws its own data; -b is not supported");
            }
            goursat_koenigs(rows.unwrap_or(m + 2), cols.unwrap_or(m + 3), m, seed)?
        }
    };
    Ok(net)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::All => "all",
        Suite::Recurrence => "recurrence",
        Suite::Termination => "termination",
        Suite::Symmetry => "symmetry",
        Suite::Quadric => "quadric",
    }
}

fn verify(suite: Suite, first: u64, count: u64, as_json: bool) -> Result<Status> {
    let seeds: Vec<u64> = (first..first + count).collect();
    let tallies: Vec<Tally> = properties_of(suite_name(suite)).iter().map(|p| tally(p, &seeds)).collect();
    let ok = tallies.iter().all(|t| t.ok);
    if as_json {
        let value = json!({ "suite": suite_name(suite), "first_seed": first, "seeds": count, "results": tallies, "ok": ok });
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        for t in &tallies {
            println!(
                "{:<5} {:<12} {:<28} passed {:>4}  failed {:>4}  skipped {:>4}",
                if t.ok { "ok" } else { "FAIL" },
                t.suite,
                t.property,
                t.passed,
                t.failed,
                t.skipped
            );
            for (seed, why) in &t.failures {
                println!("      seed {seed}: {why}");
            }
        }
    }
    Ok(if ok { Status::Ok } else { Status::Failed })
}

fn points_csv(net: &QNet) -> String {
    let mut out = String::from("i,j");
    for k in 0..=net.ambient_dim() {
        write!(out, ",x{k}").unwrap();
    }
    out.push('\n');
    for ((i, j), p) in net.sites() {
        write!(out, "{i},{j}").unwrap();
        for c in p.coords() {
            write!(out, ",{}", format_scalar(c)).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Homogeneous coordinates in `RP^3`: low-dimensional nets get zeros
/// inserted before the last coordinate, higher ones are projected from a
/// seeded center avoiding every point.
fn to_space(net: &QNet, seed: u64) -> Result<Vec<Vec<Scalar>>> {
    let n = net.ambient_dim();
    if n <= 3 {
        return Ok(net
            .points()
            .iter()
            .map(|p| {
                let c = p.coords();
                let mut v = c[..n].to_vec();
                v.resize(3, Scalar::zero());
                v.push(c[n].clone());
                v
            })
            .collect());
    }
    let mut rng = sample::rng(seed);
    let center = sample::retry(&mut rng, "projection center", |rng| {
        let vectors = (0..n - 3).map(|_| sample::random_vector(rng, n + 1)).collect();
        let c = Subspace::from_vectors(n, vectors).ok()?;
        (c.rank() == n - 3 && net.points().iter().all(|p| !c.contains_point(p))).then_some(c)
    })?;
    let screen = sample::random_supplement(&mut rng, &center)?;
    net.points()
        .iter()
        .map(|p| {
            let q: HPoint = central_projection(p, &center, &screen)?;
            Ok(screen.chart_coords(q.coords()))
        })
        .collect()
}

fn obj(net: &QNet, seed: u64) -> Result<String> {
    let coords = to_space(net, seed)?;
    let d = net.domain();
    let mut out = String::from("# qnet export\n");
    for (((i, j), _), v) in net.sites().zip(&coords) {
        if v[3].is_zero() {
            bail!("point {:?} lies on the plane at infinity", (i, j));
        }
        let xyz: Vec<f64> = v[..3].iter().map(|x| (x / &v[3]).to_f64().unwrap_or(f64::NAN)).collect();
        writeln!(out, "v {} {} {}", xyz[0], xyz[1], xyz[2])?;
    }
    let index = |(i, j): (i64, i64)| ((i - d.i_min) as usize) * (d.b() + 1) + (j - d.j_min) as usize + 1;
    for (i, j) in d.faces() {
        let quad = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)].map(index);
        writeln!(out, "f {} {} {} {}", quad[0], quad[1], quad[2], quad[3])?;
    }
    Ok(out)
}
