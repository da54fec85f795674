//! Command-line front end: `hotspot`, `gen`, `bench` and `plot`.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hotspot_core::cube::cube_hotspot_with_stats;
use hotspot_core::gen::{self, Family};
use hotspot_core::harness::{render_summary, run_bench, summarize, write_csv, BenchConfig};
use hotspot_core::io::{parse_trajectory, render_trace, render_trajectory, ResultRecord};
use hotspot_core::plot::render_svg;
use hotspot_core::{
    half_hotspot_traced, Algorithm, Dim, Placement, Rational, Scalar, SweepStats,
};

#[derive(Parser, Debug)]
#[command(name = "hotspot", version, about = "Fixed-side hotspots of orthogonal trajectories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find a heaviest square (or cube with --dim 3) and print it as JSON.
    Hotspot {
        /// exact, quarter or half.
        #[arg(long)]
        algo: Algorithm,
        /// Side length; integers, decimals and fractions like 7/2 are accepted.
        #[arg(long, allow_hyphen_values = true)]
        side: String,
        /// Trajectory file with t,x,y or t,x,y,z rows.
        #[arg(long)]
        input: PathBuf,
        /// Expected dimension; inferred from the file when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        dim: Option<u8>,
        /// Rational arithmetic or f64.
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Write the kinetic event trace here (half, 2D only).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Write a seeded trajectory.
    Gen {
        /// walk, cluster or comb.
        #[arg(long)]
        kind: Family,
        /// Number of edges.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        dim: u8,
    },
    /// Time the algorithms on random walks in float mode.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "quarter,half")]
        algos: Vec<Algorithm>,
        #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000,8000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 10.0)]
        side: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw the trajectory and, optionally, a result square as SVG.
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        result: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Flags that are well-formed but cannot be honoured; exits with status 2.
#[derive(Debug)]
struct Infeasible(String);

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Infeasible {}

fn infeasible(msg: impl Into<String>) -> anyhow::Error {
    Infeasible(msg.into()).into()
}

/// Runs the CLI with the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render().ansi());
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.downcast_ref::<Infeasible>().is_some() {
                2
            } else {
                1
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Hotspot {
            algo,
            side,
            input,
            dim,
            mode,
            trace,
        } => {
            let dim = dim.map(|d| Dim::from_count(d as usize).expect("clap range"));
            let record = match mode {
                Mode::Exact => hotspot::<Rational>(algo, &side, &input, dim, trace.as_deref())?,
                Mode::Float => hotspot::<f64>(algo, &side, &input, dim, trace.as_deref())?,
            };
            writeln!(out, "{}", record.to_json())?;
        }
        Command::Gen {
            kind,
            n,
            seed,
            out: path,
            dim,
        } => {
            if n == 0 {
                return Err(infeasible("--n must be at least 1"));
            }
            let dim = Dim::from_count(dim as usize).expect("clap range");
            let vertices = gen::vertices::<Rational>(kind, n, seed, dim);
            write_file(&path, &render_trajectory(dim, &vertices))?;
        }
        Command::Bench {
            algos,
            sizes,
            seed,
            reps,
            side,
            out: path,
        } => {
            if side <= 0.0 {
                return Err(infeasible("--side must be positive"));
            }
            if sizes.contains(&0) {
                return Err(infeasible("sizes must be at least 1"));
            }
            let config = BenchConfig {
                algos,
                sizes,
                seed,
                reps,
                side,
            };
            let rows = run_bench(&config)?;
            let mut file = std::fs::File::create(&path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            write_csv(&mut file, &rows)?;
            write!(out, "{}", render_summary(&summarize(&rows)))?;
        }
        Command::Plot {
            input,
            result,
            out: path,
        } => {
            let text = read_file(&input)?;
            let traj = parse_trajectory::<Rational>(&text, None)
                .with_context(|| format!("in {}", input.display()))?;
            let edges = traj.edge_set().with_context(|| format!("in {}", input.display()))?;
            let square = match result {
                Some(p) => {
                    let record = ResultRecord::from_json(&read_file(&p)?)
                        .with_context(|| format!("in {}", p.display()))?;
                    Some(record.placement::<Rational>()?)
                }
                None => None,
            };
            write_file(&path, &render_svg(&edges, square.as_ref()))?;
        }
    }
    Ok(())
}

fn hotspot<S: Scalar>(
    algo: Algorithm,
    side: &str,
    input: &Path,
    dim: Option<Dim>,
    trace: Option<&Path>,
) -> Result<ResultRecord> {
    let s = S::parse(side).map_err(|_| infeasible(format!("invalid side {side:?}")))?;
    if s <= S::zero() {
        return Err(infeasible("--side must be positive"));
    }
    let text = read_file(input)?;
    let traj =
        parse_trajectory::<S>(&text, None).with_context(|| format!("in {}", input.display()))?;
    if let Some(d) = dim {
        if d != traj.dim {
            return Err(infeasible(format!(
                "--dim {} given but {} has {}-dimensional vertices",
                d.count(),
                input.display(),
                traj.dim.count()
            )));
        }
    }
    if trace.is_some() && (algo != Algorithm::Half || traj.dim != Dim::Two) {
        return Err(infeasible("--trace needs --algo half on a planar trajectory"));
    }
    let edges = traj.edge_set().with_context(|| format!("in {}", input.display()))?;

    let start = Instant::now();
    let (placement, stats): (Placement<S>, SweepStats) = match (traj.dim, trace) {
        (Dim::Three, _) => cube_hotspot_with_stats(&edges, &s, algo)?,
        (Dim::Two, Some(path)) => {
            let (p, st, tr) = half_hotspot_traced(&edges, &s)?;
            write_file(
                path,
                &render_trace(&[("h", &tr.horizontal[..]), ("v", &tr.vertical[..])]),
            )?;
            (p, st)
        }
        (Dim::Two, None) => algo.run_2d(&edges, &s)?,
    };
    let runtime_ns = start.elapsed().as_nanos() as u64;
    Ok(ResultRecord::new(algo, &placement, stats, runtime_ns))
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}
