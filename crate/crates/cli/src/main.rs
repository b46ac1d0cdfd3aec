//! Command-line driver for the life-grid experiment harness.
//!
//! Exit codes: 0 success, 1 usage error (bad flags), 2 runtime error
//! (invalid domain values, file failures), each with a one-line
//! diagnostic on stderr. Every subcommand echoes the seed it used so any
//! run can be reproduced afterwards.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use citylife_core::{
    convergence_sweep, export_sweep_json, export_timeseries_csv, mix64, parse_pattern, render_pgm,
    ring_experiment, trajectory_run, BoundaryPolicy, RingGeometry, RingSchedule, SimConfig,
    SweepSpec,
};

#[derive(Parser)]
#[command(
    name = "citylife",
    version,
    about = "Deterministic Game of Life experiments: convergence sweeps and ring-seeded migration runs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundaryArg {
    /// Cells beyond the edge count as dead.
    Dead,
    /// Rows and columns wrap around.
    Torus,
}

impl From<BoundaryArg> for BoundaryPolicy {
    fn from(b: BoundaryArg) -> Self {
        match b {
            BoundaryArg::Dead => BoundaryPolicy::Dead,
            BoundaryArg::Torus => BoundaryPolicy::Toroidal,
        }
    }
}

#[derive(Args)]
struct SeedArg {
    /// Base seed; omit to draw one from system entropy. The seed in
    /// effect is always echoed on stderr.
    #[arg(long)]
    seed: Option<u64>,
}

impl SeedArg {
    fn resolve(&self) -> u64 {
        let seed = self.seed.unwrap_or_else(entropy_seed);
        eprintln!("seed: {seed}");
        seed
    }
}

fn entropy_seed() -> u64 {
    let nanos = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0);
    mix64(nanos ^ (u64::from(std::process::id()) << 32))
}

#[derive(Subcommand)]
enum Command {
    /// Run one Bernoulli-seeded trial and export its time series.
    Run {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        height: usize,
        /// Probability that each cell starts alive.
        #[arg(long)]
        p: f64,
        /// Step cap.
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = BoundaryArg::Dead)]
        boundary: BoundaryArg,
        #[command(flatten)]
        seed: SeedArg,
        /// Where to write the t,alive_fraction series.
        #[arg(long, value_name = "PATH")]
        out_csv: PathBuf,
        /// Timestep to capture as an image; requires --out-pgm.
        #[arg(long, value_name = "T", requires = "out_pgm")]
        snapshot_at: Option<usize>,
        /// Where to write the captured snapshot.
        #[arg(long, value_name = "PATH", requires = "snapshot_at")]
        out_pgm: Option<PathBuf>,
    },
    /// Sweep seeding probabilities and report convergence statistics.
    Sweep {
        #[arg(long, default_value_t = 10)]
        width: usize,
        #[arg(long, default_value_t = 10)]
        height: usize,
        #[arg(long, default_value_t = 0.1)]
        p_min: f64,
        #[arg(long, default_value_t = 1.0)]
        p_max: f64,
        #[arg(long, default_value_t = 0.1)]
        p_step: f64,
        /// Independent trials per probability value.
        #[arg(long, default_value_t = 15)]
        trials: usize,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[command(flatten)]
        seed: SeedArg,
        /// Where to write the summary.
        #[arg(long, value_name = "PATH")]
        out_json: PathBuf,
    },
    /// Run the ring-seeded migration model and export per-ring series.
    Rings {
        /// Blocks per side of the outer grid; odd, >= 3.
        #[arg(long, default_value_t = 11)]
        outer_n: usize,
        /// Cells per side of each block.
        #[arg(long, default_value_t = 10)]
        inner_m: usize,
        /// Comma-separated seeding probability per ring, center first.
        #[arg(long, value_name = "p0,p1,...", value_delimiter = ',', required = true)]
        probs: Vec<f64>,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[command(flatten)]
        seed: SeedArg,
        /// Where to write the per-ring time series.
        #[arg(long, value_name = "PATH")]
        out_csv: PathBuf,
        /// Where to write the final grid as an image.
        #[arg(long, value_name = "PATH")]
        out_pgm_final: Option<PathBuf>,
    },
    /// Rasterize a plaintext pattern file as a PGM image.
    Render {
        /// Pattern file: lines of '.' and 'O', '!' comments.
        #[arg(long, value_name = "PATH")]
        in_pattern: PathBuf,
        #[arg(long, value_name = "PATH")]
        out_pgm: PathBuf,
        /// Pixels per cell.
        #[arg(long, value_name = "K", default_value_t = 1)]
        scale: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are successful outputs, not usage errors
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Run {
            width,
            height,
            p,
            steps,
            boundary,
            seed,
            out_csv,
            snapshot_at,
            out_pgm,
        } => {
            let base_seed = seed.resolve();
            let cfg = SimConfig {
                max_steps: steps,
                boundary: boundary.into(),
                snapshot_steps: snapshot_at.into_iter().collect(),
                ..SimConfig::default()
            };
            let rec = trajectory_run(width, height, p, &cfg, base_seed)?;
            write_text(&out_csv, &export_timeseries_csv(&rec))?;
            if let (Some(t), Some(path)) = (snapshot_at, out_pgm) {
                let (_, grid) = rec
                    .snapshots
                    .iter()
                    .find(|(step, _)| *step == t)
                    .expect("requested snapshot is always captured");
                write_bytes(&path, &render_pgm(grid, 1)?)?;
            }
            Ok(())
        }
        Command::Sweep {
            width,
            height,
            p_min,
            p_max,
            p_step,
            trials,
            steps,
            seed,
            out_json,
        } => {
            let base_seed = seed.resolve();
            let spec = SweepSpec {
                width,
                height,
                probabilities: probability_grid(p_min, p_max, p_step)?,
                trials_per_p: trials,
                cfg: SimConfig {
                    max_steps: steps,
                    ..SimConfig::default()
                },
                // CITYLIFE_SERIAL forces single-threaded execution; the
                // output is identical either way, only slower.
                parallel: std::env::var_os("CITYLIFE_SERIAL").is_none(),
                base_seed,
            };
            let summary = convergence_sweep(&spec)?;
            write_text(&out_json, &export_sweep_json(&summary))
        }
        Command::Rings {
            outer_n,
            inner_m,
            probs,
            steps,
            seed,
            out_csv,
            out_pgm_final,
        } => {
            let base_seed = seed.resolve();
            let geom = RingGeometry::new(outer_n, inner_m)?;
            let sched = RingSchedule::new(&geom, probs)?;
            let cfg = SimConfig {
                max_steps: steps,
                ..SimConfig::default()
            };
            let rec = ring_experiment(&geom, &sched, &cfg, base_seed)?;
            write_text(&out_csv, &export_timeseries_csv(&rec.trial))?;
            if let Some(path) = out_pgm_final {
                let (_, grid) = rec
                    .trial
                    .snapshots
                    .last()
                    .expect("ring runs always capture the final state");
                write_bytes(&path, &render_pgm(grid, 1)?)?;
            }
            Ok(())
        }
        Command::Render {
            in_pattern,
            out_pgm,
            scale,
        } => {
            let text = fs::read_to_string(&in_pattern)
                .with_context(|| format!("reading {}", in_pattern.display()))?;
            let grid = parse_pattern(&text)?;
            write_bytes(&out_pgm, &render_pgm(&grid, scale)?)
        }
    }
}

/// Builds the sweep's probability list on an integer micro-grid so the
/// defaults reproduce exactly 0.1, 0.2, ..., 1.0 with no float drift.
fn probability_grid(p_min: f64, p_max: f64, p_step: f64) -> anyhow::Result<Vec<f64>> {
    const UNIT: f64 = 1_000_000.0;
    anyhow::ensure!(
        (0.0..=1.0).contains(&p_min) && (0.0..=1.0).contains(&p_max),
        "probability bounds must lie in [0, 1]"
    );
    anyhow::ensure!(p_step > 0.0, "--p-step must be positive");
    anyhow::ensure!(p_min <= p_max, "--p-min must not exceed --p-max");
    let (lo, hi, step) = (
        (p_min * UNIT).round() as i64,
        (p_max * UNIT).round() as i64,
        (p_step * UNIT).round() as i64,
    );
    anyhow::ensure!(step > 0, "--p-step is too small to resolve");
    let probs = (lo..=hi)
        .step_by(step as usize)
        .map(|v| v as f64 / UNIT)
        .collect();
    Ok(probs)
}

fn write_text(path: &PathBuf, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn write_bytes(path: &PathBuf, bytes: &[u8]) -> anyhow::Result<()> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}
