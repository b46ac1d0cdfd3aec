//! Experiment protocols over the simulation loop: the convergence sweep,
//! single-trajectory runs, and the ring-seeded migration run.
//!
//! Every protocol derives per-trial seeds from one base seed with a
//! protocol tag, so experiment families never share random streams and a
//! whole campaign replays from a single number.

use crate::error::Result;
use crate::runner::{run_trial, SimConfig, TrialRecord};
use crate::seed::{
    bernoulli_seed, derive_trial_seed, ring_seed, RingGeometry, RingSchedule, SeedStream,
};

/// Seed-derivation tag of the convergence sweep.
pub const TAG_SWEEP: u64 = 1;
/// Seed-derivation tag of single trajectory runs.
pub const TAG_TRAJECTORY: u64 = 2;
/// Seed-derivation tag of ring-seeded runs.
pub const TAG_RING: u64 = 3;

/// The sweep's default probability grid, 0.1 through 1.0 in steps of 0.1.
pub fn default_probability_grid() -> Vec<f64> {
    (1..=10).map(|i| i as f64 / 10.0).collect()
}

/// Parameters of a convergence sweep: a full factorial of seeding
/// probabilities times independent trials on one grid size.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub width: usize,
    pub height: usize,
    pub probabilities: Vec<f64>,
    pub trials_per_p: usize,
    pub cfg: SimConfig,
    pub base_seed: u64,
    /// Run trials on the thread pool. Serial and parallel execution
    /// produce identical summaries; this only trades wall time.
    pub parallel: bool,
}

impl SweepSpec {
    pub fn new(base_seed: u64) -> Self {
        Self {
            width: 10,
            height: 10,
            probabilities: default_probability_grid(),
            trials_per_p: 15,
            cfg: SimConfig::default(),
            base_seed,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

/// Outcome of a single sweep trial, kept in full in the summary.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub trial_index: usize,
    pub seed_used: u64,
    pub converged: bool,
    pub convergence_step: Option<usize>,
    pub final_alive_fraction: f64,
}

/// Aggregate for one probability value.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilitySummary {
    pub p: f64,
    pub trial_count: usize,
    pub converged_count: usize,
    /// Mean of convergence_step over converged trials only; `None` when
    /// nothing converged. Non-converged trials are excluded rather than
    /// counted at the cap, so the value never depends on the cap chosen
    /// for runs that hit it.
    pub mean_convergence_steps: Option<f64>,
    pub trials: Vec<TrialOutcome>,
}

/// Results of a whole sweep, one entry per probability in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub width: usize,
    pub height: usize,
    pub base_seed: u64,
    pub per_p: Vec<ProbabilitySummary>,
}

fn summarize_p(p: f64, trials: Vec<TrialOutcome>) -> ProbabilitySummary {
    let trial_count = trials.len();
    let converged: Vec<usize> = trials
        .iter()
        .filter(|t| t.converged)
        .map(|t| t.convergence_step.expect("converged trials carry a step"))
        .collect();
    let mean = if converged.is_empty() {
        None
    } else {
        Some(converged.iter().sum::<usize>() as f64 / converged.len() as f64)
    };
    ProbabilitySummary {
        p,
        trial_count,
        converged_count: converged.len(),
        mean_convergence_steps: mean,
        trials,
    }
}

fn sweep_trial(spec: &SweepSpec, p_index: usize, trial_index: usize) -> Result<TrialOutcome> {
    let p = spec.probabilities[p_index];
    let seed = derive_trial_seed(
        spec.base_seed,
        TAG_SWEEP,
        p_index as u64,
        trial_index as u64,
    );
    let mut stream = SeedStream::new(seed);
    let grid = bernoulli_seed(spec.width, spec.height, p, &mut stream)?;
    let rec = run_trial(&grid, &spec.cfg)?;
    Ok(TrialOutcome {
        trial_index,
        seed_used: seed,
        converged: rec.converged,
        convergence_step: rec.convergence_step,
        final_alive_fraction: *rec.alive_series.last().expect("series never empty"),
    })
}

/// Runs the full probability sweep.
///
/// Per-trial seeds depend only on (base_seed, p index, trial index), so
/// execution order is irrelevant and parallel runs are exactly
/// reproducible. Results are always aggregated in (p, trial) order.
pub fn convergence_sweep(spec: &SweepSpec) -> Result<SweepSummary> {
    let indices: Vec<(usize, usize)> = (0..spec.probabilities.len())
        .flat_map(|i| (0..spec.trials_per_p).map(move |j| (i, j)))
        .collect();

    let outcomes: Result<Vec<TrialOutcome>> =
        run_indexed(spec.parallel, &indices, |&(i, j)| sweep_trial(spec, i, j));
    let mut outcomes = outcomes?.into_iter();

    let per_p = spec
        .probabilities
        .iter()
        .map(|&p| {
            let trials: Vec<TrialOutcome> = outcomes.by_ref().take(spec.trials_per_p).collect();
            summarize_p(p, trials)
        })
        .collect();

    Ok(SweepSummary {
        width: spec.width,
        height: spec.height,
        base_seed: spec.base_seed,
        per_p,
    })
}

#[cfg(feature = "parallel")]
fn run_indexed<T: Send, F>(parallel: bool, indices: &[(usize, usize)], f: F) -> Result<Vec<T>>
where
    F: Fn(&(usize, usize)) -> Result<T> + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        // collect() preserves input order regardless of completion order
        indices.par_iter().map(f).collect()
    } else {
        indices.iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn run_indexed<T, F>(_parallel: bool, indices: &[(usize, usize)], f: F) -> Result<Vec<T>>
where
    F: Fn(&(usize, usize)) -> Result<T>,
{
    indices.iter().map(f).collect()
}

/// One seeded Bernoulli trial at a fixed probability.
pub fn trajectory_run(
    width: usize,
    height: usize,
    p: f64,
    cfg: &SimConfig,
    base_seed: u64,
) -> Result<TrialRecord> {
    let seed = derive_trial_seed(base_seed, TAG_TRAJECTORY, 0, 0);
    let mut stream = SeedStream::new(seed);
    let grid = bernoulli_seed(width, height, p, &mut stream)?;
    let mut rec = run_trial(&grid, cfg)?;
    rec.seed_used = seed;
    Ok(rec)
}

/// A completed ring run: the trial plus the setup that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct RingRunRecord {
    pub trial: TrialRecord,
    pub geometry: RingGeometry,
    pub schedule: RingSchedule,
    /// Per-ring alive fractions at the last simulated step.
    pub final_ring_fractions: Vec<f64>,
}

/// Seeds a ring-structured grid and runs it with per-ring recording.
///
/// `cfg.record_rings` is overridden with `geom`; when no snapshots were
/// requested, the initial and final states (t = 0 and the cap) are
/// captured.
pub fn ring_experiment(
    geom: &RingGeometry,
    sched: &RingSchedule,
    cfg: &SimConfig,
    base_seed: u64,
) -> Result<RingRunRecord> {
    let seed = derive_trial_seed(base_seed, TAG_RING, 0, 0);
    let mut stream = SeedStream::new(seed);
    let grid = ring_seed(geom, sched, &mut stream)?;

    let mut cfg = cfg.clone();
    cfg.record_rings = Some(geom.clone());
    if cfg.snapshot_steps.is_empty() {
        cfg.snapshot_steps = if cfg.max_steps == 0 {
            vec![0]
        } else {
            vec![0, cfg.max_steps]
        };
    }

    let mut trial = run_trial(&grid, &cfg)?;
    trial.seed_used = seed;

    let ring_series = trial.ring_series.as_ref().expect("record_rings was set");
    let final_ring_fractions = ring_series
        .iter()
        .map(|series| *series.last().expect("series never empty"))
        .collect();

    Ok(RingRunRecord {
        trial,
        geometry: geom.clone(),
        schedule: sched.clone(),
        final_ring_fractions,
    })
}
