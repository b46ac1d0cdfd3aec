//! Deterministic Game of Life engine with an experiment harness for
//! density-seeded and ring-seeded grids.
//!
//! The crate simulates Conway's B3/S23 rule on bit-packed grids with a
//! choice of dead or toroidal boundaries, detects exact fixed-point
//! convergence, and reproduces three experiment protocols over it: a
//! probability sweep measuring time to convergence, single trajectory
//! runs, and a concentric-ring seeding model of density migration on a
//! 110x110 grid. All randomness flows from one 64-bit seed through
//! SplitMix64, so every result is exactly reproducible, including across
//! parallel execution.
//!
//! ```
//! use citylife_core::{run_trial, GridState, SimConfig};
//!
//! let all_alive = GridState::from_fn(10, 10, |_, _| true).unwrap();
//! let record = run_trial(&all_alive, &SimConfig::default()).unwrap();
//! assert_eq!(record.convergence_step, Some(2));
//! ```

mod error;
mod experiments;
mod grid;
mod io;
mod kernel;
mod runner;
mod seed;

pub use error::{Error, Result};
pub use experiments::{
    convergence_sweep, default_probability_grid, ring_experiment, trajectory_run,
    ProbabilitySummary, RingRunRecord, SweepSpec, SweepSummary, TrialOutcome, TAG_RING, TAG_SWEEP,
    TAG_TRAJECTORY,
};
pub use grid::{grids_equal, BoundaryPolicy, CellMask, GridState};
pub use io::{export_sweep_json, export_timeseries_csv, parse_pattern, render_pgm, write_pattern};
pub use runner::{run_trial, CycleInfo, SimConfig, TrialRecord};
pub use seed::{
    bernoulli_seed, derive_trial_seed, mix64, ring_seed, RingGeometry, RingSchedule, SeedStream,
    DEFAULT_GRADIENT,
};
