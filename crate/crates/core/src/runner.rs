//! Single-trial simulation loop with convergence detection.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::grid::{grids_equal, BoundaryPolicy, GridState};
use crate::seed::RingGeometry;

/// Parameters of one simulation trial.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    /// Step cap. A trial applies at most this many steps.
    pub max_steps: usize,
    pub boundary: BoundaryPolicy,
    /// When set, per-ring alive fractions are recorded alongside the
    /// overall series. The initial grid must be `side x side` for this
    /// geometry.
    pub record_rings: Option<RingGeometry>,
    /// Timesteps at which to capture full grids. Each must be <= max_steps.
    pub snapshot_steps: Vec<usize>,
    /// Maximum oscillator period to scan for, as a diagnostic. `None`
    /// disables the scan. Detection never affects the convergence flag.
    pub cycle_window: Option<usize>,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            max_steps: 1000,
            boundary: BoundaryPolicy::Dead,
            record_rings: None,
            snapshot_steps: Vec::new(),
            cycle_window: None,
        }
    }
}

/// A repeated state found by the diagnostic cycle scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleInfo {
    /// Timestep at which the repeat was observed.
    pub detected_at: usize,
    /// Distance back to the equal earlier state.
    pub period: usize,
}

/// Everything one trial produced.
///
/// Series alignment: index t holds the metric of state(t), with t = 0 the
/// initial grid. When the trial converges at step t (state(t) equals
/// state(t+1)) the series has t + 2 entries; otherwise max_steps + 1.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub converged: bool,
    /// Smallest t with state(t) == state(t+1), when one was found.
    pub convergence_step: Option<usize>,
    /// Overall alive fraction at t = 0 ..= last simulated step.
    pub alive_series: Vec<f64>,
    /// Per-ring alive fractions, outer index ring, aligned with
    /// `alive_series`. Present iff ring recording was requested.
    pub ring_series: Option<Vec<Vec<f64>>>,
    /// Captured grids, ascending by timestep.
    pub snapshots: Vec<(usize, GridState)>,
    /// The seed the caller used to build the initial grid, echoed for
    /// reproducibility. Zero when the caller seeded by other means.
    pub seed_used: u64,
    /// Oscillator diagnosis, if the scan was enabled and found one.
    pub cycle: Option<CycleInfo>,
}

/// Runs one trial: records metrics at t=0, then repeatedly applies the
/// step rule until the state reproduces itself exactly or `max_steps`
/// steps have been applied.
///
/// Convergence is the exact fixed point state(t) == state(t+1); an
/// oscillator of period 2 or more never converges. On every converged
/// trial the fixed point is re-checked by one further step.
///
/// A snapshot request at a step past convergence is served with the fixed
/// point, which is the state at that step.
pub fn run_trial(initial: &GridState, cfg: &SimConfig) -> Result<TrialRecord> {
    if let Some(geom) = &cfg.record_rings {
        let side = geom.side();
        if initial.width() != side || initial.height() != side {
            return Err(Error::GeometryMismatch {
                width: initial.width(),
                height: initial.height(),
                side,
            });
        }
    }
    for &t in &cfg.snapshot_steps {
        if t > cfg.max_steps {
            return Err(Error::SnapshotOutOfRange {
                step: t,
                max_steps: cfg.max_steps,
            });
        }
    }

    let ring_masks = cfg.record_rings.as_ref().map(|g| g.ring_masks());
    let mut wanted: Vec<usize> = cfg.snapshot_steps.clone();
    wanted.sort_unstable();
    wanted.dedup();

    let mut alive_series = Vec::with_capacity(cfg.max_steps + 1);
    let mut ring_series = ring_masks
        .as_ref()
        .map(|masks| vec![Vec::with_capacity(cfg.max_steps + 1); masks.len()]);
    let mut snapshots: Vec<(usize, GridState)> = Vec::with_capacity(wanted.len());

    let mut record_metrics = |state: &GridState| -> Result<()> {
        alive_series.push(state.alive_fraction());
        if let (Some(series), Some(masks)) = (ring_series.as_mut(), ring_masks.as_ref()) {
            for (k, mask) in masks.iter().enumerate() {
                series[k].push(state.masked_alive_fraction(mask)?);
            }
        }
        Ok(())
    };

    record_metrics(initial)?;
    if wanted.first() == Some(&0) {
        snapshots.push((0, initial.clone()));
    }

    let window = cfg.cycle_window.unwrap_or(0);
    let mut recent: VecDeque<GridState> = VecDeque::new();
    if window > 0 {
        recent.push_back(initial.clone());
    }
    let mut cycle = None;

    let mut converged = false;
    let mut convergence_step = None;
    let mut current = initial.clone();
    let mut t = 0usize;
    while t < cfg.max_steps {
        let next = current.step(cfg.boundary);
        record_metrics(&next)?;
        if wanted.binary_search(&(t + 1)).is_ok() {
            snapshots.push((t + 1, next.clone()));
        }

        if grids_equal(&current, &next)? {
            converged = true;
            convergence_step = Some(t);
            assert!(
                grids_equal(&next, &next.step(cfg.boundary))?,
                "fixed point did not persist"
            );
            current = next;
            break;
        }

        if window > 0 && cycle.is_none() {
            for (back, earlier) in recent.iter().rev().enumerate() {
                if grids_equal(earlier, &next)? {
                    cycle = Some(CycleInfo {
                        detected_at: t + 1,
                        period: back + 1,
                    });
                    break;
                }
            }
            recent.push_back(next.clone());
            if recent.len() > window {
                recent.pop_front();
            }
        }

        current = next;
        t += 1;
    }

    // A converged run holds its final state forever, so later snapshot
    // requests are still well-defined.
    if converged {
        let reached = convergence_step.expect("set with converged") + 1;
        for &want in wanted.iter().filter(|&&w| w > reached) {
            snapshots.push((want, current.clone()));
        }
    }

    Ok(TrialRecord {
        converged,
        convergence_step,
        alive_series,
        ring_series,
        snapshots,
        seed_used: 0,
        cycle,
    })
}
