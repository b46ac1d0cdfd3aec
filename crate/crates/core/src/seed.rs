//! Deterministic random seeding and ring geometry.
//!
//! Everything here is reproducible from a single `u64` base seed. The
//! generator is SplitMix64, chosen because its full state is one word, it
//! has no warm-up, and the output mapping to [0, 1) is exact in binary64 —
//! independent reimplementations in other languages reproduce identical
//! grids from identical seeds.

use crate::error::{Error, Result};
use crate::grid::{CellMask, GridState};

/// SplitMix64 finalizer: the bijective mix applied to each advanced state.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// SplitMix64 sequence generator.
///
/// `next_u64` advances the state by the golden-ratio increment and
/// finalizes with [`mix64`]; `next_unit` keeps the top 53 bits so every
/// value in [0, 1) is an exact binary64.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedStream {
    state: u64,
}

impl SeedStream {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix64(self.state)
    }

    /// Uniform draw in [0, 1) with 53 bits of precision.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Derives the independent per-trial seed for position (`p_index`,
/// `trial_index`) of the experiment family `tag` under `base_seed`.
///
/// The derivation is pure u64 arithmetic (wrapping), so any language with
/// 64-bit integers reproduces it:
/// `k = tag * 2^32 + p_index * 1000003 + trial_index + 1`, then
/// `mix64(base_seed XOR (k * 0x9E3779B97F4A7C15))`.
pub fn derive_trial_seed(base_seed: u64, tag: u64, p_index: u64, trial_index: u64) -> u64 {
    let k = tag
        .wrapping_mul(1 << 32)
        .wrapping_add(p_index.wrapping_mul(1_000_003))
        .wrapping_add(trial_index)
        .wrapping_add(1);
    mix64(base_seed ^ k.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Fills a width x height grid with independent Bernoulli(p) cells.
///
/// Cells are drawn in row-major order and every cell consumes exactly one
/// draw, including at p = 0 and p = 1, so the stream position after
/// seeding depends only on the cell count.
pub fn bernoulli_seed(
    width: usize,
    height: usize,
    p: f64,
    stream: &mut SeedStream,
) -> Result<GridState> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(Error::InvalidProbability(p));
    }
    GridState::from_fn(width, height, |_, _| stream.next_unit() < p)
}

/// Square-ring partition of an `outer_n * inner_m` square grid.
///
/// The grid is an `outer_n` x `outer_n` arrangement of `inner_m` x
/// `inner_m` blocks. Blocks at the same Chebyshev distance from the center
/// block form one ring: ring 0 is the center block, ring k the square
/// annulus k blocks out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingGeometry {
    outer_n: usize,
    inner_m: usize,
}

impl RingGeometry {
    /// `outer_n` must be odd and >= 3 so a center block exists;
    /// `inner_m` must be >= 1.
    pub fn new(outer_n: usize, inner_m: usize) -> Result<Self> {
        if outer_n < 3 || outer_n % 2 == 0 {
            return Err(Error::InvalidOuterSize(outer_n));
        }
        if inner_m == 0 {
            return Err(Error::InvalidInnerSize);
        }
        Ok(Self { outer_n, inner_m })
    }

    pub fn outer_n(&self) -> usize {
        self.outer_n
    }

    pub fn inner_m(&self) -> usize {
        self.inner_m
    }

    /// Full grid edge length, `outer_n * inner_m`.
    pub fn side(&self) -> usize {
        self.outer_n * self.inner_m
    }

    /// Number of rings, `(outer_n - 1) / 2 + 1`.
    pub fn ring_count(&self) -> usize {
        (self.outer_n - 1) / 2 + 1
    }

    /// Ring index of the cell at (row, col): the Chebyshev distance of its
    /// block from the center block.
    pub fn ring_index(&self, row: usize, col: usize) -> Result<usize> {
        let side = self.side();
        if row >= side || col >= side {
            return Err(Error::OutOfBounds {
                row,
                col,
                width: side,
                height: side,
            });
        }
        let center = (self.outer_n / 2) as isize;
        let br = (row / self.inner_m) as isize - center;
        let bc = (col / self.inner_m) as isize - center;
        Ok(br.abs().max(bc.abs()) as usize)
    }

    /// Mask of all cells in ring `k`.
    pub fn ring_mask(&self, k: usize) -> Result<CellMask> {
        if k >= self.ring_count() {
            return Err(Error::RingOutOfRange {
                ring: k,
                ring_count: self.ring_count(),
            });
        }
        let side = self.side();
        let positions = (0..side).flat_map(|r| (0..side).map(move |c| (r, c)));
        let mut cells = Vec::new();
        for (r, c) in positions {
            if self.ring_index(r, c).expect("in bounds by construction") == k {
                cells.push((r, c));
            }
        }
        CellMask::from_positions(side, side, cells)
    }

    /// All ring masks, index k at position k. Together the masks partition
    /// the grid: every cell appears in exactly one.
    pub fn ring_masks(&self) -> Vec<CellMask> {
        (0..self.ring_count())
            .map(|k| self.ring_mask(k).expect("k < ring_count"))
            .collect()
    }
}

/// Per-ring seeding probabilities, ring 0 first.
#[derive(Debug, Clone, PartialEq)]
pub struct RingSchedule {
    probs: Vec<f64>,
}

/// Center-heavy default schedule for the 6-ring geometry: a dense core
/// that thins toward the edge.
pub const DEFAULT_GRADIENT: [f64; 6] = [0.9, 0.9, 0.8, 0.6, 0.4, 0.2];

impl RingSchedule {
    /// One probability per ring of `geometry`, each in [0, 1].
    pub fn new(geometry: &RingGeometry, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != geometry.ring_count() {
            return Err(Error::ScheduleLengthMismatch {
                expected: geometry.ring_count(),
                got: probs.len(),
            });
        }
        for &p in &probs {
            if !(0.0..=1.0).contains(&p) || p.is_nan() {
                return Err(Error::InvalidProbability(p));
            }
        }
        Ok(Self { probs })
    }

    /// The default gradient; only valid for 6-ring geometries.
    pub fn default_gradient(geometry: &RingGeometry) -> Result<Self> {
        Self::new(geometry, DEFAULT_GRADIENT.to_vec())
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

/// Seeds a ring-structured grid: each cell is Bernoulli with the
/// probability of its ring.
///
/// Draws are row-major, one per cell, exactly as [`bernoulli_seed`]; only
/// the threshold varies by cell. The grid side is `geometry.side()`.
pub fn ring_seed(
    geometry: &RingGeometry,
    schedule: &RingSchedule,
    stream: &mut SeedStream,
) -> Result<GridState> {
    if schedule.probs.len() != geometry.ring_count() {
        return Err(Error::ScheduleLengthMismatch {
            expected: geometry.ring_count(),
            got: schedule.probs.len(),
        });
    }
    let side = geometry.side();
    GridState::from_fn(side, side, |r, c| {
        let k = geometry.ring_index(r, c).expect("from_fn stays in bounds");
        stream.next_unit() < schedule.probs[k]
    })
}
