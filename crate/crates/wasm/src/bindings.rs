//! wasm-bindgen surface: one `Demo` object per simulation shown on the
//! page. Compiled only for wasm32; the host build exposes just the
//! rendering helpers for testing.

use wasm_bindgen::prelude::*;

use citylife_core::{
    bernoulli_seed, derive_trial_seed, grids_equal, ring_seed, BoundaryPolicy, CellMask, GridState,
    RingGeometry, RingSchedule, SeedStream, TAG_RING, TAG_TRAJECTORY,
};

use crate::frame;

/// An interactive simulation: either a uniformly seeded grid or the
/// ring-seeded city model.
#[wasm_bindgen]
pub struct Demo {
    grid: GridState,
    boundary: BoundaryPolicy,
    rings: Option<(RingGeometry, Vec<CellMask>)>,
    t: u32,
    converged: bool,
}

#[wasm_bindgen]
impl Demo {
    /// Uniform Bernoulli(p) seeding on a width x height grid.
    #[wasm_bindgen]
    pub fn uniform(width: usize, height: usize, p: f64, seed: u64) -> Result<Demo, JsError> {
        let derived = derive_trial_seed(seed, TAG_TRAJECTORY, 0, 0);
        let grid = bernoulli_seed(width, height, p, &mut SeedStream::new(derived))
            .map_err(|e| JsError::new(&e.to_string()))?;
        Ok(Demo {
            grid,
            boundary: BoundaryPolicy::Dead,
            rings: None,
            t: 0,
            converged: false,
        })
    }

    /// The ring city model: 11x11 blocks of 10x10 cells, seeded with the
    /// default center-heavy gradient.
    #[wasm_bindgen]
    pub fn rings(seed: u64) -> Result<Demo, JsError> {
        let geom = RingGeometry::new(11, 10).map_err(|e| JsError::new(&e.to_string()))?;
        let sched =
            RingSchedule::default_gradient(&geom).map_err(|e| JsError::new(&e.to_string()))?;
        let derived = derive_trial_seed(seed, TAG_RING, 0, 0);
        let grid = ring_seed(&geom, &sched, &mut SeedStream::new(derived))
            .map_err(|e| JsError::new(&e.to_string()))?;
        let masks = geom.ring_masks();
        Ok(Demo {
            grid,
            boundary: BoundaryPolicy::Dead,
            rings: Some((geom, masks)),
            t: 0,
            converged: false,
        })
    }

    /// Advances up to `n` generations, stopping early at a fixed point.
    /// Returns the number of steps actually taken.
    pub fn step(&mut self, n: u32) -> u32 {
        let mut taken = 0;
        for _ in 0..n {
            if self.converged {
                break;
            }
            let next = self.grid.step(self.boundary);
            if grids_equal(&self.grid, &next).expect("same dimensions") {
                self.converged = true;
                break;
            }
            self.grid = next;
            self.t += 1;
            taken += 1;
        }
        taken
    }

    /// Flips one cell; editing resumes a converged run.
    pub fn toggle(&mut self, row: usize, col: usize) {
        if row >= self.grid.height() || col >= self.grid.width() {
            return;
        }
        let alive = self.grid.is_alive(row, col);
        let (w, h) = (self.grid.width(), self.grid.height());
        self.grid = GridState::from_fn(w, h, |r, c| {
            if (r, c) == (row, col) {
                !alive
            } else {
                self.grid.is_alive(r, c)
            }
        })
        .expect("dimensions unchanged");
        self.converged = false;
    }

    /// RGBA pixels, one per cell, row major.
    pub fn frame(&self) -> Vec<u8> {
        frame::frame_rgba(&self.grid, self.rings.as_ref().map(|(g, _)| g))
    }

    pub fn width(&self) -> usize {
        self.grid.width()
    }

    pub fn height(&self) -> usize {
        self.grid.height()
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn converged(&self) -> bool {
        self.converged
    }

    pub fn alive_fraction(&self) -> f64 {
        self.grid.alive_fraction()
    }

    /// Per-ring alive fractions; empty for uniform grids.
    pub fn ring_fractions(&self) -> Vec<f64> {
        match &self.rings {
            Some((_, masks)) => frame::ring_fractions(&self.grid, masks),
            None => Vec::new(),
        }
    }
}
