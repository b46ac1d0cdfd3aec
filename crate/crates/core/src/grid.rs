//! Grid state, boundary semantics, and the Game of Life step.
//!
//! A [`GridState`] is an immutable value: every update produces a new grid.
//! Two step implementations share one contract — [`GridState::step`] is the
//! packed bit-parallel kernel, [`GridState::step_reference`] the plain
//! per-cell loop kept permanently as its differential-testing oracle.

use std::fmt;

use crate::error::{Error, Result};
use crate::kernel;

/// Neighbor semantics at the grid edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundaryPolicy {
    /// Out-of-bounds neighbor positions count as dead.
    #[default]
    Dead,
    /// Row and column indices wrap modulo the grid dimensions.
    Toroidal,
}

/// A rectangular field of alive/dead cells, packed 64 columns per word.
///
/// Construction validates dimensions; after that the value never mutates —
/// [`step`](GridState::step) returns a fresh grid. Equality is cell-for-cell
/// over identical dimensions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GridState {
    width: usize,
    height: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl GridState {
    /// All-dead grid. Errors with [`Error::EmptyGrid`] on a zero dimension.
    pub fn dead(width: usize, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyGrid);
        }
        let words_per_row = width.div_ceil(64);
        Ok(Self {
            width,
            height,
            words_per_row,
            bits: vec![0; words_per_row * height],
        })
    }

    /// Builds a grid by evaluating `f(row, col)` for every cell.
    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self> {
        let mut grid = Self::dead(width, height)?;
        for row in 0..height {
            for col in 0..width {
                if f(row, col) {
                    grid.set(row, col, true);
                }
            }
        }
        Ok(grid)
    }

    /// Builds a grid from row-major boolean rows.
    ///
    /// Errors: [`Error::EmptyGrid`] when there are no rows or rows of length
    /// zero; [`Error::RaggedRows`] when lengths differ.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let height = rows.len();
        if height == 0 {
            return Err(Error::EmptyGrid);
        }
        let width = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::RaggedRows {
                    row: i,
                    got: row.len(),
                    expected: width,
                });
            }
        }
        let mut grid = Self::dead(width, height)?;
        for (r, row) in rows.iter().enumerate() {
            for (c, &alive) in row.iter().enumerate() {
                if alive {
                    grid.set(r, c, true);
                }
            }
        }
        Ok(grid)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Cell accessor. Panics when (row, col) is outside the grid.
    pub fn is_alive(&self, row: usize, col: usize) -> bool {
        assert!(
            row < self.height && col < self.width,
            "cell ({row}, {col}) outside {}x{} grid",
            self.width,
            self.height
        );
        let word = self.bits[row * self.words_per_row + col / 64];
        (word >> (col % 64)) & 1 == 1
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, alive: bool) {
        debug_assert!(row < self.height && col < self.width);
        let idx = row * self.words_per_row + col / 64;
        let mask = 1u64 << (col % 64);
        if alive {
            self.bits[idx] |= mask;
        } else {
            self.bits[idx] &= !mask;
        }
    }

    /// Number of alive cells.
    pub fn alive_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Alive cells divided by total cells, in [0, 1].
    pub fn alive_fraction(&self) -> f64 {
        self.alive_count() as f64 / (self.width * self.height) as f64
    }

    /// Alive cells within `mask` divided by the mask size.
    ///
    /// The mask must be paired with a grid of these exact dimensions;
    /// anything else could address cells outside the grid.
    pub fn masked_alive_fraction(&self, mask: &CellMask) -> Result<f64> {
        if mask.is_empty() {
            return Err(Error::EmptyMask);
        }
        if mask.width != self.width || mask.height != self.height {
            return Err(Error::OutOfBounds {
                row: mask.height.saturating_sub(1),
                col: mask.width.saturating_sub(1),
                width: self.width,
                height: self.height,
            });
        }
        let alive: usize = self
            .bits
            .iter()
            .zip(&mask.bits)
            .map(|(g, m)| (g & m).count_ones() as usize)
            .sum();
        Ok(alive as f64 / mask.len() as f64)
    }

    /// Count of alive cells among the eight Moore-neighborhood positions.
    pub fn neighbor_count(&self, row: usize, col: usize, boundary: BoundaryPolicy) -> Result<u8> {
        if row >= self.height || col >= self.width {
            return Err(Error::OutOfBounds {
                row,
                col,
                width: self.width,
                height: self.height,
            });
        }
        Ok(self.neighbor_count_unchecked(row, col, boundary))
    }

    fn neighbor_count_unchecked(&self, row: usize, col: usize, boundary: BoundaryPolicy) -> u8 {
        let (h, w) = (self.height as isize, self.width as isize);
        let mut count = 0;
        for dr in -1isize..=1 {
            for dc in -1isize..=1 {
                if dr == 0 && dc == 0 {
                    continue;
                }
                let (r, c) = (row as isize + dr, col as isize + dc);
                let alive = match boundary {
                    BoundaryPolicy::Dead => {
                        r >= 0 && r < h && c >= 0 && c < w && self.is_alive(r as usize, c as usize)
                    }
                    BoundaryPolicy::Toroidal => {
                        self.is_alive(r.rem_euclid(h) as usize, c.rem_euclid(w) as usize)
                    }
                };
                if alive {
                    count += 1;
                }
            }
        }
        count
    }

    /// One generation of B3/S23, computed with the packed word kernel.
    ///
    /// Neighbor counts are taken entirely on `self`; the result is a new
    /// grid and `self` is left untouched.
    pub fn step(&self, boundary: BoundaryPolicy) -> GridState {
        let wrap = boundary == BoundaryPolicy::Toroidal;
        let n = self.words_per_row;
        let h = self.height;

        // Shifted companions of every row, built once up front.
        let mut west = vec![0u64; n * h];
        let mut east = vec![0u64; n * h];
        for r in 0..h {
            let row = &self.bits[r * n..(r + 1) * n];
            kernel::fill_shifted(
                row,
                self.width,
                wrap,
                &mut west[r * n..(r + 1) * n],
                &mut east[r * n..(r + 1) * n],
            );
        }

        let zeros = vec![0u64; n];
        let boards = |r: usize| -> (&[u64], &[u64], &[u64]) {
            (
                &west[r * n..(r + 1) * n],
                &self.bits[r * n..(r + 1) * n],
                &east[r * n..(r + 1) * n],
            )
        };
        let edge = (&zeros[..], &zeros[..], &zeros[..]);

        let last_word_mask = if self.width % 64 == 0 {
            u64::MAX
        } else {
            (1u64 << (self.width % 64)) - 1
        };

        let mut out = vec![0u64; n * h];
        for r in 0..h {
            let above = if r > 0 {
                boards(r - 1)
            } else if wrap {
                boards(h - 1)
            } else {
                edge
            };
            let below = if r + 1 < h {
                boards(r + 1)
            } else if wrap {
                boards(0)
            } else {
                edge
            };
            kernel::step_row(
                above,
                boards(r),
                below,
                last_word_mask,
                &mut out[r * n..(r + 1) * n],
            );
        }

        GridState {
            width: self.width,
            height: self.height,
            words_per_row: n,
            bits: out,
        }
    }

    /// Same contract as [`step`](GridState::step), implemented as the
    /// simplest per-cell loop. Kept as the differential-testing oracle for
    /// the packed kernel; never removed.
    pub fn step_reference(&self, boundary: BoundaryPolicy) -> GridState {
        let mut out = Self::dead(self.width, self.height).expect("dimensions already validated");
        for row in 0..self.height {
            for col in 0..self.width {
                let n = self.neighbor_count_unchecked(row, col, boundary);
                let next = matches!((self.is_alive(row, col), n), (true, 2) | (_, 3));
                if next {
                    out.set(row, col, true);
                }
            }
        }
        out
    }
}

impl fmt::Debug for GridState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "GridState {}x{} ({} alive)",
            self.width,
            self.height,
            self.alive_count()
        )?;
        if self.width <= 64 && self.height <= 64 {
            for row in 0..self.height {
                for col in 0..self.width {
                    f.write_str(if self.is_alive(row, col) { "O" } else { "." })?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Compares two grids cell for cell.
///
/// A shape mismatch is an error rather than `false`: the comparison backs
/// convergence detection between successive states of one run, where
/// differing shapes can only mean a bug.
pub fn grids_equal(a: &GridState, b: &GridState) -> Result<bool> {
    if a.width != b.width || a.height != b.height {
        return Err(Error::DimensionMismatch {
            a_width: a.width,
            a_height: a.height,
            b_width: b.width,
            b_height: b.height,
        });
    }
    Ok(a.bits == b.bits)
}

/// A set of in-bounds cell positions, paired with the dimensions of the
/// grids it may be applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMask {
    width: usize,
    height: usize,
    bits: Vec<u64>,
    len: usize,
}

impl CellMask {
    /// Builds a mask from explicit positions; duplicates collapse.
    pub fn from_positions(
        width: usize,
        height: usize,
        positions: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyGrid);
        }
        let words_per_row = width.div_ceil(64);
        let mut bits = vec![0u64; words_per_row * height];
        for (row, col) in positions {
            if row >= height || col >= width {
                return Err(Error::OutOfBounds {
                    row,
                    col,
                    width,
                    height,
                });
            }
            bits[row * words_per_row + col / 64] |= 1u64 << (col % 64);
        }
        let len = bits.iter().map(|w| w.count_ones() as usize).sum();
        Ok(Self {
            width,
            height,
            bits,
            len,
        })
    }

    /// Mask covering every cell of a width x height grid.
    pub fn full(width: usize, height: usize) -> Result<Self> {
        Self::from_positions(
            width,
            height,
            (0..height).flat_map(move |r| (0..width).map(move |c| (r, c))),
        )
    }

    /// Number of positions in the mask.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        if row >= self.height || col >= self.width {
            return false;
        }
        let words_per_row = self.width.div_ceil(64);
        (self.bits[row * words_per_row + col / 64] >> (col % 64)) & 1 == 1
    }
}
