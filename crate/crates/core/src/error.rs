use thiserror::Error;

/// Errors produced by grid construction, seeding, simulation, and export.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grid must have at least one row and one column")]
    EmptyGrid,

    #[error("rows have unequal lengths (row {row} has {got} cells, expected {expected})")]
    RaggedRows {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error("position ({row}, {col}) is outside a {width}x{height} grid")]
    OutOfBounds {
        row: usize,
        col: usize,
        width: usize,
        height: usize,
    },

    #[error("grid shapes differ: {a_width}x{a_height} vs {b_width}x{b_height}")]
    DimensionMismatch {
        a_width: usize,
        a_height: usize,
        b_width: usize,
        b_height: usize,
    },

    #[error("mask is empty")]
    EmptyMask,

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("outer grid size {0} must be an odd number >= 3")]
    InvalidOuterSize(usize),

    #[error("inner block size must be >= 1")]
    InvalidInnerSize,

    #[error("ring {ring} is out of range for a geometry with {ring_count} rings")]
    RingOutOfRange { ring: usize, ring_count: usize },

    #[error("schedule has {got} probabilities but the geometry has {expected} rings")]
    ScheduleLengthMismatch { expected: usize, got: usize },

    #[error("initial grid is {width}x{height} but the ring geometry needs {side}x{side}")]
    GeometryMismatch {
        width: usize,
        height: usize,
        side: usize,
    },

    #[error("snapshot step {step} exceeds the step cap {max_steps}")]
    SnapshotOutOfRange { step: usize, max_steps: usize },

    #[error("pattern contains no cell rows")]
    EmptyPattern,

    #[error("illegal character {ch:?} at line {line}, column {col}")]
    IllegalCharacter { ch: char, line: usize, col: usize },

    #[error("pixel scale must be >= 1")]
    InvalidScale,
}

pub type Result<T> = std::result::Result<T, Error>;
