//! Browser bindings for the life-grid engine: a small `Demo` object the
//! static page drives for interactive uniform and ring-seeded runs.

#[cfg(target_arch = "wasm32")]
mod bindings;
mod frame;

#[cfg(target_arch = "wasm32")]
pub use bindings::Demo;
pub use frame::{frame_rgba, ring_fractions};
