//! RGBA frame rendering, kept free of wasm types so it tests on the host.

use citylife_core::{CellMask, GridState, RingGeometry};

/// Background shade per ring, center outwards: the block structure stays
/// visible behind the cells without competing with them.
const RING_SHADES: [[u8; 3]; 6] = [
    [236, 229, 221],
    [240, 234, 227],
    [244, 239, 233],
    [247, 243, 238],
    [250, 247, 243],
    [252, 250, 247],
];

const PLAIN_DEAD: [u8; 3] = [247, 245, 242];
const ALIVE: [u8; 3] = [31, 41, 55];

/// Renders the grid as tightly packed RGBA, one pixel per cell, row
/// major. Dead cells take their ring's background shade when a geometry
/// is supplied.
pub fn frame_rgba(grid: &GridState, rings: Option<&RingGeometry>) -> Vec<u8> {
    let (w, h) = (grid.width(), grid.height());
    let mut out = Vec::with_capacity(w * h * 4);
    for row in 0..h {
        for col in 0..w {
            let rgb = if grid.is_alive(row, col) {
                ALIVE
            } else {
                match rings {
                    Some(geom) => {
                        let k = geom
                            .ring_index(row, col)
                            .expect("frame dimensions match geometry");
                        RING_SHADES[k.min(RING_SHADES.len() - 1)]
                    }
                    None => PLAIN_DEAD,
                }
            };
            out.extend_from_slice(&rgb);
            out.push(255);
        }
    }
    out
}

/// Per-ring alive fractions for the readout panel.
pub fn ring_fractions(grid: &GridState, masks: &[CellMask]) -> Vec<f64> {
    masks
        .iter()
        .map(|m| {
            grid.masked_alive_fraction(m)
                .expect("masks are built for this grid")
        })
        .collect()
}
