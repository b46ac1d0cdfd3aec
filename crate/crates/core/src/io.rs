//! Serialization: plaintext patterns, CSV time series, JSON sweep
//! summaries, and PGM snapshots.
//!
//! Every writer is a pure function of its input and emits bytes that are
//! stable across runs, platforms, and locales; equality of inputs means
//! equality of output bytes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::experiments::SweepSummary;
use crate::grid::GridState;
use crate::runner::TrialRecord;

/// Parses the plaintext pattern format: lines of '.' (dead) and 'O'
/// (alive) of equal length, with optional '!'-prefixed comment lines.
pub fn parse_pattern(text: &str) -> Result<GridState> {
    let mut rows: Vec<Vec<bool>> = Vec::new();
    let mut width: Option<usize> = None;
    for (line_no, line) in text.lines().enumerate() {
        if line.starts_with('!') {
            continue;
        }
        let mut row = Vec::with_capacity(width.unwrap_or(line.len()));
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '.' => row.push(false),
                'O' => row.push(true),
                _ => {
                    return Err(Error::IllegalCharacter {
                        ch,
                        line: line_no + 1,
                        col: col + 1,
                    })
                }
            }
        }
        if let Some(w) = width {
            if row.len() != w {
                return Err(Error::RaggedRows {
                    row: rows.len(),
                    got: row.len(),
                    expected: w,
                });
            }
        } else {
            width = Some(row.len());
        }
        rows.push(row);
    }
    if rows.is_empty() || width == Some(0) {
        return Err(Error::EmptyPattern);
    }
    GridState::from_rows(&rows)
}

/// Writes the pattern format; inverse of [`parse_pattern`]. No trailing
/// newline.
pub fn write_pattern(g: &GridState) -> String {
    let mut out = String::with_capacity((g.width() + 1) * g.height());
    for row in 0..g.height() {
        if row > 0 {
            out.push('\n');
        }
        for col in 0..g.width() {
            out.push(if g.is_alive(row, col) { 'O' } else { '.' });
        }
    }
    out
}

/// CSV time series of a trial: header `t,alive_fraction[,ring_0,…]`, one
/// row per recorded timestep, fractions with exactly 6 decimals, LF line
/// endings.
pub fn export_timeseries_csv(rec: &TrialRecord) -> String {
    let rings = rec.ring_series.as_deref().unwrap_or(&[]);
    let mut out = String::new();
    out.push_str("t,alive_fraction");
    for k in 0..rings.len() {
        out.push_str(&format!(",ring_{k}"));
    }
    out.push('\n');
    for (t, &frac) in rec.alive_series.iter().enumerate() {
        out.push_str(&format!("{t},{frac:.6}"));
        for series in rings {
            out.push_str(&format!(",{:.6}", series[t]));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct TrialJson {
    converged: bool,
    convergence_step: Option<usize>,
    seed: u64,
}

// Field order is alphabetical in every struct here, which gives the
// sorted-key JSON the format promises.
#[derive(Serialize)]
struct PerPJson {
    converged: usize,
    mean_convergence_steps: Option<f64>,
    outcomes: Vec<TrialJson>,
    p: f64,
    trials: usize,
}

#[derive(Serialize)]
struct SweepJson {
    base_seed: u64,
    height: usize,
    per_p: Vec<PerPJson>,
    width: usize,
}

/// JSON rendering of a sweep summary: sorted keys, stable pretty
/// formatting, `mean_convergence_steps` null where nothing converged.
pub fn export_sweep_json(s: &SweepSummary) -> String {
    let doc = SweepJson {
        base_seed: s.base_seed,
        height: s.height,
        per_p: s
            .per_p
            .iter()
            .map(|p| PerPJson {
                converged: p.converged_count,
                mean_convergence_steps: p.mean_convergence_steps,
                outcomes: p
                    .trials
                    .iter()
                    .map(|t| TrialJson {
                        converged: t.converged,
                        convergence_step: t.convergence_step,
                        seed: t.seed_used,
                    })
                    .collect(),
                p: p.p,
                trials: p.trial_count,
            })
            .collect(),
        width: s.width,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    text.push('\n');
    text
}

/// Renders a grid as binary PGM (P5): alive = 0 (black), dead = 255
/// (white), each cell a scale x scale pixel block.
pub fn render_pgm(g: &GridState, scale: usize) -> Result<Vec<u8>> {
    if scale == 0 {
        return Err(Error::InvalidScale);
    }
    let (w, h) = (g.width() * scale, g.height() * scale);
    let header = format!("P5\n{w} {h}\n255\n");
    let mut out = Vec::with_capacity(header.len() + w * h);
    out.extend_from_slice(header.as_bytes());
    for row in 0..g.height() {
        let mut scan = Vec::with_capacity(w);
        for col in 0..g.width() {
            let px = if g.is_alive(row, col) { 0u8 } else { 255u8 };
            scan.extend(std::iter::repeat(px).take(scale));
        }
        for _ in 0..scale {
            out.extend_from_slice(&scan);
        }
    }
    Ok(out)
}
