//! Bit-parallel step kernel.
//!
//! Each row is packed 64 cells per word. The eight neighbor fields of a row
//! are expressed as whole bitboards (the row above/below and the three
//! horizontally shifted variants of each), and neighbor counts are formed
//! with a carry-save adder network so all 64 cells of a word are evaluated
//! at once. Unused high bits of the last word in a row are kept at zero;
//! the adder produces garbage there, masked off when the output row is
//! written.

/// Applies the B3/S23 rule to one word given its eight neighbor bitboards.
///
/// The 4-input sums are exact because a half adder can never set both of
/// its output bits, so the carry chain below never overflows.
#[inline(always)]
pub(crate) fn life_word(
    nw: u64,
    n: u64,
    ne: u64,
    w: u64,
    e: u64,
    sw: u64,
    s: u64,
    se: u64,
    center: u64,
) -> u64 {
    let (ab0, ab1) = (nw ^ n, nw & n);
    let (cd0, cd1) = (ne ^ w, ne & w);
    let (ef0, ef1) = (e ^ sw, e & sw);
    let (gh0, gh1) = (s ^ se, s & se);

    // a+b+c+d as a 3-bit number per lane
    let ad0 = ab0 ^ cd0;
    let ad1 = ab1 ^ cd1 ^ (ab0 & cd0);
    let ad2 = ab1 & cd1;

    let eh0 = ef0 ^ gh0;
    let eh1 = ef1 ^ gh1 ^ (ef0 & gh0);
    let eh2 = ef1 & gh1;

    let sum0 = ad0 ^ eh0;
    let c0 = ad0 & eh0;
    let t1 = ad1 ^ eh1;
    let sum1 = t1 ^ c0;
    let ge4 = ad2 | eh2 | (ad1 & eh1) | (t1 & c0);

    let two_or_three = sum1 & !ge4;
    (center & two_or_three & !sum0) | (two_or_three & sum0)
}

/// Fills `west` and `east` so that bit j of word x holds the cell one
/// column to the west/east of cell (x*64 + j). Out-of-range columns read
/// as dead unless `wrap` is set, in which case the row's far edge is
/// folded in at the boundary bit.
pub(crate) fn fill_shifted(
    row: &[u64],
    width: usize,
    wrap: bool,
    west: &mut [u64],
    east: &mut [u64],
) {
    let n = row.len();
    let top = (width - 1) & 63;
    for x in 0..n {
        let carry = if x == 0 { 0 } else { row[x - 1] >> 63 };
        west[x] = (row[x] << 1) | carry;
    }
    for x in 0..n {
        let carry = if x + 1 == n { 0 } else { row[x + 1] << 63 };
        east[x] = (row[x] >> 1) | carry;
    }
    if wrap {
        west[0] |= (row[n - 1] >> top) & 1;
        east[n - 1] |= (row[0] & 1) << top;
    }
}

/// Computes the next generation for one row band.
///
/// `above`/`below` carry the (west, center, east) boards of the adjacent
/// rows, or all-dead boards at a non-wrapping edge.
#[allow(clippy::too_many_arguments)]
pub(crate) fn step_row(
    above: (&[u64], &[u64], &[u64]),
    current: (&[u64], &[u64], &[u64]),
    below: (&[u64], &[u64], &[u64]),
    last_word_mask: u64,
    out: &mut [u64],
) {
    let n = out.len();
    for x in 0..n {
        out[x] = life_word(
            above.0[x],
            above.1[x],
            above.2[x],
            current.0[x],
            current.2[x],
            below.0[x],
            below.1[x],
            below.2[x],
            current.1[x],
        );
    }
    out[n - 1] &= last_word_mask;
}
