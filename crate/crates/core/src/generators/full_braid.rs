use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::mosaic::Mosaic;
use crate::tile::{Side, Tile};

/// Crossing count of the full-braid mosaic of parameter `n`.
pub fn full_braid_q(n: usize) -> i64 {
    let n = n as i64;
    2 * n * n - 2 * n - 1
}

/// Builds the `2n x 2n` full-braid mosaic of the `(2, q')`-torus knot,
/// `q' = 2n^2 - 2n - 1`. Returns the mosaic and `q'`.
///
/// It holds `n^2` vertical-over and `n(n - 2) - 1` horizontal-over crossings.
pub fn full_braid(n: usize) -> Result<(Mosaic, i64)> {
    if n < 3 {
        return Err(Error::FullBraidTooSmall(n));
    }
    let side = 2 * n;
    let mut m = Mosaic::filled(side, Tile::VERTICAL);

    // 1-based row/column parities below.
    for i in 1..=n {
        for j in 1..=side {
            let tile = if i % 2 == j % 2 {
                Tile::DOUBLE_TR
            } else {
                Tile::CROSS_VERTICAL_OVER
            };
            m.set(i - 1, j - 1, tile);
        }
    }

    for i in n + 1..2 * (n - 1) {
        for j in 1..=side {
            let tile = if i % 2 == j % 2 {
                Tile::CROSS_HORIZONTAL_OVER
            } else {
                Tile::DOUBLE_TL
            };
            m.set(i - 1, j - 1, tile);
        }
    }

    // Row 2(n - 1): horizontal-over crossings on even columns except the
    // last, top-left arcs on odd columns except the last, and top-right arcs
    // on the final two columns.
    let row = 2 * (n - 1);
    for j in 1..=side {
        let tile = if j >= side - 1 {
            Tile::DOUBLE_TR
        } else if j % 2 == 1 {
            Tile::DOUBLE_TL
        } else {
            Tile::CROSS_HORIZONTAL_OVER
        };
        m.set(row - 1, j - 1, tile);
    }

    Ok((m, full_braid_q(n)))
}

fn step(n: usize, (r, c): (usize, usize), s: Side) -> (usize, usize) {
    match s {
        Side::Left => (r, (c + n - 1) % n),
        Side::Right => (r, (c + 1) % n),
        Side::Top => ((r + n - 1) % n, c),
        Side::Bottom => ((r + 1) % n, c),
    }
}

/// The crossing tile a strand leaving `cell` through `side` enters next, or
/// `None` if the strand hits a loose end or never meets a crossing.
fn next_crossing(m: &Mosaic, cell: (usize, usize), side: Side) -> Option<(usize, usize)> {
    let n = m.size();
    let (mut at, mut entry) = (step(n, cell, side), side.opposite());
    for _ in 0..4 * n * n {
        let t = m.get(at.0, at.1);
        if t.is_crossing() {
            return Some(at);
        }
        let exit = t.exit(entry)?;
        at = step(n, at, exit);
        entry = exit.opposite();
    }
    None
}

/// The next crossing of the braid through `cell` with the side strand
/// leading to it: the crossing reached both from the bottom and from one of
/// the two side exits.
fn braid_successor(m: &Mosaic, cell: (usize, usize)) -> Option<((usize, usize), Side)> {
    let below = next_crossing(m, cell, Side::Bottom)?;
    [Side::Right, Side::Left]
        .into_iter()
        .find(|&s| next_crossing(m, cell, s) == Some(below))
        .map(|s| (below, s))
}

/// Crossing tiles in braid-chain order.
///
/// A braid is a maximal run of crossings in which both lower strands of each
/// crossing enter the next one. Braids start at crossings no other crossing
/// leads to, taken in row-major order, and are listed top to bottom; crossings
/// on closed braids follow, each cycle opened at its row-major least cell.
pub fn crossing_chain(m: &Mosaic) -> Vec<(usize, usize)> {
    let n = m.size();
    let cells: Vec<(usize, usize)> =
        (0..n * n).map(|k| (k / n, k % n)).filter(|&(r, c)| m.get(r, c).is_crossing()).collect();
    let succ: HashMap<(usize, usize), (usize, usize)> =
        cells.iter().filter_map(|&c| braid_successor(m, c).map(|(s, _)| (c, s))).collect();
    let has_pred: HashSet<(usize, usize)> = succ.values().copied().collect();
    let heads = cells.iter().filter(|c| !has_pred.contains(c));
    let rest = cells.iter().filter(|c| has_pred.contains(c));

    let mut seen = HashSet::new();
    let mut chain = Vec::with_capacity(cells.len());
    for &head in heads.chain(rest) {
        let mut at = Some(head);
        while let Some(cell) = at.filter(|c| seen.insert(*c)) {
            chain.push(cell);
            at = succ.get(&cell).copied();
        }
    }
    chain
}

/// Double-arc tile that splices out `cell` while keeping its braid's strands
/// running on: the side strand keeps drifting toward the next crossing, or
/// away from the previous one at the end of a braid.
fn braid_smoothing(m: &Mosaic, cell: (usize, usize), pred: Option<(usize, usize)>) -> Tile {
    let drift = braid_successor(m, cell).map(|(_, side)| side).or_else(|| {
        let pred = pred?;
        [Side::Left, Side::Right]
            .into_iter()
            .find(|&s| next_crossing(m, cell, s) == Some(pred) && next_crossing(m, cell, Side::Top) == Some(pred))
            .map(Side::opposite)
    });
    match drift {
        Some(Side::Left) => Tile::DOUBLE_TL,
        _ => Tile::DOUBLE_TR,
    }
}

/// Smooths the first `q' - q` crossings of the braid chain, leaving a mosaic
/// of the `(2, q)`-torus knot for `q >= 2n - 1`. Smaller targets cut into the
/// last braid and trace to a two-component link.
///
/// Each crossing is replaced by the double arcs that reconnect the strands
/// entering it to the strands leaving it toward the next braid crossing, so
/// a braid of `k` crossings becomes a braid of `k - 1`.
pub fn remove_crossings(m: &Mosaic, q_full: i64, q: i64) -> Result<Mosaic> {
    let bad = |reason: String| Err(Error::InvalidRemovalTarget { q, reason });
    if q % 2 == 0 {
        return bad("q must be odd".into());
    }
    if q < 3 || q > q_full {
        return bad(format!("q must lie in 3..={q_full}"));
    }
    let chain = crossing_chain(m);
    if chain.len() as i64 != q_full {
        return bad(format!(
            "mosaic has {} crossing tiles, expected {q_full}",
            chain.len()
        ));
    }
    let mut out = m.clone();
    for (k, &cell) in chain.iter().enumerate().take((q_full - q) as usize) {
        let pred = k.checked_sub(1).map(|j| chain[j]);
        out.set(cell.0, cell.1, braid_smoothing(m, cell, pred));
    }
    Ok(out)
}

/// Smallest full-braid parameter whose mosaic can be reduced to `(2, q)`.
pub fn full_braid_size_for(q: i64) -> usize {
    (3..).find(|&n| full_braid_q(n) >= q).unwrap()
}
