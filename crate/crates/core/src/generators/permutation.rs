use crate::error::{Error, Result};
use crate::mosaic::{Boundary, Mosaic};
use crate::tile::Side;

/// Follows each strand entering the top edge down through the grid, using the
/// left/right identification but no top/bottom closure, and records the
/// column where it leaves the bottom edge.
///
/// Entry `i` of the result is the 1-based exit column of the strand entering
/// at top column `i + 1`.
pub fn boundary_permutation(m: &Mosaic) -> Result<Vec<usize>> {
    if !m.is_suitably_connected(Boundary::Toric) {
        return Err(Error::NotSuitablyConnected);
    }
    let n = m.size();
    if let Some(c) = (0..n).find(|&c| !m.get(0, c).has(Side::Top)) {
        return Err(Error::PermutationUndefined(format!(
            "column {} has no top connection point",
            c + 1
        )));
    }
    let max_steps = 4 * n * n + 4;
    let mut perm = Vec::with_capacity(n);
    for start in 0..n {
        let (mut r, mut c, mut entry) = (0usize, start, Side::Top);
        let mut steps = 0;
        let exit_col = loop {
            steps += 1;
            if steps > max_steps {
                return Err(Error::PermutationUndefined(format!(
                    "strand from column {} never reaches the bottom edge",
                    start + 1
                )));
            }
            let exit = m.get(r, c).exit(entry).ok_or_else(|| {
                Error::PermutationUndefined(format!("dead end at row {}, column {}", r + 1, c + 1))
            })?;
            match exit {
                Side::Bottom if r + 1 == n => break c,
                Side::Bottom => {
                    r += 1;
                    entry = Side::Top;
                }
                Side::Right => {
                    c = (c + 1) % n;
                    entry = Side::Left;
                }
                Side::Left => {
                    c = (c + n - 1) % n;
                    entry = Side::Right;
                }
                Side::Top => {
                    return Err(Error::PermutationUndefined(format!(
                        "strand from column {} turns back up at row {}, column {}",
                        start + 1,
                        r + 1,
                        c + 1
                    )))
                }
            }
        };
        perm.push(exit_col + 1);
    }
    Ok(perm)
}

/// The cyclic shift `i -> i + k (mod n)` on `1..=n`.
pub fn shift_permutation(n: usize, k: i64) -> Vec<usize> {
    (0..n)
        .map(|i| ((i as i64 + k).rem_euclid(n as i64)) as usize + 1)
        .collect()
}
