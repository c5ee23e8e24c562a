//! HOMFLY-PT by skein recursion over descending diagrams.
//!
//! Convention: `v^-1 P(L+) - v P(L-) = z P(L0)`, `P(unknot) = 1`, so a split
//! union multiplies by `(v^-1 - v) / z`.

use std::collections::HashMap;

use super::poly::LaurentPoly2;
use crate::diagram::{simplify, LinkDiagram, Sign};
use crate::error::{Error, Result};

/// Skein-tree node limit used when callers do not pass their own.
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// `(v^-1 - v) / z`.
pub fn delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms([([-1, -1], 1), ([1, -1], -1)])
}

fn mono(c: i64, v: i32, z: i32) -> LaurentPoly2 {
    LaurentPoly2::monomial(c, [v, z])
}

/// HOMFLY-PT polynomial; fails with [`Error::BudgetExceeded`] once more than
/// `budget` skein nodes have been expanded.
pub fn homfly(d: &LinkDiagram, budget: usize) -> Result<LaurentPoly2> {
    Engine { budget, nodes: 0, memo: HashMap::new() }.eval(d)
}

/// Number of skein nodes expanded for `d` (diagnostic).
pub fn homfly_with_stats(d: &LinkDiagram, budget: usize) -> Result<(LaurentPoly2, usize)> {
    let mut e = Engine { budget, nodes: 0, memo: HashMap::new() };
    let p = e.eval(d)?;
    Ok((p, e.nodes))
}

struct Engine {
    budget: usize,
    nodes: usize,
    memo: HashMap<Vec<u32>, LaurentPoly2>,
}

impl Engine {
    fn eval(&mut self, d: &LinkDiagram) -> Result<LaurentPoly2> {
        let d = simplify(d);
        let pieces = d.split_pieces();
        if pieces.is_empty() {
            // the empty link; never produced by skein steps on non-empty input
            return Ok(LaurentPoly2::one());
        }
        let mut out = delta().pow(pieces.len() as u32 - 1);
        for piece in &pieces {
            if piece.crossing_count() > 0 {
                let p = self.eval_connected(piece)?;
                out = &out * &p;
            }
        }
        Ok(out)
    }

    /// `d` is simplified, crossing-connected and has no free loops.
    fn eval_connected(&mut self, d: &LinkDiagram) -> Result<LaurentPoly2> {
        let key = d.canonical_key();
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        let p = self.descend(d.clone())?;
        self.memo.insert(key, p.clone());
        Ok(p)
    }

    /// Switches bad crossings until the diagram is descending, keeping edge
    /// labels (and so base points) fixed while nothing simplifies.
    fn descend(&mut self, d: LinkDiagram) -> Result<LaurentPoly2> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let bad = bad_crossings(&d);
        if bad.is_empty() {
            return Ok(delta().pow(d.component_count() as u32 - 1));
        }
        let x = pick_crossing(&d, &bad);
        let switched = d.switched(x);
        let smoothed = d.smoothed(x);
        let p0 = self.eval(&smoothed)?;
        let reduced = simplify(&switched);
        let p_switched = if reduced.crossing_count() < switched.crossing_count() {
            self.eval(&reduced)?
        } else {
            self.descend(switched)?
        };
        // P+ = v^2 P- + v z P0 ;  P- = v^-2 P+ - v^-1 z P0
        Ok(match d.sign(x) {
            Sign::Positive => &(&mono(1, 2, 0) * &p_switched) + &(&mono(1, 1, 1) * &p0),
            Sign::Negative => &(&mono(1, -2, 0) * &p_switched) - &(&mono(1, -1, 1) * &p0),
        })
    }
}

/// Crossings first met on the under-strand when each component is walked
/// from its lowest-labelled edge, components in order of that label.
pub(crate) fn bad_crossings(d: &LinkDiagram) -> Vec<usize> {
    let records = d.records();
    let mut cycles = d.strand_cycles();
    let label_of = |p: usize| records[p / 4].edges[p % 4];
    for cycle in cycles.iter_mut() {
        let start = (0..cycle.len()).min_by_key(|&i| label_of(cycle[i])).unwrap();
        cycle.rotate_left(start);
    }
    cycles.sort_by_key(|c| label_of(c[0]));
    let mut seen = vec![false; d.crossing_count()];
    let mut bad = Vec::new();
    for cycle in &cycles {
        for &out in cycle {
            let arrive = d.partner(out);
            let x = arrive / 4;
            if !seen[x] {
                seen[x] = true;
                if arrive % 4 == 0 {
                    bad.push(x);
                }
            }
        }
    }
    bad.sort_unstable();
    bad
}

/// Bad crossing whose switch simplifies furthest; ties to the lowest index.
fn pick_crossing(d: &LinkDiagram, bad: &[usize]) -> usize {
    let mut best = (usize::MAX, bad[0]);
    for &x in bad {
        let c = simplify(&d.switched(x)).crossing_count();
        if c < best.0 {
            best = (c, x);
        }
    }
    best.1
}
