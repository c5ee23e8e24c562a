//! Mosaic to diagram.
//!
//! The torus is flattened by drawing closure arcs outside the grid. Each
//! wrapping column `j` gets an arc around the left side from its bottom point
//! to its top point; each wrapping row `i` gets an arc around the bottom from
//! its right point to its left point. Column arcs nest with column 1 innermost,
//! row arcs with the last row innermost, and every column arc meets every row
//! arc once, left of the grid at the height of the row. At those hidden
//! crossings the row arc passes over.
//!
//! Node slots are counterclockwise `[left, bottom, right, top]` for both
//! visible and hidden crossings. At a hidden crossing the row arc runs from
//! its right-hand point (slot `left`, outer side) toward the grid's left edge
//! (slot `right`), and the column arc from the bottom point (slot `bottom`)
//! to the top point (slot `top`).

use super::{port, GeoGraph, LinkDiagram};
use crate::error::{Error, Result};
use crate::mosaic::{Boundary, Mosaic};
use crate::tile::{Side, Tile};

const LEFT: usize = 0;
const BOTTOM: usize = 1;
const RIGHT: usize = 2;
const TOP: usize = 3;

fn slot(side: Side) -> usize {
    match side {
        Side::Left => LEFT,
        Side::Bottom => BOTTOM,
        Side::Right => RIGHT,
        Side::Top => TOP,
    }
}

fn side(slot: usize) -> Side {
    [Side::Left, Side::Bottom, Side::Right, Side::Top][slot]
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Step {
    Enter(usize, usize, Side),
    Arrive(usize),
}

struct Tracer<'a> {
    m: &'a Mosaic,
    n: usize,
    visible: Vec<usize>,
    visible_cells: Vec<(usize, usize)>,
    rows: Vec<usize>,
    cols: Vec<usize>,
    row_pos: Vec<usize>,
    col_pos: Vec<usize>,
}

impl Tracer<'_> {
    fn hidden(&self, ri: usize, cj: usize) -> usize {
        self.visible_cells.len() + ri * self.cols.len() + cj
    }

    fn leave_cell(&self, r: usize, c: usize, out: Side) -> Step {
        let n = self.n;
        match out {
            Side::Right if c + 1 < n => Step::Enter(r, c + 1, Side::Left),
            Side::Left if c > 0 => Step::Enter(r, c - 1, Side::Right),
            Side::Bottom if r + 1 < n => Step::Enter(r + 1, c, Side::Top),
            Side::Top if r > 0 => Step::Enter(r - 1, c, Side::Bottom),
            Side::Right => match self.cols.len() {
                0 => Step::Enter(r, 0, Side::Left),
                k => Step::Arrive(port(self.hidden(self.row_pos[r], k - 1), LEFT)),
            },
            Side::Left => match self.cols.len() {
                0 => Step::Enter(r, n - 1, Side::Right),
                _ => Step::Arrive(port(self.hidden(self.row_pos[r], 0), RIGHT)),
            },
            Side::Bottom => match self.rows.len() {
                0 => Step::Enter(0, c, Side::Top),
                k => Step::Arrive(port(self.hidden(k - 1, self.col_pos[c]), BOTTOM)),
            },
            Side::Top => match self.rows.len() {
                0 => Step::Enter(n - 1, c, Side::Bottom),
                _ => Step::Arrive(port(self.hidden(0, self.col_pos[c]), TOP)),
            },
        }
    }

    fn leave_node(&self, node: usize, s: usize) -> Step {
        if node < self.visible_cells.len() {
            let (r, c) = self.visible_cells[node];
            return self.leave_cell(r, c, side(s));
        }
        let h = node - self.visible_cells.len();
        let (ri, cj) = (h / self.cols.len(), h % self.cols.len());
        let (row, col) = (self.rows[ri], self.cols[cj]);
        match s {
            LEFT if cj + 1 < self.cols.len() => Step::Arrive(port(self.hidden(ri, cj + 1), RIGHT)),
            LEFT => Step::Enter(row, self.n - 1, Side::Right),
            RIGHT if cj > 0 => Step::Arrive(port(self.hidden(ri, cj - 1), LEFT)),
            RIGHT => Step::Enter(row, 0, Side::Left),
            TOP if ri > 0 => Step::Arrive(port(self.hidden(ri - 1, cj), BOTTOM)),
            TOP => Step::Enter(0, col, Side::Top),
            _ if ri + 1 < self.rows.len() => Step::Arrive(port(self.hidden(ri + 1, cj), TOP)),
            _ => Step::Enter(self.n - 1, col, Side::Bottom),
        }
    }

    /// Follows the strand until it reaches a node, marking non-crossing
    /// strand pieces as seen. Returns `None` for a loop back to `stop`.
    fn follow(&self, mut step: Step, seen: &mut [[bool; 2]], stop: Option<Step>) -> Option<usize> {
        loop {
            match step {
                Step::Arrive(p) => return Some(p),
                Step::Enter(r, c, s) => {
                    let tile = self.m.get(r, c);
                    if tile.is_crossing() {
                        return Some(port(self.visible[r * self.n + c], slot(s)));
                    }
                    seen[r * self.n + c][pair_index(tile, s)] = true;
                    let out = tile.exit(s).expect("suitably connected mosaic");
                    step = self.leave_cell(r, c, out);
                    if Some(step) == stop {
                        return None;
                    }
                }
            }
        }
    }
}

fn pair_index(tile: Tile, s: Side) -> usize {
    tile.profile()
        .pairing
        .iter()
        .position(|&(a, b)| a == s || b == s)
        .expect("side belongs to a strand")
}

/// Traces a suitably connected toric mosaic to a planar diagram, hidden
/// crossings included.
pub fn trace(m: &Mosaic) -> Result<LinkDiagram> {
    if !m.is_suitably_connected(Boundary::Toric) {
        return Err(Error::NotSuitablyConnected);
    }
    let n = m.size();
    let mut visible = vec![usize::MAX; n * n];
    let mut visible_cells = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if m.get(r, c).is_crossing() {
                visible[r * n + c] = visible_cells.len();
                visible_cells.push((r, c));
            }
        }
    }
    let rows = m.connected_rows();
    let cols = m.connected_columns();
    let mut row_pos = vec![usize::MAX; n];
    for (i, &r) in rows.iter().enumerate() {
        row_pos[r] = i;
    }
    let mut col_pos = vec![usize::MAX; n];
    for (j, &c) in cols.iter().enumerate() {
        col_pos[c] = j;
    }
    let t = Tracer { m, n, visible, visible_cells, rows, cols, row_pos, col_pos };

    let nodes = t.visible_cells.len() + t.rows.len() * t.cols.len();
    let mut g = GeoGraph::new(nodes);
    for (x, &(r, c)) in t.visible_cells.iter().enumerate() {
        g.over_even[x] = m.get(r, c) == Tile::CROSS_HORIZONTAL_OVER;
    }
    for x in t.visible_cells.len()..nodes {
        g.over_even[x] = true;
    }

    let mut seen = vec![[false; 2]; n * n];
    for p in 0..4 * nodes {
        if g.links[p] != usize::MAX {
            continue;
        }
        let q = t
            .follow(t.leave_node(p / 4, p % 4), &mut seen, None)
            .expect("strand from a node ends at a node");
        g.connect(p, q);
    }

    for r in 0..n {
        for c in 0..n {
            let tile = m.get(r, c);
            if tile.is_crossing() {
                continue;
            }
            for (k, &(a, _)) in tile.profile().pairing.iter().enumerate() {
                if seen[r * n + c][k] {
                    continue;
                }
                let start = Step::Enter(r, c, a);
                let hit = t.follow(start, &mut seen, Some(start));
                debug_assert!(hit.is_none(), "crossingless loop reached a node");
                g.free_loops += 1;
            }
        }
    }
    Ok(g.into_diagram())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn traced(code: &str) -> LinkDiagram {
        trace(&Mosaic::decode(code).unwrap()).unwrap()
    }

    #[test]
    fn single_tiles() {
        assert_eq!(traced("0").component_count(), 0);
        let d = traced("7");
        assert_eq!((d.crossing_count(), d.component_count()), (1, 1));
        for code in ["9", "a"] {
            let d = traced(code);
            assert_eq!((d.crossing_count(), d.component_count()), (2, 2));
        }
        let d = traced("5");
        assert_eq!((d.crossing_count(), d.free_loops()), (0, 1));
        let d = traced("6");
        assert_eq!((d.crossing_count(), d.free_loops()), (0, 1));
    }

    #[test]
    fn trefoil_mosaic() {
        let d = traced("7779");
        assert_eq!(d.crossing_count(), 5);
        assert_eq!(d.component_count(), 1);
        assert!(d.check().is_ok());
    }

    #[test]
    fn crossing_law() {
        for code in ["12789a439", "294942429", "888899998", "7779", "8888", "5555"] {
            let m = Mosaic::decode(code).unwrap();
            let d = trace(&m).unwrap();
            assert_eq!(d.crossing_count(), m.crossing_tiles() + m.hidden_crossing_count().unwrap());
        }
    }

    #[test]
    fn rejects_unsuitable() {
        assert_eq!(trace(&Mosaic::decode("1").unwrap()), Err(Error::NotSuitablyConnected));
    }
}
