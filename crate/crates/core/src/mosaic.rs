//! Square mosaics, their base-11 codes, and torus symmetry.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tile::{Side, Tile};

/// How the outer boundary of the grid is treated when checking connections.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// Opposite edges are identified.
    Toric,
    /// No identification; boundary connection points are forbidden.
    Classical,
}

/// An `n x n` grid of tiles, stored row-major with row 0 at the top.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mosaic {
    n: usize,
    cells: Vec<Tile>,
}

impl Mosaic {
    pub fn new(n: usize, cells: Vec<Tile>) -> Result<Mosaic> {
        if n == 0 || cells.len() != n * n {
            return Err(Error::NonSquareGrid);
        }
        Ok(Mosaic { n, cells })
    }

    pub fn filled(n: usize, tile: Tile) -> Mosaic {
        assert!(n > 0, "mosaic side must be positive");
        Mosaic {
            n,
            cells: vec![tile; n * n],
        }
    }

    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Mosaic> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NonSquareGrid);
            }
            for &k in row {
                cells.push(Tile::new(k)?);
            }
        }
        Mosaic::new(n, cells)
    }

    /// Parses a base-11 code: row-major digits `0-9` and `a` for tile 10.
    pub fn decode(code: &str) -> Result<Mosaic> {
        let cells = code
            .chars()
            .map(Tile::from_digit)
            .collect::<Result<Vec<_>>>()?;
        if cells.is_empty() {
            return Err(Error::EmptyCode);
        }
        let n = integer_sqrt(cells.len()).ok_or(Error::NonSquareLength(cells.len()))?;
        Ok(Mosaic { n, cells })
    }

    pub fn encode(&self) -> String {
        self.cells.iter().map(|t| t.digit()).collect()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Tile] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Tile {
        self.cells[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, tile: Tile) {
        self.cells[row * self.n + col] = tile;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Tile]> {
        self.cells.chunks(self.n)
    }

    pub fn count_tiles(&self, kind: u8) -> usize {
        self.cells.iter().filter(|t| t.kind() == kind).count()
    }

    pub fn crossing_tiles(&self) -> usize {
        self.cells.iter().filter(|t| t.is_crossing()).count()
    }

    pub fn is_suitably_connected(&self, boundary: Boundary) -> bool {
        let n = self.n;
        for r in 0..n {
            for c in 0..n {
                let t = self.get(r, c);
                match boundary {
                    Boundary::Toric => {
                        if t.has(Side::Right) != self.get(r, (c + 1) % n).has(Side::Left) {
                            return false;
                        }
                        if t.has(Side::Bottom) != self.get((r + 1) % n, c).has(Side::Top) {
                            return false;
                        }
                    }
                    Boundary::Classical => {
                        let right_ok = if c + 1 < n {
                            t.has(Side::Right) == self.get(r, c + 1).has(Side::Left)
                        } else {
                            !t.has(Side::Right)
                        };
                        let bottom_ok = if r + 1 < n {
                            t.has(Side::Bottom) == self.get(r + 1, c).has(Side::Top)
                        } else {
                            !t.has(Side::Bottom)
                        };
                        let edge_ok = (c > 0 || !t.has(Side::Left)) && (r > 0 || !t.has(Side::Top));
                        if !(right_ok && bottom_ok && edge_ok) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn require_toric(&self) -> Result<()> {
        if self.is_suitably_connected(Boundary::Toric) {
            Ok(())
        } else {
            Err(Error::NotSuitablyConnected)
        }
    }

    /// Rows with a connection point on the left edge (A) and columns with a
    /// connection point on the top edge (B).
    pub fn boundary_counts(&self) -> Result<(usize, usize)> {
        self.require_toric()?;
        Ok((self.connected_rows().len(), self.connected_columns().len()))
    }

    /// Hidden crossings forced by the torus embedding: one per pair of a
    /// left/right connection point and a top/bottom connection point.
    pub fn hidden_crossing_count(&self) -> Result<usize> {
        let (a, b) = self.boundary_counts()?;
        Ok(a * b)
    }

    /// Indices of rows whose strands wrap across the left/right edge.
    pub fn connected_rows(&self) -> Vec<usize> {
        (0..self.n).filter(|&r| self.get(r, 0).has(Side::Left)).collect()
    }

    /// Indices of columns whose strands wrap across the top/bottom edge.
    pub fn connected_columns(&self) -> Vec<usize> {
        (0..self.n).filter(|&c| self.get(0, c).has(Side::Top)).collect()
    }

    /// Cyclic shift: the tile at `(r, c)` moves to `(r + dr, c + dc)` mod n.
    pub fn translate(&self, dr: i64, dc: i64) -> Mosaic {
        let n = self.n as i64;
        let mut cells = vec![Tile::BLANK; self.cells.len()];
        for r in 0..n {
            for c in 0..n {
                let nr = (r + dr).rem_euclid(n);
                let nc = (c + dc).rem_euclid(n);
                cells[(nr * n + nc) as usize] = self.cells[(r * n + c) as usize];
            }
        }
        Mosaic { n: self.n, cells }
    }

    /// Lexicographically least code over all `n^2` translations.
    pub fn canonical_code(&self) -> String {
        let n = self.n;
        let mut best: Option<Vec<Tile>> = None;
        let mut buf = vec![Tile::BLANK; n * n];
        for dr in 0..n {
            for dc in 0..n {
                for r in 0..n {
                    for c in 0..n {
                        buf[((r + dr) % n) * n + (c + dc) % n] = self.cells[r * n + c];
                    }
                }
                let key = |t: &Tile| t.digit();
                let better = match &best {
                    None => true,
                    Some(b) => buf.iter().map(key).lt(b.iter().map(key)),
                };
                if better {
                    best = Some(buf.clone());
                }
            }
        }
        best.unwrap().iter().map(|t| t.digit()).collect()
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_code() == self.encode()
    }
}

fn integer_sqrt(len: usize) -> Option<usize> {
    let r = (len as f64).sqrt().round() as usize;
    (r * r == len).then_some(r)
}

impl FromStr for Mosaic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mosaic> {
        Mosaic::decode(s)
    }
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Debug for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mosaic({})", self.encode())
    }
}

/// Reads a newline-delimited list of codes, skipping blank lines.
pub fn parse_code_list(text: &str) -> Result<Vec<Mosaic>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(Mosaic::decode)
        .collect()
}
