//! Exhaustive search over suitably connected toric mosaics.
//!
//! Cells are filled in row-major order. A cell's left and top bits are forced
//! by its neighbours, which leaves at most five tiles; the last column also
//! fixes the right bit (wrapping to column 1) and the last row the bottom bit
//! (wrapping to row 1). Every complete fill is therefore suitably connected,
//! and the stream comes out in lexicographic code order.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mosaic::Mosaic;
use crate::tile::{Side, Tile};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    pub n: usize,
    /// Emit only the lexicographically least member of each translation orbit.
    pub symmetry_reduce: bool,
    /// Leading tiles of the first row.
    pub prefix: Vec<Tile>,
}

impl EnumOptions {
    pub fn new(n: usize) -> Self {
        EnumOptions { n, ..Self::default() }
    }

    pub fn symmetric(n: usize) -> Self {
        EnumOptions { n, symmetry_reduce: true, ..Self::default() }
    }

    pub fn with_prefix(mut self, prefix: Vec<Tile>) -> Self {
        self.prefix = prefix;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidPrefix("side length must be at least 1".into()));
        }
        if self.prefix.len() > self.n {
            return Err(Error::InvalidPrefix(format!(
                "prefix of {} tiles is longer than a row of {}",
                self.prefix.len(),
                self.n
            )));
        }
        Ok(())
    }
}

/// Candidate tiles indexed by `(left, top, right requirement, bottom
/// requirement)`, requirement 2 meaning unconstrained.
struct CandidateTable {
    lists: Vec<Vec<u8>>,
}

impl CandidateTable {
    fn new() -> Self {
        let mut lists = vec![Vec::new(); 36];
        for l in 0..2 {
            for t in 0..2 {
                for r in 0..3 {
                    for b in 0..3 {
                        lists[Self::index(l, t, r, b)] = Tile::ALL
                            .iter()
                            .filter(|tile| {
                                tile.has(Side::Left) as usize == l
                                    && tile.has(Side::Top) as usize == t
                                    && (r == 2 || tile.has(Side::Right) as usize == r)
                                    && (b == 2 || tile.has(Side::Bottom) as usize == b)
                            })
                            .map(|tile| tile.kind())
                            .collect();
                    }
                }
            }
        }
        CandidateTable { lists }
    }

    fn index(l: usize, t: usize, r: usize, b: usize) -> usize {
        ((l * 2 + t) * 3 + r) * 3 + b
    }
}

fn bit(kind: u8, side: Side) -> usize {
    Tile::new(kind).expect("valid kind").has(side) as usize
}

/// Lexicographically ordered depth-first search with an explicit stack.
pub struct MosaicIter {
    n: usize,
    cells: Vec<u8>,
    choice: Vec<usize>,
    depth: usize,
    fixed: Vec<u8>,
    symmetry_reduce: bool,
    table: CandidateTable,
    scratch: Vec<u8>,
    done: bool,
}

impl MosaicIter {
    fn new(n: usize, fixed: Vec<u8>, symmetry_reduce: bool) -> Self {
        MosaicIter {
            n,
            cells: vec![0; n * n],
            choice: vec![0; n * n],
            depth: 0,
            fixed,
            symmetry_reduce,
            table: CandidateTable::new(),
            scratch: vec![0; n * n],
            done: false,
        }
    }

    /// Tiles allowed at `pos` given the cells already placed, in code order.
    fn candidates_at(&self, pos: usize, out: &mut Vec<u8>) {
        out.clear();
        let n = self.n;
        let (r, c) = (pos / n, pos % n);
        let ls: &[usize] = if c > 0 { &[0, 1][bit(self.cells[pos - 1], Side::Right)..][..1] } else { &[0, 1] };
        let ts: &[usize] = if r > 0 { &[0, 1][bit(self.cells[pos - n], Side::Bottom)..][..1] } else { &[0, 1] };
        for &l in ls {
            for &t in ts {
                let rr = if c + 1 == n { if n == 1 { l } else { bit(self.cells[pos - c], Side::Left) } } else { 2 };
                let bb = if r + 1 == n { if n == 1 { t } else { bit(self.cells[c], Side::Top) } } else { 2 };
                out.extend_from_slice(&self.table.lists[CandidateTable::index(l, t, rr, bb)]);
            }
        }
        out.sort_unstable();
        if let Some(&f) = self.fixed.get(pos) {
            out.retain(|&k| k == f);
        }
    }

    /// Advances to the next complete fill; false when exhausted.
    fn advance(&mut self) -> bool {
        let total = self.n * self.n;
        let mut cands = Vec::with_capacity(11);
        while !self.done {
            if self.depth == total {
                self.depth -= 1;
                if !self.symmetry_reduce || is_canonical(&self.cells, self.n, &mut self.scratch) {
                    return true;
                }
                continue;
            }
            let pos = self.depth;
            self.candidates_at(pos, &mut cands);
            let k = self.choice[pos];
            if k < cands.len() {
                self.cells[pos] = cands[k];
                self.choice[pos] = k + 1;
                self.depth += 1;
                if self.depth < total {
                    self.choice[self.depth] = 0;
                }
            } else if pos == 0 {
                self.done = true;
            } else {
                self.choice[pos] = 0;
                self.depth -= 1;
            }
        }
        false
    }

    fn current(&self) -> Mosaic {
        let cells = self.cells.iter().map(|&k| Tile::new(k).unwrap()).collect();
        Mosaic::new(self.n, cells).expect("square grid")
    }
}

impl Iterator for MosaicIter {
    type Item = Mosaic;

    fn next(&mut self) -> Option<Mosaic> {
        self.advance().then(|| self.current())
    }
}

/// True when no translation gives a lexicographically smaller cell sequence.
fn is_canonical(cells: &[u8], n: usize, buf: &mut [u8]) -> bool {
    for dr in 0..n {
        for dc in 0..n {
            if dr == 0 && dc == 0 {
                continue;
            }
            for r in 0..n {
                for c in 0..n {
                    buf[((r + dr) % n) * n + (c + dc) % n] = cells[r * n + c];
                }
            }
            if buf[..] < cells[..] {
                return false;
            }
        }
    }
    true
}

/// Lazily streams the mosaics selected by `opts` in code order.
pub fn enumerate(opts: &EnumOptions) -> Result<MosaicIter> {
    opts.validate()?;
    let fixed = opts.prefix.iter().map(|t| t.kind()).collect();
    Ok(MosaicIter::new(opts.n, fixed, opts.symmetry_reduce))
}

/// Number of mosaics `enumerate` would emit, without building them.
pub fn count(opts: &EnumOptions) -> Result<u64> {
    let mut it = enumerate(opts)?;
    let mut k = 0;
    while it.advance() {
        k += 1;
    }
    Ok(k)
}

/// Work units for parallel runs: fixed leading cells extending the prefix,
/// in code order. Their searches are disjoint and together cover the whole
/// space.
fn split_prefixes(opts: &EnumOptions) -> Vec<Vec<u8>> {
    let base: Vec<u8> = opts.prefix.iter().map(|t| t.kind()).collect();
    let depth = (base.len() + 2).min(opts.n * opts.n);
    let mut units = vec![base];
    while units[0].len() < depth {
        units = units
            .into_iter()
            .flat_map(|u| (0..=10u8).map(move |k| [u.as_slice(), &[k]].concat()))
            .collect();
    }
    units
}

/// All selected mosaics, searched in parallel; output is in code order.
pub fn enumerate_parallel(opts: &EnumOptions) -> Result<Vec<Mosaic>> {
    opts.validate()?;
    let chunks: Vec<Vec<Mosaic>> = split_prefixes(opts)
        .into_par_iter()
        .map(|fixed| MosaicIter::new(opts.n, fixed, opts.symmetry_reduce).collect())
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Parallel [`count`].
pub fn count_parallel(opts: &EnumOptions) -> Result<u64> {
    opts.validate()?;
    Ok(split_prefixes(opts)
        .into_par_iter()
        .map(|fixed| {
            let mut it = MosaicIter::new(opts.n, fixed, opts.symmetry_reduce);
            let mut k = 0u64;
            while it.advance() {
                k += 1;
            }
            k
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mosaic::Boundary;

    #[test]
    fn one_mosaics() {
        let codes: Vec<String> = enumerate(&EnumOptions::new(1)).unwrap().map(|m| m.encode()).collect();
        assert_eq!(codes, ["0", "5", "6", "7", "8", "9", "a"]);
        assert_eq!(count(&EnumOptions::new(1)).unwrap(), 7);
    }

    #[test]
    fn two_mosaics_match_filter() {
        let all: Vec<Mosaic> = enumerate(&EnumOptions::new(2)).unwrap().collect();
        let mut brute = Vec::new();
        for code in 0..11u32.pow(4) {
            let mut k = code;
            let cells: Vec<Tile> = (0..4)
                .map(|_| {
                    let t = Tile::new((k % 11) as u8).unwrap();
                    k /= 11;
                    t
                })
                .rev()
                .collect();
            let m = Mosaic::new(2, cells).unwrap();
            if m.is_suitably_connected(Boundary::Toric) {
                brute.push(m);
            }
        }
        brute.sort_by_key(|m| m.encode());
        assert_eq!(all, brute);
        assert!(all.iter().any(|m| m.encode() == "7779"));
        assert_eq!(enumerate_parallel(&EnumOptions::new(2)).unwrap(), all);
        assert_eq!(count_parallel(&EnumOptions::new(2)).unwrap(), all.len() as u64);
    }

    #[test]
    fn symmetry_reduction() {
        let reps: Vec<String> = enumerate(&EnumOptions::symmetric(2)).unwrap().map(|m| m.encode()).collect();
        assert!(reps.contains(&"7779".to_string()));
        assert!(!reps.contains(&"9777".to_string()));
        let mut expanded: Vec<String> = reps
            .iter()
            .flat_map(|c| {
                let m = Mosaic::decode(c).unwrap();
                (0..2).flat_map(move |r| (0..2).map(move |s| (r, s))).map(move |(r, s)| m.translate(r, s).encode())
            })
            .collect();
        expanded.sort();
        expanded.dedup();
        let all: Vec<String> = enumerate(&EnumOptions::new(2)).unwrap().map(|m| m.encode()).collect();
        assert_eq!(expanded, all);
    }

    #[test]
    fn prefixes_partition() {
        let whole = count(&EnumOptions::new(2)).unwrap();
        let parts: u64 = Tile::ALL
            .iter()
            .map(|&t| count(&EnumOptions::new(2).with_prefix(vec![t])).unwrap())
            .sum();
        assert_eq!(parts, whole);
        assert!(enumerate(&EnumOptions::new(2).with_prefix(vec![Tile::BLANK; 3])).is_err());
    }
}
