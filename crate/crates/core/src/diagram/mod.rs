//! Oriented planar link diagrams.
//!
//! A diagram is stored as a port graph: crossing `x` owns ports `4x..4x+4`,
//! listed counterclockwise in PD order. Slot 0 is the incoming under-strand
//! and slot 2 the outgoing one. The over-strand runs 3 -> 1 at a positive
//! crossing and 1 -> 3 at a negative one. `links[p]` is the port at the other
//! end of the edge leaving `p`. Crossingless loops are kept as a count.

mod geo;
mod pd;
mod simplify;
mod torus;
mod trace;

pub use simplify::simplify;
pub use torus::torus_knot_diagram;
pub use trace::trace;

pub(crate) use geo::GeoGraph;

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

pub(crate) type Port = usize;

#[inline]
pub(crate) fn crossing_of(p: Port) -> usize {
    p / 4
}

#[inline]
pub(crate) fn slot_of(p: Port) -> usize {
    p % 4
}

#[inline]
pub(crate) fn port(x: usize, slot: usize) -> Port {
    4 * x + slot % 4
}

#[inline]
pub(crate) fn through(p: Port) -> Port {
    port(crossing_of(p), slot_of(p) + 2)
}

/// One crossing in PD form: the four edge labels counterclockwise from the
/// incoming under-strand, plus the sign.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CrossingRecord {
    pub edges: [u32; 4],
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    signs: Vec<Sign>,
    links: Vec<Port>,
    /// Edge label per port; both ends of an edge carry the same label.
    labels: Vec<u32>,
    free_loops: usize,
}

impl LinkDiagram {
    pub fn empty() -> LinkDiagram {
        LinkDiagram::unlink(0)
    }

    /// `k` disjoint crossingless circles.
    pub fn unlink(k: usize) -> LinkDiagram {
        LinkDiagram {
            signs: Vec::new(),
            links: Vec::new(),
            labels: Vec::new(),
            free_loops: k,
        }
    }

    /// Builds a diagram from raw ports and relabels edges along orientation.
    pub(crate) fn from_ports(signs: Vec<Sign>, links: Vec<Port>, free_loops: usize) -> LinkDiagram {
        debug_assert_eq!(links.len(), 4 * signs.len());
        let mut d = LinkDiagram {
            labels: vec![0; links.len()],
            signs,
            links,
            free_loops,
        };
        d.relabel();
        debug_assert!(d.check().is_ok(), "{:?}", d.check());
        d
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn sign(&self, x: usize) -> Sign {
        self.signs[x]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|s| s.value()).sum()
    }

    pub(crate) fn links(&self) -> &[Port] {
        &self.links
    }

    pub(crate) fn partner(&self, p: Port) -> Port {
        self.links[p]
    }

    pub(crate) fn is_incoming(&self, p: Port) -> bool {
        match slot_of(p) {
            0 => true,
            2 => false,
            1 => self.signs[crossing_of(p)] == Sign::Negative,
            _ => self.signs[crossing_of(p)] == Sign::Positive,
        }
    }

    pub(crate) fn is_over(p: Port) -> bool {
        slot_of(p) % 2 == 1
    }

    pub fn records(&self) -> Vec<CrossingRecord> {
        (0..self.crossing_count())
            .map(|x| CrossingRecord {
                edges: [0, 1, 2, 3].map(|s| self.labels[port(x, s)]),
                sign: self.signs[x],
            })
            .collect()
    }

    /// Outgoing ports of every strand cycle, in traversal order.
    pub(crate) fn strand_cycles(&self) -> Vec<Vec<Port>> {
        let mut seen = vec![false; self.links.len()];
        let mut cycles = Vec::new();
        for start in 0..self.links.len() {
            if self.is_incoming(start) || seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            loop {
                seen[p] = true;
                cycle.push(p);
                p = through(self.links[p]);
                if p == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Component index of every port (free loops are not represented).
    pub(crate) fn port_components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.links.len()];
        let cycles = self.strand_cycles();
        for (i, cycle) in cycles.iter().enumerate() {
            for &p in cycle {
                comp[p] = i;
                comp[self.links[p]] = i;
            }
        }
        (comp, cycles.len())
    }

    pub fn component_count(&self) -> usize {
        self.strand_cycles().len() + self.free_loops
    }

    /// Signed crossings between distinct components, per crossing:
    /// `(over component, under component, sign)`.
    pub fn crossing_components(&self) -> Vec<(usize, usize, Sign)> {
        let (comp, _) = self.port_components();
        (0..self.crossing_count())
            .map(|x| (comp[port(x, 1)], comp[port(x, 0)], self.signs[x]))
            .collect()
    }

    /// Every crossing with over and under swapped.
    pub fn mirror(&self) -> LinkDiagram {
        let mut d = self.clone();
        for x in 0..d.crossing_count() {
            d.switch_in_place(x);
        }
        d
    }

    /// Changes crossing `x` from over to under, keeping edge labels.
    pub fn switched(&self, x: usize) -> LinkDiagram {
        let mut d = self.clone();
        d.switch_in_place(x);
        d
    }

    fn switch_in_place(&mut self, x: usize) {
        // New slot 0 must be the incoming end of the old over-strand.
        let shift = match self.signs[x] {
            Sign::Positive => 1, // old slot 3 -> new slot 0
            Sign::Negative => 3, // old slot 1 -> new slot 0
        };
        let remap = |p: Port| -> Port {
            if crossing_of(p) == x {
                port(x, slot_of(p) + shift)
            } else {
                p
            }
        };
        let old_links: Vec<Port> = (0..4).map(|s| self.links[port(x, s)]).collect();
        let old_labels: Vec<u32> = (0..4).map(|s| self.labels[port(x, s)]).collect();
        for s in 0..4 {
            let new_p = port(x, s + shift);
            let partner = remap(old_links[s]);
            self.links[new_p] = partner;
            self.links[partner] = new_p;
            self.labels[new_p] = old_labels[s];
        }
        self.signs[x] = self.signs[x].flipped();
    }

    /// Oriented smoothing of crossing `x`.
    pub fn smoothed(&self, x: usize) -> LinkDiagram {
        let pairs = match self.signs[x] {
            Sign::Positive => [(port(x, 0), port(x, 1)), (port(x, 3), port(x, 2))],
            Sign::Negative => [(port(x, 0), port(x, 3)), (port(x, 1), port(x, 2))],
        };
        self.splice(&[x], &pairs)
    }

    /// Removes the crossings in `removed` and reconnects their ports through
    /// `pass` pairs (each removed port must appear in exactly one pair).
    pub(crate) fn splice(&self, removed: &[usize], pass: &[(Port, Port)]) -> LinkDiagram {
        let c = self.crossing_count();
        let mut gone = vec![false; c];
        for &x in removed {
            gone[x] = true;
        }
        let mut pass_to = vec![usize::MAX; self.links.len()];
        for &(a, b) in pass {
            pass_to[a] = b;
            pass_to[b] = a;
        }
        let mut new_index = vec![usize::MAX; c];
        let mut signs = Vec::with_capacity(c - removed.len());
        for x in 0..c {
            if !gone[x] {
                new_index[x] = signs.len();
                signs.push(self.signs[x]);
            }
        }
        let renumber = |p: Port| port(new_index[crossing_of(p)], slot_of(p));
        let mut links = vec![usize::MAX; 4 * signs.len()];
        let mut visited = vec![false; self.links.len()];
        for p in 0..self.links.len() {
            if gone[crossing_of(p)] {
                continue;
            }
            let mut q = self.links[p];
            while gone[crossing_of(q)] {
                visited[q] = true;
                let r = pass_to[q];
                debug_assert_ne!(r, usize::MAX, "removed port without a pass pair");
                visited[r] = true;
                q = self.links[r];
            }
            links[renumber(p)] = renumber(q);
        }
        let mut free_loops = self.free_loops;
        for &(a, _) in pass {
            if visited[a] {
                continue;
            }
            free_loops += 1;
            let mut q = a;
            loop {
                visited[q] = true;
                let r = pass_to[q];
                visited[r] = true;
                q = self.links[r];
                if q == a {
                    break;
                }
            }
        }
        LinkDiagram::from_ports(signs, links, free_loops)
    }

    /// Relabels edges `1..=2c` along orientation, components taken in order of
    /// their lowest outgoing port.
    pub(crate) fn relabel(&mut self) {
        let mut next = 1u32;
        for cycle in self.strand_cycles() {
            for p in cycle {
                self.labels[p] = next;
                self.labels[self.links[p]] = next;
                next += 1;
            }
        }
    }

    /// Structural validation: involutive links, consistent orientation.
    pub fn check(&self) -> Result<()> {
        if self.links.len() != 4 * self.signs.len() || self.labels.len() != self.links.len() {
            return Err(Error::PdParse("port table size mismatch".into()));
        }
        for p in 0..self.links.len() {
            let q = self.links[p];
            if q >= self.links.len() || self.links[q] != p || q == p {
                return Err(Error::PdParse(format!("port {p} is not paired")));
            }
            if self.is_incoming(p) == self.is_incoming(q) {
                return Err(Error::PdParse(format!("edge at port {p} is not consistently oriented")));
            }
            if self.labels[p] != self.labels[q] {
                return Err(Error::PdParse(format!("edge labels disagree at port {p}")));
            }
        }
        Ok(())
    }

    /// Faces of the planar embedding as cycles of outgoing darts. A dart is a
    /// port, read as the edge leaving that port.
    pub(crate) fn faces(&self) -> Vec<Vec<Port>> {
        let mut seen = vec![false; self.links.len()];
        let mut faces = Vec::new();
        for start in 0..self.links.len() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                let arrive = self.links[d];
                d = port(crossing_of(arrive), slot_of(arrive) + 1);
            }
            faces.push(face);
        }
        faces
    }

    /// Splits into crossing-connected pieces; free loops become separate
    /// one-circle pieces.
    pub fn split_pieces(&self) -> Vec<LinkDiagram> {
        let c = self.crossing_count();
        let mut piece = vec![usize::MAX; c];
        let mut pieces: Vec<Vec<usize>> = Vec::new();
        for start in 0..c {
            if piece[start] != usize::MAX {
                continue;
            }
            let id = pieces.len();
            let mut members = vec![start];
            piece[start] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for s in 0..4 {
                    let y = crossing_of(self.links[port(x, s)]);
                    if piece[y] == usize::MAX {
                        piece[y] = id;
                        members.push(y);
                    }
                }
                i += 1;
            }
            pieces.push(members);
        }
        let mut out: Vec<LinkDiagram> = Vec::new();
        if pieces.len() == 1 {
            let mut d = self.clone();
            d.free_loops = 0;
            out.push(d);
        } else {
            for members in &pieces {
                let mut local = vec![usize::MAX; c];
                for (i, &x) in members.iter().enumerate() {
                    local[x] = i;
                }
                let signs = members.iter().map(|&x| self.signs[x]).collect();
                let mut links = vec![0; 4 * members.len()];
                for (i, &x) in members.iter().enumerate() {
                    for s in 0..4 {
                        let q = self.links[port(x, s)];
                        links[port(i, s)] = port(local[crossing_of(q)], slot_of(q));
                    }
                }
                out.push(LinkDiagram::from_ports(signs, links, 0));
            }
        }
        out.extend((0..self.free_loops).map(|_| LinkDiagram::unlink(1)));
        out
    }

    /// A relabeling-invariant key for a crossing-connected diagram: the least
    /// encoding over all choices of starting edge. Equal keys mean isomorphic
    /// oriented diagrams.
    pub fn canonical_key(&self) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        for start in 0..self.links.len() {
            if self.is_incoming(start) {
                continue;
            }
            let enc = self.encode_from(start);
            if best.as_ref().map_or(true, |b| enc < *b) {
                best = Some(enc);
            }
        }
        let mut key = best.unwrap_or_default();
        key.push(self.free_loops as u32);
        key
    }

    fn encode_from(&self, start: Port) -> Vec<u32> {
        let c = self.crossing_count();
        let mut index = vec![u32::MAX; c];
        let mut order: Vec<usize> = Vec::with_capacity(c);
        let mut done = vec![false; self.links.len()];
        let visit = |x: usize, index: &mut Vec<u32>, order: &mut Vec<usize>| {
            if index[x] == u32::MAX {
                index[x] = order.len() as u32;
                order.push(x);
            }
        };
        let mut next_start = Some(start);
        while let Some(s0) = next_start {
            let mut p = s0;
            loop {
                done[p] = true;
                visit(crossing_of(p), &mut index, &mut order);
                let q = self.links[p];
                visit(crossing_of(q), &mut index, &mut order);
                p = through(q);
                if p == s0 {
                    break;
                }
            }
            next_start = None;
            'scan: for &x in order.iter() {
                for s in 0..4 {
                    let pt = port(x, s);
                    let out = if self.is_incoming(pt) { through(pt) } else { pt };
                    if !done[out] {
                        next_start = Some(out);
                        break 'scan;
                    }
                }
            }
        }
        let mut enc = Vec::with_capacity(5 * order.len());
        for &x in &order {
            enc.push(match self.signs[x] {
                Sign::Positive => 0,
                Sign::Negative => 1,
            });
            for s in 0..4 {
                let q = self.links[port(x, s)];
                enc.push(4 * index[crossing_of(q)] + slot_of(q) as u32);
            }
        }
        enc
    }

    /// Overpass arcs: maximal pieces of strand between undercrossings.
    /// Returns the arc index of every port and the number of arcs.
    pub(crate) fn overpass_arcs(&self) -> (Vec<usize>, usize) {
        let n = self.links.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        let union = |a: usize, b: usize, parent: &mut Vec<usize>| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        };
        for p in 0..n {
            union(p, self.links[p], &mut parent);
            if Self::is_over(p) {
                union(p, through(p), &mut parent);
            }
        }
        let mut id = vec![usize::MAX; n];
        let mut count = 0;
        let mut arc_of = vec![0; n];
        for p in 0..n {
            let r = find(&mut parent, p);
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            arc_of[p] = id[r];
        }
        (arc_of, count)
    }
}
