use super::{crossing_of, port, slot_of, LinkDiagram, Sign};

/// An unoriented 4-valent plane graph. Node ports are listed counterclockwise;
/// `over_even` marks whether the strand through slots 0 and 2 is the over one.
pub(crate) struct GeoGraph {
    pub over_even: Vec<bool>,
    pub links: Vec<usize>,
    pub free_loops: usize,
}

impl GeoGraph {
    pub fn new(nodes: usize) -> GeoGraph {
        GeoGraph {
            over_even: vec![false; nodes],
            links: vec![usize::MAX; 4 * nodes],
            free_loops: 0,
        }
    }

    pub fn connect(&mut self, a: usize, b: usize) {
        debug_assert!(self.links[a] == usize::MAX && self.links[b] == usize::MAX);
        self.links[a] = b;
        self.links[b] = a;
    }

    /// Orients every strand cycle by leaving its lowest port first, then
    /// rotates each node so slot 0 is the incoming under-strand.
    pub fn into_diagram(self) -> LinkDiagram {
        let ports = self.links.len();
        let mut incoming: Vec<Option<bool>> = vec![None; ports];
        let through = |p: usize| port(crossing_of(p), slot_of(p) + 2);
        for start in 0..ports {
            if incoming[start].is_some() {
                continue;
            }
            let mut p = start;
            loop {
                incoming[p] = Some(false);
                let q = self.links[p];
                incoming[q] = Some(true);
                p = through(q);
                if p == start {
                    break;
                }
            }
        }
        let nodes = self.over_even.len();
        let mut rotation = vec![0; nodes];
        let mut signs = Vec::with_capacity(nodes);
        for x in 0..nodes {
            let under = if self.over_even[x] { 1 } else { 0 };
            let u = if incoming[port(x, under)] == Some(true) { under } else { under + 2 };
            let o = if incoming[port(x, under + 1)] == Some(true) { under + 1 } else { (under + 3) % 4 };
            rotation[x] = u;
            signs.push(if (o + 4 - u) % 4 == 3 { Sign::Positive } else { Sign::Negative });
        }
        let to_pd = |p: usize| {
            let x = crossing_of(p);
            port(x, slot_of(p) + 4 - rotation[x])
        };
        let mut links = vec![0; ports];
        for p in 0..ports {
            links[to_pd(p)] = to_pd(self.links[p]);
        }
        LinkDiagram::from_ports(signs, links, self.free_loops)
    }
}
