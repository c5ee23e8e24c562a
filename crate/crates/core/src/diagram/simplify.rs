use super::{crossing_of, port, slot_of, LinkDiagram, Port};

/// A crossing with a kink: two adjacent slots joined by one edge.
fn find_r1(d: &LinkDiagram) -> Option<usize> {
    (0..d.crossing_count()).find(|&x| (0..4).any(|s| d.partner(port(x, s)) == port(x, s + 1)))
}

/// Two crossings bounding a bigon whose one edge is over at both ends.
fn find_r2(d: &LinkDiagram) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for p in 0..d.links().len() {
        let q = d.partner(p);
        let (i, j) = (crossing_of(p), crossing_of(q));
        if i == j || slot_of(p) % 2 != slot_of(q) % 2 {
            continue;
        }
        let p2: Port = port(j, slot_of(q) + 1);
        let q2 = d.partner(p2);
        if crossing_of(q2) != i || port(i, slot_of(q2) + 1) != p {
            continue;
        }
        let pair = (i.min(j), i.max(j));
        if best.map_or(true, |b| pair < b) {
            best = Some(pair);
        }
    }
    best
}

fn straight_through(xs: &[usize]) -> Vec<(Port, Port)> {
    xs.iter()
        .flat_map(|&x| [(port(x, 0), port(x, 2)), (port(x, 1), port(x, 3))])
        .collect()
}

/// One Reidemeister I or II reduction, lowest crossing first; `None` at a
/// fixed point.
pub(crate) fn simplify_step(d: &LinkDiagram) -> Option<LinkDiagram> {
    if let Some(x) = find_r1(d) {
        return Some(d.splice(&[x], &straight_through(&[x])));
    }
    find_r2(d).map(|(i, j)| d.splice(&[i, j], &straight_through(&[i, j])))
}

/// Reidemeister I and II reductions to a fixed point.
pub fn simplify(d: &LinkDiagram) -> LinkDiagram {
    let mut cur = d.clone();
    while let Some(next) = simplify_step(&cur) {
        debug_assert!(next.crossing_count() < cur.crossing_count());
        cur = next;
    }
    cur
}
