use super::{port, GeoGraph, LinkDiagram};
use crate::error::Result;
use crate::generators::validate_torus_params;

/// Closure of the positive braid `(s_1 s_2 ... s_{p-1})^q` on `p` strands.
///
/// Node slots are counterclockwise `[bottom-left, bottom-right, top-right,
/// top-left]`; the strand bottom-left to top-right passes over.
pub fn torus_knot_diagram(p: i64, q: i64) -> Result<LinkDiagram> {
    validate_torus_params(p, q)?;
    let (p, q) = (p as usize, q as usize);
    let nodes = q * (p - 1);
    let mut g = GeoGraph::new(nodes);
    let mut top: Vec<Option<usize>> = vec![None; p];
    let mut bottom: Vec<Option<usize>> = vec![None; p];
    let mut attach = |pos: usize, inport: usize, g: &mut GeoGraph, top: &mut Vec<Option<usize>>| {
        match top[pos] {
            Some(t) => g.connect(t, inport),
            None => bottom[pos] = Some(inport),
        }
    };
    for k in 0..nodes {
        let i = k % (p - 1);
        g.over_even[k] = true;
        attach(i, port(k, 0), &mut g, &mut top);
        attach(i + 1, port(k, 1), &mut g, &mut top);
        top[i] = Some(port(k, 3));
        top[i + 1] = Some(port(k, 2));
    }
    for pos in 0..p {
        g.connect(top[pos].unwrap(), bottom[pos].unwrap());
    }
    Ok(g.into_diagram())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Sign;

    #[test]
    fn shape() {
        let d = torus_knot_diagram(2, 3).unwrap();
        assert_eq!((d.crossing_count(), d.component_count()), (3, 1));
        assert!(d.signs().iter().all(|&s| s == Sign::Positive));
        let d = torus_knot_diagram(3, 4).unwrap();
        assert_eq!((d.crossing_count(), d.component_count()), (8, 1));
        assert!(torus_knot_diagram(2, 4).is_err());
    }
}
