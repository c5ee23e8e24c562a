use crate::error::Result;
use crate::generators::plan::BraidPlan;
use crate::mosaic::Mosaic;
use crate::tile::Tile;

/// Builds the one-braid mosaic for a feasible plan.
///
/// Rows are filled top to bottom: `p - 2` rows of double arcs, `h` rows each
/// holding a diagonal run of `p - 1` vertical-over crossings, `p + v - 2`
/// rows holding `v` vertical runs of horizontal-over crossings, then `|r|`
/// filler rows and vertical lines for whatever is left.
///
/// Every strand descending through a top-right double arc drifts one column
/// right and through a top-left one drifts left, so the filler is top-right
/// when `r >= 0` and the net drift over a full descent is `p` columns.
pub fn one_braid(plan: &BraidPlan) -> Result<Mosaic> {
    let plan = BraidPlan::new(plan.p, plan.q, plan.h, plan.v)?;
    let (p, h, v) = (plan.p as usize, plan.h as usize, plan.v as usize);
    let n = plan.n() as usize;
    let mut rows: Vec<Vec<Tile>> = Vec::with_capacity(n);

    for _ in 0..p - 2 {
        rows.push(vec![Tile::DOUBLE_TR; n]);
    }

    // 1-based positions (p - 1 + i, i + j)
    for i in 0..h {
        let mut row = vec![Tile::DOUBLE_TR; n];
        for j in 1..p {
            row[i + j - 1] = Tile::CROSS_VERTICAL_OVER;
        }
        rows.push(row);
    }

    // 1-based positions (p - 2 + h + i + j, h - i), within rows p - 1 + h ..= 2p - 4 + h + v
    let first = rows.len();
    for _ in 0..(p + v).saturating_sub(2) {
        rows.push(vec![Tile::DOUBLE_TL; n]);
    }
    for i in 0..v {
        for j in 1..p {
            let row = p - 2 + h + i + j; // 1-based
            rows[row - 1][h - i - 1] = Tile::CROSS_HORIZONTAL_OVER;
        }
    }
    debug_assert_eq!(rows.len(), first + (p + v).saturating_sub(2));

    let r = plan.r();
    let filler = if r >= 0 { Tile::DOUBLE_TR } else { Tile::DOUBLE_TL };
    for _ in 0..r.unsigned_abs() {
        rows.push(vec![filler; n]);
    }
    while rows.len() < n {
        rows.push(vec![Tile::VERTICAL; n]);
    }
    debug_assert_eq!(rows.len(), n);

    Mosaic::new(n, rows.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mosaic::Boundary;

    #[test]
    fn trefoil_plan() {
        let m = one_braid(&BraidPlan::new(2, 3, 1, 0).unwrap()).unwrap();
        assert_eq!(m.encode(), "9777");
        assert!(m.is_suitably_connected(Boundary::Toric));
        assert_eq!(m.crossing_tiles(), 1);
    }

    #[test]
    fn four_twenty_one() {
        let m = one_braid(&BraidPlan::new(4, 21, 6, 2).unwrap()).unwrap();
        assert_eq!(m.size(), 13);
        assert_eq!(m.crossing_tiles(), 24);
        assert_eq!(m.count_tiles(9), 18);
        assert_eq!(m.count_tiles(10), 6);
        assert!(m.is_suitably_connected(Boundary::Toric));
    }

    #[test]
    fn rejects_bad_plan() {
        let bad = BraidPlan { p: 2, q: 9, h: 4, v: 0 };
        assert!(one_braid(&bad).is_err());
    }
}
