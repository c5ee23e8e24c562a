use crate::error::Result;
use crate::generators::plan::validate_torus_params;
use crate::mosaic::Mosaic;
use crate::tile::Tile;

/// The `q x q` mosaic copied from the standard picture of a torus knot:
/// `p` rows of top-right double arcs over `q - p` rows of vertical lines.
pub fn naive_mosaic(p: i64, q: i64) -> Result<Mosaic> {
    validate_torus_params(p, q)?;
    let (p, q) = (p as usize, q as usize);
    let mut m = Mosaic::filled(q, Tile::VERTICAL);
    for r in 0..p {
        for c in 0..q {
            m.set(r, c, Tile::DOUBLE_TR);
        }
    }
    Ok(m)
}
