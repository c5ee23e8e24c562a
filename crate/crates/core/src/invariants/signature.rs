//! Knot signature via a Goeritz matrix and the Gordon-Litherland correction.

use crate::diagram::{simplify, LinkDiagram};
use crate::error::{Error, Result};

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Signature of a symmetric integer matrix by congruence diagonalisation.
/// Trailing blocks are rescaled by positive factors only, which preserves
/// the signature.
pub fn symmetric_signature(m: &[Vec<i64>]) -> Result<i64> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sig = 0i64;
    let ovf = || Error::CoefficientOverflow;
    for k in 0..n {
        if a[k][k] == 0 {
            if let Some(i) = (k + 1..n).find(|&i| a[i][i] != 0) {
                a.swap(k, i);
                for row in a.iter_mut() {
                    row.swap(k, i);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| a[k][j] != 0) {
                // row/col k += row/col j makes the pivot 2 a[k][j] + a[j][j]
                for c in 0..n {
                    a[k][c] = a[k][c].checked_add(a[j][c]).ok_or_else(ovf)?;
                }
                for r in 0..n {
                    a[r][k] = a[r][k].checked_add(a[r][j]).ok_or_else(ovf)?;
                }
            } else {
                continue;
            }
        }
        let p = a[k][k];
        sig += p.signum() as i64;
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][k].checked_mul(a[k][j]).ok_or_else(ovf)?;
                a[i][j] = a[i][j]
                    .checked_mul(p.abs())
                    .and_then(|x| x.checked_sub(p.signum() * t))
                    .ok_or_else(ovf)?;
            }
        }
        for i in k + 1..n {
            a[i][k] = 0;
            a[k][i] = 0;
        }
        let g = (k + 1..n)
            .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
            .fold(0, |g, (i, j)| gcd(g, a[i][j]));
        if g > 1 {
            for row in a.iter_mut().skip(k + 1) {
                for x in row.iter_mut().skip(k + 1) {
                    *x /= g;
                }
            }
        }
    }
    Ok(sig)
}

/// Signature of a knot, with the convention that positive knots have
/// negative signature (the right-handed trefoil has signature -2).
pub fn signature(d: &LinkDiagram) -> Result<i64> {
    let found = d.component_count();
    if found != 1 {
        return Err(Error::ComponentCount { expected: 1, found });
    }
    let d = simplify(d);
    let c = d.crossing_count();
    if c == 0 {
        return Ok(0);
    }

    // Corner (x, s) lies between slots s and s + 1 of crossing x.
    let faces = d.faces();
    let mut face_of = vec![0usize; 4 * c];
    for (f, darts) in faces.iter().enumerate() {
        for &p in darts {
            face_of[d.partner(p)] = f;
        }
    }

    // Checkerboard colouring: corner (x, s) gets colour (s + parity[x]) % 2.
    let mut parity = vec![usize::MAX; c];
    let mut face_colour = vec![usize::MAX; faces.len()];
    let mut stack = vec![0usize];
    parity[0] = 0;
    while let Some(x) = stack.pop() {
        for s in 0..4 {
            let f = face_of[4 * x + s];
            let colour = (s + parity[x]) % 2;
            if face_colour[f] == usize::MAX {
                face_colour[f] = colour;
                for &p in &faces[f] {
                    let q = d.partner(p);
                    let y = q / 4;
                    if parity[y] == usize::MAX {
                        parity[y] = (colour + 4 - q % 4) % 2;
                        stack.push(y);
                    }
                }
            }
        }
    }

    // Unshaded (colour 0) faces index the Goeritz matrix.
    let mut index = vec![usize::MAX; faces.len()];
    let mut k = 0;
    for f in 0..faces.len() {
        if face_colour[f] == 0 {
            index[f] = k;
            k += 1;
        }
    }
    let mut g = vec![vec![0i64; k]; k];
    let mut mu = 0i64;
    for x in 0..c {
        // Shaded corners are (1,2) and (3,0) when parity is 0.
        let eta: i64 = if parity[x] == 0 { 1 } else { -1 };
        let s0 = parity[x] % 2; // first unshaded corner
        let (fa, fb) = (index[face_of[4 * x + s0]], index[face_of[4 * x + s0 + 2]]);
        if fa != fb {
            g[fa][fb] -= eta;
            g[fb][fa] -= eta;
            g[fa][fa] += eta;
            g[fb][fb] += eta;
        }
        let shaded = 4 * x + (s0 + 1) % 4;
        let mixed = d.is_incoming(shaded) != d.is_incoming(4 * x + (s0 + 2) % 4);
        if !mixed {
            mu += eta;
        }
    }
    let reduced: Vec<Vec<i64>> = g.iter().skip(1).map(|r| r[1..].to_vec()).collect();
    Ok(symmetric_signature(&reduced)? - mu)
}
