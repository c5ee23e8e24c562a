//! Alexander polynomial from the arc presentation.
//!
//! The reduced Alexander matrix has entries of degree at most one, so its
//! determinant has degree below the crossing count. It is evaluated at that
//! many points modulo two primes, interpolated, and lifted to symmetric
//! residues; the two lifts must agree.

use super::poly::LaurentPoly1;
use crate::diagram::{simplify, LinkDiagram, Sign};
use crate::error::{Error, Result};
use crate::generators::validate_torus_params;

const PRIMES: [u64; 2] = [(1 << 61) - 1, 1_000_000_007];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

fn to_mod(c: i64, m: u64) -> u64 {
    c.rem_euclid(m as i64) as u64
}

/// Row entries `(column, constant, t-coefficient)`.
type Row = Vec<(usize, i64, i64)>;

fn det_mod(rows: &[Row], t: u64, m: u64) -> u64 {
    let k = rows.len();
    let mut a = vec![vec![0u64; k]; k];
    for (i, row) in rows.iter().enumerate() {
        for &(j, c0, c1) in row {
            a[i][j] = (a[i][j] + to_mod(c0, m) + mul_mod(to_mod(c1, m), t, m)) % m;
        }
    }
    let mut det = 1u64;
    for col in 0..k {
        let Some(pivot) = (col..k).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            a.swap(pivot, col);
            det = (m - det) % m;
        }
        det = mul_mod(det, a[col][col], m);
        let inv = inv_mod(a[col][col], m);
        for r in col + 1..k {
            if a[r][col] == 0 {
                continue;
            }
            let f = mul_mod(a[r][col], inv, m);
            for c in col..k {
                let sub = mul_mod(f, a[col][c], m);
                a[r][c] = (a[r][c] + m - sub) % m;
            }
        }
    }
    det
}

/// Monomial-basis coefficients of the polynomial through `(x_i, y_i)`.
fn interpolate(xs: &[u64], ys: &[u64], m: u64) -> Vec<u64> {
    let k = xs.len();
    // Newton divided differences.
    let mut coef = ys.to_vec();
    for j in 1..k {
        for i in (j..k).rev() {
            let num = (coef[i] + m - coef[i - 1]) % m;
            let den = (xs[i] + m - xs[i - j]) % m;
            coef[i] = mul_mod(num, inv_mod(den, m), m);
        }
    }
    let mut poly = vec![0u64; k];
    for i in (0..k).rev() {
        // poly = poly * (x - xs[i]) + coef[i]
        let mut next = vec![0u64; k];
        for d in 0..k {
            if poly[d] == 0 {
                continue;
            }
            if d + 1 < k {
                next[d + 1] = (next[d + 1] + poly[d]) % m;
            }
            next[d] = (next[d] + m - mul_mod(poly[d], xs[i], m)) % m;
        }
        next[0] = (next[0] + coef[i]) % m;
        poly = next;
    }
    poly
}

fn lift(c: u64, m: u64) -> i64 {
    if c > m / 2 {
        -((m - c) as i64)
    } else {
        c as i64
    }
}

fn determinant(rows: &[Row]) -> Result<LaurentPoly1> {
    let points = rows.len() + 1;
    let mut lifted: Vec<Vec<i64>> = Vec::new();
    for &m in &PRIMES {
        let xs: Vec<u64> = (1..=points as u64).collect();
        let ys: Vec<u64> = xs.iter().map(|&t| det_mod(rows, t, m)).collect();
        lifted.push(interpolate(&xs, &ys, m).into_iter().map(|c| lift(c, m)).collect());
    }
    if lifted[0] != lifted[1] {
        return Err(Error::CoefficientOverflow);
    }
    Ok(LaurentPoly1::from_dense(0, &lifted[0]))
}

/// Alexander polynomial of a knot diagram, symmetric with value 1 at `t = 1`.
pub fn alexander(d: &LinkDiagram) -> Result<LaurentPoly1> {
    let found = d.component_count();
    if found != 1 {
        return Err(Error::ComponentCount { expected: 1, found });
    }
    let d = simplify(d);
    let c = d.crossing_count();
    if c == 0 {
        return Ok(LaurentPoly1::one());
    }
    let (arc_of, arcs) = d.overpass_arcs();
    debug_assert_eq!(arcs, c);
    let rows: Vec<Row> = (0..c - 1)
        .map(|x| {
            let over = arc_of[4 * x + 1];
            let under_in = arc_of[4 * x];
            let under_out = arc_of[4 * x + 2];
            let (a_in, a_out) = match d.sign(x) {
                Sign::Positive => ((0, 1), (-1, 0)),
                Sign::Negative => ((-1, 0), (0, 1)),
            };
            vec![(over, 1, -1), (under_in, a_in.0, a_in.1), (under_out, a_out.0, a_out.1)]
                .into_iter()
                .filter(|&(j, _, _)| j != c - 1)
                .collect()
        })
        .collect();
    let det = determinant(&rows)?;
    det.symmetrized()
        .ok_or_else(|| Error::NotAKnotPolynomial(det.to_string()))
}

/// Closed form `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, symmetrized.
pub fn alexander_torus(p: i64, q: i64) -> Result<LaurentPoly1> {
    validate_torus_params(p, q)?;
    let x = |e: i64| &LaurentPoly1::monomial(1, [e as i32]) - &LaurentPoly1::one();
    let num = &x(p * q) * &x(1);
    let den = &x(p) * &x(q);
    let quot = num.div_exact(&den).expect("cyclotomic identity");
    Ok(quot.symmetrized().expect("torus knot polynomial is symmetric"))
}

/// Half the signed count of crossings between the two components.
pub fn linking_number(d: &LinkDiagram) -> Result<i64> {
    let found = d.component_count();
    if found != 2 {
        return Err(Error::ComponentCount { expected: 2, found });
    }
    let sum: i64 = d
        .crossing_components()
        .into_iter()
        .filter(|(a, b, _)| a != b)
        .map(|(_, _, s)| s.value())
        .sum();
    Ok(sum / 2)
}
