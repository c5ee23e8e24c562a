use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Accepts `(p, q)` only in the normalized form `2 <= p < q`, coprime.
pub fn validate_torus_params(p: i64, q: i64) -> Result<()> {
    let err = |reason| Err(Error::InvalidTorusParams { p, q, reason });
    if p < 2 {
        return err("requires p >= 2");
    }
    if p >= q {
        return err("requires p < q");
    }
    if gcd(p, q) != 1 {
        return err("p and q are not coprime");
    }
    Ok(())
}

/// Parameters of a one-braid construction for the `(p, q)`-torus knot.
///
/// `h` rows carry horizontal runs of crossings and `v` columns carry vertical
/// runs; the mosaic side is `n = q - (h + v)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BraidPlan {
    pub p: i64,
    pub q: i64,
    pub h: i64,
    pub v: i64,
}

impl BraidPlan {
    pub fn new(p: i64, q: i64, h: i64, v: i64) -> Result<BraidPlan> {
        validate_torus_params(p, q)?;
        let plan = BraidPlan { p, q, h, v };
        if h < 0 || v < 0 {
            return Err(Error::InvalidPlan(format!("negative (h, v) = ({h}, {v})")));
        }
        if !plan.is_feasible() {
            return Err(Error::InvalidPlan(format!(
                "(h, v) = ({h}, {v}) violates the constraint system for (p, q) = ({p}, {q})"
            )));
        }
        Ok(plan)
    }

    /// The four linear constraints plus a non-empty grid.
    pub fn is_feasible(&self) -> bool {
        feasible(self.p, self.q, self.h, self.v)
    }

    /// Mosaic side length.
    pub fn n(&self) -> i64 {
        self.q - (self.h + self.v)
    }

    /// Signed count of filler rows below the braid.
    pub fn r(&self) -> i64 {
        self.p + self.v - self.h
    }

    /// Rows left blank after the braid rows are placed.
    pub fn remaining_rows(&self) -> i64 {
        self.q - 2 * (self.h + self.v + self.p) + 4
    }

    pub fn visible_crossings(&self) -> i64 {
        (self.h + self.v) * (self.p - 1)
    }
}

pub(crate) fn feasible(p: i64, q: i64, h: i64, v: i64) -> bool {
    h >= 0
        && v >= 0
        && q - 2 * (h + v + p) + 4 >= 0
        && h + 3 * v <= q - 3 * p + 4
        && -3 * h - v - p + q + 4 >= 0
        && h >= v
        && q - (h + v) >= 1
}

/// Exhaustive search over `0 <= v <= h <= q` for the feasible pair with the
/// largest `h + v`; ties go to the lexicographically smallest `(h, v)`.
pub fn solve_hv(p: i64, q: i64) -> Result<Option<BraidPlan>> {
    validate_torus_params(p, q)?;
    let mut best: Option<(i64, i64)> = None;
    for h in 0..=q {
        for v in 0..=h {
            if !feasible(p, q, h, v) {
                continue;
            }
            best = match best {
                Some((bh, bv)) if bh + bv >= h + v => Some((bh, bv)),
                _ => Some((h, v)),
            };
        }
    }
    Ok(best.map(|(h, v)| BraidPlan { p, q, h, v }))
}
