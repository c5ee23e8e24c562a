use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `N` variables with integer coefficients.
/// Zero coefficients are never stored; iteration is exponent-sorted.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<const N: usize> {
    terms: BTreeMap<[i32; N], i64>,
}

/// One variable, `t`.
pub type LaurentPoly1 = LaurentPoly<1>;
/// Two variables, `v` and `z`.
pub type LaurentPoly2 = LaurentPoly<2>;

fn variable_names(n: usize) -> &'static [&'static str] {
    match n {
        1 => &["t"],
        2 => &["v", "z"],
        _ => &["x", "y", "w"],
    }
}

impl<const N: usize> LaurentPoly<N> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, [0; N])
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, [0; N])
    }

    pub fn monomial(c: i64, exps: [i32; N]) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([i32; N], i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: [i32; N], c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exps).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32; N], &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: [i32; N]) -> i64 {
        self.terms.get(&exps).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, k)| (*e, k * c)))
    }

    /// Multiplies by the monomial with exponents `shift`.
    pub fn shift(&self, shift: [i32; N]) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, k)| {
            let mut e2 = *e;
            for i in 0..N {
                e2[i] += shift[i];
            }
            (e2, *k)
        }))
    }

    /// Substitutes `x_i -> sign_i * x_i^{factor_i}` (factor is +1 or -1).
    pub fn substitute(&self, factor: [i32; N], sign: [i64; N]) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, k)| {
            let mut e2 = *e;
            let mut c = *k;
            for i in 0..N {
                e2[i] *= factor[i];
                if e[i] % 2 != 0 {
                    c *= sign[i];
                }
            }
            (e2, c)
        }))
    }

    /// Value with every variable set to 1.
    pub fn sum_of_coefficients(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl<const N: usize> Add for &LaurentPoly<N> {
    type Output = LaurentPoly<N>;
    fn add(self, rhs: Self) -> LaurentPoly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, *c);
        }
        out
    }
}

impl<const N: usize> Sub for &LaurentPoly<N> {
    type Output = LaurentPoly<N>;
    fn sub(self, rhs: Self) -> LaurentPoly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -*c);
        }
        out
    }
}

impl<const N: usize> Neg for &LaurentPoly<N> {
    type Output = LaurentPoly<N>;
    fn neg(self) -> LaurentPoly<N> {
        self.scale(-1)
    }
}

impl<const N: usize> Mul for &LaurentPoly<N> {
    type Output = LaurentPoly<N>;
    fn mul(self, rhs: Self) -> LaurentPoly<N> {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..N {
                    e[i] += eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<const N: usize> $tr for LaurentPoly<N> {
            type Output = LaurentPoly<N>;
            fn $m(self, rhs: Self) -> LaurentPoly<N> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<const N: usize> Neg for LaurentPoly<N> {
    type Output = LaurentPoly<N>;
    fn neg(self) -> LaurentPoly<N> {
        -&self
    }
}

/// Canonical form: `c*v^a*z^b` terms in exponent order joined by `" + "`,
/// or `0`.
impl<const N: usize> fmt::Display for LaurentPoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = variable_names(N);
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for i in 0..N {
                write!(f, "*{}^{}", names[i], e[i])?;
            }
        }
        Ok(())
    }
}

impl<const N: usize> fmt::Debug for LaurentPoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const N: usize> FromStr for LaurentPoly<N> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let names = variable_names(N);
        let mut p = Self::zero();
        for term in s.split(" + ") {
            let mut factors = term.trim().split('*');
            let c: i64 = factors
                .next()
                .and_then(|c| c.parse().ok())
                .ok_or_else(|| Error::PolyParse(format!("bad coefficient in {term:?}")))?;
            let mut e = [0i32; N];
            let mut count = 0;
            for (i, factor) in factors.enumerate() {
                let (name, exp) = factor
                    .split_once('^')
                    .ok_or_else(|| Error::PolyParse(format!("bad factor {factor:?}")))?;
                if i >= N || name != names[i] {
                    return Err(Error::PolyParse(format!("unexpected variable {name:?}")));
                }
                e[i] = exp
                    .parse()
                    .map_err(|_| Error::PolyParse(format!("bad exponent {exp:?}")))?;
                count += 1;
            }
            if count != N {
                return Err(Error::PolyParse(format!("term {term:?} needs {N} variable(s)")));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl LaurentPoly1 {
    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().map(|e| e[0])
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().map(|e| e[0])
    }

    /// Dense coefficients from the lowest exponent upward.
    pub fn dense(&self) -> (i32, Vec<i64>) {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![0; (hi - lo + 1) as usize];
                for (e, c) in &self.terms {
                    v[(e[0] - lo) as usize] = *c;
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    pub fn from_dense(lo: i32, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| ([lo + i as i32], c)))
    }

    /// Exact division; `None` when `divisor` does not divide `self` or has a
    /// non-unit leading coefficient.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dlo, d) = divisor.dense();
        let lead = *d.last()?;
        if lead.abs() != 1 {
            return None;
        }
        let (nlo, mut num) = self.dense();
        if num.is_empty() {
            return Some(Self::zero());
        }
        if num.len() < d.len() {
            return None;
        }
        let qlen = num.len() - d.len() + 1;
        let mut quot = vec![0i64; qlen];
        for i in (0..qlen).rev() {
            let c = num[i + d.len() - 1] * lead;
            quot[i] = c;
            if c != 0 {
                for (k, dk) in d.iter().enumerate() {
                    num[i + k] -= c * dk;
                }
            }
        }
        if num.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Self::from_dense(nlo - dlo, &quot))
    }

    /// Shifts and signs the polynomial so it is symmetric under `t -> 1/t`
    /// with value 1 at `t = 1`. `None` if that is impossible.
    pub fn symmetrized(&self) -> Option<Self> {
        let lo = self.min_degree()?;
        let hi = self.max_degree()?;
        if (hi - lo) % 2 != 0 {
            return None;
        }
        let mid = (hi + lo) / 2;
        let mut p = self.shift([-mid]);
        match p.sum_of_coefficients() {
            1 => {}
            -1 => p = p.scale(-1),
            _ => return None,
        }
        Some(p)
    }
}
