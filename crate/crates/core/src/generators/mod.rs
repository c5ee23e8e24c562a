//! Constructions of toric mosaics for torus knots.
//!
//! Every construction implements [`TorusMosaicGenerator`] and is looked up by
//! name in a [`GeneratorRegistry`], so callers (the CLI in particular) pick
//! the strategy at runtime.

mod full_braid;
mod naive;
mod one_braid;
mod permutation;
mod plan;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use full_braid::{crossing_chain, full_braid, full_braid_q, full_braid_size_for, remove_crossings};
pub use naive::naive_mosaic;
pub use one_braid::one_braid;
pub use permutation::{boundary_permutation, shift_permutation};
pub use plan::{gcd, solve_hv, validate_torus_params, BraidPlan};

use crate::error::{Error, Result};
use crate::mosaic::Mosaic;

/// Loosely typed request; each generator reads the fields it needs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenParams {
    pub p: Option<i64>,
    pub q: Option<i64>,
    /// Full-braid parameter (the mosaic side is `2n`).
    pub n: Option<usize>,
    pub h: Option<i64>,
    pub v: Option<i64>,
}

impl GenParams {
    pub fn torus(p: i64, q: i64) -> GenParams {
        GenParams {
            p: Some(p),
            q: Some(q),
            ..GenParams::default()
        }
    }

    fn need<T: Copy>(&self, value: Option<T>, generator: &str, param: &'static str) -> Result<T> {
        value.ok_or_else(|| Error::MissingParameter {
            generator: generator.to_string(),
            param,
        })
    }
}

/// Output of a generator: the mosaic and the torus knot it represents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub mosaic: Mosaic,
    pub p: i64,
    pub q: i64,
    pub detail: String,
}

pub trait TorusMosaicGenerator: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn generate(&self, params: &GenParams) -> Result<Construction>;
}

pub struct OneBraid;

impl TorusMosaicGenerator for OneBraid {
    fn name(&self) -> &'static str {
        "one-braid"
    }

    fn summary(&self) -> &'static str {
        "all crossings in one p-strand braid; side q - (h + v)"
    }

    fn generate(&self, params: &GenParams) -> Result<Construction> {
        let p = params.need(params.p, self.name(), "p")?;
        let q = params.need(params.q, self.name(), "q")?;
        let plan = match (params.h, params.v) {
            (Some(h), Some(v)) => BraidPlan::new(p, q, h, v)?,
            (None, None) => solve_hv(p, q)?.ok_or_else(|| {
                Error::InvalidPlan(format!("no feasible (h, v) for (p, q) = ({p}, {q})"))
            })?,
            (None, Some(_)) => return Err(Error::MissingParameter { generator: self.name().into(), param: "h" }),
            (Some(_), None) => return Err(Error::MissingParameter { generator: self.name().into(), param: "v" }),
        };
        Ok(Construction {
            mosaic: one_braid(&plan)?,
            p,
            q,
            detail: format!("h={} v={} n={}", plan.h, plan.v, plan.n()),
        })
    }
}

pub struct FullBraid;

impl TorusMosaicGenerator for FullBraid {
    fn name(&self) -> &'static str {
        "full-braid"
    }

    fn summary(&self) -> &'static str {
        "(2, q) knots from n parallel two-strand braids on a 2n-mosaic"
    }

    fn generate(&self, params: &GenParams) -> Result<Construction> {
        if let Some(p) = params.p {
            if p != 2 {
                return Err(Error::InvalidTorusParams { p, q: params.q.unwrap_or(0), reason: "full-braid requires p = 2" });
            }
        }
        let n = match (params.n, params.q) {
            (Some(n), _) => n,
            (None, Some(q)) => {
                validate_torus_params(2, q)?;
                full_braid_size_for(q)
            }
            (None, None) => return Err(Error::MissingParameter { generator: self.name().into(), param: "n or q" }),
        };
        let (mosaic, q_full) = full_braid(n)?;
        let q = params.q.unwrap_or(q_full);
        // Below 2n - 1 the removal reaches into the last braid and leaves a link.
        if q < 2 * n as i64 - 1 {
            return Err(Error::InvalidRemovalTarget {
                q,
                reason: format!("the {0}x{0} full-braid mosaic reaches only q >= {1}", 2 * n, 2 * n - 1),
            });
        }
        let mosaic = remove_crossings(&mosaic, q_full, q)?;
        Ok(Construction {
            mosaic,
            p: 2,
            q,
            detail: format!("n={n} q'={q_full} removed={}", q_full - q),
        })
    }
}

pub struct Naive;

impl TorusMosaicGenerator for Naive {
    fn name(&self) -> &'static str {
        "naive"
    }

    fn summary(&self) -> &'static str {
        "q-mosaic copied from the standard torus-knot picture"
    }

    fn generate(&self, params: &GenParams) -> Result<Construction> {
        let p = params.need(params.p, self.name(), "p")?;
        let q = params.need(params.q, self.name(), "q")?;
        Ok(Construction {
            mosaic: naive_mosaic(p, q)?,
            p,
            q,
            detail: format!("n={q}"),
        })
    }
}

#[derive(Clone, Default)]
pub struct GeneratorRegistry {
    entries: BTreeMap<&'static str, Arc<dyn TorusMosaicGenerator>>,
}

impl GeneratorRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Registry holding `one-braid`, `full-braid` and `naive`.
    pub fn builtin() -> Self {
        let mut reg = Self::empty();
        reg.register(Arc::new(OneBraid));
        reg.register(Arc::new(FullBraid));
        reg.register(Arc::new(Naive));
        reg
    }

    pub fn register(&mut self, generator: Arc<dyn TorusMosaicGenerator>) {
        self.entries.insert(generator.name(), generator);
    }

    pub fn get(&self, name: &str) -> Result<&Arc<dyn TorusMosaicGenerator>> {
        self.entries
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn generate(&self, name: &str, params: &GenParams) -> Result<Construction> {
        self.get(name)?.generate(params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        let reg = GeneratorRegistry::builtin();
        assert_eq!(reg.names().collect::<Vec<_>>(), vec!["full-braid", "naive", "one-braid"]);
        assert!(matches!(reg.get("rapunzel"), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn dispatch_matches_direct_calls() {
        let reg = GeneratorRegistry::builtin();
        let c = reg.generate("one-braid", &GenParams::torus(3, 7)).unwrap();
        let plan = solve_hv(3, 7).unwrap().unwrap();
        assert_eq!(c.mosaic, one_braid(&plan).unwrap());
        assert_eq!(c.detail, "h=2 v=0 n=5");

        let c = reg.generate("naive", &GenParams::torus(3, 4)).unwrap();
        assert_eq!(c.mosaic, naive_mosaic(3, 4).unwrap());

        let c = reg
            .generate("full-braid", &GenParams { n: Some(4), q: Some(19), ..Default::default() })
            .unwrap();
        let (m, qf) = full_braid(4).unwrap();
        assert_eq!(c.mosaic, remove_crossings(&m, qf, 19).unwrap());

        let c = reg.generate("full-braid", &GenParams::torus(2, 13)).unwrap();
        assert_eq!(c.mosaic.size(), 8);
        assert_eq!(c.mosaic.crossing_tiles(), 13);
    }

    #[test]
    fn missing_parameters() {
        let reg = GeneratorRegistry::builtin();
        assert!(matches!(
            reg.generate("naive", &GenParams::default()),
            Err(Error::MissingParameter { param: "p", .. })
        ));
        assert!(reg.generate("full-braid", &GenParams::default()).is_err());
        assert!(reg.generate("full-braid", &GenParams::torus(3, 7)).is_err());
        assert!(reg.generate("full-braid", &GenParams::torus(2, 3)).is_err());
        assert!(reg
            .generate("full-braid", &GenParams { n: Some(4), q: Some(5), ..Default::default() })
            .is_err());
    }
}
