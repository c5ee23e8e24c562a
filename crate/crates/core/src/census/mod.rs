//! Knot table, identification of traced mosaics, censuses and the appendix
//! verifier.

mod appendix;
mod identify;
mod table;

pub use appendix::{parse_appendix, verify_appendix, verify_row, AppendixRow, RowStatus, RowVerdict, BUNDLED_APPENDIX};
pub use identify::{identify, Exclusion, Identification, IdentifyOutcome};
pub use table::{default_cache_path, InvariantTable, KnotRecord, BUNDLED_PD, CACHE_ENV};

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::diagram::trace;
use crate::enumerate::{enumerate_parallel, EnumOptions};
use crate::error::Result;
use crate::invariants::DEFAULT_BUDGET;
use crate::mosaic::Mosaic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub code: String,
    pub n: usize,
    pub components: usize,
    /// `name`, `name|name`, `unknown`, `link` or `budget`.
    pub identification: String,
    /// Canonical HOMFLY string; empty for links and budget failures.
    pub homfly: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    /// One row per enumerated mosaic (translation representatives), sorted by
    /// identification then code.
    pub rows: Vec<CensusRow>,
    /// Names identified uniquely by at least one mosaic.
    pub knots: BTreeSet<String>,
    /// Least code per uniquely identified name.
    pub witnesses: BTreeMap<String, String>,
    /// Ambiguous identification -> least code.
    pub ambiguous: BTreeMap<String, String>,
    /// Unknown HOMFLY polynomial -> least code.
    pub unknown: BTreeMap<String, String>,
    pub links: usize,
    pub budget_failures: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub symmetry_reduce: bool,
    pub budget: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { symmetry_reduce: true, budget: DEFAULT_BUDGET }
    }
}

/// Traces and identifies one mosaic.
pub fn census_row(m: &Mosaic, table: &InvariantTable, budget: usize) -> Result<CensusRow> {
    let d = trace(m)?;
    let components = d.component_count();
    let (identification, homfly) = if components != 1 {
        ("link".to_string(), String::new())
    } else {
        let out = identify(&d, table, budget)?;
        (
            out.identification.to_string(),
            out.homfly.map(|p| p.to_string()).unwrap_or_default(),
        )
    };
    Ok(CensusRow { code: m.encode(), n: m.size(), components, identification, homfly })
}

/// Enumerates suitably connected `n`-mosaics, traces them, discards links,
/// and identifies the knots.
pub fn run_census(n: usize, table: &InvariantTable, opts: &CensusOptions) -> Result<CensusReport> {
    let mosaics = enumerate_parallel(&EnumOptions { n, symmetry_reduce: opts.symmetry_reduce, prefix: Vec::new() })?;
    let mut rows = mosaics
        .par_iter()
        .map(|m| census_row(m, table, opts.budget))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| (&a.identification, &a.code).cmp(&(&b.identification, &b.code)));

    let mut report = CensusReport { n, ..Default::default() };
    for row in &rows {
        let least = |map: &mut BTreeMap<String, String>, key: &str| {
            let e = map.entry(key.to_string()).or_insert_with(|| row.code.clone());
            if row.code < *e {
                *e = row.code.clone();
            }
        };
        match row.identification.as_str() {
            "link" => report.links += 1,
            "budget" => report.budget_failures.push(row.code.clone()),
            "unknown" => least(&mut report.unknown, &row.homfly),
            id if id.contains('|') => least(&mut report.ambiguous, id),
            id => {
                report.knots.insert(id.to_string());
                least(&mut report.witnesses, id);
            }
        }
    }
    report.rows = rows;
    Ok(report)
}

pub const CSV_HEADER: &str = "code,n,components,identification,homfly";

fn csv_line(r: &CensusRow) -> String {
    format!("{},{},{},{},{}", r.code, r.n, r.components, r.identification, r.homfly)
}

impl CensusReport {
    /// Every row, links included.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&csv_line(r));
            out.push('\n');
        }
        out
    }

    /// Knot rows only: every mosaic tracing to one component.
    pub fn knot_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in self.rows.iter().filter(|r| r.components == 1) {
            out.push_str(&csv_line(r));
            out.push('\n');
        }
        out
    }

    /// One row per uniquely identified knot: its least witness.
    pub fn witness_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for code in self.witnesses.values() {
            let r = self.rows.iter().find(|r| &r.code == code).expect("witness row");
            out.push_str(&csv_line(r));
            out.push('\n');
        }
        out
    }

    /// Lines describing everything outside `expected`: extra knots, ambiguous
    /// and unknown identifications, budget failures, and missing names.
    pub fn discrepancies(&self, expected: &BTreeSet<String>) -> Vec<String> {
        let mut out = Vec::new();
        for name in self.knots.difference(expected) {
            out.push(format!("extra knot {name} (witness {})", self.witnesses[name]));
        }
        for name in expected.difference(&self.knots) {
            out.push(format!("missing knot {name}"));
        }
        for (id, code) in &self.ambiguous {
            out.push(format!("ambiguous {id} (witness {code})"));
        }
        for (p, code) in &self.unknown {
            out.push(format!("unknown HOMFLY {p} (witness {code})"));
        }
        for code in &self.budget_failures {
            out.push(format!("budget exceeded on {code}"));
        }
        out
    }
}
