use std::fmt;

use rayon::prelude::*;

use super::identify::{identify, Identification};
use super::table::InvariantTable;
use crate::diagram::trace;
use crate::error::{Error, Result};
use crate::mosaic::{Boundary, Mosaic};

/// The bundled appendix transcription: `name<TAB>bound<TAB>code`, with `n/a`
/// for knots without a listed mosaic.
pub const BUNDLED_APPENDIX: &str = include_str!("../../data/appendix_census.tsv");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixRow {
    pub line: usize,
    pub name: String,
    /// The listed toric mosaic number, or the raw bound text (e.g. `≥4`).
    pub bound: String,
    pub code: Option<String>,
}

impl AppendixRow {
    pub fn exact_bound(&self) -> Option<usize> {
        self.bound.parse().ok()
    }
}

pub fn parse_appendix(text: &str) -> Result<Vec<AppendixRow>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split('\t').map(str::trim).collect();
        if f.len() != 3 {
            return Err(Error::AppendixParse { line: i + 1, message: "expected three tab-separated fields".into() });
        }
        let code = match f[2] {
            "n/a" => None,
            c => {
                Mosaic::decode(c).map_err(|e| Error::AppendixParse { line: i + 1, message: e.to_string() })?;
                Some(c.to_string())
            }
        };
        rows.push(AppendixRow { line: i + 1, name: f[0].to_string(), bound: f[1].to_string(), code });
    }
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Ambiguous,
    Fail,
    Skip,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "PASS",
            RowStatus::Ambiguous => "AMBIGUOUS",
            RowStatus::Fail => "FAIL",
            RowStatus::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowVerdict {
    pub row: AppendixRow,
    pub status: RowStatus,
    /// Identification found, if the row got that far.
    pub found: Option<String>,
    pub detail: String,
}

impl fmt::Display for RowVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}",
            self.status,
            self.row.name,
            self.row.code.as_deref().unwrap_or("n/a"),
            self.found.as_deref().unwrap_or("-"),
            self.detail
        )
    }
}

pub fn verify_row(row: &AppendixRow, table: &InvariantTable, budget: usize) -> Result<RowVerdict> {
    let verdict = |status, found: Option<String>, detail: String| RowVerdict { row: row.clone(), status, found, detail };
    let Some(code) = &row.code else {
        return Ok(verdict(RowStatus::Skip, None, "no mosaic listed".into()));
    };
    let m = Mosaic::decode(code)?;
    if !m.is_suitably_connected(Boundary::Toric) {
        return Ok(verdict(RowStatus::Fail, None, "not suitably connected".into()));
    }
    let mut notes = Vec::new();
    let mut size_ok = true;
    match row.exact_bound() {
        Some(b) if b != m.size() => {
            size_ok = false;
            notes.push(format!("side {} differs from listed bound {b}", m.size()));
        }
        None => notes.push(format!("listed bound {} is not exact", row.bound)),
        _ => {}
    }
    let d = trace(&m)?;
    if d.component_count() != 1 {
        return Ok(verdict(RowStatus::Fail, Some("link".into()), format!("{} components", d.component_count())));
    }
    let out = identify(&d, table, budget)?;
    let found = out.identification.to_string();
    for (name, why) in &out.excluded {
        notes.push(format!("excluded {name} by {why}"));
    }
    let names = out.identification.names();
    let status = if out.identification == Identification::Budget {
        notes.push("skein budget exceeded".into());
        RowStatus::Fail
    } else if !names.contains(&row.name) {
        RowStatus::Fail
    } else if !size_ok {
        RowStatus::Fail
    } else if names.len() > 1 {
        RowStatus::Ambiguous
    } else {
        RowStatus::Pass
    };
    Ok(verdict(status, Some(found), notes.join("; ")))
}

/// Verifies every row in parallel; verdicts keep file order.
pub fn verify_appendix(rows: &[AppendixRow], table: &InvariantTable, budget: usize) -> Result<Vec<RowVerdict>> {
    rows.par_iter().map(|r| verify_row(r, table, budget)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bundled_asset() {
        let rows = parse_appendix(BUNDLED_APPENDIX).unwrap();
        assert_eq!(rows.len(), 250);
        assert_eq!(rows[1].name, "3_1");
        assert_eq!(rows[1].exact_bound(), Some(2));
        assert!(rows.iter().any(|r| r.name == "10_17" && r.code.is_none()));
        assert!(parse_appendix("3_1\t2").is_err());
        assert!(parse_appendix("3_1\t2\tzz").is_err());
    }
}
