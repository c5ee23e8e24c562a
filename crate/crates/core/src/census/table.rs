use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::invariants::{alexander, homfly, signature, LaurentPoly1, LaurentPoly2, DEFAULT_BUDGET};

/// The bundled PD codes of the unknot and the 249 prime knots with at most
/// ten crossings.
pub const BUNDLED_PD: &str = include_str!("../../data/prime_knots_pd.tsv");

/// Environment variable overriding the invariant cache location.
pub const CACHE_ENV: &str = "TORIC_TABLE_CACHE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub crossing_number: usize,
    pub pd: String,
    pub homfly: LaurentPoly2,
    pub homfly_mirror: LaurentPoly2,
    pub alexander: LaurentPoly1,
    pub signature: i64,
}

#[derive(Clone, Debug, Default)]
pub struct InvariantTable {
    records: Vec<KnotRecord>,
    by_name: HashMap<String, usize>,
    by_homfly: HashMap<String, Vec<usize>>,
}

fn parse_pd_lines(text: &str) -> Result<Vec<(String, String)>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            let (name, pd) = l
                .split_once('\t')
                .ok_or_else(|| Error::Table(format!("line {}: expected name<TAB>PD", i + 1)))?;
            Ok((name.trim().to_string(), pd.trim().to_string()))
        })
        .collect()
}

fn source_hash(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Location of the invariant cache: `$TORIC_TABLE_CACHE` if set, otherwise a
/// file in the system temporary directory.
pub fn default_cache_path() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("toric-invariant-table.tsv"))
}

impl InvariantTable {
    fn from_records(records: Vec<KnotRecord>) -> InvariantTable {
        let mut t = InvariantTable { records, ..Default::default() };
        for (i, r) in t.records.iter().enumerate() {
            t.by_name.insert(r.name.clone(), i);
            for p in [&r.homfly, &r.homfly_mirror] {
                let slot = t.by_homfly.entry(p.to_string()).or_default();
                if !slot.contains(&i) {
                    slot.push(i);
                }
            }
        }
        t
    }

    /// Computes every record's invariants from `name<TAB>PD[...]` lines.
    pub fn build_from_str(text: &str) -> Result<InvariantTable> {
        let entries = parse_pd_lines(text)?;
        let records = entries
            .into_par_iter()
            .map(|(name, pd)| {
                let d = LinkDiagram::from_pd(&pd).map_err(|e| Error::Table(format!("{name}: {e}")))?;
                let h = homfly(&d, DEFAULT_BUDGET)?;
                let hm = homfly(&d.mirror(), DEFAULT_BUDGET)?;
                let a = alexander(&d)?;
                Ok(KnotRecord {
                    name,
                    crossing_number: d.crossing_count(),
                    pd,
                    homfly: h,
                    homfly_mirror: hm,
                    alexander: a,
                    signature: signature(&d)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(InvariantTable::from_records(records))
    }

    pub fn build_table(pd_file: &Path) -> Result<InvariantTable> {
        let text = fs::read_to_string(pd_file).map_err(|e| Error::io(pd_file, e))?;
        Self::build_from_str(&text)
    }

    /// Table for the bundled PD asset.
    pub fn bundled() -> Result<InvariantTable> {
        Self::build_from_str(BUNDLED_PD)
    }

    /// Reads the cache when its source hash matches `pd_text`, otherwise
    /// computes the table and rewrites the cache. Returns the table and
    /// whether the cache was used.
    pub fn load_or_build(pd_text: &str, cache: &Path) -> Result<(InvariantTable, bool)> {
        let hash = source_hash(pd_text);
        if let Ok(text) = fs::read_to_string(cache) {
            if let Some(t) = Self::parse_cache(&text, &hash, pd_text)? {
                return Ok((t, true));
            }
        }
        let t = Self::build_from_str(pd_text)?;
        t.write_cache(cache, &hash)?;
        Ok((t, false))
    }

    /// Bundled table through the default cache.
    pub fn bundled_cached() -> Result<InvariantTable> {
        Self::load_or_build(BUNDLED_PD, &default_cache_path()).map(|(t, _)| t)
    }

    fn parse_cache(text: &str, hash: &str, pd_text: &str) -> Result<Option<InvariantTable>> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or("");
        if header.strip_prefix("# source-sha256 ") != Some(hash) {
            return Ok(None);
        }
        let pds: HashMap<String, String> = parse_pd_lines(pd_text)?.into_iter().collect();
        let mut records = Vec::new();
        for line in lines.filter(|l| !l.is_empty()) {
            let f: Vec<&str> = line.split('\t').collect();
            if f.len() != 4 {
                return Ok(None);
            }
            let Some(pd) = pds.get(f[0]) else { return Ok(None) };
            // A cache line that does not parse marks the whole cache stale.
            let (Ok(homfly), Ok(homfly_mirror), Ok(alexander)) = (f[1].parse(), f[2].parse(), f[3].parse()) else {
                return Ok(None);
            };
            let d = LinkDiagram::from_pd(pd)?;
            records.push(KnotRecord {
                name: f[0].to_string(),
                crossing_number: d.crossing_count(),
                pd: pd.clone(),
                homfly,
                homfly_mirror,
                alexander,
                signature: signature(&d)?,
            });
        }
        if records.len() != pds.len() {
            return Ok(None);
        }
        Ok(Some(InvariantTable::from_records(records)))
    }

    fn write_cache(&self, path: &Path, hash: &str) -> Result<()> {
        let mut out = format!("# source-sha256 {hash}\n");
        for r in &self.records {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", r.name, r.homfly, r.homfly_mirror, r.alexander));
        }
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
            }
        }
        // Write then rename so concurrent readers never see a partial file.
        static WRITES: AtomicUsize = AtomicUsize::new(0);
        let k = WRITES.fetch_add(1, Ordering::Relaxed);
        let tmp = path.with_extension(format!("tmp{}-{k}", std::process::id()));
        fs::write(&tmp, out).map_err(|e| Error::io(&tmp, e))?;
        fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.by_name.get(name).map(|&i| &self.records[i])
    }

    /// Records whose HOMFLY or mirror HOMFLY equals `p`, in table order.
    pub fn lookup_homfly(&self, p: &LaurentPoly2) -> Vec<&KnotRecord> {
        self.by_homfly
            .get(&p.to_string())
            .map(|ids| ids.iter().map(|&i| &self.records[i]).collect())
            .unwrap_or_default()
    }
}
