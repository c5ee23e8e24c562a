use std::fmt;

use super::table::InvariantTable;
use crate::diagram::{simplify, LinkDiagram};
use crate::error::{Error, Result};
use crate::invariants::{alexander, homfly, signature, LaurentPoly2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identification {
    /// Table names consistent with the diagram; more than one is ambiguous.
    Knot(Vec<String>),
    /// No table entry has this HOMFLY polynomial.
    Unknown,
    /// The skein computation ran out of budget.
    Budget,
}

impl Identification {
    pub fn names(&self) -> &[String] {
        match self {
            Identification::Knot(v) => v,
            _ => &[],
        }
    }

    pub fn is_unique(&self) -> bool {
        self.names().len() == 1
    }

    pub fn is_ambiguous(&self) -> bool {
        self.names().len() > 1
    }
}

/// `name`, `name|name`, `unknown` or `budget`.
impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identification::Knot(v) => f.write_str(&v.join("|")),
            Identification::Unknown => f.write_str("unknown"),
            Identification::Budget => f.write_str("budget"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exclusion {
    /// Crossing number above the simplified diagram's crossing count.
    CrossingNumber,
    /// Signature magnitude differs.
    Signature,
}

impl fmt::Display for Exclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exclusion::CrossingNumber => "crossing number",
            Exclusion::Signature => "signature",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentifyOutcome {
    pub identification: Identification,
    /// `None` when the budget ran out.
    pub homfly: Option<LaurentPoly2>,
    /// Crossings left after Reidemeister simplification.
    pub reduced_crossings: usize,
    /// Knot signature of the diagram.
    pub signature: i64,
    /// Names with matching HOMFLY discarded, with the reason.
    pub excluded: Vec<(String, Exclusion)>,
}

/// Identifies a knot diagram against the table, ignoring chirality.
///
/// Candidates are the records whose Alexander polynomial matches, narrowed to
/// those whose HOMFLY or mirror HOMFLY matches, then to those whose crossing
/// number does not exceed the simplified diagram's crossing count and whose
/// signature agrees up to sign.
pub fn identify(d: &LinkDiagram, table: &InvariantTable, budget: usize) -> Result<IdentifyOutcome> {
    let found = d.component_count();
    if found != 1 {
        return Err(Error::ComponentCount { expected: 1, found });
    }
    let reduced = simplify(d);
    let reduced_crossings = reduced.crossing_count();
    let alex = alexander(&reduced)?;
    let sig = signature(&reduced)?;
    let p = match homfly(&reduced, budget) {
        Ok(p) => p,
        Err(Error::BudgetExceeded(_)) => {
            return Ok(IdentifyOutcome {
                identification: Identification::Budget,
                homfly: None,
                reduced_crossings,
                signature: sig,
                excluded: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let mut names = Vec::new();
    let mut excluded = Vec::new();
    for r in table.lookup_homfly(&p) {
        if r.alexander != alex {
            continue;
        }
        if r.crossing_number > reduced_crossings {
            excluded.push((r.name.clone(), Exclusion::CrossingNumber));
        } else if r.signature.abs() != sig.abs() {
            excluded.push((r.name.clone(), Exclusion::Signature));
        } else {
            names.push(r.name.clone());
        }
    }
    let identification = if names.is_empty() {
        Identification::Unknown
    } else {
        Identification::Knot(names)
    };
    Ok(IdentifyOutcome { identification, homfly: Some(p), reduced_crossings, signature: sig, excluded })
}
