use std::collections::HashMap;
use std::fmt::Write as _;

use super::{port, LinkDiagram, Sign};
use crate::error::{Error, Result};

fn sentinel_loops(part: &str) -> Option<usize> {
    let part = part.trim();
    if part == "unknot" {
        return Some(1);
    }
    if part == "empty" {
        return Some(0);
    }
    part.strip_prefix("unlink").and_then(|k| k.trim().parse().ok())
}

fn sentinel(k: usize) -> String {
    match k {
        0 => "empty".to_string(),
        1 => "unknot".to_string(),
        k => format!("unlink {k}"),
    }
}

fn parse_body(body: &str) -> Result<Vec<[u32; 4]>> {
    let mut out = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
        if rest.is_empty() {
            break;
        }
        let after_x = rest
            .strip_prefix('X')
            .ok_or_else(|| Error::PdParse(format!("expected X(...) at {rest:?}")))?;
        let (open, close) = match after_x.chars().next() {
            Some('(') => ('(', ')'),
            Some('[') => ('[', ']'),
            _ => return Err(Error::PdParse(format!("expected '(' after X at {rest:?}"))),
        };
        let end = after_x
            .find(close)
            .ok_or_else(|| Error::PdParse("unterminated crossing".into()))?;
        let inner = &after_x[open.len_utf8()..end];
        let nums: Vec<u32> = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::PdParse(format!("bad edge label {t:?}")))
            })
            .collect::<Result<_>>()?;
        let edges: [u32; 4] = nums
            .try_into()
            .map_err(|_| Error::PdParse(format!("crossing X({inner}) needs four labels")))?;
        out.push(edges);
        rest = &after_x[end + 1..];
    }
    Ok(out)
}

impl LinkDiagram {
    /// Parses `PD[X(a,b,c,d),...]` (square brackets inside also accepted),
    /// optionally followed by `+ unknot` / `+ unlink k` for crossingless
    /// circles. `PD[]`, `unknot`, `unlink k` and `empty` denote crossingless
    /// diagrams.
    pub fn from_pd(text: &str) -> Result<LinkDiagram> {
        let mut parts = text.split('+');
        let head = parts.next().unwrap_or("").trim();
        let mut extra = 0;
        for part in parts {
            extra += sentinel_loops(part)
                .ok_or_else(|| Error::PdParse(format!("unexpected suffix {part:?}")))?;
        }
        if let Some(k) = sentinel_loops(head) {
            return Ok(LinkDiagram::unlink(k + extra));
        }
        let body = head
            .strip_prefix("PD[")
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::PdParse(format!("expected PD[...], got {head:?}")))?;
        let records = parse_body(body)?;
        if records.is_empty() {
            return Ok(LinkDiagram::unlink(1 + extra));
        }
        Self::from_records(&records, extra)
    }

    fn from_records(records: &[[u32; 4]], free_loops: usize) -> Result<LinkDiagram> {
        let c = records.len();
        let mut seen: HashMap<u32, Vec<usize>> = HashMap::new();
        for (x, r) in records.iter().enumerate() {
            for (s, &label) in r.iter().enumerate() {
                seen.entry(label).or_default().push(port(x, s));
            }
        }
        let mut links = vec![usize::MAX; 4 * c];
        for (label, ports) in &seen {
            if ports.len() != 2 {
                return Err(Error::PdParse(format!(
                    "edge {label} appears {} time(s), expected 2",
                    ports.len()
                )));
            }
            links[ports[0]] = ports[1];
            links[ports[1]] = ports[0];
        }

        // Orientation: under-strands fix slots 0 and 2; propagate along edges,
        // then through over-strands once a crossing's sign is known.
        let mut incoming: Vec<Option<bool>> = vec![None; 4 * c];
        let mut signs: Vec<Option<Sign>> = vec![None; c];
        for x in 0..c {
            incoming[port(x, 0)] = Some(true);
            incoming[port(x, 2)] = Some(false);
        }
        loop {
            let mut changed = true;
            while changed {
                changed = false;
                for p in 0..4 * c {
                    let q = links[p];
                    match (incoming[p], incoming[q]) {
                        (Some(a), None) => {
                            incoming[q] = Some(!a);
                            changed = true;
                        }
                        (Some(a), Some(b)) if a == b => {
                            return Err(Error::PdParse(format!(
                                "edge {} cannot be oriented consistently",
                                records[p / 4][p % 4]
                            )))
                        }
                        _ => {}
                    }
                }
                for x in 0..c {
                    let (p1, p3) = (port(x, 1), port(x, 3));
                    let sign = match (incoming[p1], incoming[p3]) {
                        (Some(a), Some(b)) if a == b => {
                            return Err(Error::PdParse(format!("over-strand at crossing {} is inconsistent", x + 1)))
                        }
                        (Some(true), _) | (_, Some(false)) => Sign::Negative,
                        (Some(false), _) | (_, Some(true)) => Sign::Positive,
                        (None, None) => continue,
                    };
                    if signs[x].is_none() {
                        signs[x] = Some(sign);
                        incoming[p1] = Some(sign == Sign::Negative);
                        incoming[p3] = Some(sign == Sign::Positive);
                        changed = true;
                    }
                }
            }
            // Components that only ever pass over: read the direction from
            // consecutive labels (over-strand d -> b is positive).
            match (0..c).find(|&x| signs[x].is_none()) {
                None => break,
                Some(x) => {
                    let [_, b, _, d] = records[x];
                    let positive = b == d + 1 || d > b + 1;
                    let sign = if positive { Sign::Positive } else { Sign::Negative };
                    signs[x] = Some(sign);
                    incoming[port(x, 1)] = Some(sign == Sign::Negative);
                    incoming[port(x, 3)] = Some(sign == Sign::Positive);
                }
            }
        }

        let d = LinkDiagram {
            signs: signs.into_iter().map(Option::unwrap).collect(),
            links,
            labels: records.iter().flat_map(|r| r.iter().copied()).collect(),
            free_loops,
        };
        d.check()?;
        Ok(d)
    }

    /// PD notation with the stored edge labels. Crossingless diagrams give
    /// the `unknot` / `unlink k` / `empty` sentinel; extra crossingless
    /// circles are appended as `+ unknot` or `+ unlink k`.
    pub fn pd_code(&self) -> String {
        if self.crossing_count() == 0 {
            return sentinel(self.free_loops);
        }
        let mut s = String::from("PD[");
        for (x, r) in self.records().iter().enumerate() {
            if x > 0 {
                s.push(',');
            }
            let [a, b, c, d] = r.edges;
            write!(s, "X({a},{b},{c},{d})").unwrap();
        }
        s.push(']');
        if self.free_loops > 0 {
            write!(s, " + {}", sentinel(self.free_loops)).unwrap();
        }
        s
    }

    /// Like [`pd_code`](Self::pd_code) but rejects crossingless diagrams.
    pub fn try_pd_code(&self) -> Result<String> {
        if self.crossing_count() == 0 {
            return Err(Error::Crossingless);
        }
        Ok(self.pd_code())
    }
}
