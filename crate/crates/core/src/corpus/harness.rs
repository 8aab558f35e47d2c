//! Sweep over the connected covers of a base graph up to a given degree:
//! for every cover with planar source, look for a sphere embedding under
//! which both properties hold. Results persist as JSON lines and a run can
//! be sharded and resumed.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::covering::{enumerate_permutation_covers, CoverMap};
use crate::enumerate::{rotation_system_count, Budget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::negami::{check_pev, check_pev_any_embedding, AnyEmbedding, PevVerdict, PvMode};
use crate::planarity::{is_three_connected, planar_embed, Planarity};

/// Work item `i` belongs to shard `index` when `i % count == index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shard {
    pub index: u64,
    pub count: u64,
}

impl Shard {
    pub fn new(index: u64, count: u64) -> Result<Self> {
        if count == 0 || index >= count {
            return Err(Error::Malformed(format!("shard {index}/{count} is out of range")));
        }
        Ok(Shard { index, count })
    }

    pub fn owns(&self, item: u128) -> bool {
        item % self.count as u128 == self.index as u128
    }
}

impl Default for Shard {
    fn default() -> Self {
        Shard { index: 0, count: 1 }
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

impl FromStr for Shard {
    type Err = Error;

    /// `k/n`, zero-based.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("shard must look like k/n, got {s:?}"));
        let (k, n) = s.split_once('/').ok_or_else(bad)?;
        Shard::new(k.trim().parse().map_err(|_| bad())?, n.trim().parse().map_err(|_| bad())?)
    }
}

/// Where a sweep stopped: the next voltage index of the given degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cursor {
    pub degree: usize,
    #[serde(with = "decimal")]
    pub next_index: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessConfig {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Limit on rotation systems per cover and on voltage assignments per
    /// degree.
    pub budget: Budget,
    pub shard: Shard,
    pub resume: Option<Cursor>,
    /// Stop after this many voltage indices and leave a cursor.
    pub max_items: Option<u128>,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            min_degree: 2,
            max_degree: 2,
            budget: Budget::default(),
            shard: Shard::default(),
            resume: None,
            max_items: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    NotPlanar,
    /// `embedding_index` is `None` when the source was too large to
    /// enumerate and its unique sphere embedding (it is 3-connected) was
    /// used instead.
    Satisfied {
        #[serde(with = "decimal_opt")]
        embedding_index: Option<u128>,
        euler_characteristic: i64,
        orientable: bool,
    },
    /// Planar source, but both properties fail under every sphere
    /// embedding.
    Exhausted {
        #[serde(with = "decimal")]
        sphere_schemes: u128,
    },
    OutOfBudget {
        #[serde(with = "decimal")]
        rotation_systems: u128,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HarnessRow {
    pub degree: usize,
    #[serde(with = "decimal")]
    pub voltage_index: u128,
    /// Images of each cotree voltage, in cotree order.
    pub voltages: Vec<Vec<usize>>,
    pub source_vertices: usize,
    pub source_edges: usize,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableHeader {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub shard: Shard,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
enum Record {
    Header(TableHeader),
    Row(HarnessRow),
    Cursor(Cursor),
}

/// The persisted form of a sweep: one header line, one line per row and,
/// for an unfinished sweep, a final cursor line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultsTable {
    pub header: TableHeader,
    pub rows: Vec<HarnessRow>,
    pub cursor: Option<Cursor>,
}

impl ResultsTable {
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        let mut line = |r: &Record| -> Result<()> {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
            Ok(())
        };
        line(&Record::Header(self.header.clone()))?;
        for row in &self.rows {
            line(&Record::Row(row.clone()))?;
        }
        if let Some(c) = self.cursor {
            line(&Record::Cursor(c))?;
        }
        Ok(())
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("json is utf-8")
    }

    pub fn read_jsonl<R: BufRead>(input: R) -> Result<Self> {
        let mut header = None;
        let mut rows = Vec::new();
        let mut cursor = None;
        for (n, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let record: Record = serde_json::from_str(&line)
                .map_err(|e| Error::Malformed(format!("line {}: {e}", n + 1)))?;
            match record {
                Record::Header(h) if header.is_none() && n == 0 => header = Some(h),
                Record::Header(_) => return Err(Error::Malformed(format!("line {}: unexpected header", n + 1))),
                Record::Row(_) | Record::Cursor(_) if header.is_none() => {
                    return Err(Error::Malformed("first line must be the header".into()))
                }
                Record::Row(_) | Record::Cursor(_) if cursor.is_some() => {
                    return Err(Error::Malformed(format!("line {}: record after the cursor", n + 1)))
                }
                Record::Row(r) => rows.push(r),
                Record::Cursor(c) => cursor = Some(c),
            }
        }
        let header = header.ok_or_else(|| Error::Malformed("empty results table".into()))?;
        Ok(ResultsTable { header, rows, cursor })
    }

    /// Appends the rows of a resumed run.
    pub fn extend(&mut self, more: ResultsTable) -> Result<()> {
        if more.header != self.header {
            return Err(Error::Malformed("results tables come from different sweeps".into()));
        }
        self.rows.extend(more.rows);
        self.cursor = more.cursor;
        Ok(())
    }

    pub fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.rows.iter().filter(|r| pred(&r.outcome)).count()
    }

    /// Planar covers that fail under every sphere embedding.
    pub fn exhausted(&self) -> impl Iterator<Item = &HarnessRow> {
        self.rows.iter().filter(|r| matches!(r.outcome, Outcome::Exhausted { .. }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessReport {
    pub table: ResultsTable,
    /// Voltage indices visited by this run, connected or not, in any shard.
    pub visited: u128,
    /// Set when the run stopped because a degree had too many voltage
    /// assignments; the cursor points at that degree.
    pub budget_stop: Option<String>,
}

impl HarnessReport {
    pub fn complete(&self) -> bool {
        self.table.cursor.is_none()
    }
}

fn evaluate(c: &CoverMap, budget: Budget) -> Result<Outcome> {
    let src = c.source();
    let scheme = match planar_embed(src)? {
        Planarity::NonPlanar => return Ok(Outcome::NotPlanar),
        Planarity::Planar(s) => s,
    };
    let total = rotation_system_count(src);
    if total > budget.max_items as u128 {
        if !is_three_connected(src) {
            return Ok(Outcome::OutOfBudget { rotation_systems: total });
        }
        // the only sphere embeddings are this scheme and its mirror, which
        // share the verdict
        let verdict = match check_pev(c, &scheme, PvMode::Dihedral, budget) {
            Err(Error::BudgetExceeded { .. }) => return Ok(Outcome::OutOfBudget { rotation_systems: total }),
            other => other?,
        };
        return Ok(match verdict {
            PevVerdict::Holds(cert) => Outcome::Satisfied {
                embedding_index: None,
                euler_characteristic: cert.report.surface.euler_characteristic(),
                orientable: cert.report.surface.orientable(),
            },
            _ => Outcome::Exhausted { sphere_schemes: 2 },
        });
    }
    let any = match check_pev_any_embedding(c, PvMode::Dihedral, budget) {
        Err(Error::BudgetExceeded { .. }) => return Ok(Outcome::OutOfBudget { rotation_systems: total }),
        other => other?,
    };
    Ok(match any {
        AnyEmbedding::Found { index, certificate, .. } => Outcome::Satisfied {
            embedding_index: Some(index),
            euler_characteristic: certificate.report.surface.euler_characteristic(),
            orientable: certificate.report.surface.orientable(),
        },
        AnyEmbedding::Exhausted { sphere_schemes, .. } => Outcome::Exhausted { sphere_schemes },
    })
}

/// Runs the sweep for `graph`. Covers come from `S_d` voltages on the
/// cotree for `d` from `min_degree` to `max_degree`; disconnected ones are
/// skipped. Rows are in (degree, index) order regardless of threading.
pub fn conjecture_harness(name: &str, graph: &Arc<Graph>, config: &HarnessConfig) -> Result<HarnessReport> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    if config.min_degree == 0 || config.min_degree > config.max_degree {
        return Err(Error::precondition(format!(
            "degree range {}..={} is empty",
            config.min_degree, config.max_degree
        )));
    }
    let header = TableHeader {
        graph: name.into(),
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        min_degree: config.min_degree,
        max_degree: config.max_degree,
        shard: config.shard,
    };
    let start = config.resume.unwrap_or(Cursor {
        degree: config.min_degree,
        next_index: 0,
    });
    if start.degree < config.min_degree || start.degree > config.max_degree {
        return Err(Error::Malformed(format!("cursor degree {} is outside the sweep", start.degree)));
    }
    let limit = config.max_items.unwrap_or(u128::MAX);
    let mut rows = Vec::new();
    let mut visited = 0u128;
    let mut cursor = None;
    let mut budget_stop = None;
    'degrees: for degree in start.degree..=config.max_degree {
        let first = if degree == start.degree { start.next_index } else { 0 };
        let covers = match enumerate_permutation_covers(graph, degree, config.budget) {
            Ok(c) => c,
            Err(e @ Error::BudgetExceeded { .. }) => {
                cursor = Some(Cursor {
                    degree,
                    next_index: first,
                });
                budget_stop = Some(e.to_string());
                break 'degrees;
            }
            Err(e) => return Err(e),
        };
        if first > covers.total() {
            return Err(Error::Malformed(format!("cursor index {first} is past the end")));
        }
        let mut index = first;
        while index < covers.total() {
            let remaining = limit - visited;
            if remaining == 0 {
                cursor = Some(Cursor { degree, next_index: index });
                break 'degrees;
            }
            let end = covers.total().min(index.saturating_add(4096)).min(index.saturating_add(remaining));
            let batch: Vec<u128> = (index..end).filter(|&i| config.shard.owns(i)).collect();
            let results: Vec<Result<Option<HarnessRow>>> = batch
                .par_iter()
                .map(|&i| {
                    let vc = covers.cover_at(i);
                    if !vc.connected {
                        return Ok(None);
                    }
                    let outcome = evaluate(&vc.cover, config.budget)?;
                    Ok(Some(HarnessRow {
                        degree,
                        voltage_index: i,
                        voltages: covers.voltages_at(i).into_iter().map(Vec::from).collect(),
                        source_vertices: vc.cover.source().vertex_count(),
                        source_edges: vc.cover.source().edge_count(),
                        outcome,
                    }))
                })
                .collect();
            for r in results {
                rows.extend(r?);
            }
            visited += end - index;
            index = end;
        }
    }
    Ok(HarnessReport {
        table: ResultsTable { header, rows, cursor },
        visited,
        budget_stop,
    })
}

/// Large integers travel as decimal strings.
mod decimal {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

mod decimal_opt {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<u128>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u128>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}
