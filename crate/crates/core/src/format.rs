//! Text formats: parity-check matrix files and the JSON output document.

use serde::{Deserialize, Serialize};

use crate::analysis::CodeStats;
use crate::engine::ClbcResult;
use crate::error::{Error, Result};
use crate::matrix::{GF2Matrix, Syndrome};
use crate::word::BinaryWord;

/// Parses a matrix file.
///
/// One row per line. `#` starts a comment, blank lines are skipped and
/// whitespace between bits is ignored, so `10110` and `1 0 1 1 0` are the
/// same row.
pub fn parse_matrix(text: &str) -> Result<GF2Matrix> {
    let mut rows: Vec<BinaryWord> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let mut bits = String::with_capacity(content.len());
        for c in content.chars() {
            match c {
                '0' | '1' => bits.push(c),
                c if c.is_whitespace() => {}
                c => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unexpected character {:?}", c),
                    })
                }
            }
        }
        if bits.is_empty() {
            continue;
        }
        let row: BinaryWord = bits.parse().map_err(|e: Error| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line,
                    message: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: last_line.max(1),
            message: "no matrix rows found".into(),
        });
    }
    GF2Matrix::from_rows(rows).map_err(|e| Error::Parse {
        line: last_line,
        message: e.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub num_cosets: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetRecord {
    /// 1-based position in discovery order.
    pub index: usize,
    pub syndrome: Syndrome,
    pub canonical: BinaryWord,
    pub leaders: Vec<BinaryWord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub order: String,
    pub tool_version: String,
    pub iteration_count: u64,
}

/// Machine-readable result of a run.
///
/// Matphi rows hold 1-based coset indices, one entry per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub code: CodeParams,
    pub cosets: Vec<CosetRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matphi: Option<Vec<Vec<usize>>>,
    pub stats: CodeStats,
    pub provenance: Provenance,
}

impl OutputDocument {
    pub fn new(result: &ClbcResult, stats: &CodeStats, include_matphi: bool) -> Self {
        let t = &result.transversal;
        let cosets = result
            .leaders
            .iter()
            .enumerate()
            .map(|(j, leaders)| CosetRecord {
                index: j + 1,
                syndrome: *t.syndrome(j),
                canonical: *t.word(j),
                leaders: leaders.to_vec(),
            })
            .collect();
        let matphi = result
            .matphi
            .as_ref()
            .filter(|_| include_matphi)
            .map(|phi| {
                (0..phi.num_rows())
                    .map(|j| phi.row(j).map(|v| v.map_or(0, |x| x + 1)).collect())
                    .collect()
            });
        OutputDocument {
            code: CodeParams {
                n: stats.n,
                r: stats.r,
                k: stats.k,
                num_cosets: stats.num_cosets,
            },
            cosets,
            matphi,
            stats: stats.clone(),
            provenance: Provenance {
                order: result.order.id().to_owned(),
                tool_version: env!("CARGO_PKG_VERSION").to_owned(),
                iteration_count: result.iteration_count,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
