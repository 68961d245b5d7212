//! Brute-force ground truth for small codes.
//!
//! Everything here is deliberately naive. Syndromes are computed as row
//! parities (`<row_i, u>`), not through the column XOR the engine uses, and
//! cosets are grouped by syndrome rather than by representative.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::engine::ClbcResult;
use crate::error::{Error, Result};
use crate::matrix::{GF2Matrix, Syndrome};
use crate::word::BinaryWord;

pub const DEFAULT_CAP: usize = 24;
pub const CAP_ENV: &str = "CLBC_ORACLE_CAP";

/// Largest exponent `e` for which a `2^e` scan is allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { cap: DEFAULT_CAP }
    }
}

impl OracleConfig {
    /// Default cap, overridden by `CLBC_ORACLE_CAP` when it parses.
    pub fn from_env() -> Self {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|cap: usize| OracleConfig { cap: cap.min(127) })
            .unwrap_or_default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCoset {
    pub min_weight: usize,
    /// Sorted in increasing weight-compatible order.
    pub leaders: Vec<BinaryWord>,
    pub coset_size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCosetTable {
    pub n: usize,
    pub cosets: BTreeMap<Syndrome, OracleCoset>,
}

impl OracleCosetTable {
    pub fn num_cosets(&self) -> usize {
        self.cosets.len()
    }

    pub fn total_leaders(&self) -> usize {
        self.cosets.values().map(|c| c.leaders.len()).sum()
    }

    /// Largest leader weight among single-leader cosets.
    pub fn newton_radius(&self) -> usize {
        self.cosets
            .values()
            .filter(|c| c.leaders.len() == 1)
            .map(|c| c.min_weight)
            .max()
            .unwrap_or(0)
    }

    pub fn covering_radius(&self) -> usize {
        self.cosets
            .values()
            .map(|c| c.min_weight)
            .max()
            .unwrap_or(0)
    }
}

fn parity_syndrome(h: &GF2Matrix, u: &BinaryWord) -> Syndrome {
    let bits: Vec<bool> = h
        .rows()
        .iter()
        .map(|row| (row.raw() & u.raw()).count_ones() % 2 == 1)
        .collect();
    Syndrome::from_bits(&bits)
}

fn check_cap(what: &'static str, required: usize, cfg: &OracleConfig) -> Result<()> {
    if required > cfg.cap {
        Err(Error::CapExceeded {
            what,
            required,
            cap: cfg.cap,
        })
    } else {
        Ok(())
    }
}

/// Scans all `2^n` words and groups them by syndrome.
pub fn enumerate_cosets(h: &GF2Matrix, cfg: &OracleConfig) -> Result<OracleCosetTable> {
    let n = h.ncols();
    check_cap("coset enumeration", n, cfg)?;
    let mut cosets: HashMap<Syndrome, OracleCoset> = HashMap::new();
    for x in 0..(1u128 << n) {
        let u = BinaryWord::from_index(n, x);
        let wt = u.weight();
        let entry = cosets.entry(parity_syndrome(h, &u)).or_insert(OracleCoset {
            min_weight: wt,
            leaders: Vec::new(),
            coset_size: 0,
        });
        entry.coset_size += 1;
        if wt < entry.min_weight {
            entry.min_weight = wt;
            entry.leaders.clear();
        }
        if wt == entry.min_weight {
            entry.leaders.push(u);
        }
    }
    let cosets = cosets
        .into_iter()
        .map(|(s, mut c)| {
            c.leaders.sort();
            (s, c)
        })
        .collect();
    Ok(OracleCosetTable { n, cosets })
}

/// Minimum distance by enumerating the `2^k` codewords spanned by the
/// nullspace basis. `None` for the zero code.
pub fn min_distance_by_span(h: &GF2Matrix, cfg: &OracleConfig) -> Result<Option<usize>> {
    let basis = h.nullspace_basis();
    check_cap("codeword enumeration", basis.len(), cfg)?;
    let n = h.ncols();
    let mut best = None;
    let mut c = BinaryWord::zero(n);
    // Gray code walk: step t flips basis vector trailing_zeros(t).
    for t in 1u128..(1u128 << basis.len()) {
        c += basis[t.trailing_zeros() as usize];
        let wt = c.weight();
        if best.is_none_or(|b| wt < b) {
            best = Some(wt);
        }
    }
    Ok(best)
}

/// Minimum distance as the least positive weight with zero syndrome.
pub fn min_distance_by_scan(h: &GF2Matrix, cfg: &OracleConfig) -> Result<Option<usize>> {
    let n = h.ncols();
    check_cap("word scan", n, cfg)?;
    Ok((1..(1u128 << n))
        .map(|x| BinaryWord::from_index(n, x))
        .filter(|u| parity_syndrome(h, u).is_zero())
        .map(|u| u.weight())
        .min())
}

/// Minimum distance through the cheaper enumeration. Since `k <= n` that is
/// always the codeword span.
pub fn min_distance(h: &GF2Matrix, cfg: &OracleConfig) -> Result<Option<usize>> {
    min_distance_by_span(h, cfg)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Discrepancy {
    CosetCount {
        engine: usize,
        oracle: usize,
    },
    TotalLeaders {
        engine: usize,
        oracle: usize,
    },
    /// A coset the oracle knows but the engine never produced.
    MissingCoset {
        syndrome: Syndrome,
    },
    /// An engine coset whose syndrome is unknown to the oracle or repeated.
    UnexpectedCoset {
        index: usize,
        syndrome: Syndrome,
    },
    LeaderSetMismatch {
        index: usize,
        syndrome: Syndrome,
        missing: Vec<BinaryWord>,
        unexpected: Vec<BinaryWord>,
    },
    CanonicalNotMinimal {
        index: usize,
        canonical: BinaryWord,
        expected: BinaryWord,
    },
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ws: &[BinaryWord]| {
            ws.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Discrepancy::CosetCount { engine, oracle } => {
                write!(f, "coset count: engine {engine}, oracle {oracle}")
            }
            Discrepancy::TotalLeaders { engine, oracle } => {
                write!(f, "leader count: engine {engine}, oracle {oracle}")
            }
            Discrepancy::MissingCoset { syndrome } => {
                write!(
                    f,
                    "coset with syndrome {syndrome} missing from engine output"
                )
            }
            Discrepancy::UnexpectedCoset { index, syndrome } => {
                write!(f, "coset {} has unexpected syndrome {syndrome}", index + 1)
            }
            Discrepancy::LeaderSetMismatch {
                index,
                syndrome,
                missing,
                unexpected,
            } => write!(
                f,
                "coset {} ({syndrome}): missing [{}], unexpected [{}]",
                index + 1,
                list(missing),
                list(unexpected)
            ),
            Discrepancy::CanonicalNotMinimal {
                index,
                canonical,
                expected,
            } => write!(
                f,
                "coset {}: representative {canonical} is not the minimum {expected}",
                index + 1
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub cosets_checked: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares an engine result with brute-force truth for the same matrix.
pub fn verify(result: &ClbcResult, truth: &OracleCosetTable) -> VerificationReport {
    let mut out = Vec::new();
    let (em, om) = (result.num_cosets(), truth.num_cosets());
    if em != om {
        out.push(Discrepancy::CosetCount {
            engine: em,
            oracle: om,
        });
    }
    let (el, ol) = (result.total_leaders(), truth.total_leaders());
    if el != ol {
        out.push(Discrepancy::TotalLeaders {
            engine: el,
            oracle: ol,
        });
    }

    let mut seen = std::collections::HashSet::new();
    for (j, leaders) in result.leaders.iter().enumerate() {
        let canonical = *result.transversal.word(j);
        let syndrome = parity_syndrome(&result.parity_check, &canonical);
        let Some(coset) = truth
            .cosets
            .get(&syndrome)
            .filter(|_| seen.insert(syndrome))
        else {
            out.push(Discrepancy::UnexpectedCoset { index: j, syndrome });
            continue;
        };
        let mut got = leaders.to_vec();
        got.sort();
        if got != coset.leaders {
            out.push(Discrepancy::LeaderSetMismatch {
                index: j,
                syndrome,
                missing: coset
                    .leaders
                    .iter()
                    .filter(|w| got.binary_search(w).is_err())
                    .copied()
                    .collect(),
                unexpected: got
                    .iter()
                    .filter(|w| coset.leaders.binary_search(w).is_err())
                    .copied()
                    .collect(),
            });
        }
        if let Some(&min) = coset.leaders.first() {
            if canonical != min {
                out.push(Discrepancy::CanonicalNotMinimal {
                    index: j,
                    canonical,
                    expected: min,
                });
            }
        }
    }
    for s in truth.cosets.keys().filter(|s| !seen.contains(s)) {
        out.push(Discrepancy::MissingCoset { syndrome: *s });
    }

    VerificationReport {
        cosets_checked: em,
        discrepancies: out,
    }
}
