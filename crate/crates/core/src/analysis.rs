//! Statistics derived from a completed enumeration, and complete decoding
//! through Matphi.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::engine::ClbcResult;
use crate::error::{Error, Result};
use crate::word::BinaryWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeStats {
    pub n: usize,
    /// Rows of the parity-check matrix as given (may exceed its rank).
    pub r: usize,
    pub k: usize,
    pub num_cosets: usize,
    /// `wdcl[i]` is the number of cosets whose leaders have weight `i`.
    pub wdcl: Vec<usize>,
    /// Leaders per coset, in discovery order.
    pub leader_counts: Vec<usize>,
    pub total_leaders: usize,
    pub covering_radius: usize,
    pub newton_radius: usize,
    pub unique_leader_cosets: usize,
    /// Cosets meeting the ball `B(C, t)`; present only when `d` is known.
    pub ball_cosets: Option<usize>,
    pub d: Option<usize>,
    pub t: Option<usize>,
}

/// Computes the statistics of `result`. `d` (the minimum distance, if known)
/// enables `t` and `ball_cosets`.
pub fn compute_stats(result: &ClbcResult, d: Option<usize>) -> CodeStats {
    let n = result.n();
    let mut wdcl = vec![0; n + 1];
    let mut leader_counts = Vec::with_capacity(result.num_cosets());
    let mut newton_radius = 0;
    for (j, leaders) in result.leaders.iter().enumerate() {
        let wt = result.transversal.word(j).weight();
        wdcl[wt] += 1;
        leader_counts.push(leaders.len());
        if leaders.len() == 1 {
            newton_radius = newton_radius.max(wt);
        }
    }
    let covering_radius = wdcl.iter().rposition(|&c| c > 0).unwrap_or(0);
    let t = d.map(|d| (d - 1) / 2);
    let ball_cosets = t.map(|t| wdcl.iter().take(t + 1).sum());
    CodeStats {
        n,
        r: result.parity_check.nrows(),
        k: n - result.parity_check.rank(),
        num_cosets: result.num_cosets(),
        unique_leader_cosets: leader_counts.iter().filter(|&&c| c == 1).count(),
        total_leaders: leader_counts.iter().sum(),
        wdcl,
        leader_counts,
        covering_radius,
        newton_radius,
        ball_cosets,
        d,
        t,
    }
}

/// Tally of leaders per coset: `count -> number of cosets with that many leaders`.
pub fn leader_count_multiset(result: &ClbcResult) -> BTreeMap<usize, usize> {
    let mut tally = BTreeMap::new();
    for leaders in result.leaders.iter() {
        *tally.entry(leaders.len()).or_insert(0) += 1;
    }
    tally
}

/// Error-correcting capability read off the leader table alone: the largest
/// `w` such that every word of weight at most `w` is the only leader of its
/// coset. Agrees with `(d - 1) / 2` whenever `d` exists; for the zero code it
/// is `n`.
pub fn error_capability_from_leaders(result: &ClbcResult) -> usize {
    let n = result.n();
    let mut unique_by_weight = vec![0u128; n + 1];
    for leaders in result.leaders.iter() {
        if let [only] = leaders {
            unique_by_weight[only.weight()] += 1;
        }
    }
    let mut binom = 1u128;
    for (w, &unique) in unique_by_weight.iter().enumerate() {
        if unique != binom {
            return w.saturating_sub(1);
        }
        binom = binom * (n - w) as u128 / (w + 1) as u128;
    }
    n
}

/// Index of the canonical representative of the coset of `y`, obtained by
/// walking Matphi from the zero word over `supp(y)` in ascending order.
pub fn canonical_form(y: &BinaryWord, result: &ClbcResult) -> Result<usize> {
    canonical_form_along(y.support(), result)
}

/// Like [`canonical_form`], applying `e_i` for each coordinate of `coords` in
/// the given order.
pub fn canonical_form_along<I>(coords: I, result: &ClbcResult) -> Result<usize>
where
    I: IntoIterator<Item = usize>,
{
    let phi = result.matphi.as_ref().ok_or(Error::MatphiMissing)?;
    let zero = result
        .transversal
        .index_of(&BinaryWord::zero(result.n()))
        .expect("zero word is a representative");
    Ok(coords.into_iter().fold(zero, |j, i| {
        phi.get(j, i).expect("Matphi is total after a full run")
    }))
}

/// One nearest-codeword answer: `codeword = y + error`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decoding {
    pub error: BinaryWord,
    pub codeword: BinaryWord,
}

/// All codewords nearest to `y`, one per leader of its coset.
pub fn decode(y: &BinaryWord, result: &ClbcResult) -> Result<Vec<Decoding>> {
    if y.len() != result.n() {
        return Err(Error::LengthMismatch {
            expected: result.n(),
            found: y.len(),
        });
    }
    let j = canonical_form(y, result)?;
    Ok(result
        .leaders
        .leaders(j)
        .iter()
        .map(|&error| Decoding {
            error,
            codeword: *y + error,
        })
        .collect())
}
