//! Enumeration of every coset leader together with a Gröbner representation
//! (transversal `N` and the function Matphi).
//!
//! The driver pops candidates from a [`WorkList`] in increasing
//! weight-compatible order. A candidate whose syndrome is new becomes the
//! canonical representative of its coset; a candidate whose syndrome is known
//! is a further leader exactly when its weight equals that representative's.
//! Only leaders are extended by one coordinate, so the number of pops stays
//! below `1 + n * |CL(C)|`.

use foldhash::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::matrix::{GF2Matrix, Syndrome};
use crate::word::{BinaryWord, OrderSpec};

/// Ordered candidate queue, bucketed by weight.
///
/// Each word is held at most once. A bucket collects words in a hash set
/// until the first pop reaches it; it is then sorted once and drained from
/// the end. Later inserts into a sorted bucket go in by binary search.
#[derive(Clone, Debug)]
pub struct WorkList {
    buckets: Vec<Bucket>,
    lowest: usize,
    len: usize,
}

#[derive(Clone, Debug, Default)]
struct Bucket {
    pending: HashSet<BinaryWord>,
    // Equal weights, so ascending raw bits is decreasing order and the
    // minimum sits at the end.
    sorted: Vec<BinaryWord>,
}

impl WorkList {
    pub fn new(n: usize) -> Self {
        WorkList {
            buckets: vec![Bucket::default(); n + 1],
            lowest: 0,
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Inserts `w`; returns false if it was already queued.
    pub fn insert(&mut self, w: BinaryWord) -> bool {
        let wt = w.weight();
        let bucket = &mut self.buckets[wt];
        let added = if bucket.sorted.is_empty() {
            bucket.pending.insert(w)
        } else {
            match bucket
                .sorted
                .binary_search_by_key(&w.raw(), BinaryWord::raw)
            {
                Ok(_) => false,
                Err(pos) => {
                    bucket.sorted.insert(pos, w);
                    true
                }
            }
        };
        if added {
            self.len += 1;
            self.lowest = self.lowest.min(wt);
        }
        added
    }

    /// Queues `tau + e_k` for every `k` outside `supp(tau)`.
    pub fn insert_next(&mut self, tau: &BinaryWord) {
        for k in tau.complement() {
            self.insert(tau.with_flipped(k));
        }
    }

    /// Removes and returns the minimum, or `None` when empty.
    pub fn next_term(&mut self) -> Option<BinaryWord> {
        while self.lowest < self.buckets.len() {
            let bucket = &mut self.buckets[self.lowest];
            if bucket.sorted.is_empty() && !bucket.pending.is_empty() {
                bucket.sorted = bucket.pending.drain().collect();
                bucket.sorted.sort_unstable_by_key(BinaryWord::raw);
            }
            if let Some(w) = bucket.sorted.pop() {
                self.len -= 1;
                return Some(w);
            }
            self.lowest += 1;
        }
        None
    }

    /// Queued words, in no particular order.
    pub fn iter(&self) -> impl Iterator<Item = &BinaryWord> {
        self.buckets
            .iter()
            .flat_map(|b| b.sorted.iter().chain(b.pending.iter()))
    }
}

/// The transversal `N`: one canonical word per coset, in discovery order.
#[derive(Clone, Debug, Default)]
pub struct Transversal {
    words: Vec<BinaryWord>,
    syndromes: Vec<Syndrome>,
    by_syndrome: HashMap<Syndrome, usize>,
    by_word: HashMap<BinaryWord, usize>,
}

impl Transversal {
    fn push(&mut self, word: BinaryWord, syndrome: Syndrome) -> usize {
        let j = self.words.len();
        self.words.push(word);
        self.syndromes.push(syndrome);
        self.by_syndrome.insert(syndrome, j);
        self.by_word.insert(word, j);
        j
    }

    /// Index of the coset with syndrome `s`, if it has been found.
    pub fn member(&self, s: &Syndrome) -> Option<usize> {
        self.by_syndrome.get(s).copied()
    }

    /// Index of `w` if `w` itself is a canonical representative.
    pub fn index_of(&self, w: &BinaryWord) -> Option<usize> {
        self.by_word.get(w).copied()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, j: usize) -> &BinaryWord {
        &self.words[j]
    }

    pub fn syndrome(&self, j: usize) -> &Syndrome {
        &self.syndromes[j]
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }
}

/// Matphi: `(j, i) -> index of the representative of the coset of tau_j + e_i`.
///
/// Coset indices are 0-based, coordinates `i` are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatphiTable {
    n: usize,
    entries: Vec<u32>,
}

const UNSET: u32 = u32::MAX;

impl MatphiTable {
    fn new(n: usize) -> Self {
        MatphiTable {
            n,
            entries: Vec::new(),
        }
    }

    fn add_row(&mut self) {
        self.entries.extend(std::iter::repeat_n(UNSET, self.n));
    }

    fn set(&mut self, j: usize, i: usize, target: usize) {
        self.entries[j * self.n + i - 1] = target as u32;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_rows(&self) -> usize {
        self.entries.len() / self.n
    }

    pub fn get(&self, j: usize, i: usize) -> Option<usize> {
        assert!(i >= 1 && i <= self.n, "coordinate out of range");
        match self.entries[j * self.n + i - 1] {
            UNSET => None,
            v => Some(v as usize),
        }
    }

    pub fn is_total(&self) -> bool {
        !self.entries.contains(&UNSET)
    }

    /// Row `j` as `n` optional targets.
    pub fn row(&self, j: usize) -> impl Iterator<Item = Option<usize>> + '_ {
        self.entries[j * self.n..(j + 1) * self.n]
            .iter()
            .map(|&v| (v != UNSET).then_some(v as usize))
    }
}

/// All leaders of every coset, indexed like the transversal. Each entry is
/// in increasing order and starts with the canonical representative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CosetLeaderTable {
    sets: Vec<Vec<BinaryWord>>,
}

impl CosetLeaderTable {
    pub fn leaders(&self, j: usize) -> &[BinaryWord] {
        &self.sets[j]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `|CL(C)|`.
    pub fn total(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[BinaryWord]> {
        self.sets.iter().map(Vec::as_slice)
    }

    #[doc(hidden)]
    pub fn from_sets(sets: Vec<Vec<BinaryWord>>) -> Self {
        CosetLeaderTable { sets }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClbcOptions {
    /// Maintain Matphi. Disabling it skips the bookkeeping that only the
    /// Gröbner representation needs; leaders are unaffected.
    pub compute_matphi: bool,
}

impl Default for ClbcOptions {
    fn default() -> Self {
        ClbcOptions {
            compute_matphi: true,
        }
    }
}

/// Output of [`clbc_run`].
#[derive(Clone, Debug)]
pub struct ClbcResult {
    pub parity_check: GF2Matrix,
    pub transversal: Transversal,
    pub matphi: Option<MatphiTable>,
    pub leaders: CosetLeaderTable,
    /// Number of words popped from the work list.
    pub iteration_count: u64,
    pub order: OrderSpec,
}

impl ClbcResult {
    pub fn n(&self) -> usize {
        self.parity_check.ncols()
    }

    pub fn num_cosets(&self) -> usize {
        self.transversal.len()
    }

    pub fn total_leaders(&self) -> usize {
        self.leaders.total()
    }

    /// Index of the coset containing `y`, found by syndrome lookup.
    pub fn coset_of(&self, y: &BinaryWord) -> usize {
        self.transversal
            .member(&self.parity_check.syndrome(y))
            .expect("every syndrome of H has a representative")
    }
}

/// Runs the enumeration with default options.
pub fn clbc_run(h: &GF2Matrix, ord: &OrderSpec) -> Result<ClbcResult> {
    clbc_run_with(h, ord, ClbcOptions::default())
}

pub fn clbc_run_with(h: &GF2Matrix, ord: &OrderSpec, opts: ClbcOptions) -> Result<ClbcResult> {
    let n = h.ncols();
    if ord.n != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: ord.n,
        });
    }

    let mut list = WorkList::new(n);
    let mut transversal = Transversal::default();
    let mut leaders: Vec<Vec<BinaryWord>> = Vec::new();
    let mut matphi = opts.compute_matphi.then(|| MatphiTable::new(n));
    let mut iterations = 0u64;
    let mut previous: Option<BinaryWord> = None;

    list.insert(BinaryWord::zero(n));
    while let Some(tau) = list.next_term() {
        iterations += 1;
        if let Some(prev) = previous {
            assert!(prev < tau, "work list popped out of order");
        }
        previous = Some(tau);

        let s = h.syndrome(&tau);
        match transversal.member(&s) {
            Some(j) => {
                if let Some(phi) = matphi.as_mut() {
                    for k in tau.support() {
                        if let Some(p) = transversal.index_of(&tau.with_flipped(k)) {
                            phi.set(p, k, j);
                        }
                    }
                }
                if tau.weight() == transversal.word(j).weight() {
                    leaders[j].push(tau);
                    list.insert_next(&tau);
                }
            }
            None => {
                let m = transversal.push(tau, s);
                leaders.push(vec![tau]);
                list.insert_next(&tau);
                if let Some(phi) = matphi.as_mut() {
                    phi.add_row();
                    for k in tau.support() {
                        if let Some(p) = transversal.index_of(&tau.with_flipped(k)) {
                            phi.set(p, k, m);
                            phi.set(m, k, p);
                        }
                    }
                }
            }
        }
    }

    debug_assert!(matphi.as_ref().is_none_or(MatphiTable::is_total));
    Ok(ClbcResult {
        parity_check: h.clone(),
        transversal,
        matphi,
        leaders: CosetLeaderTable { sets: leaders },
        iteration_count: iterations,
        order: *ord,
    })
}
