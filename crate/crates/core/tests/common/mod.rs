#![allow(dead_code)]

use clbc::{BinaryWord, ClbcResult, GF2Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EXAMPLE_ROWS: [&str; 6] = [
    "1000100000",
    "1011010000",
    "1101001000",
    "1110000100",
    "1111000010",
    "1111000001",
];

pub fn example_code() -> GF2Matrix {
    GF2Matrix::from_strs(&EXAMPLE_ROWS).unwrap()
}

pub fn word(n: usize, support: &[usize]) -> BinaryWord {
    BinaryWord::from_support(n, support)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random `r x n` parity-check matrix with `n` in `n_range` and `r` in `1..=n`.
pub fn random_code(rng: &mut ChaCha8Rng, n_range: std::ops::RangeInclusive<usize>) -> GF2Matrix {
    let n = rng.gen_range(n_range);
    let r = rng.gen_range(1..=n);
    let rows = (0..r)
        .map(|_| BinaryWord::from_index(n, rng.gen::<u128>()))
        .collect();
    GF2Matrix::from_rows(rows).unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize) -> BinaryWord {
    BinaryWord::from_index(n, rng.gen::<u128>())
}

pub fn all_words(n: usize) -> impl Iterator<Item = BinaryWord> {
    (0..1u128 << n).map(move |x| BinaryWord::from_index(n, x))
}

/// Structural checks that need no oracle. Returns the first violation.
pub fn structural_violation(res: &ClbcResult) -> Option<String> {
    let h = &res.parity_check;
    let n = res.n();
    let expected = 1usize << h.rank();
    if res.num_cosets() != expected {
        return Some(format!(
            "{} cosets, expected {}",
            res.num_cosets(),
            expected
        ));
    }
    let bound = 1 + (n as u64) * res.total_leaders() as u64;
    if res.iteration_count > bound {
        return Some(format!(
            "{} iterations > bound {}",
            res.iteration_count, bound
        ));
    }
    for (j, leaders) in res.leaders.iter().enumerate() {
        let tau = res.transversal.word(j);
        if leaders.first() != Some(tau) {
            return Some(format!(
                "coset {} does not start with its representative",
                j
            ));
        }
        if leaders.windows(2).any(|p| p[0] >= p[1]) {
            return Some(format!("coset {} leaders not strictly increasing", j));
        }
        for l in leaders {
            if h.syndrome(l) != h.syndrome(tau) || l.weight() != tau.weight() {
                return Some(format!("{} is not a leader of coset {}", l, j));
            }
            for i in l.support() {
                let sub = l.with_flipped(i);
                if !res.leaders.leaders(res.coset_of(&sub)).contains(&sub) {
                    return Some(format!("{} is a leader but {} is not", l, sub));
                }
            }
        }
    }
    if let Some(phi) = &res.matphi {
        for j in 0..res.num_cosets() {
            for i in 1..=n {
                let Some(target) = phi.get(j, i) else {
                    return Some(format!("phi({}, e_{}) unassigned", j, i));
                };
                let want = h.syndrome(res.transversal.word(j)) ^ h.column(i);
                if h.syndrome(res.transversal.word(target)) != want {
                    return Some(format!(
                        "phi({}, e_{}) = {} is in the wrong coset",
                        j, i, target
                    ));
                }
            }
        }
    }
    None
}
