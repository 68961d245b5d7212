//! Words of `F_2^n` and the weight-compatible ordering on them.
//!
//! Coordinates are numbered `1..=n` as in the usual coding-theory notation.
//! A [`BinaryWord`] packs its coordinates left-aligned into a `u128`:
//! coordinate `i` lives at bit `128 - i`. With that layout the tie-break of
//! the ordering (the word holding a 1 at the leftmost differing coordinate
//! comes first) is plain descending integer comparison, so `compare` is a
//! popcount and a subtraction.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported word length.
pub const MAX_LEN: usize = 128;

#[inline]
pub(crate) fn coord_mask(i: usize) -> u128 {
    1u128 << (MAX_LEN - i)
}

/// A word of `F_2^n`, `1 <= n <= 128`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    bits: u128,
    len: u8,
}

impl BinaryWord {
    /// The zero word of length `len`.
    ///
    /// Panics if `len` is not in `1..=128`.
    pub fn zero(len: usize) -> Self {
        Self::try_zero(len).expect("invalid word length")
    }

    pub fn try_zero(len: usize) -> Result<Self> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::WordLength(len));
        }
        Ok(BinaryWord {
            bits: 0,
            len: len as u8,
        })
    }

    /// The canonical basis vector `e_i` (1-based).
    pub fn unit(len: usize, i: usize) -> Self {
        let mut w = Self::zero(len);
        w.flip(i);
        w
    }

    /// Builds the word whose support is `support` (1-based coordinates).
    /// Repeated coordinates cancel.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut w = Self::zero(len);
        for &i in support {
            w.flip(i);
        }
        w
    }

    pub fn ones(len: usize) -> Self {
        let mut w = Self::zero(len);
        w.bits = !0u128 << (MAX_LEN - len);
        w
    }

    /// Builds a word whose coordinates are the low `len` bits of `value`,
    /// coordinate 1 being the most significant of them.
    pub fn from_index(len: usize, value: u128) -> Self {
        let zero = Self::zero(len);
        let masked = if len == MAX_LEN {
            value
        } else {
            value & ((1u128 << len) - 1)
        };
        BinaryWord {
            bits: masked << (MAX_LEN - len),
            ..zero
        }
    }

    pub(crate) fn raw(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; words have at least one coordinate.
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Value of coordinate `i` (1-based).
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.check_coord(i);
        self.bits & coord_mask(i) != 0
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.check_coord(i);
        self.bits ^= coord_mask(i);
    }

    /// `self + e_i`.
    #[inline]
    pub fn with_flipped(mut self, i: usize) -> Self {
        self.flip(i);
        self
    }

    /// Ascending iterator over the support.
    pub fn support(&self) -> Support {
        Support { bits: self.bits }
    }

    /// Ascending iterator over the coordinates outside the support.
    pub fn complement(&self) -> Support {
        let all = BinaryWord::ones(self.len());
        Support {
            bits: all.bits & !self.bits,
        }
    }

    /// Hamming distance.
    pub fn distance(&self, other: &BinaryWord) -> usize {
        (*self + *other).weight()
    }

    #[inline]
    fn check_coord(&self, i: usize) {
        assert!(
            i >= 1 && i <= self.len(),
            "coordinate {} out of range 1..={}",
            i,
            self.len()
        );
    }
}

/// Iterator over set coordinates, in ascending order.
#[derive(Clone, Debug)]
pub struct Support {
    bits: u128,
}

impl Iterator for Support {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let lz = self.bits.leading_zeros() as usize;
        self.bits &= !(1u128 << (127 - lz));
        Some(lz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.bits.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Support {}

impl Add for BinaryWord {
    type Output = BinaryWord;

    #[inline]
    fn add(self, rhs: BinaryWord) -> BinaryWord {
        assert_eq!(self.len, rhs.len, "adding words of different lengths");
        BinaryWord {
            bits: self.bits ^ rhs.bits,
            len: self.len,
        }
    }
}

impl AddAssign for BinaryWord {
    #[inline]
    fn add_assign(&mut self, rhs: BinaryWord) {
        *self = *self + rhs;
    }
}

/// Words of equal length are ordered by the weight-compatible order: first by
/// weight, then by the leftmost coordinate where they differ (the word with
/// a 1 there is smaller).
impl Ord for BinaryWord {
    #[inline]
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.len, other.len, "comparing words of different lengths");
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.bits.cmp(&self.bits))
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (1..=self.len())
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({})", self)
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    /// Parses a string of `'0'`/`'1'`, coordinate 1 first.
    fn from_str(s: &str) -> Result<Self> {
        let mut w = BinaryWord::try_zero(s.len())?;
        for (pos, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w.flip(pos + 1),
                _ => return Err(Error::InvalidBits(s.to_owned())),
            }
        }
        Ok(w)
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Tie-break policy used among words of equal weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    /// The word with a 1 at the leftmost differing coordinate precedes.
    LeftmostSupportFirst,
}

/// A weight-compatible total order on words of length `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderSpec {
    pub n: usize,
    pub tie_break: TieBreak,
}

impl OrderSpec {
    pub fn new(n: usize) -> Self {
        OrderSpec {
            n,
            tie_break: TieBreak::LeftmostSupportFirst,
        }
    }

    /// Stable identifier written into output documents.
    pub fn id(&self) -> &'static str {
        match self.tie_break {
            TieBreak::LeftmostSupportFirst => "weight/leftmost-support-first",
        }
    }

    pub fn compare(&self, u: &BinaryWord, v: &BinaryWord) -> Ordering {
        compare(u, v, self)
    }
}

/// Compares two words under `ord`.
pub fn compare(u: &BinaryWord, v: &BinaryWord, ord: &OrderSpec) -> Ordering {
    assert!(
        u.len() == ord.n && v.len() == ord.n,
        "word length does not match the order"
    );
    match ord.tie_break {
        TieBreak::LeftmostSupportFirst => u.cmp(v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn all_words(n: usize) -> Vec<BinaryWord> {
        (0..1u128 << n)
            .map(|x| BinaryWord::from_index(n, x))
            .collect()
    }

    #[test]
    fn add_examples() {
        assert!((w("1100000000") + w("1100000000")).is_zero());
        let e = |i| BinaryWord::unit(10, i);
        assert_eq!(e(1) + e(2), w("1100000000"));
        assert_eq!((e(1) + e(2)) + (e(2) + e(3)), e(1) + e(3));
    }

    #[test]
    #[should_panic(expected = "different lengths")]
    fn add_length_mismatch_panics() {
        let _ = BinaryWord::zero(3) + BinaryWord::zero(4);
    }

    #[test]
    fn weight_and_support() {
        let z = BinaryWord::zero(10);
        assert_eq!(z.weight(), 0);
        assert_eq!(z.support().count(), 0);
        let y = BinaryWord::from_support(10, &[5, 9, 10]);
        assert_eq!(y.weight(), 3);
        assert_eq!(y.support().collect::<Vec<_>>(), vec![5, 9, 10]);
        assert_eq!(BinaryWord::ones(10).weight(), 10);
        assert_eq!(
            y.complement().collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 6, 7, 8]
        );
    }

    #[test]
    fn full_width_words() {
        let y = BinaryWord::from_support(128, &[1, 64, 65, 128]);
        assert_eq!(y.support().collect::<Vec<_>>(), vec![1, 64, 65, 128]);
        assert_eq!(BinaryWord::ones(128).weight(), 128);
        assert!(BinaryWord::ones(128).complement().next().is_none());
        assert_eq!(BinaryWord::try_zero(129), Err(Error::WordLength(129)));
        assert_eq!(BinaryWord::try_zero(0), Err(Error::WordLength(0)));
    }

    #[test]
    fn compare_examples() {
        let ord = OrderSpec::new(10);
        let s = |sup: &[usize]| BinaryWord::from_support(10, sup);
        assert_eq!(compare(&s(&[]), &s(&[1]), &ord), Ordering::Less);
        assert_eq!(compare(&s(&[1, 2]), &s(&[5, 6]), &ord), Ordering::Less);
        assert_eq!(
            compare(&s(&[1, 2, 4]), &s(&[1, 6, 8]), &ord),
            Ordering::Less
        );
        assert_eq!(
            compare(&s(&[4, 5, 6]), &s(&[4, 5, 6]), &ord),
            Ordering::Equal
        );
        assert_eq!(compare(&s(&[9]), &s(&[1, 2]), &ord), Ordering::Less);
    }

    #[test]
    fn string_round_trip_and_errors() {
        assert_eq!(w("0000110000"), BinaryWord::from_support(10, &[5, 6]));
        assert_eq!(w("0000110000").to_string(), "0000110000");
        assert!(matches!(
            "01x".parse::<BinaryWord>(),
            Err(Error::InvalidBits(_))
        ));
        assert!(matches!(
            "".parse::<BinaryWord>(),
            Err(Error::WordLength(0))
        ));
    }

    // The order properties below are checked over every word (and every
    // triple, where needed) for n <= 6.

    #[test]
    fn order_is_total_and_transitive() {
        for n in 1..=6 {
            let ord = OrderSpec::new(n);
            let words = all_words(n);
            for u in &words {
                for v in &words {
                    let c = compare(u, v, &ord);
                    assert_eq!(c == Ordering::Equal, u == v);
                    assert_eq!(c.reverse(), compare(v, u, &ord));
                }
            }
            if n <= 5 {
                for u in &words {
                    for v in &words {
                        for x in &words {
                            if compare(u, v, &ord) == Ordering::Less
                                && compare(v, x, &ord) == Ordering::Less
                            {
                                assert_eq!(compare(u, x, &ord), Ordering::Less);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn order_is_weight_compatible_with_zero_minimum() {
        for n in 1..=6 {
            let ord = OrderSpec::new(n);
            let words = all_words(n);
            let zero = BinaryWord::zero(n);
            for u in &words {
                if !u.is_zero() {
                    assert_eq!(compare(&zero, u, &ord), Ordering::Less);
                }
                for v in &words {
                    if u.weight() < v.weight() {
                        assert_eq!(compare(u, v, &ord), Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn order_is_translation_compatible_on_disjoint_supports() {
        for n in 1..=6 {
            let ord = OrderSpec::new(n);
            let words = all_words(n);
            for u in &words {
                for v in &words {
                    if compare(u, v, &ord) != Ordering::Less {
                        continue;
                    }
                    let busy = u.raw() | v.raw();
                    for t in words.iter().filter(|t| t.raw() & busy == 0) {
                        assert_eq!(compare(&(*u + *t), &(*v + *t), &ord), Ordering::Less);
                    }
                }
            }
        }
    }
}
