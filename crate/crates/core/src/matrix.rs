//! Dense GF(2) matrices and syndromes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{coord_mask, BinaryWord, MAX_LEN};

/// Syndrome of a word: an `r`-bit vector, row 1 first.
///
/// Stored left-aligned like [`BinaryWord`], so two syndromes of the same
/// matrix compare and hash as plain integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syndrome {
    bits: u128,
    len: u8,
}

impl Syndrome {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_LEN);
        Syndrome {
            bits: 0,
            len: len as u8,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Bit `i` (1-based row index).
    pub fn get(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len());
        self.bits & coord_mask(i) != 0
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut s = Syndrome::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                s.bits |= coord_mask(i + 1);
            }
        }
        s
    }
}

impl std::ops::BitXor for Syndrome {
    type Output = Syndrome;

    fn bitxor(self, rhs: Syndrome) -> Syndrome {
        assert_eq!(self.len, rhs.len, "syndromes of different lengths");
        Syndrome {
            bits: self.bits ^ rhs.bits,
            len: self.len,
        }
    }
}

impl std::ops::BitXorAssign for Syndrome {
    fn bitxor_assign(&mut self, rhs: Syndrome) {
        *self = *self ^ rhs;
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (1..=self.len())
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syndrome({})", self)
    }
}

impl Serialize for Syndrome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Syndrome {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s.len() > MAX_LEN {
            return Err(serde::de::Error::custom("syndrome longer than 128 bits"));
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(serde::de::Error::custom(format!(
                    "invalid syndrome {:?}",
                    s
                ))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Syndrome::from_bits(&bits))
    }
}

/// A dense `r x n` matrix over GF(2), `1 <= r, n <= 128`.
///
/// Rows and columns are both kept so that syndromes can be formed as a XOR
/// of columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    rows: Vec<BinaryWord>,
    cols: Vec<Syndrome>,
}

impl GF2Matrix {
    /// Builds a matrix from its rows, which must share one length.
    pub fn from_rows(rows: Vec<BinaryWord>) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyMatrix)?;
        let n = first.len();
        if rows.len() > MAX_LEN {
            return Err(Error::TooManyRows(rows.len()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let r = rows.len();
        let cols = (1..=n)
            .map(|j| {
                let mut s = Syndrome::zero(r);
                for (i, row) in rows.iter().enumerate() {
                    if row.get(j) {
                        s.bits |= coord_mask(i + 1);
                    }
                }
                s
            })
            .collect();
        Ok(GF2Matrix { rows, cols })
    }

    /// Builds a matrix from rows given as `'0'`/`'1'` strings.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<BinaryWord>>>()?;
        Self::from_rows(rows)
    }

    /// The `r x r` identity padded with zero columns up to width `n`.
    pub fn identity_padded(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: r,
            });
        }
        Self::from_rows((1..=r).map(|i| BinaryWord::unit(n, i)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    /// Entry at row `i`, column `j` (both 1-based).
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i - 1].get(j)
    }

    pub fn rows(&self) -> &[BinaryWord] {
        &self.rows
    }

    /// Column `j` (1-based), i.e. the syndrome of `e_j`.
    pub fn column(&self, j: usize) -> Syndrome {
        self.cols[j - 1]
    }

    /// `H u^T`, computed as the XOR of the columns on `supp(u)`.
    pub fn syndrome(&self, u: &BinaryWord) -> Syndrome {
        assert_eq!(u.len(), self.ncols(), "word length does not match matrix");
        u.support().fold(Syndrome::zero(self.nrows()), |acc, j| {
            acc ^ self.cols[j - 1]
        })
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        row_echelon(&self.rows).len()
    }

    /// A basis of the right kernel `{u : H u^T = 0}`, one vector per free
    /// column of the reduced row echelon form.
    pub fn nullspace_basis(&self) -> Vec<BinaryWord> {
        let n = self.ncols();
        let echelon = row_echelon(&self.rows);
        let pivots: Vec<usize> = echelon
            .iter()
            .map(|r| r.support().next().unwrap())
            .collect();
        (1..=n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = BinaryWord::unit(n, free);
                for (row, &p) in echelon.iter().zip(&pivots) {
                    if row.get(free) {
                        v.flip(p);
                    }
                }
                v
            })
            .collect()
    }
}

/// Reduced row echelon form; returns only the nonzero rows, pivots ascending.
fn row_echelon(rows: &[BinaryWord]) -> Vec<BinaryWord> {
    let mut rows = rows.to_vec();
    let mut out: Vec<BinaryWord> = Vec::new();
    let n = rows.first().map_or(0, |r| r.len());
    for col in 1..=n {
        let Some(pos) = rows.iter().position(|r| r.get(col)) else {
            continue;
        };
        let pivot = rows.swap_remove(pos);
        for r in rows.iter_mut().chain(out.iter_mut()) {
            if r.get(col) {
                *r += pivot;
            }
        }
        out.push(pivot);
    }
    out
}

impl fmt::Display for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{}", row)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn example_code() -> GF2Matrix {
        GF2Matrix::from_strs(&[
            "1000100000",
            "1011010000",
            "1101001000",
            "1110000100",
            "1111000010",
            "1111000001",
        ])
        .unwrap()
    }

    fn s(bits: &str) -> Syndrome {
        Syndrome::from_bits(&bits.chars().map(|c| c == '1').collect::<Vec<_>>())
    }

    #[test]
    fn syndrome_examples() {
        let h = example_code();
        let e = |sup: &[usize]| BinaryWord::from_support(10, sup);
        assert_eq!(h.syndrome(&e(&[])), s("000000"));
        assert_eq!(h.syndrome(&e(&[5])), s("100000"));
        assert_eq!(h.syndrome(&e(&[1, 2])), s("110000"));
        assert_eq!(h.syndrome(&e(&[5, 6])), s("110000"));
    }

    #[test]
    fn rank_and_nullspace_of_worked_example() {
        let h = example_code();
        assert_eq!(h.rank(), 6);
        let basis = h.nullspace_basis();
        assert_eq!(basis.len(), 4);
        for b in &basis {
            assert!(h.syndrome(b).is_zero());
        }
    }

    #[test]
    fn rank_of_padded_identity_and_zero() {
        for r in 1..=5 {
            assert_eq!(GF2Matrix::identity_padded(r, 9).unwrap().rank(), r);
        }
        let z = GF2Matrix::from_strs(&["0000", "0000"]).unwrap();
        assert_eq!(z.rank(), 0);
        assert_eq!(z.nullspace_basis().len(), 4);
    }

    #[test]
    fn even_weight_code_of_length_two() {
        let h = GF2Matrix::from_strs(&["11"]).unwrap();
        assert_eq!(h.nullspace_basis(), vec!["11".parse().unwrap()]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(GF2Matrix::from_rows(vec![]), Err(Error::EmptyMatrix));
        assert!(matches!(
            GF2Matrix::from_strs(&["101", "10"]),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        ));
        let many = vec![BinaryWord::zero(3); 129];
        assert_eq!(GF2Matrix::from_rows(many), Err(Error::TooManyRows(129)));
    }

    fn matrix_strategy() -> impl Strategy<Value = GF2Matrix> {
        (1usize..=14, 1usize..=14).prop_flat_map(|(r, n)| {
            proptest::collection::vec(any::<u128>(), r).prop_map(move |rows| {
                GF2Matrix::from_rows(
                    rows.into_iter()
                        .map(|x| BinaryWord::from_index(n, x))
                        .collect(),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn syndrome_is_linear(h in matrix_strategy(), a in any::<u128>(), b in any::<u128>()) {
            let n = h.ncols();
            let (u, v) = (BinaryWord::from_index(n, a), BinaryWord::from_index(n, b));
            prop_assert_eq!(h.syndrome(&(u + v)), h.syndrome(&u) ^ h.syndrome(&v));
        }

        #[test]
        fn rank_is_bounded(h in matrix_strategy()) {
            prop_assert!(h.rank() <= h.nrows().min(h.ncols()));
        }

        // The span of the basis must be exactly the zero-syndrome words.
        #[test]
        fn nullspace_spans_the_code(h in matrix_strategy()) {
            let n = h.ncols();
            let basis = h.nullspace_basis();
            prop_assert_eq!(basis.len(), n - h.rank());
            let mut span = std::collections::HashSet::new();
            for mask in 0u32..(1 << basis.len()) {
                let mut c = BinaryWord::zero(n);
                for (i, b) in basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        c += *b;
                    }
                }
                prop_assert!(h.syndrome(&c).is_zero());
                span.insert(c);
            }
            prop_assert_eq!(span.len(), 1usize << basis.len());
            let zero_syndrome = (0..1u128 << n)
                .filter(|&x| h.syndrome(&BinaryWord::from_index(n, x)).is_zero())
                .count();
            prop_assert_eq!(zero_syndrome, span.len());
        }
    }
}
