//! Complete coset-leader enumeration for binary linear codes.
//!
//! Given a parity-check matrix `H`, [`clbc_run`] produces every coset
//! leader of the code `C = ker H`, the canonical representative of each coset
//! (the transversal `N`) and the function Matphi that maps
//! `(representative, e_i)` to the representative of the shifted coset. From
//! that, [`analysis`] derives the coset-leader weight distribution, the
//! covering and Newton radii, and a complete decoder that returns every
//! nearest codeword. [`oracle`] is an exhaustive brute-force reference used
//! to check all of it on small codes.
//!
//! ```
//! use clbc::{clbc_run, GF2Matrix, OrderSpec};
//!
//! let h = GF2Matrix::from_strs(&["110", "011"]).unwrap(); // [3,1] repetition code
//! let result = clbc_run(&h, &OrderSpec::new(3)).unwrap();
//! assert_eq!(result.num_cosets(), 4);
//! assert_eq!(result.total_leaders(), 4);
//! ```
//!
//! The guide under `book/` walks through the algorithm; its code listings are
//! compiled as doc-tests of this crate.

pub mod analysis;
pub mod cli;
pub mod engine;
pub mod error;
pub mod format;
pub mod matrix;
pub mod oracle;
pub mod word;

pub use analysis::{
    canonical_form, compute_stats, decode, error_capability_from_leaders, leader_count_multiset,
    CodeStats, Decoding,
};
pub use engine::{
    clbc_run, clbc_run_with, ClbcOptions, ClbcResult, CosetLeaderTable, MatphiTable, Transversal,
    WorkList,
};
pub use error::{Error, Result};
pub use format::{parse_matrix, OutputDocument};
pub use matrix::{GF2Matrix, Syndrome};
pub use oracle::{enumerate_cosets, min_distance, verify, OracleConfig, VerificationReport};
pub use word::{compare, BinaryWord, OrderSpec, TieBreak};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/words-and-order.md")]
    mod words_and_order {}
    #[doc = include_str!("../../../book/src/syndromes.md")]
    mod syndromes {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/matphi.md")]
    mod matphi {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    mod statistics {}
    #[doc = include_str!("../../../book/src/decoding.md")]
    mod decoding {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
