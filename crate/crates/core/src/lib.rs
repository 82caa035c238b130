//! Chaining of overlapping anchors under symmetric ordered coverage.
//!
//! An anchor `([a..b], [c..d])` claims that text interval `[a..b]` matches
//! pattern interval `[c..d]`. A chain is a sequence of anchors ordered by a
//! precedence relation; its coverage adds, anchor by anchor, the smaller of
//! the two newly covered lengths, so overlapping anchors are never counted
//! twice in either string.
//!
//! ```
//! use coverchain::{chain_two_sided_strict, traceback, coverage, Anchor, AnchorSet};
//!
//! let set = AnchorSet::new(vec![Anchor::new(1, 5, 2, 6), Anchor::new(3, 8, 5, 10)])?;
//! let result = chain_two_sided_strict(&set)?;
//! assert_eq!(result.c_plus, vec![5, 8]);
//!
//! let chain = traceback(&result, &set, 1)?;
//! assert_eq!(chain.indices, vec![0, 1]);
//! assert_eq!(coverage(&chain, &set)?, 8);
//! # Ok::<(), coverchain::Error>(())
//! ```

pub mod anchor;
pub mod chain;
pub mod error;
pub mod generate;
pub mod io;
pub mod lcs;
pub mod rmq;

pub use anchor::{coverage, coverage_of, Anchor, AnchorSet, Chain, Precedence};
pub use chain::{
    best_chain, chain_brute_one_sided, chain_brute_strict, chain_brute_weak, chain_one_sided,
    chain_two_sided_strict, chain_two_sided_weak, normalize_weak_chain, traceback, CaseScores,
    ChainingResult, Variant,
};
pub use error::{Error, Result};
pub use generate::{kmer_matches, maximal_exact_matches, unit_matches, StringPair};
pub use lcs::{
    anchor_restricted_lcs, anchor_restricted_lcs_witness, lcs_classic, supported_matches,
    verify_chain_lcs, LcsCheck, RestrictedLcs, SupportedMatchSet,
};
