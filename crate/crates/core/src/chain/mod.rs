//! Chaining algorithms.
//!
//! Every solver fills, for each anchor `j`, the best score `c[j]` of a chain
//! ending just before `j` and `c_plus[j] = c[j] + min_len(j)`, the best
//! coverage of a chain ending at `j`.
//!
//! * [`chain_brute_strict`], [`chain_brute_weak`] and [`chain_brute_one_sided`]
//!   evaluate the recurrences directly in `O(N²)` and work on any anchors.
//! * [`chain_one_sided`] is the `O(N log N)` sweep restricted to chains
//!   without overlaps in the first dimension.
//! * [`chain_two_sided_strict`] (`O(N log² N)`) and [`chain_two_sided_weak`]
//!   (`O(N log N)`) solve the full problem under strict and weak precedence.
//!
//! The fast solvers need the equal match length property.

mod brute;
mod normalize;
mod sweep;

pub use brute::{chain_brute_one_sided, chain_brute_strict, chain_brute_weak};
pub use normalize::normalize_weak_chain;
pub use sweep::{chain_one_sided, chain_two_sided_strict, chain_two_sided_weak};

use crate::anchor::{Anchor, AnchorSet, Chain, Precedence};
use crate::error::{Error, Result};

/// The chain family a result is optimal for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Strict precedence, no overlap in the first dimension.
    OneSided,
    Strict,
    Weak,
}

impl Variant {
    pub fn precedence(self) -> Precedence {
        match self {
            Variant::OneSided | Variant::Strict => Precedence::Strict,
            Variant::Weak => Precedence::Weak,
        }
    }

    /// Whether `prev` may directly precede `next` in a chain of this family.
    pub fn admits(self, prev: &Anchor, next: &Anchor) -> bool {
        match self {
            Variant::OneSided => prev.precedes(next) && prev.b < next.a,
            Variant::Strict => prev.precedes(next),
            Variant::Weak => prev.weakly_precedes(next),
        }
    }
}

/// Per-anchor best scores split by how the predecessor relates to the anchor.
///
/// `None` means no predecessor of that kind exists. `disjoint` includes the
/// empty chain and is therefore at least 0.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CaseScores {
    /// Predecessor overlaps in neither dimension.
    pub disjoint: Option<i64>,
    /// Predecessor overlaps in the second dimension only.
    pub second_only: Option<i64>,
    /// Predecessor overlaps in the first dimension and the first-dimension
    /// gain is the smaller one.
    pub first_bound: Option<i64>,
    /// Predecessor overlaps in the first dimension and the second-dimension
    /// gain is strictly smaller.
    pub second_bound: Option<i64>,
}

impl CaseScores {
    fn best(&self) -> i64 {
        [
            self.disjoint,
            self.second_only,
            self.first_bound,
            self.second_bound,
        ]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0)
        .max(0)
    }
}

/// Output of a chaining run. Indices are 0-based positions in the anchor set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainingResult {
    pub variant: Variant,
    pub c: Vec<i64>,
    pub c_plus: Vec<i64>,
    pub cases: Vec<CaseScores>,
    pub pred: Vec<Option<usize>>,
    /// Anchor with the largest `c_plus` (smallest index on ties).
    pub best: Option<usize>,
}

impl ChainingResult {
    /// Maximum coverage over all chains; 0 for an empty set.
    pub fn best_score(&self) -> i64 {
        self.best.map_or(0, |j| self.c_plus[j])
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    fn assemble(
        variant: Variant,
        set: &AnchorSet,
        cases: Vec<CaseScores>,
        hints: Vec<Option<usize>>,
    ) -> Self {
        let anchors = set.anchors();
        let c: Vec<i64> = cases.iter().map(CaseScores::best).collect();
        let c_plus: Vec<i64> = c
            .iter()
            .zip(anchors)
            .map(|(score, x)| score + x.min_len())
            .collect();
        let pred = settle_predecessors(variant, anchors, &c, hints);
        let best = (0..c_plus.len()).fold(None, |acc: Option<usize>, j| match acc {
            Some(i) if c_plus[i] >= c_plus[j] => Some(i),
            _ => Some(j),
        });
        ChainingResult {
            variant,
            c,
            c_plus,
            cases,
            pred,
            best,
        }
    }
}

fn links(variant: Variant, anchors: &[Anchor], c: &[i64], prev: usize, j: usize) -> bool {
    let (p, q) = (&anchors[prev], &anchors[j]);
    variant.admits(p, q) && c[prev] + p.step_to(q) == c[j]
}

// A solver proposes one predecessor per anchor. Sweeps may propose a stored
// anchor that ties the optimum without being admissible; such hints are
// replaced by the smallest admissible index that reproduces c[j].
fn settle_predecessors(
    variant: Variant,
    anchors: &[Anchor],
    c: &[i64],
    hints: Vec<Option<usize>>,
) -> Vec<Option<usize>> {
    hints
        .into_iter()
        .enumerate()
        .map(|(j, hint)| {
            if c[j] == 0 {
                return None;
            }
            match hint {
                Some(p) if links(variant, anchors, c, p, j) => Some(p),
                _ => (0..anchors.len()).find(|&p| links(variant, anchors, c, p, j)),
            }
        })
        .collect()
}

/// Reconstructs a chain ending at anchor `j` whose coverage is `c_plus[j]`.
pub fn traceback(result: &ChainingResult, set: &AnchorSet, j: usize) -> Result<Chain> {
    if j >= result.len() || result.len() != set.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: result.len(),
        });
    }
    let mut indices = vec![j];
    let mut at = j;
    while let Some(p) = result.pred[at] {
        indices.push(p);
        at = p;
    }
    indices.reverse();
    Ok(Chain::new(indices, result.variant.precedence()))
}

/// Chain ending at the best anchor; empty for an empty set.
pub fn best_chain(result: &ChainingResult, set: &AnchorSet) -> Result<Chain> {
    match result.best {
        Some(j) => traceback(result, set, j),
        None => Ok(Chain::new(Vec::new(), result.variant.precedence())),
    }
}
