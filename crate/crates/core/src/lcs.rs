//! Longest common subsequences, plain and restricted to anchor-supported
//! matches, and the check tying them to weak-precedence chaining.

use crate::anchor::AnchorSet;
use crate::chain::chain_two_sided_weak;
use crate::error::{Error, Result};
use crate::generate::StringPair;

/// Classic LCS length by the quadratic dynamic program.
pub fn lcs_classic(sp: &StringPair) -> usize {
    let (t, p) = (&sp.text, &sp.pattern);
    let mut prev = vec![0usize; p.len() + 1];
    let mut row = vec![0usize; p.len() + 1];
    for &x in t {
        for (j, &y) in p.iter().enumerate() {
            row[j + 1] = if x == y {
                prev[j] + 1
            } else {
                prev[j + 1].max(row[j])
            };
        }
        std::mem::swap(&mut prev, &mut row);
    }
    prev[p.len()]
}

/// Match positions `(i, j)` (1-based) covered by some anchor diagonal, sorted
/// and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SupportedMatchSet {
    pairs: Vec<(usize, usize)>,
}

impl SupportedMatchSet {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.binary_search(&(i, j)).is_ok()
    }
}

/// Unrolls every anchor into the positions it supports. Each anchor must be
/// an exact match of the two strings.
pub fn supported_matches(sp: &StringPair, set: &AnchorSet) -> Result<SupportedMatchSet> {
    let mut pairs = Vec::new();
    for (index, x) in set.anchors().iter().enumerate() {
        let (Some(t), Some(p)) = (sp.text_slice(x.a, x.b), sp.pattern_slice(x.c, x.d)) else {
            return Err(Error::AnchorOutOfBounds { index });
        };
        if t != p {
            return Err(Error::NotExactMatch { index });
        }
        let (a, c) = (x.a as usize, x.c as usize);
        pairs.extend((0..t.len()).map(|off| (a + off, c + off)));
    }
    pairs.sort_unstable();
    pairs.dedup();
    Ok(SupportedMatchSet { pairs })
}

/// A longest anchor-supported common subsequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedLcs {
    pub len: usize,
    /// Matched positions, 1-based; ties go to the smallest positions.
    pub witness: Vec<(usize, usize)>,
}

/// Length of the longest common subsequence whose every match is supported
/// by an anchor.
pub fn anchor_restricted_lcs(sp: &StringPair, set: &AnchorSet) -> Result<usize> {
    Ok(restricted_table(sp, set)?.len())
}

/// As [`anchor_restricted_lcs`], also returning one witness subsequence.
pub fn anchor_restricted_lcs_witness(sp: &StringPair, set: &AnchorSet) -> Result<RestrictedLcs> {
    let table = restricted_table(sp, set)?;
    Ok(RestrictedLcs {
        len: table.len(),
        witness: table.witness(),
    })
}

// Suffix table: cell (i, j) is the best length using T[i..] and P[j..]
// (0-based), which lets the witness be read forward from (0, 0).
struct Table {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
    supported: Vec<bool>,
}

impl Table {
    fn at(&self, i: usize, j: usize) -> u32 {
        self.cells[i * (self.cols + 1) + j]
    }

    fn len(&self) -> usize {
        self.at(0, 0) as usize
    }

    fn witness(&self) -> Vec<(usize, usize)> {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.len());
        while i < self.rows && j < self.cols {
            let here = self.at(i, j);
            if here == 0 {
                break;
            }
            if self.supported[i * self.cols + j] && here == self.at(i + 1, j + 1) + 1 {
                out.push((i + 1, j + 1));
                i += 1;
                j += 1;
            } else if self.at(i, j + 1) == here {
                j += 1;
            } else {
                i += 1;
            }
        }
        out
    }
}

fn restricted_table(sp: &StringPair, set: &AnchorSet) -> Result<Table> {
    let support = supported_matches(sp, set)?;
    let (rows, cols) = (sp.text.len(), sp.pattern.len());
    let mut supported = vec![false; rows * cols];
    for &(i, j) in support.pairs() {
        supported[(i - 1) * cols + (j - 1)] = true;
    }
    let width = cols + 1;
    let mut cells = vec![0u32; (rows + 1) * width];
    for i in (0..rows).rev() {
        for j in (0..cols).rev() {
            let skip = cells[(i + 1) * width + j].max(cells[i * width + j + 1]);
            let take = if supported[i * cols + j] {
                cells[(i + 1) * width + j + 1] + 1
            } else {
                0
            };
            cells[i * width + j] = skip.max(take);
        }
    }
    Ok(Table {
        rows,
        cols,
        cells,
        supported,
    })
}

/// Best weak-chain coverage next to the anchor-restricted LCS length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LcsCheck {
    pub chain_score: i64,
    pub lcs_len: usize,
    pub equal: bool,
}

/// Compares the optimal weak-precedence chain score with the
/// anchor-restricted LCS; for exact-match anchors the two coincide.
pub fn verify_chain_lcs(sp: &StringPair, set: &AnchorSet) -> Result<LcsCheck> {
    let lcs_len = anchor_restricted_lcs(sp, set)?;
    let chain_score = chain_two_sided_weak(set)?.best_score();
    Ok(LcsCheck {
        chain_score,
        lcs_len,
        equal: usize::try_from(chain_score) == Ok(lcs_len),
    })
}
