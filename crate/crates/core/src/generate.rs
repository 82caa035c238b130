//! Anchor generation from a text/pattern pair.
//!
//! All generators emit exact matches, so every anchor satisfies equal match
//! length. Positions are 1-based; comparison is byte-wise and case-sensitive.

use std::collections::HashMap;

use crate::anchor::{Anchor, AnchorSet};
use crate::error::{Error, Result};

/// A text `T` and a pattern `P`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StringPair {
    pub text: Vec<u8>,
    pub pattern: Vec<u8>,
}

impl StringPair {
    pub fn new(text: impl Into<Vec<u8>>, pattern: impl Into<Vec<u8>>) -> Self {
        StringPair {
            text: text.into(),
            pattern: pattern.into(),
        }
    }

    /// `T[a..=b]` with 1-based inclusive bounds.
    pub fn text_slice(&self, a: i64, b: i64) -> Option<&[u8]> {
        slice(&self.text, a, b)
    }

    pub fn pattern_slice(&self, c: i64, d: i64) -> Option<&[u8]> {
        slice(&self.pattern, c, d)
    }
}

fn slice(s: &[u8], from: i64, to: i64) -> Option<&[u8]> {
    let from = usize::try_from(from).ok()?.checked_sub(1)?;
    let to = usize::try_from(to).ok()?;
    s.get(from..to)
}

fn into_set(anchors: Vec<Anchor>) -> AnchorSet {
    AnchorSet::new(anchors).expect("generated anchors are well formed")
}

/// All length-`k` exact matches, ordered by text position then pattern position.
pub fn kmer_matches(sp: &StringPair, k: usize) -> Result<AnchorSet> {
    let (n, m) = (sp.text.len(), sp.pattern.len());
    if k == 0 || k > n.min(m) {
        return Err(Error::InvalidK {
            k,
            text: n,
            pattern: m,
        });
    }
    let mut index: HashMap<&[u8], Vec<usize>> = HashMap::new();
    for (j, window) in sp.pattern.windows(k).enumerate() {
        index.entry(window).or_default().push(j);
    }
    let len = k as i64;
    let mut anchors = Vec::new();
    for (i, window) in sp.text.windows(k).enumerate() {
        if let Some(hits) = index.get(window) {
            anchors.extend(
                hits.iter()
                    .map(|&j| Anchor::exact(i as i64 + 1, j as i64 + 1, len)),
            );
        }
    }
    Ok(into_set(anchors))
}

/// Single-character matches; `kmer_matches` with `k = 1`, except that empty
/// strings give an empty set instead of an error.
pub fn unit_matches(sp: &StringPair) -> AnchorSet {
    if sp.text.is_empty() || sp.pattern.is_empty() {
        return AnchorSet::default();
    }
    kmer_matches(sp, 1).expect("k = 1 fits non-empty strings")
}

/// Maximal exact matches of length at least `min_len`.
///
/// Walks every diagonal once and cuts it into runs of equal characters, so
/// the cost is `O(|T|·|P|)`. Output is ordered by text then pattern position.
pub fn maximal_exact_matches(sp: &StringPair, min_len: usize) -> Result<AnchorSet> {
    if min_len == 0 {
        return Err(Error::InvalidMinLen(min_len));
    }
    let (t, p) = (&sp.text, &sp.pattern);
    let mut anchors = Vec::new();
    if t.is_empty() || p.is_empty() {
        return Ok(into_set(anchors));
    }
    // diagonal `shift` pairs t[i] with p[i + shift - (n - 1)]
    let n = t.len();
    for shift in 0..(n + p.len()).saturating_sub(1) {
        let (mut i, mut j) = if shift < n {
            (n - 1 - shift, 0)
        } else {
            (0, shift - (n - 1))
        };
        let mut run = 0usize;
        while i < n && j < p.len() {
            if t[i] == p[j] {
                run += 1;
            } else {
                push_run(&mut anchors, i, j, run, min_len);
                run = 0;
            }
            i += 1;
            j += 1;
        }
        push_run(&mut anchors, i, j, run, min_len);
    }
    anchors.sort_unstable();
    Ok(into_set(anchors))
}

// A run of `run` matches ending just before (i, j), 0-based.
fn push_run(out: &mut Vec<Anchor>, i: usize, j: usize, run: usize, min_len: usize) {
    if run >= min_len && run > 0 {
        out.push(Anchor::exact(
            (i - run) as i64 + 1,
            (j - run) as i64 + 1,
            run as i64,
        ));
    }
}
