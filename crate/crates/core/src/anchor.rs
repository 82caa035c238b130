//! Anchors, chains, the precedence and overlap relations, and the symmetric
//! ordered coverage score.
//!
//! An anchor `([a..b], [c..d])` pairs an interval of the text (the first
//! dimension) with an interval of the pattern (the second dimension).
//! Coordinates are 1-based and inclusive; `0` never appears in a valid
//! anchor because the chaining sweeps use it as a sentinel key.

use std::fmt;

use crate::error::{Error, Result};

/// Largest coordinate accepted by [`AnchorSet::new`].
pub const MAX_COORD: i64 = 1 << 40;

/// An interval pair `([a..b], [c..d])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Anchor {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Anchor {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Anchor { a, b, c, d }
    }

    /// Anchor of length `len` starting at text position `i` and pattern position `j`.
    pub const fn exact(i: i64, j: i64, len: i64) -> Self {
        Anchor::new(i, i + len - 1, j, j + len - 1)
    }

    pub fn len1(&self) -> i64 {
        self.b - self.a + 1
    }

    pub fn len2(&self) -> i64 {
        self.d - self.c + 1
    }

    /// The anchor's contribution when nothing follows it.
    pub fn min_len(&self) -> i64 {
        self.len1().min(self.len2())
    }

    /// Equal match length: both intervals have the same length.
    pub fn is_eml(&self) -> bool {
        self.b - self.a == self.d - self.c
    }

    /// Diagonal of the anchor, `c - a`.
    pub fn diagonal(&self) -> i64 {
        self.c - self.a
    }

    /// `self` strictly precedes `next`: all four endpoints strictly increase.
    pub fn precedes(&self, next: &Anchor) -> bool {
        self.a < next.a && self.b < next.b && self.c < next.c && self.d < next.d
    }

    /// `self` weakly precedes `next`: both start points strictly increase.
    pub fn weakly_precedes(&self, next: &Anchor) -> bool {
        self.a < next.a && self.c < next.c
    }

    /// The first intervals intersect or the second intervals intersect.
    pub fn overlaps(&self, other: &Anchor) -> bool {
        let first = self.a <= other.b && other.a <= self.b;
        let second = self.c <= other.d && other.c <= self.d;
        first || second
    }

    /// Score gained by `self` when `next` follows it in a chain: the part of
    /// `self` not overlapped by `next`, minimized over both dimensions.
    pub fn step_to(&self, next: &Anchor) -> i64 {
        let first = next.a.min(self.b + 1) - self.a;
        let second = next.c.min(self.d + 1) - self.c;
        first.min(second)
    }

    fn check(&self, index: usize) -> Result<()> {
        if self.a < 1 || self.b < 1 || self.c < 1 || self.d < 1 {
            return Err(Error::NonPositiveCoordinate {
                index,
                anchor: self.to_string(),
            });
        }
        if self.a > self.b || self.c > self.d {
            return Err(Error::InvertedInterval {
                index,
                anchor: self.to_string(),
            });
        }
        if self.b > MAX_COORD || self.d > MAX_COORD {
            return Err(Error::CoordinateTooLarge { index });
        }
        Ok(())
    }
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}..{}],[{}..{}])", self.a, self.b, self.c, self.d)
    }
}

/// Which precedence relation consecutive chain members must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Precedence {
    Strict,
    Weak,
}

impl Precedence {
    pub fn holds(self, prev: &Anchor, next: &Anchor) -> bool {
        match self {
            Precedence::Strict => prev.precedes(next),
            Precedence::Weak => prev.weakly_precedes(next),
        }
    }

    fn verb(self) -> &'static str {
        match self {
            Precedence::Strict => "precede",
            Precedence::Weak => "weakly precede",
        }
    }
}

/// A validated, ordered array of anchors.
///
/// Input order is preserved and duplicates are kept.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnchorSet {
    anchors: Vec<Anchor>,
    eml: bool,
    non_nested: bool,
}

impl AnchorSet {
    /// Validates every anchor and computes the property flags.
    pub fn new(anchors: Vec<Anchor>) -> Result<Self> {
        for (index, anchor) in anchors.iter().enumerate() {
            anchor.check(index)?;
        }
        let eml = anchors.iter().all(Anchor::is_eml);
        let non_nested = !has_proper_containment(anchors.iter().map(|x| (x.a, x.b)))
            && !has_proper_containment(anchors.iter().map(|x| (x.c, x.d)));
        Ok(AnchorSet {
            anchors,
            eml,
            non_nested,
        })
    }

    pub fn anchors(&self) -> &[Anchor] {
        &self.anchors
    }

    pub fn len(&self) -> usize {
        self.anchors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.anchors.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Anchor> {
        self.anchors.get(index)
    }

    /// Every anchor has intervals of equal length.
    pub fn eml(&self) -> bool {
        self.eml
    }

    /// No interval properly contains the corresponding interval of another anchor.
    ///
    /// Identical intervals do not count as nested: two k-mer matches sharing
    /// a text position are still non-nested.
    pub fn non_nested(&self) -> bool {
        self.non_nested
    }

    /// Fails with the first anchor violating equal match length.
    pub fn require_eml(&self) -> Result<()> {
        match self.anchors.iter().position(|x| !x.is_eml()) {
            None => Ok(()),
            Some(index) => Err(Error::NotEqualMatchLength {
                index,
                anchor: self.anchors[index].to_string(),
            }),
        }
    }

    pub fn into_inner(self) -> Vec<Anchor> {
        self.anchors
    }
}

impl std::ops::Index<usize> for AnchorSet {
    type Output = Anchor;

    fn index(&self, index: usize) -> &Anchor {
        &self.anchors[index]
    }
}

// Sorting by (start asc, end desc) puts every container before what it
// contains; identical intervals are collapsed first.
fn has_proper_containment(intervals: impl Iterator<Item = (i64, i64)>) -> bool {
    let mut sorted: Vec<(i64, i64)> = intervals.collect();
    sorted.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    sorted.dedup();
    let mut max_end = i64::MIN;
    for (_, end) in sorted {
        if max_end >= end {
            return true;
        }
        max_end = max_end.max(end);
    }
    false
}

/// An ordered list of anchor indices claiming a precedence relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub indices: Vec<usize>,
    pub mode: Precedence,
}

impl Chain {
    pub fn new(indices: Vec<usize>, mode: Precedence) -> Self {
        Chain { indices, mode }
    }

    /// Resolves indices and checks that consecutive members satisfy `mode`.
    pub fn resolve(&self, set: &AnchorSet) -> Result<Vec<Anchor>> {
        let anchors = self
            .indices
            .iter()
            .map(|&index| {
                set.get(index).copied().ok_or(Error::IndexOutOfRange {
                    index,
                    len: set.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        check_links(&anchors, self.mode, &self.indices)?;
        Ok(anchors)
    }
}

fn check_links(anchors: &[Anchor], mode: Precedence, ids: &[usize]) -> Result<()> {
    for (step, pair) in anchors.windows(2).enumerate() {
        if !mode.holds(&pair[0], &pair[1]) {
            return Err(Error::BrokenChain {
                step: step + 1,
                from: ids[step],
                to: ids[step + 1],
                relation: mode.verb(),
            });
        }
    }
    Ok(())
}

/// Symmetric ordered coverage of `chain` over `set`.
pub fn coverage(chain: &Chain, set: &AnchorSet) -> Result<i64> {
    let anchors = chain.resolve(set)?;
    Ok(raw_coverage(&anchors))
}

/// Coverage of an explicit anchor sequence, after checking `mode` between
/// consecutive anchors. Chain step errors report positions in `anchors`.
pub fn coverage_of(anchors: &[Anchor], mode: Precedence) -> Result<i64> {
    let ids: Vec<usize> = (0..anchors.len()).collect();
    check_links(anchors, mode, &ids)?;
    Ok(raw_coverage(anchors))
}

fn raw_coverage(anchors: &[Anchor]) -> i64 {
    match anchors.last() {
        None => 0,
        Some(last) => {
            let steps: i64 = anchors.windows(2).map(|w| w[0].step_to(&w[1])).sum();
            steps + last.min_len()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Anchor = Anchor::new(1, 5, 2, 6);
    const Q: Anchor = Anchor::new(3, 8, 5, 10);

    #[test]
    fn relations_on_worked_example() {
        assert!(P.precedes(&Q));
        assert!(P.overlaps(&Q));
        let same = Anchor::new(1, 4, 1, 4);
        assert!(!same.precedes(&same));
        assert!(!same.weakly_precedes(&same));
        assert!(!Anchor::new(1, 6, 1, 6).precedes(&Anchor::new(2, 5, 8, 11)));
    }

    #[test]
    fn weak_precedence_allows_nesting() {
        let outer = Anchor::new(1, 6, 1, 6);
        let inner = Anchor::new(2, 5, 2, 5);
        assert!(outer.weakly_precedes(&inner));
        assert!(!outer.precedes(&inner));
    }

    #[test]
    fn overlap_cases() {
        assert!(!Anchor::new(1, 2, 1, 2).overlaps(&Anchor::new(5, 6, 5, 6)));
        assert!(Anchor::new(1, 4, 1, 4).overlaps(&Anchor::new(4, 7, 9, 12)));
    }

    #[test]
    fn coverage_values() {
        let set = AnchorSet::new(vec![P, Q]).unwrap();
        assert_eq!(
            coverage(&Chain::new(vec![0, 1], Precedence::Strict), &set),
            Ok(8)
        );
        assert_eq!(
            coverage_of(&[Anchor::new(1, 4, 10, 13)], Precedence::Strict),
            Ok(4)
        );
        let apart = [Anchor::new(1, 2, 1, 2), Anchor::new(5, 6, 5, 6)];
        assert_eq!(coverage_of(&apart, Precedence::Strict), Ok(4));
        let shifted = [Anchor::new(1, 6, 1, 6), Anchor::new(4, 9, 2, 7)];
        assert_eq!(coverage_of(&shifted, Precedence::Weak), Ok(7));
        assert_eq!(coverage_of(&[], Precedence::Strict), Ok(0));
    }

    #[test]
    fn coverage_rejects_broken_chain() {
        let set = AnchorSet::new(vec![Anchor::new(1, 6, 1, 6), Anchor::new(2, 5, 2, 5)]).unwrap();
        let strict = Chain::new(vec![0, 1], Precedence::Strict);
        assert!(matches!(
            coverage(&strict, &set),
            Err(Error::BrokenChain { step: 1, .. })
        ));
        let weak = Chain::new(vec![0, 1], Precedence::Weak);
        assert_eq!(coverage(&weak, &set), Ok(5));
        let bad = Chain::new(vec![0, 7], Precedence::Weak);
        assert_eq!(
            coverage(&bad, &set),
            Err(Error::IndexOutOfRange { index: 7, len: 2 })
        );
    }

    #[test]
    fn validate_flags() {
        let set = AnchorSet::new(vec![P, Q]).unwrap();
        assert!(set.eml() && set.non_nested());
        assert!(!AnchorSet::new(vec![Anchor::new(1, 3, 1, 4)]).unwrap().eml());
        let nested =
            AnchorSet::new(vec![Anchor::new(1, 6, 1, 6), Anchor::new(2, 5, 2, 5)]).unwrap();
        assert!(!nested.non_nested());
        // shared identical intervals are not nesting
        let kmers = AnchorSet::new(vec![Anchor::new(1, 2, 1, 2), Anchor::new(3, 4, 1, 2)]).unwrap();
        assert!(kmers.non_nested());
    }

    #[test]
    fn validate_errors_report_index() {
        let err = AnchorSet::new(vec![P, Anchor::new(0, 3, 1, 4)]).unwrap_err();
        assert!(matches!(err, Error::NonPositiveCoordinate { index: 1, .. }));
        let err = AnchorSet::new(vec![Anchor::new(5, 3, 1, 4)]).unwrap_err();
        assert!(matches!(err, Error::InvertedInterval { index: 0, .. }));
        let err = AnchorSet::new(vec![Anchor::new(1, MAX_COORD + 1, 1, 4)]).unwrap_err();
        assert!(matches!(err, Error::CoordinateTooLarge { index: 0 }));
    }

    #[test]
    fn duplicates_are_kept() {
        let set = AnchorSet::new(vec![P, P]).unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.non_nested());
    }

    #[test]
    fn nesting_matches_pairwise_definition() {
        let anchors = vec![
            Anchor::new(1, 4, 3, 6),
            Anchor::new(2, 5, 2, 5),
            Anchor::new(3, 3, 9, 9),
        ];
        let pairwise = anchors.iter().any(|x| {
            anchors.iter().any(|y| {
                let first = (x.a, x.b) != (y.a, y.b) && x.a <= y.a && y.b <= x.b;
                let second = (x.c, x.d) != (y.c, y.d) && x.c <= y.c && y.d <= x.d;
                first || second
            })
        });
        assert_eq!(AnchorSet::new(anchors).unwrap().non_nested(), !pairwise);
    }
}
