use super::{CaseScores, ChainingResult, Variant};
use crate::anchor::{Anchor, AnchorSet};

/// Quadratic evaluation of the strict-precedence recurrences.
///
/// Needs no equal match length; this is the reference the fast solvers are
/// checked against.
pub fn chain_brute_strict(set: &AnchorSet) -> ChainingResult {
    brute(set, Variant::Strict)
}

/// Quadratic evaluation with weak precedence in place of strict precedence.
pub fn chain_brute_weak(set: &AnchorSet) -> ChainingResult {
    brute(set, Variant::Weak)
}

/// Quadratic evaluation restricted to predecessors ending before the anchor
/// starts in the first dimension.
pub fn chain_brute_one_sided(set: &AnchorSet) -> ChainingResult {
    brute(set, Variant::OneSided)
}

fn brute(set: &AnchorSet, variant: Variant) -> ChainingResult {
    let anchors = set.anchors();
    let n = anchors.len();
    // Every admissible predecessor starts strictly earlier in the first
    // dimension, so increasing `a` is a valid evaluation order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&j| (anchors[j].a, j));

    let mut c = vec![0i64; n];
    let mut cases = vec![CaseScores::default(); n];
    let mut hints = vec![None; n];
    for (rank, &j) in order.iter().enumerate() {
        let cur = &anchors[j];
        let mut case = CaseScores {
            disjoint: Some(0),
            ..CaseScores::default()
        };
        let mut best: Option<(i64, usize)> = None;
        for &p in &order[..rank] {
            let prev = &anchors[p];
            if !variant.admits(prev, cur) {
                continue;
            }
            let score = c[p] + prev.step_to(cur);
            let slot = match classify(prev, cur) {
                Relation::Disjoint => &mut case.disjoint,
                Relation::SecondOnly => &mut case.second_only,
                Relation::FirstBound => &mut case.first_bound,
                Relation::SecondBound => &mut case.second_bound,
            };
            *slot = Some(slot.map_or(score, |s| s.max(score)));
            let better = match best {
                None => true,
                Some((s, i)) => score > s || (score == s && p < i),
            };
            if better {
                best = Some((score, p));
            }
        }
        let total = case.best();
        c[j] = total;
        cases[j] = case;
        hints[j] = best.filter(|&(s, _)| s == total).map(|(_, p)| p);
    }
    ChainingResult::assemble(variant, set, cases, hints)
}

enum Relation {
    Disjoint,
    SecondOnly,
    FirstBound,
    SecondBound,
}

fn classify(prev: &Anchor, cur: &Anchor) -> Relation {
    if !prev.overlaps(cur) {
        Relation::Disjoint
    } else if prev.b < cur.a {
        Relation::SecondOnly
    } else {
        let first = cur.a - prev.a;
        let second = cur.c.min(prev.d + 1) - prev.c;
        if first <= second {
            Relation::FirstBound
        } else {
            Relation::SecondBound
        }
    }
}
