#![allow(dead_code)]

use coverchain::{Anchor, AnchorSet, Precedence};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random equal-match-length anchors. Small `span` forces shared endpoints;
/// a wide length range produces nesting; some anchors are exact duplicates.
pub fn random_eml(rng: &mut impl Rng, n: usize, span: i64, max_len: i64) -> Vec<Anchor> {
    let mut out: Vec<Anchor> = Vec::with_capacity(n);
    while out.len() < n {
        if !out.is_empty() && rng.gen_bool(0.1) {
            let dup = *out.choose(rng).unwrap();
            out.push(dup);
            continue;
        }
        let len = rng.gen_range(1..=max_len);
        let a = rng.gen_range(1..=span);
        let c = if rng.gen_bool(0.3) && !out.is_empty() {
            // stay near an existing diagonal so overlaps are common
            let other = out.choose(rng).unwrap();
            (a + other.diagonal() + rng.gen_range(-2..=2)).max(1)
        } else {
            rng.gen_range(1..=span)
        };
        out.push(Anchor::exact(a, c, len));
    }
    out
}

/// Instance regimes used by the equivalence suites.
pub fn random_instance(rng: &mut impl Rng, max_n: usize) -> AnchorSet {
    let n = rng.gen_range(0..=max_n);
    let (span, max_len) = match rng.gen_range(0..4) {
        0 => (10, 4),
        1 => (40, 12),
        2 => (200, 60),
        _ => (10_000 - 200, 200),
    };
    AnchorSet::new(random_eml(rng, n, span, max_len)).unwrap()
}

/// Best coverage of every chain ending at each anchor, by enumerating all
/// chains depth-first. Exponential; keep `anchors` small.
pub fn enumerate_best(anchors: &[Anchor], admits: impl Fn(&Anchor, &Anchor) -> bool) -> Vec<i64> {
    fn extend(
        anchors: &[Anchor],
        admits: &dyn Fn(&Anchor, &Anchor) -> bool,
        chain: &mut Vec<usize>,
        score_before_last: i64,
        best: &mut [i64],
    ) {
        let last = *chain.last().unwrap();
        let total = score_before_last + anchors[last].min_len();
        best[last] = best[last].max(total);
        for next in 0..anchors.len() {
            if admits(&anchors[last], &anchors[next]) {
                let step = anchors[last].step_to(&anchors[next]);
                chain.push(next);
                extend(anchors, admits, chain, score_before_last + step, best);
                chain.pop();
            }
        }
    }
    let mut best = vec![i64::MIN; anchors.len()];
    for start in 0..anchors.len() {
        let mut chain = vec![start];
        extend(anchors, &admits, &mut chain, 0, &mut best);
    }
    best
}

pub fn admits(mode: Precedence) -> impl Fn(&Anchor, &Anchor) -> bool {
    move |p, q| mode.holds(p, q)
}
