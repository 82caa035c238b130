//! Randomized self-check: fast solvers against the quadratic recurrences,
//! equal maxima under strict and weak precedence, score-preserving chain
//! normalization, and weak chaining against the anchor-restricted LCS.

use std::fmt;

use coverchain::{
    anchor_restricted_lcs, best_chain, chain_brute_one_sided, chain_brute_strict, chain_brute_weak,
    chain_one_sided, chain_two_sided_strict, chain_two_sided_weak, coverage, lcs_classic,
    maximal_exact_matches, normalize_weak_chain, traceback, unit_matches, Anchor, AnchorSet,
    ChainingResult, StringPair,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub instances: usize,
    pub seed: u64,
    /// Largest anchor count of a generated instance.
    pub max_n: usize,
    /// Negative control: the array comparator reports a mismatch whenever
    /// some anchor has a predecessor.
    pub corrupt_comparator: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            instances: 200,
            seed: 1,
            max_n: 60,
            corrupt_comparator: false,
        }
    }
}

/// A failed check with its (shrunk) input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub check: &'static str,
    pub instance: usize,
    pub anchors: Vec<Anchor>,
    pub strings: Option<StringPair>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "check {} failed on instance {}",
            self.check, self.instance
        )?;
        if let Some(sp) = &self.strings {
            writeln!(f, "text\t{}", String::from_utf8_lossy(&sp.text))?;
            writeln!(f, "pattern\t{}", String::from_utf8_lossy(&sp.pattern))?;
        }
        writeln!(f, "{} anchors:", self.anchors.len())?;
        write!(f, "{}", coverchain::io::write_anchors(&self.anchors))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub instances: usize,
    pub checks: usize,
    pub failure: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Check = fn(&AnchorSet, bool) -> bool;

const ANCHOR_CHECKS: [(&str, Check); 6] = [
    ("strict-vs-brute", |s, corrupt| {
        same(
            &chain_two_sided_strict(s).unwrap(),
            &chain_brute_strict(s),
            corrupt,
        )
    }),
    ("weak-vs-brute", |s, corrupt| {
        same(
            &chain_two_sided_weak(s).unwrap(),
            &chain_brute_weak(s),
            corrupt,
        )
    }),
    ("one-sided-vs-brute", |s, corrupt| {
        same(
            &chain_one_sided(s).unwrap(),
            &chain_brute_one_sided(s),
            corrupt,
        )
    }),
    ("strict-weak-maximum", |s, _| {
        chain_brute_strict(s).best_score() == chain_brute_weak(s).best_score()
    }),
    ("normalization", |s, _| {
        let weak = chain_two_sided_weak(s).unwrap();
        let chain = best_chain(&weak, s).unwrap();
        matches!(normalize_weak_chain(&chain, s), Ok((_, score)) if score == weak.best_score())
    }),
    ("traceback", |s, _| {
        let r = chain_two_sided_strict(s).unwrap();
        (0..s.len())
            .all(|j| traceback(&r, s, j).and_then(|chain| coverage(&chain, s)) == Ok(r.c_plus[j]))
    }),
];

fn same(fast: &ChainingResult, oracle: &ChainingResult, corrupt: bool) -> bool {
    if !corrupt {
        return fast.c_plus == oracle.c_plus;
    }
    fast.c_plus
        .iter()
        .zip(&oracle.c_plus)
        .zip(&oracle.c)
        .all(|((&x, &y), &c)| x == if c > 0 { y + 1 } else { y })
}

/// Random equal-match-length instance; small spans give shared endpoints,
/// long lengths give nesting, and some anchors are duplicated.
pub fn random_anchor_set(rng: &mut impl Rng, n: usize) -> AnchorSet {
    let (span, max_len) = match rng.gen_range(0..3) {
        0 => (12, 5),
        1 => (60, 20),
        _ => (10_000 - 200, 200),
    };
    let mut anchors: Vec<Anchor> = Vec::with_capacity(n);
    while anchors.len() < n {
        if !anchors.is_empty() && rng.gen_bool(0.1) {
            let dup = anchors[rng.gen_range(0..anchors.len())];
            anchors.push(dup);
            continue;
        }
        let len = rng.gen_range(1..=max_len);
        anchors.push(Anchor::exact(
            rng.gen_range(1..=span),
            rng.gen_range(1..=span),
            len,
        ));
    }
    AnchorSet::new(anchors).expect("generated anchors are well formed")
}

pub fn random_string_pair(rng: &mut impl Rng, max_len: usize, sigma: u8) -> StringPair {
    let mut side = || -> Vec<u8> {
        let n = rng.gen_range(1..=max_len);
        (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
    };
    let text = side();
    let pattern = side();
    StringPair { text, pattern }
}

fn lcs_agrees(sp: &StringPair, set: &AnchorSet) -> bool {
    let chain = chain_two_sided_weak(set).unwrap().best_score();
    Ok(chain as usize) == anchor_restricted_lcs(sp, set)
}

// Greedily drops anchors while the failure persists.
fn shrink(anchors: &[Anchor], fails: impl Fn(&AnchorSet) -> bool) -> Vec<Anchor> {
    let mut current = anchors.to_vec();
    let mut i = 0;
    while i < current.len() {
        let mut candidate = current.clone();
        candidate.remove(i);
        if fails(&AnchorSet::new(candidate.clone()).unwrap()) {
            current = candidate;
        } else {
            i += 1;
        }
    }
    current
}

pub fn verify(opts: &VerifyOptions) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checks = 0;
    for instance in 0..opts.instances {
        // instance 0 is the empty set
        let n = if instance == 0 {
            0
        } else {
            rng.gen_range(1..=opts.max_n.max(1))
        };
        let set = random_anchor_set(&mut rng, n);
        for (name, check) in ANCHOR_CHECKS {
            checks += 1;
            let corrupt = opts.corrupt_comparator;
            if !check(&set, corrupt) {
                let anchors = shrink(set.anchors(), |s| !check(s, corrupt));
                return VerifyReport {
                    instances: instance + 1,
                    checks,
                    failure: Some(Counterexample {
                        check: name,
                        instance,
                        anchors,
                        strings: None,
                    }),
                };
            }
        }

        let sigma = if rng.gen_bool(0.5) { 2 } else { 4 };
        let sp = random_string_pair(&mut rng, 40, sigma);
        let min_len = rng.gen_range(1..=3);
        let mems = maximal_exact_matches(&sp, min_len).expect("min_len >= 1");
        let units = unit_matches(&sp);
        checks += 2;
        let failed = if !lcs_agrees(&sp, &mems) {
            Some(("chain-vs-restricted-lcs", mems))
        } else if chain_two_sided_weak(&units).unwrap().best_score() as usize != lcs_classic(&sp) {
            Some(("unit-chain-vs-lcs", units))
        } else {
            None
        };
        if let Some((name, set)) = failed {
            let anchors = shrink(set.anchors(), |s| !lcs_agrees(&sp, s));
            return VerifyReport {
                instances: instance + 1,
                checks,
                failure: Some(Counterexample {
                    check: name,
                    instance,
                    anchors,
                    strings: Some(sp),
                }),
            };
        }
    }
    VerifyReport {
        instances: opts.instances,
        checks,
        failure: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let report = verify(&VerifyOptions::default());
        assert!(report.passed(), "{}", report.failure.unwrap());
        assert_eq!(report.instances, 200);
    }

    #[test]
    fn corrupted_comparator_fails_with_minimal_instance() {
        let report = verify(&VerifyOptions {
            corrupt_comparator: true,
            ..VerifyOptions::default()
        });
        let failure = report.failure.expect("negative control must fail");
        assert_eq!(failure.check, "strict-vs-brute");
        // one link is the smallest input with a predecessor
        assert_eq!(failure.anchors.len(), 2);
        assert!(failure.to_string().contains("2 anchors:"));
    }

    #[test]
    fn shrink_keeps_failure() {
        let anchors: Vec<Anchor> = (1..=6).map(|i| Anchor::exact(i * 3, i * 3, 2)).collect();
        let kept = shrink(&anchors, |s| s.anchors().iter().any(|x| x.a == 9));
        assert_eq!(kept, vec![Anchor::exact(9, 9, 2)]);
    }
}
