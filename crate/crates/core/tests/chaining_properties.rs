mod common;

use common::{random_eml, random_instance};
use coverchain::{
    best_chain, chain_brute_strict, chain_brute_weak, chain_one_sided, chain_two_sided_strict,
    chain_two_sided_weak, coverage, kmer_matches, normalize_weak_chain, traceback, Anchor,
    AnchorSet, Precedence, StringPair,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn brute_maxima_agree_across_precedence() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..1000 {
        let set = random_instance(&mut rng, 120);
        assert_eq!(
            chain_brute_strict(&set).best_score(),
            chain_brute_weak(&set).best_score()
        );
    }
}

#[test]
fn one_sided_le_strict_le_weak() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..500 {
        let set = random_instance(&mut rng, 150);
        let one = chain_one_sided(&set).unwrap().c_plus;
        let strict = chain_two_sided_strict(&set).unwrap().c_plus;
        let weak = chain_two_sided_weak(&set).unwrap().c_plus;
        for j in 0..set.len() {
            assert!(one[j] <= strict[j] && strict[j] <= weak[j]);
        }
    }
}

#[test]
fn non_nested_sets_collapse() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut checked = 0;
    while checked < 200 {
        let set = random_instance(&mut rng, 80);
        if !set.non_nested() {
            continue;
        }
        checked += 1;
        assert_eq!(
            chain_two_sided_weak(&set).unwrap().c_plus,
            chain_two_sided_strict(&set).unwrap().c_plus
        );
    }
    for k in [1, 3] {
        let sp = StringPair::new(&b"abracadabra"[..], &b"cadabrabra"[..]);
        let set = kmer_matches(&sp, k).unwrap();
        assert!(set.non_nested());
        assert_eq!(
            chain_two_sided_weak(&set).unwrap().c_plus,
            chain_two_sided_strict(&set).unwrap().c_plus
        );
    }
}

#[test]
fn traceback_reproduces_scores() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..300 {
        let set = random_instance(&mut rng, 60);
        let results = [
            chain_brute_strict(&set),
            chain_brute_weak(&set),
            chain_one_sided(&set).unwrap(),
            chain_two_sided_strict(&set).unwrap(),
            chain_two_sided_weak(&set).unwrap(),
        ];
        for r in &results {
            for j in 0..set.len() {
                let chain = traceback(r, &set, j).unwrap();
                assert_eq!(
                    coverage(&chain, &set),
                    Ok(r.c_plus[j]),
                    "{:?} {j}",
                    r.variant
                );
                if r.variant == coverchain::Variant::OneSided {
                    let xs = chain.resolve(&set).unwrap();
                    assert!(xs.windows(2).all(|w| w[0].b < w[1].a));
                }
            }
        }
    }
}

#[test]
fn normalization_preserves_weak_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..500 {
        let set = random_instance(&mut rng, 80);
        let weak = chain_two_sided_weak(&set).unwrap();
        let chain = best_chain(&weak, &set).unwrap();
        let (trimmed, score) = normalize_weak_chain(&chain, &set).unwrap();
        assert_eq!(score, weak.best_score());
        assert!(trimmed.windows(2).all(|w| w[0].precedes(&w[1])));
        assert!(trimmed.iter().all(Anchor::is_eml));
    }
}

#[test]
fn normalization_preserves_random_weak_chains() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..2000 {
        let n = rng.gen_range(1..8);
        let anchors = random_eml(&mut rng, n, 15, 8);
        let set = AnchorSet::new(anchors).unwrap();
        // random walk along weak precedence
        let mut idx = vec![rng.gen_range(0..set.len())];
        loop {
            let last = set[*idx.last().unwrap()];
            let next: Vec<usize> = (0..set.len())
                .filter(|&q| last.weakly_precedes(&set[q]))
                .collect();
            match next.choose(&mut rng) {
                Some(&q) if rng.gen_bool(0.8) => idx.push(q),
                _ => break,
            }
        }
        let chain = coverchain::Chain::new(idx, Precedence::Weak);
        let (_, score) = normalize_weak_chain(&chain, &set).unwrap();
        assert_eq!(Ok(score), coverage(&chain, &set));
    }
}

#[test]
fn scores_are_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    for _ in 0..300 {
        let set = random_instance(&mut rng, 100);
        let r = chain_two_sided_strict(&set).unwrap();
        assert!(r.c.iter().all(|&c| c >= 0));
        let best = r.best_score();
        let total: i64 = set.anchors().iter().map(Anchor::min_len).sum();
        let covered = |f: fn(&Anchor) -> (i64, i64)| {
            let mut cells = std::collections::BTreeSet::new();
            for x in set.anchors() {
                let (lo, hi) = f(x);
                cells.extend(lo..=hi);
            }
            cells.len() as i64
        };
        let span = covered(|x| (x.a, x.b)).min(covered(|x| (x.c, x.d)));
        assert!(0 <= best && best <= total && best <= span);
    }
}

#[test]
fn permutation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(28);
    for _ in 0..200 {
        let set = random_instance(&mut rng, 80);
        let mut perm: Vec<usize> = (0..set.len()).collect();
        perm.shuffle(&mut rng);
        let shuffled = AnchorSet::new(perm.iter().map(|&i| set[i]).collect()).unwrap();
        for run in [
            chain_one_sided,
            chain_two_sided_strict,
            chain_two_sided_weak,
        ] {
            let base = run(&set).unwrap().c_plus;
            let moved = run(&shuffled).unwrap().c_plus;
            for (k, &i) in perm.iter().enumerate() {
                assert_eq!(moved[k], base[i]);
            }
        }
    }
}
