mod common;

use common::{enumerate_best, random_eml, random_instance};
use coverchain::{
    chain_brute_one_sided, chain_brute_strict, chain_brute_weak, chain_one_sided,
    chain_two_sided_strict, chain_two_sided_weak, Anchor, AnchorSet, Precedence,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn show(set: &AnchorSet) -> String {
    set.anchors()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[test]
fn strict_sweep_matches_brute() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let set = random_instance(&mut rng, 200);
        let fast = chain_two_sided_strict(&set).unwrap();
        assert_eq!(
            fast.c_plus,
            chain_brute_strict(&set).c_plus,
            "{}",
            show(&set)
        );
    }
}

#[test]
fn weak_sweep_matches_brute() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..1000 {
        let set = random_instance(&mut rng, 200);
        let fast = chain_two_sided_weak(&set).unwrap();
        assert_eq!(fast.c_plus, chain_brute_weak(&set).c_plus, "{}", show(&set));
    }
}

#[test]
fn one_sided_sweep_matches_brute() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..1000 {
        let set = random_instance(&mut rng, 200);
        let fast = chain_one_sided(&set).unwrap();
        assert_eq!(
            fast.c_plus,
            chain_brute_one_sided(&set).c_plus,
            "{}",
            show(&set)
        );
    }
}

#[test]
fn brute_matches_exhaustive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for round in 0..400 {
        let n = 1 + round % 9;
        let anchors = random_eml(&mut rng, n, 12, 5);
        let set = AnchorSet::new(anchors.clone()).unwrap();
        let strict = enumerate_best(&anchors, common::admits(Precedence::Strict));
        let weak = enumerate_best(&anchors, common::admits(Precedence::Weak));
        assert_eq!(chain_brute_strict(&set).c_plus, strict, "{}", show(&set));
        assert_eq!(chain_brute_weak(&set).c_plus, weak, "{}", show(&set));
    }
}

#[test]
fn brute_matches_enumeration_without_eml() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    use rand::Rng;
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let anchors: Vec<Anchor> = (0..n)
            .map(|_| {
                let a = rng.gen_range(1..=12);
                let c = rng.gen_range(1..=12);
                Anchor::new(a, a + rng.gen_range(0..5), c, c + rng.gen_range(0..5))
            })
            .collect();
        let set = AnchorSet::new(anchors.clone()).unwrap();
        let strict = enumerate_best(&anchors, common::admits(Precedence::Strict));
        assert_eq!(chain_brute_strict(&set).c_plus, strict, "{}", show(&set));
        let weak = enumerate_best(&anchors, common::admits(Precedence::Weak));
        assert_eq!(chain_brute_weak(&set).c_plus, weak, "{}", show(&set));
    }
}

#[test]
fn one_sided_brute_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for round in 0..300 {
        let anchors = random_eml(&mut rng, 1 + round % 8, 12, 5);
        let set = AnchorSet::new(anchors.clone()).unwrap();
        let want = enumerate_best(&anchors, |p, q| p.precedes(q) && p.b < q.a);
        assert_eq!(chain_brute_one_sided(&set).c_plus, want, "{}", show(&set));
    }
}
