use coverchain::{coverage_of, Anchor, Precedence};
use proptest::prelude::*;

fn anchor() -> impl Strategy<Value = Anchor> {
    (1i64..40, 0i64..10, 1i64..40, 0i64..10)
        .prop_map(|(a, l1, c, l2)| Anchor::new(a, a + l1, c, c + l2))
}

// A strict chain built by stepping every endpoint forward.
fn strict_chain() -> impl Strategy<Value = Vec<Anchor>> {
    (
        anchor(),
        proptest::collection::vec((1i64..6, 1i64..6, 1i64..6, 1i64..6), 0..6),
    )
        .prop_map(|(first, steps)| {
            let mut out = vec![first];
            for (da, db, dc, dd) in steps {
                let p = *out.last().unwrap();
                let (a, c) = (p.a + da, p.c + dc);
                out.push(Anchor::new(a, (p.b + db).max(a), c, (p.d + dd).max(c)));
            }
            out
        })
}

proptest! {
    #[test]
    fn strict_implies_weak(p in anchor(), q in anchor()) {
        if p.precedes(&q) {
            prop_assert!(p.weakly_precedes(&q));
        }
    }

    #[test]
    fn coverage_translation_invariant(chain in strict_chain(), shift in 1i64..1000) {
        let moved: Vec<Anchor> = chain
            .iter()
            .map(|x| Anchor::new(x.a + shift, x.b + shift, x.c + shift, x.d + shift))
            .collect();
        prop_assert_eq!(
            coverage_of(&chain, Precedence::Strict).unwrap(),
            coverage_of(&moved, Precedence::Strict).unwrap()
        );
    }

    #[test]
    fn coverage_at_most_sum_of_lengths(chain in strict_chain()) {
        let sum: i64 = chain.iter().map(Anchor::min_len).sum();
        let cov = coverage_of(&chain, Precedence::Strict).unwrap();
        prop_assert!(cov <= sum);
        let disjoint = chain.windows(2).all(|w| !w[0].overlaps(&w[1]));
        if disjoint {
            prop_assert_eq!(cov, sum);
        }
    }

    #[test]
    fn single_anchor_coverage(x in anchor()) {
        prop_assert_eq!(
            coverage_of(&[x], Precedence::Strict).unwrap(),
            (x.b - x.a + 1).min(x.d - x.c + 1)
        );
    }
}
