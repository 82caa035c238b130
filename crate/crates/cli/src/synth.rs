//! Seeded synthetic workloads.

use coverchain::{Anchor, AnchorSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Workload shape: lengths uniform in `[1, max_len]`, start positions
/// uniform in `[1, span]` in both dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Workload {
    pub n: usize,
    pub max_len: i64,
    pub span: i64,
}

impl Workload {
    /// Span grows with `n` so the anchor density stays constant.
    pub fn scaled(n: usize, max_len: i64, span_factor: i64) -> Self {
        Workload {
            n,
            max_len,
            span: (n as i64 * span_factor).max(1),
        }
    }

    pub fn generate(&self, seed: u64) -> AnchorSet {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let anchors = (0..self.n)
            .map(|_| {
                let len = rng.gen_range(1..=self.max_len);
                let a = rng.gen_range(1..=self.span);
                let c = rng.gen_range(1..=self.span);
                Anchor::exact(a, c, len)
            })
            .collect();
        AnchorSet::new(anchors).expect("synthetic anchors are well formed")
    }
}
