use crate::error::{Error, Result};

// Bottom-up max segment tree over slots 0..n. An empty slot is encoded as
// `NEG_INF` so that a node costs 16 bytes; the public API maps it to `None`.
const NEG_INF: i64 = i64::MIN;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Node {
    value: i64,
    tag: u32,
}

const EMPTY: Node = Node {
    value: NEG_INF,
    tag: u32::MAX,
};

#[inline]
fn better(x: Node, y: Node) -> Node {
    if x.value > y.value || (x.value == y.value && x.tag <= y.tag) {
        x
    } else {
        y
    }
}

pub(crate) fn compact_tag(tag: usize) -> Result<u32> {
    u32::try_from(tag)
        .ok()
        .filter(|&t| t != u32::MAX)
        .ok_or(Error::TagTooLarge { tag })
}

#[derive(Debug, Clone)]
pub(crate) struct MaxSegTree {
    n: usize,
    nodes: Vec<Node>,
}

impl MaxSegTree {
    pub(crate) fn new(n: usize) -> Self {
        MaxSegTree {
            n,
            nodes: vec![EMPTY; 2 * n],
        }
    }

    pub(crate) fn get(&self, slot: usize) -> Option<i64> {
        let node = self.nodes[slot + self.n];
        (node.value != NEG_INF).then_some(node.value)
    }

    /// Overwrites a slot. `tag` must come from `compact_tag`.
    pub(crate) fn set(&mut self, slot: usize, value: Option<i64>, tag: u32) {
        let mut i = slot + self.n;
        self.nodes[i] = match value {
            Some(value) => Node { value, tag },
            None => EMPTY,
        };
        while i > 1 {
            i >>= 1;
            self.nodes[i] = better(self.nodes[2 * i], self.nodes[2 * i + 1]);
        }
    }

    /// Maximum over slots `lo..hi`.
    pub(crate) fn query(&self, lo: usize, hi: usize) -> Option<(i64, usize)> {
        let (mut l, mut r) = (lo + self.n, hi + self.n);
        let mut best = EMPTY;
        while l < r {
            if l & 1 == 1 {
                best = better(best, self.nodes[l]);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                best = better(best, self.nodes[r]);
            }
            l >>= 1;
            r >>= 1;
        }
        (best.value != NEG_INF).then_some((best.value, best.tag as usize))
    }
}
