use super::segtree::{compact_tag, MaxSegTree};
use super::{Hit, Key2D};
use crate::error::{Error, Result};

// One node of the primary tree: the secondary keys of every point below it,
// sorted, with a max tree over them. `up[i]` is the position of entry `i`
// in the parent layer.
#[derive(Debug, Clone)]
struct Layer {
    secondary: Vec<i64>,
    up: Vec<u32>,
    tree: MaxSegTree,
}

/// Two-dimensional range-maximum tree: a static layered range tree.
///
/// The primary tree is a bottom-up segment tree over the points sorted by
/// primary key. Each of its nodes carries a [`MaxSegTree`] over the
/// secondary keys below it, so a point operation touches `O(log n)` layers
/// and a rectangle query visits `O(log n)` layers with an `O(log n)` query
/// each. Tags must be unique within a tree.
#[derive(Debug, Clone)]
pub struct RMaxTree2D {
    points: Vec<Key2D>,
    values: Vec<Option<i64>>,
    layers: Vec<Layer>,
}

impl RMaxTree2D {
    /// Builds the tree over points in any order; duplicate tags are rejected.
    pub fn build(mut points: Vec<Key2D>) -> Result<Self> {
        points.sort_unstable();
        let mut tags: Vec<usize> = points.iter().map(|p| p.tag).collect();
        tags.sort_unstable();
        if let Some(w) = tags.windows(2).find(|w| w[0] == w[1]) {
            let p = points.iter().find(|p| p.tag == w[0]).unwrap();
            return Err(Error::DuplicateKey {
                coord: p.primary,
                tag: p.tag,
            });
        }
        let n = points.len();
        let mut lists: Vec<Vec<i64>> = vec![Vec::new(); 2 * n];
        let mut ups: Vec<Vec<u32>> = vec![Vec::new(); 2 * n];
        for (slot, p) in points.iter().enumerate() {
            compact_tag(p.tag)?;
            lists[n + slot] = vec![p.secondary];
        }
        for v in (1..n).rev() {
            let (merged, left, right) = merge(&lists[2 * v], &lists[2 * v + 1]);
            lists[v] = merged;
            ups[2 * v] = left;
            ups[2 * v + 1] = right;
        }
        let layers = lists
            .into_iter()
            .zip(ups)
            .map(|(secondary, up)| Layer {
                tree: MaxSegTree::new(secondary.len()),
                secondary,
                up,
            })
            .collect();
        Ok(RMaxTree2D {
            points,
            values: vec![None; n],
            layers,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in slot order.
    pub fn points(&self) -> &[Key2D] {
        &self.points
    }

    /// Position of `key` in slot order.
    pub fn slot(&self, key: Key2D) -> Result<usize> {
        self.points
            .binary_search(&key)
            .map_err(|_| Error::UnknownKey {
                coord: key.primary,
                tag: key.tag,
            })
    }

    pub fn value(&self, key: Key2D) -> Result<Option<i64>> {
        Ok(self.values[self.slot(key)?])
    }

    /// Sets the value of a point. `None` deactivates it.
    pub fn update(&mut self, key: Key2D, value: Option<i64>) -> Result<()> {
        let slot = self.slot(key)?;
        self.update_slot(slot, value);
        Ok(())
    }

    /// Raises the value of a point to at least `value`.
    pub fn upgrade(&mut self, key: Key2D, value: i64) -> Result<()> {
        let slot = self.slot(key)?;
        self.upgrade_slot(slot, value);
        Ok(())
    }

    /// [`update`](Self::update) by slot, as returned from [`slot`](Self::slot).
    pub fn update_slot(&mut self, slot: usize, value: Option<i64>) {
        self.values[slot] = value;
        let tag = compact_tag(self.points[slot].tag).expect("tag checked at build");
        let mut v = slot + self.points.len();
        let mut pos = 0;
        loop {
            let layer = &mut self.layers[v];
            layer.tree.set(pos, value, tag);
            if v == 1 {
                break;
            }
            pos = layer.up[pos] as usize;
            v >>= 1;
        }
    }

    pub fn upgrade_slot(&mut self, slot: usize, value: i64) {
        if self.values[slot].is_none_or(|old| value > old) {
            self.update_slot(slot, Some(value));
        }
    }

    /// Maximum over points with `p_lo <= primary <= p_hi` and
    /// `s_lo <= secondary <= s_hi`. `None` is −∞.
    pub fn rmaxq(&self, p_lo: i64, p_hi: i64, s_lo: i64, s_hi: i64) -> Option<Hit> {
        if p_lo > p_hi || s_lo > s_hi {
            return None;
        }
        let from = self.points.partition_point(|p| p.primary < p_lo);
        let to = self.points.partition_point(|p| p.primary <= p_hi);
        self.rmaxq_slots(from, to, s_lo, s_hi)
    }

    /// Maximum over the points in slots `from..to` with
    /// `s_lo <= secondary <= s_hi`.
    pub fn rmaxq_slots(&self, from: usize, to: usize, s_lo: i64, s_hi: i64) -> Option<Hit> {
        let n = self.points.len();
        let (mut l, mut r) = (from.min(n) + n, to.min(n) + n);
        let mut best: Option<Hit> = None;
        let mut visit = |layer: &Layer| {
            let keys = &layer.secondary;
            let lo = if keys.first().is_none_or(|&s| s_lo <= s) {
                0
            } else {
                keys.partition_point(|&s| s < s_lo)
            };
            let hi = keys.partition_point(|&s| s <= s_hi);
            if let Some((value, tag)) = layer.tree.query(lo, hi) {
                let better = match best {
                    None => true,
                    Some(b) => value > b.value || (value == b.value && tag < b.tag),
                };
                if better {
                    best = Some(Hit { value, tag });
                }
            }
        };
        while l < r {
            if l & 1 == 1 {
                visit(&self.layers[l]);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                visit(&self.layers[r]);
            }
            l >>= 1;
            r >>= 1;
        }
        best
    }
}

// Merged list plus the position of every input entry in it.
fn merge(x: &[i64], y: &[i64]) -> (Vec<i64>, Vec<u32>, Vec<u32>) {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let mut x_up = Vec::with_capacity(x.len());
    let mut y_up = Vec::with_capacity(y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let at = out.len() as u32;
        if j == y.len() || (i < x.len() && x[i] <= y[j]) {
            out.push(x[i]);
            x_up.push(at);
            i += 1;
        } else {
            out.push(y[j]);
            y_up.push(at);
            j += 1;
        }
    }
    (out, x_up, y_up)
}
