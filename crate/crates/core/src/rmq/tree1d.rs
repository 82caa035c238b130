use super::segtree::{compact_tag, MaxSegTree};
use super::{Hit, Key};
use crate::error::{Error, Result};

/// One-dimensional range-maximum tree over a fixed set of keys.
///
/// Point operations and queries take `O(log n)`. Values must stay above
/// `i64::MIN`, which is reserved for −∞.
#[derive(Debug, Clone)]
pub struct RMaxTree1D {
    coords: Vec<i64>,
    tags: Vec<u32>,
    tree: MaxSegTree,
}

impl RMaxTree1D {
    /// Builds a tree over keys given in increasing order.
    pub fn build(keys: Vec<Key>) -> Result<Self> {
        if let Some(w) = keys.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::DuplicateKey {
                coord: w[1].coord,
                tag: w[1].tag,
            });
        }
        let tags = keys
            .iter()
            .map(|k| compact_tag(k.tag))
            .collect::<Result<Vec<_>>>()?;
        let tree = MaxSegTree::new(keys.len());
        let coords = keys.iter().map(|k| k.coord).collect();
        Ok(RMaxTree1D { coords, tags, tree })
    }

    /// Sorts the keys first; duplicates are still rejected.
    pub fn from_keys(mut keys: Vec<Key>) -> Result<Self> {
        keys.sort_unstable();
        Self::build(keys)
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Keys in slot order.
    pub fn keys(&self) -> impl ExactSizeIterator<Item = Key> + '_ {
        self.coords
            .iter()
            .zip(&self.tags)
            .map(|(&coord, &tag)| Key::new(coord, tag as usize))
    }

    /// Position of `key` in slot order.
    pub fn slot(&self, key: Key) -> Result<usize> {
        let from = self.coords.partition_point(|&c| c < key.coord);
        let to = self.coords.partition_point(|&c| c <= key.coord);
        let tag = u32::try_from(key.tag).ok();
        tag.and_then(|t| self.tags[from..to].binary_search(&t).ok())
            .map(|i| from + i)
            .ok_or(Error::UnknownKey {
                coord: key.coord,
                tag: key.tag,
            })
    }

    /// Current value at `key`; `Ok(None)` is −∞.
    pub fn value(&self, key: Key) -> Result<Option<i64>> {
        Ok(self.tree.get(self.slot(key)?))
    }

    /// Sets the value at `key`. `None` deactivates the key.
    pub fn update(&mut self, key: Key, value: Option<i64>) -> Result<()> {
        let slot = self.slot(key)?;
        self.update_slot(slot, value);
        Ok(())
    }

    /// Raises the value at `key` to at least `value`.
    pub fn upgrade(&mut self, key: Key, value: i64) -> Result<()> {
        let slot = self.slot(key)?;
        self.upgrade_slot(slot, value);
        Ok(())
    }

    /// [`update`](Self::update) by slot, as returned from [`slot`](Self::slot).
    pub fn update_slot(&mut self, slot: usize, value: Option<i64>) {
        self.tree.set(slot, value, self.tags[slot]);
    }

    pub fn upgrade_slot(&mut self, slot: usize, value: i64) {
        if self.tree.get(slot).is_none_or(|old| value > old) {
            self.tree.set(slot, Some(value), self.tags[slot]);
        }
    }

    /// Maximum over keys with `lo <= coord <= hi`, any tag. `None` is −∞.
    pub fn rmaxq(&self, lo: i64, hi: i64) -> Option<Hit> {
        if lo > hi {
            return None;
        }
        let from = self.coords.partition_point(|&c| c < lo);
        let to = self.coords.partition_point(|&c| c <= hi);
        self.rmaxq_slots(from, to)
    }

    /// Maximum over the keys in slots `from..to`.
    pub fn rmaxq_slots(&self, from: usize, to: usize) -> Option<Hit> {
        self.tree
            .query(from, to.min(self.len()))
            .map(|(value, tag)| Hit { value, tag })
    }

    /// Key coordinates in slot order.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}
