use super::{CaseScores, ChainingResult, Variant};
use crate::anchor::{Anchor, AnchorSet};
use crate::error::Result;
use crate::rmq::{Hit, Key, Key2D, RMaxTree1D, RMaxTree2D};

/// Chaining without overlaps in the first dimension, `O(N log N)`.
pub fn chain_one_sided(set: &AnchorSet) -> Result<ChainingResult> {
    sweep(set, Variant::OneSided)
}

/// Chaining with overlaps in both dimensions under strict precedence,
/// `O(N log² N)`.
pub fn chain_two_sided_strict(set: &AnchorSet) -> Result<ChainingResult> {
    sweep(set, Variant::Strict)
}

/// Chaining with overlaps in both dimensions under weak precedence,
/// `O(N log N)`.
pub fn chain_two_sided_weak(set: &AnchorSet) -> Result<ChainingResult> {
    sweep(set, Variant::Weak)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    Start,
    End,
}

/// Sweep event: starts sort before ends at the same coordinate, so an anchor
/// ending where another starts is still "open" (overlapping) at that start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Event {
    coord: i64,
    kind: Kind,
    anchor: usize,
}

fn events(anchors: &[Anchor]) -> Vec<Event> {
    let mut events: Vec<Event> = anchors
        .iter()
        .enumerate()
        .flat_map(|(anchor, x)| {
            [
                Event {
                    coord: x.a,
                    kind: Kind::Start,
                    anchor,
                },
                Event {
                    coord: x.b,
                    kind: Kind::End,
                    anchor,
                },
            ]
        })
        .collect();
    events.sort_unstable();
    events
}

// For each query value q, the number of coords below q. Sorting the queries
// and merging keeps the sweep free of binary searches over large arrays.
fn lower_ranks(coords: &[i64], queries: &[i64]) -> Vec<usize> {
    let mut order: Vec<u32> = (0..queries.len() as u32).collect();
    order.sort_unstable_by_key(|&i| queries[i as usize]);
    let mut rank = vec![0; queries.len()];
    let mut k = 0;
    for i in order {
        let q = queries[i as usize];
        while k < coords.len() && coords[k] < q {
            k += 1;
        }
        rank[i as usize] = k;
    }
    rank
}

// Per-anchor data lives in start order: `rank[j]` is the position of anchor
// `j` there and `order[r]` the anchor at position `r`. Tree tags stay anchor
// indices so ties still go to the smaller index.
struct Layout {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl Layout {
    fn new(anchors: &[Anchor]) -> Self {
        let mut order: Vec<usize> = (0..anchors.len()).collect();
        order.sort_by_key(|&j| anchors[j].a);
        let mut rank = vec![0; anchors.len()];
        for (r, &j) in order.iter().enumerate() {
            rank[j] = r;
        }
        Layout { order, rank }
    }

    // Slot of every anchor, by rank, in a tree whose tags are anchor indices.
    // Other tags (the sentinel) are skipped.
    fn slots(&self, tags: impl Iterator<Item = usize>) -> Vec<usize> {
        let mut slot = vec![0; self.rank.len()];
        for (pos, tag) in tags.enumerate() {
            if let Some(&r) = self.rank.get(tag) {
                slot[r] = pos;
            }
        }
        slot
    }

    fn scatter<T: Copy + Default>(&self, by_rank: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); by_rank.len()];
        for (r, &j) in self.order.iter().enumerate() {
            out[j] = by_rank[r];
        }
        out
    }
}

// Anchors currently open in the first dimension, keyed by diagonal c - a.
// `first` stores c[j] - a, `second` stores c[j] - c. Slots are by rank.
enum OpenTrees {
    None,
    Layered {
        first: RMaxTree2D,
        second: RMaxTree2D,
        first_slot: Vec<usize>,
        second_slot: Vec<usize>,
    },
    Flat {
        first: RMaxTree1D,
        second: RMaxTree1D,
        slot: Vec<usize>,
    },
}

impl OpenTrees {
    fn build(variant: Variant, anchors: &[Anchor], layout: &Layout) -> Result<Self> {
        let points = |second: fn(&Anchor) -> i64| -> Vec<Key2D> {
            anchors
                .iter()
                .enumerate()
                .map(|(j, x)| Key2D::new(x.diagonal(), second(x), j))
                .collect()
        };
        Ok(match variant {
            Variant::OneSided => OpenTrees::None,
            Variant::Strict => {
                let first = RMaxTree2D::build(points(|x| x.b))?;
                let second = RMaxTree2D::build(points(|x| x.d))?;
                OpenTrees::Layered {
                    first_slot: layout.slots(first.points().iter().map(|p| p.tag)),
                    second_slot: layout.slots(second.points().iter().map(|p| p.tag)),
                    first,
                    second,
                }
            }
            Variant::Weak => {
                let keys: Vec<Key> = anchors
                    .iter()
                    .enumerate()
                    .map(|(j, x)| Key::new(x.diagonal(), j))
                    .collect();
                let first = RMaxTree1D::from_keys(keys)?;
                OpenTrees::Flat {
                    slot: layout.slots(first.keys().map(|k| k.tag)),
                    second: first.clone(),
                    first,
                }
            }
        })
    }

    /// Best (first-bound, second-bound) overlap scores for `x`.
    ///
    /// Strict precedence also needs `b' < b` and `d' < d`, which the second
    /// key of the layered trees enforces; the diagonal split then implies the
    /// other of the two.
    ///
    /// `split` is the number of anchors with diagonal at most that of `x`.
    fn query(&self, x: &Anchor, split: usize) -> (Option<Hit>, Option<Hit>) {
        match self {
            OpenTrees::None => (None, None),
            OpenTrees::Layered { first, second, .. } => (
                first.rmaxq_slots(0, split, 0, x.b - 1),
                second.rmaxq_slots(split, usize::MAX, 0, x.d - 1),
            ),
            OpenTrees::Flat { first, second, .. } => (
                first.rmaxq_slots(0, split),
                second.rmaxq_slots(split, usize::MAX),
            ),
        }
    }

    fn set(&mut self, r: usize, x: &Anchor, score: Option<i64>) {
        match self {
            OpenTrees::None => {}
            OpenTrees::Layered {
                first,
                second,
                first_slot,
                second_slot,
            } => {
                first.update_slot(first_slot[r], score.map(|s| s - x.a));
                second.update_slot(second_slot[r], score.map(|s| s - x.c));
            }
            OpenTrees::Flat {
                first,
                second,
                slot,
            } => {
                first.update_slot(slot[r], score.map(|s| s - x.a));
                second.update_slot(slot[r], score.map(|s| s - x.c));
            }
        }
    }
}

fn sweep(set: &AnchorSet, variant: Variant) -> Result<ChainingResult> {
    set.require_eml()?;
    let anchors = set.anchors();
    let n = anchors.len();
    let layout = Layout::new(anchors);
    let sorted: Vec<Anchor> = layout.order.iter().map(|&j| anchors[j]).collect();

    // The sentinel at coordinate 0 holds the empty chain. Its tag sorts after
    // every anchor so real predecessors win ties.
    let sentinel = Key::new(0, n);
    let by_end: Vec<Key> = anchors
        .iter()
        .enumerate()
        .map(|(j, x)| Key::new(x.d, j))
        .collect();
    // Closed anchors: value c_plus for those disjoint from the query anchor
    // in the second dimension, c - c for those overlapping it there.
    let mut closed_disjoint =
        RMaxTree1D::from_keys(by_end.iter().copied().chain([sentinel]).collect())?;
    let mut closed_overlap = RMaxTree1D::from_keys(by_end)?;
    closed_disjoint.upgrade(sentinel, 0)?;
    let disjoint_slot = layout.slots(closed_disjoint.keys().map(|k| k.tag));
    let overlap_slot = layout.slots(closed_overlap.keys().map(|k| k.tag));
    let mut open = OpenTrees::build(variant, anchors, &layout)?;

    // Query bounds as slot ranks. Closed anchors are ranked by d, open ones
    // by diagonal. Strict precedence needs d' < d; weak precedence only
    // c' < c, so a closed anchor may reach past d in the second dimension.
    let column = |f: fn(&Anchor) -> i64| sorted.iter().map(f).collect::<Vec<i64>>();
    let below_c = lower_ranks(closed_overlap.coords(), &column(|x| x.c));
    let below_d = match variant {
        Variant::Weak => vec![n; n],
        Variant::OneSided | Variant::Strict => {
            lower_ranks(closed_overlap.coords(), &column(|x| x.d))
        }
    };
    let split = {
        let mut diagonals = column(Anchor::diagonal);
        let queries: Vec<i64> = diagonals.iter().map(|g| g + 1).collect();
        diagonals.sort_unstable();
        lower_ranks(&diagonals, &queries)
    };

    let mut c = vec![0i64; n];
    let mut cases = vec![CaseScores::default(); n];
    let mut hints: Vec<Option<usize>> = vec![None; n];
    let events = events(&sorted);
    let mut i = 0;
    while i < events.len() {
        let event = events[i];
        match event.kind {
            Kind::Start => {
                // Anchors starting at one coordinate never precede each other,
                // so the whole batch is scored before any of it is opened.
                let batch_end = events[i..]
                    .iter()
                    .position(|e| e.coord != event.coord || e.kind != Kind::Start)
                    .map_or(events.len(), |k| i + k);
                for e in &events[i..batch_end] {
                    let r = e.anchor;
                    let x = &sorted[r];
                    // the sentinel sits in slot 0 of `closed_disjoint`
                    let disjoint = closed_disjoint.rmaxq_slots(0, below_c[r] + 1);
                    let second_only = closed_overlap.rmaxq_slots(below_c[r], below_d[r]);
                    let (first_bound, second_bound) = open.query(x, split[r]);
                    let candidates = [
                        disjoint.map(|h| (h.value, h.tag)),
                        second_only.map(|h| (x.c + h.value, h.tag)),
                        first_bound.map(|h| (x.a + h.value, h.tag)),
                        second_bound.map(|h| (x.c + h.value, h.tag)),
                    ];
                    cases[r] = CaseScores {
                        disjoint: candidates[0].map(|v| v.0),
                        second_only: candidates[1].map(|v| v.0),
                        first_bound: candidates[2].map(|v| v.0),
                        second_bound: candidates[3].map(|v| v.0),
                    };
                    let winner = candidates
                        .into_iter()
                        .flatten()
                        .fold(None, |acc: Option<(i64, usize)>, v| match acc {
                            Some(a) if a.0 >= v.0 => Some(a),
                            _ => Some(v),
                        })
                        .expect("the sentinel is always reachable");
                    c[r] = winner.0;
                    hints[r] = (winner.1 < n).then_some(winner.1);
                }
                for e in &events[i..batch_end] {
                    open.set(e.anchor, &sorted[e.anchor], Some(c[e.anchor]));
                }
                i = batch_end;
            }
            Kind::End => {
                let r = event.anchor;
                let x = &sorted[r];
                closed_disjoint.upgrade_slot(disjoint_slot[r], c[r] + x.min_len());
                closed_overlap.upgrade_slot(overlap_slot[r], c[r] - x.c);
                open.set(r, x, None);
                i += 1;
            }
        }
    }
    Ok(ChainingResult::assemble(
        variant,
        set,
        layout.scatter(&cases),
        layout.scatter(&hints),
    ))
}
