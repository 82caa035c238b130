//! Semi-dynamic range-maximum search trees.
//!
//! The key universe is fixed when a tree is built and every value starts at
//! −∞ (`None`). Values change through `update` (overwrite) and `upgrade`
//! (keep the maximum); keys are never inserted or removed afterwards.
//!
//! Keys are `(coordinate, tag)` pairs so equal coordinates stay distinct.
//! Range queries bound the coordinate only and span every tag. A query
//! reports the maximum value together with the tag that holds it; among
//! equal maxima the smallest tag wins.

mod segtree;
mod tree1d;
mod tree2d;

pub use tree1d::RMaxTree1D;
pub use tree2d::RMaxTree2D;

/// A search key: a coordinate plus a tag that disambiguates equal coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key {
    pub coord: i64,
    pub tag: usize,
}

impl Key {
    pub const fn new(coord: i64, tag: usize) -> Self {
        Key { coord, tag }
    }
}

/// A point of a two-dimensional tree. Tags must be unique within a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key2D {
    pub primary: i64,
    pub secondary: i64,
    pub tag: usize,
}

impl Key2D {
    pub const fn new(primary: i64, secondary: i64, tag: usize) -> Self {
        Key2D {
            primary,
            secondary,
            tag,
        }
    }
}

/// Result of a range maximum query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hit {
    pub value: i64,
    pub tag: usize,
}
