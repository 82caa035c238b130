//! The `coverchain` guide. Each chapter of `book/src` is included here so
//! its snippets run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/anchors.md")]
pub mod anchors {}

#[doc = include_str!("../../../book/src/recurrences.md")]
pub mod recurrences {}

#[doc = include_str!("../../../book/src/trees.md")]
pub mod trees {}

#[doc = include_str!("../../../book/src/sweeps.md")]
pub mod sweeps {}

#[doc = include_str!("../../../book/src/weak.md")]
pub mod weak {}

#[doc = include_str!("../../../book/src/lcs.md")]
pub mod lcs {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
