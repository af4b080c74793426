//! Range-aggregation trees: the segment tree (range max, point update) and
//! the k-dimensional range tree built on top of it.

mod rangetree;
mod segtree;

pub use rangetree::{QueryBox, QueryVisits, RangeTree, WeightedPoint};
pub use segtree::SegmentTree;

pub(crate) use segtree::MaxSegTree;
