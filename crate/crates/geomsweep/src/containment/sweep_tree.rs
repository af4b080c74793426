//! Ordered set of disjoint sweep-line intervals, keyed by left endpoint.
//!
//! Because the stored intervals are pairwise disjoint, the tree behaves as
//! if only the left endpoints were stored: predecessor/successor walks by
//! left endpoint enumerate exactly the intervals a probe range can touch.

use std::collections::{BTreeMap, HashMap};
use std::ops::Bound;

/// Total-ordered f64 key (inputs are validated finite; NaN never enters).
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct TotalF64(pub f64);

impl Eq for TotalF64 {}

impl PartialOrd for TotalF64 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TotalF64 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

type Key = (TotalF64, usize);

/// Disjoint intervals on the sweep line, each owned by one half-circle id.
#[derive(Debug, Default)]
pub struct SweepIntervalTree {
    map: BTreeMap<Key, f64>,
    key_of: HashMap<usize, Key>,
}

impl SweepIntervalTree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Inserts `[lo, hi]` for `owner`. The owner must not be present.
    pub fn insert(&mut self, lo: f64, hi: f64, owner: usize) {
        debug_assert!(lo <= hi);
        let key = (TotalF64(lo), owner);
        let prev = self.map.insert(key, hi);
        debug_assert!(prev.is_none(), "owner {owner} inserted twice");
        self.key_of.insert(owner, key);
    }

    /// Removes `owner`'s interval, returning it if present.
    pub fn remove(&mut self, owner: usize) -> Option<(f64, f64)> {
        let key = self.key_of.remove(&owner)?;
        let hi = self.map.remove(&key).expect("key map in sync");
        Some((key.0 .0, hi))
    }

    pub fn get(&self, owner: usize) -> Option<(f64, f64)> {
        let key = self.key_of.get(&owner)?;
        Some((key.0 .0, self.map[key]))
    }

    /// Owners of every stored interval that intersects `[lo, hi]`, in left-
    /// endpoint order: the predecessor by left endpoint (when it reaches
    /// into the range) followed by the successors whose left endpoint is
    /// still inside.
    pub fn intersecting(&self, lo: f64, hi: f64) -> Vec<usize> {
        let mut out = Vec::new();
        let anchor: Key = (TotalF64(lo), usize::MAX);
        if let Some((&(_, owner), &stored_hi)) = self.map.range(..=anchor).next_back() {
            if stored_hi >= lo {
                out.push(owner);
            }
        }
        for (&(k, owner), _) in self.map.range((Bound::Excluded(anchor), Bound::Unbounded)) {
            if k.0 > hi {
                break;
            }
            out.push(owner);
        }
        out
    }

    /// All stored intervals in key order, for audits.
    pub fn intervals(&self) -> Vec<(f64, f64, usize)> {
        self.map
            .iter()
            .map(|(&(lo, owner), &hi)| (lo.0, hi, owner))
            .collect()
    }

    /// True when no two stored intervals overlap in more than a point.
    pub fn is_disjoint(&self) -> bool {
        let ivs = self.intervals();
        ivs.windows(2).all(|w| w[0].1 <= w[1].0)
    }
}
