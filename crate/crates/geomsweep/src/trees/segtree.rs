//! Segment tree for range-maximum queries with point updates.
//!
//! Leaves hold `(weight, id)` entries; internal nodes cache the best entry
//! of their subtree. The explicit negative-infinity sentinel marks an
//! inactive leaf and is never reported with an id.

use crate::{Error, Result};

/// A weight together with the identifier attaining it. The sentinel entry
/// has weight `-inf` and no id.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxEntry {
    pub weight: f64,
    pub id: Option<usize>,
}

impl MaxEntry {
    pub const NEG: MaxEntry = MaxEntry {
        weight: f64::NEG_INFINITY,
        id: None,
    };

    fn of(weight: f64, id: usize) -> MaxEntry {
        if weight == f64::NEG_INFINITY {
            MaxEntry::NEG
        } else {
            MaxEntry {
                weight,
                id: Some(id),
            }
        }
    }

    /// Larger weight wins; equal weights prefer the smaller id so that
    /// argmax results are deterministic.
    fn better(a: MaxEntry, b: MaxEntry) -> MaxEntry {
        if b.weight > a.weight || (b.weight == a.weight && b.id < a.id && b.id.is_some()) {
            b
        } else {
            a
        }
    }
}

/// Array-backed max segment tree over leaves sorted by `(key, id)`.
///
/// Duplicate keys are allowed; the id breaks ties in the leaf order, which
/// is what lets one leaf exist per point rather than per distinct
/// coordinate. Range queries address leaves through binary search on the
/// key array, so they see every point whose key falls in the closed range.
#[derive(Debug, Clone)]
pub(crate) struct MaxSegTree {
    keys: Vec<f64>,
    ids: Vec<usize>,
    tree: Vec<MaxEntry>, // 2n slots, leaves at n..2n
}

impl MaxSegTree {
    /// `entries` must be sorted by `(key, id)`.
    pub(crate) fn from_sorted_entries(entries: &[(f64, usize)]) -> MaxSegTree {
        debug_assert!(entries
            .windows(2)
            .all(|w| (w[0].0, w[0].1) <= (w[1].0, w[1].1)));
        let n = entries.len();
        MaxSegTree {
            keys: entries.iter().map(|e| e.0).collect(),
            ids: entries.iter().map(|e| e.1).collect(),
            tree: vec![MaxEntry::NEG; (2 * n).max(1)],
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.keys.len()
    }

    /// Leaf slot of `(key, id)`, if present.
    pub(crate) fn slot_of(&self, key: f64, id: usize) -> Option<usize> {
        let n = self.keys.len();
        let (mut lo, mut hi) = (0usize, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.keys[mid] < key || (self.keys[mid] == key && self.ids[mid] < id) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        (lo < n && self.keys[lo] == key && self.ids[lo] == id).then_some(lo)
    }

    pub(crate) fn set_slot(&mut self, slot: usize, weight: f64) {
        let n = self.len();
        let mut i = slot + n;
        self.tree[i] = MaxEntry::of(weight, self.ids[slot]);
        while i > 1 {
            i /= 2;
            self.tree[i] = MaxEntry::better(self.tree[2 * i], self.tree[2 * i + 1]);
        }
    }

    /// Max entry over leaf slots `[a, b)`.
    pub(crate) fn query_slots(&self, mut a: usize, mut b: usize) -> MaxEntry {
        let n = self.len();
        let mut best = MaxEntry::NEG;
        a += n;
        b += n;
        while a < b {
            if a & 1 == 1 {
                best = MaxEntry::better(best, self.tree[a]);
                a += 1;
            }
            if b & 1 == 1 {
                b -= 1;
                best = MaxEntry::better(best, self.tree[b]);
            }
            a /= 2;
            b /= 2;
        }
        best
    }

    /// Leaf slot range `[a, b)` of keys inside the closed range `[lo, hi]`.
    pub(crate) fn slot_range(&self, lo: f64, hi: f64) -> (usize, usize) {
        let a = self.keys.partition_point(|&k| k < lo);
        let b = self.keys.partition_point(|&k| k <= hi);
        (a, b)
    }

    pub(crate) fn query_range(&self, lo: f64, hi: f64) -> MaxEntry {
        let (a, b) = self.slot_range(lo, hi);
        if a >= b {
            return MaxEntry::NEG;
        }
        self.query_slots(a, b)
    }

    pub(crate) fn count_range(&self, lo: f64, hi: f64) -> usize {
        let (a, b) = self.slot_range(lo, hi);
        b.saturating_sub(a)
    }

    /// Recomputes every internal node from the leaves and compares; true
    /// when the cached aggregates are all consistent.
    pub(crate) fn audit(&self) -> bool {
        let n = self.len();
        for i in (1..n).rev() {
            let expect = MaxEntry::better(self.tree[2 * i], self.tree[2 * i + 1]);
            if self.tree[i] != expect {
                return false;
            }
        }
        true
    }
}

/// Segment tree over `u` sorted distinct coordinates, supporting point
/// updates keyed by coordinate and closed-range maximum queries.
///
/// All leaves start at the `-inf` sentinel. An update replaces the leaf's
/// weight (it does not accumulate); updating back to `-inf` deactivates the
/// leaf.
#[derive(Debug, Clone)]
pub struct SegmentTree {
    inner: MaxSegTree,
}

impl SegmentTree {
    /// Builds over strictly increasing coordinates.
    pub fn new(coords: &[f64]) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyDomain);
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("segment tree coordinates must be finite"));
        }
        if coords.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(
                "segment tree coordinates must be strictly increasing",
            ));
        }
        let entries: Vec<(f64, usize)> = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        Ok(SegmentTree {
            inner: MaxSegTree::from_sorted_entries(&entries),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Replaces the weight stored at `coord` with `weight` attained by `id`.
    pub fn update(&mut self, coord: f64, weight: f64, id: usize) -> Result<()> {
        let slot = self
            .inner
            .keys
            .binary_search_by(|k| k.total_cmp(&coord))
            .map_err(|_| Error::UnknownCoordinate(coord))?;
        let n = self.inner.len();
        self.inner.tree[slot + n] = MaxEntry::of(weight, id);
        let mut i = slot + n;
        while i > 1 {
            i /= 2;
            self.inner.tree[i] =
                MaxEntry::better(self.inner.tree[2 * i], self.inner.tree[2 * i + 1]);
        }
        Ok(())
    }

    /// Maximum weight (and attaining id) among leaves with coordinate in the
    /// closed range `[lo, hi]`; the sentinel when no active leaf is in range.
    pub fn query_max(&self, lo: f64, hi: f64) -> (f64, Option<usize>) {
        let e = self.inner.query_range(lo, hi);
        (e.weight, e.id)
    }

    /// Verifies every cached internal aggregate against its children.
    pub fn audit(&self) -> bool {
        self.inner.audit()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_single_leaf() {
        let t = SegmentTree::new(&[1.0]).unwrap();
        assert_eq!(
            t.query_max(f64::NEG_INFINITY, f64::INFINITY),
            (f64::NEG_INFINITY, None)
        );
    }

    #[test]
    fn build_validation() {
        assert!(matches!(SegmentTree::new(&[]), Err(Error::EmptyDomain)));
        assert!(SegmentTree::new(&[1.0, 1.0]).is_err());
        assert!(SegmentTree::new(&[2.0, 1.0]).is_err());
    }

    #[test]
    fn update_query_roundtrip() {
        let mut t = SegmentTree::new(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(t.query_max(1.0, 4.0), (f64::NEG_INFINITY, None));
        t.update(2.0, 7.5, 3).unwrap();
        assert_eq!(t.query_max(1.0, 4.0), (7.5, Some(3)));
        t.update(2.0, f64::NEG_INFINITY, 3).unwrap();
        assert_eq!(t.query_max(1.0, 4.0), (f64::NEG_INFINITY, None));
    }

    #[test]
    fn update_unknown_coordinate() {
        let mut t = SegmentTree::new(&[1.0, 2.0]).unwrap();
        assert!(matches!(
            t.update(1.5, 1.0, 0),
            Err(Error::UnknownCoordinate(_))
        ));
    }

    #[test]
    fn query_disjoint_range() {
        let mut t = SegmentTree::new(&[1.0, 2.0, 3.0]).unwrap();
        t.update(2.0, 5.0, 9).unwrap();
        assert_eq!(t.query_max(10.0, 20.0), (f64::NEG_INFINITY, None));
        assert_eq!(t.query_max(1.5, 2.5), (5.0, Some(9)));
    }

    #[test]
    fn random_workload_matches_scan_oracle() {
        let mut state = 0xdeadbeefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let coords: Vec<f64> = (0..64).map(|i| i as f64 * 0.5).collect();
        let mut t = SegmentTree::new(&coords).unwrap();
        let mut weights: Vec<(f64, Option<usize>)> = vec![(f64::NEG_INFINITY, None); coords.len()];

        for step in 0..1000 {
            let r = next();
            if r % 2 == 0 {
                let slot = (r / 2) as usize % coords.len();
                let w = if r % 16 == 0 {
                    f64::NEG_INFINITY
                } else {
                    ((r >> 7) % 1000) as f64 / 10.0
                };
                let id = (r >> 3) as usize % 50;
                t.update(coords[slot], w, id).unwrap();
                weights[slot] = if w == f64::NEG_INFINITY {
                    (f64::NEG_INFINITY, None)
                } else {
                    (w, Some(id))
                };
            } else {
                let a = (r >> 5) as usize % coords.len();
                let b = (r >> 11) as usize % coords.len();
                let (lo, hi) = (coords[a.min(b)], coords[a.max(b)]);
                // Linear-scan oracle over the mirrored weight array.
                let mut best = (f64::NEG_INFINITY, None);
                for (slot, &(w, id)) in weights.iter().enumerate() {
                    if coords[slot] >= lo
                        && coords[slot] <= hi
                        && (w > best.0 || (w == best.0 && id.is_some() && id < best.1))
                    {
                        best = (w, id);
                    }
                }
                assert_eq!(t.query_max(lo, hi), best, "step {step}");
            }
        }
        assert!(t.audit());
    }
}
