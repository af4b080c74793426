//! Multidimensional range tree with nested per-node structures.
//!
//! A `k`-dimensional tree (`k >= 2`) is a balanced binary tree over the
//! k-th coordinate, points sorted from the leftmost leaf. Every node stores
//! a `(k-1)`-dimensional tree over its subtree's points; at `k == 2` the
//! nested structure is a segment tree over the first coordinate. A point
//! therefore appears in the nested structure of every node on its
//! leaf-to-root path, at every level.
//!
//! The structure is static after build: points are activated and
//! deactivated by toggling their weight between a finite value and the
//! `-inf` sentinel. No fractional cascading is used.

use std::collections::HashMap;

use super::segtree::{MaxEntry, MaxSegTree};
use crate::{Error, Result};

/// A point with `k` coordinates, a weight (finite or the `-inf` sentinel),
/// and a caller-chosen unique id.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedPoint {
    coords: Vec<f64>,
    weight: f64,
    id: usize,
}

impl WeightedPoint {
    pub fn new(coords: Vec<f64>, weight: f64, id: usize) -> Result<Self> {
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("point coordinates must be finite"));
        }
        if weight.is_nan() || weight == f64::INFINITY {
            return Err(Error::invalid("weight must be finite or the -inf sentinel"));
        }
        Ok(WeightedPoint { coords, weight, id })
    }

    /// A point starting at the `-inf` sentinel (inactive).
    pub fn inactive(coords: Vec<f64>, id: usize) -> Result<Self> {
        WeightedPoint::new(coords, f64::NEG_INFINITY, id)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn id(&self) -> usize {
        self.id
    }
}

/// A closed query box: one `(lo, hi)` range per dimension, endpoints real or
/// infinite.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryBox {
    ranges: Vec<(f64, f64)>,
}

impl QueryBox {
    pub fn new(ranges: Vec<(f64, f64)>) -> Result<Self> {
        for &(lo, hi) in &ranges {
            if lo.is_nan() || hi.is_nan() {
                return Err(Error::invalid("query range endpoints must not be NaN"));
            }
            if lo > hi {
                return Err(Error::invalid(format!(
                    "query range has inverted endpoints: {lo} > {hi}"
                )));
            }
        }
        Ok(QueryBox { ranges })
    }

    /// The all-space box in `k` dimensions.
    pub fn full(k: usize) -> Self {
        QueryBox {
            ranges: vec![(f64::NEG_INFINITY, f64::INFINITY); k],
        }
    }

    pub fn ranges(&self) -> &[(f64, f64)] {
        &self.ranges
    }

    pub fn dim(&self) -> usize {
        self.ranges.len()
    }
}

enum Nested {
    /// Root of the tree one dimension down.
    Level(Box<Node>),
    /// Dimension-0 leaves, at the bottom of the nesting.
    Seg(MaxSegTree),
}

struct Node {
    dim: usize,
    key_min: f64,
    key_max: f64,
    /// Largest `(key, id)` in the left child; descent guide for updates.
    split: Option<(f64, usize)>,
    nested: Nested,
    children: Option<(Box<Node>, Box<Node>)>,
}

/// Counters filled by the instrumented query, for structural tests.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryVisits {
    /// Tree nodes touched across all levels (segment-tree nodes excluded).
    pub total_nodes: usize,
    /// Largest node count of any single-level traversal.
    pub max_single_level: usize,
}

/// The k-dimensional range tree (`k >= 2`). See the module docs.
pub struct RangeTree {
    k: usize,
    points: Vec<WeightedPoint>,
    by_id: HashMap<usize, usize>,
    root: Node,
}

impl RangeTree {
    pub fn new(points: Vec<WeightedPoint>, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::invalid(
                "range tree needs k >= 2; use SegmentTree for one dimension",
            ));
        }
        if points.is_empty() {
            return Err(Error::invalid("range tree needs at least one point"));
        }
        for p in &points {
            if p.coords.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    got: p.coords.len(),
                });
            }
        }
        let mut by_id = HashMap::with_capacity(points.len());
        for (slot, p) in points.iter().enumerate() {
            if by_id.insert(p.id, slot).is_some() {
                return Err(Error::invalid(format!("duplicate point id {}", p.id)));
            }
        }
        let mut slots: Vec<usize> = (0..points.len()).collect();
        sort_slots(&points, &mut slots, k - 1);
        let root = build_level(&points, &mut slots, k - 1);
        Ok(RangeTree {
            k,
            points,
            by_id,
            root,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Replaces the weight of the point with the given id everywhere it is
    /// stored (last write wins).
    pub fn set_weight(&mut self, id: usize, weight: f64) -> Result<()> {
        if weight.is_nan() || weight == f64::INFINITY {
            return Err(Error::invalid("weight must be finite or the -inf sentinel"));
        }
        let slot = *self.by_id.get(&id).ok_or(Error::UnknownPoint(id))?;
        self.points[slot].weight = weight;
        update_level(&mut self.root, &self.points[slot], weight);
        Ok(())
    }

    /// Maximum weight (and attaining id) over active points inside the
    /// closed box; the sentinel pair when the box holds no active point.
    pub fn query_max(&self, query: &QueryBox) -> (f64, Option<usize>) {
        self.query_max_instrumented(query).0
    }

    /// As [`query_max`](Self::query_max), also reporting node-visit counts.
    pub fn query_max_instrumented(&self, query: &QueryBox) -> ((f64, Option<usize>), QueryVisits) {
        assert_eq!(query.dim(), self.k, "query box dimension mismatch");
        let mut visits = QueryVisits::default();
        let e = query_level(&self.root, query, &mut visits, |seg, lo, hi| {
            seg.query_range(lo, hi)
        });
        ((e.weight, e.id), visits)
    }

    /// Number of points (active or not) inside the closed box.
    pub fn count(&self, query: &QueryBox) -> usize {
        assert_eq!(query.dim(), self.k, "query box dimension mismatch");
        let mut visits = QueryVisits::default();
        count_level(&self.root, query, &mut visits)
    }

    /// Recomputes every cached aggregate bottom-up and checks it, at every
    /// level of nesting.
    pub fn audit(&self) -> bool {
        audit_node(&self.root)
    }

    /// Total segment-tree leaf slots across all nodes: a structural
    /// diagnostic (`Theta(n log n)` for `k == 2`).
    pub fn seg_leaf_slots(&self) -> usize {
        count_slots(&self.root)
    }
}

fn count_slots(node: &Node) -> usize {
    let own = match &node.nested {
        Nested::Seg(seg) => seg.len(),
        Nested::Level(level) => count_slots(level),
    };
    match &node.children {
        Some((left, right)) => own + count_slots(left) + count_slots(right),
        None => own,
    }
}

fn sort_slots(points: &[WeightedPoint], slots: &mut [usize], dim: usize) {
    slots.sort_unstable_by(|&a, &b| {
        points[a].coords[dim]
            .total_cmp(&points[b].coords[dim])
            .then(points[a].id.cmp(&points[b].id))
    });
}

/// Builds the tree for one level; `slots` must already be sorted by
/// `(coords[dim], id)`.
fn build_level(points: &[WeightedPoint], slots: &mut [usize], dim: usize) -> Node {
    let nested = if dim == 1 {
        let mut inner: Vec<usize> = slots.to_vec();
        sort_slots(points, &mut inner, 0);
        let entries: Vec<(f64, usize)> = inner
            .iter()
            .map(|&s| (points[s].coords[0], points[s].id))
            .collect();
        let mut seg = MaxSegTree::from_sorted_entries(&entries);
        for (leaf, &s) in inner.iter().enumerate() {
            if points[s].weight != f64::NEG_INFINITY {
                seg.set_slot(leaf, points[s].weight);
            }
        }
        Nested::Seg(seg)
    } else {
        let mut inner: Vec<usize> = slots.to_vec();
        sort_slots(points, &mut inner, dim - 1);
        Nested::Level(Box::new(build_level(points, &mut inner, dim - 1)))
    };

    let key_min = points[slots[0]].coords[dim];
    let key_max = points[slots[slots.len() - 1]].coords[dim];
    let (split, children) = if slots.len() > 1 {
        let mid = slots.len() / 2;
        let split_slot = slots[mid - 1];
        let split = (points[split_slot].coords[dim], points[split_slot].id);
        let (left, right) = slots.split_at_mut(mid);
        let l = build_level(points, left, dim);
        let r = build_level(points, right, dim);
        (Some(split), Some((Box::new(l), Box::new(r))))
    } else {
        (None, None)
    };

    Node {
        dim,
        key_min,
        key_max,
        split,
        nested,
        children,
    }
}

fn update_level(node: &mut Node, point: &WeightedPoint, weight: f64) {
    match &mut node.nested {
        Nested::Seg(seg) => {
            let leaf = seg
                .slot_of(point.coords[0], point.id)
                .expect("point present in every node on its path");
            seg.set_slot(leaf, weight);
        }
        Nested::Level(level) => update_level(level, point, weight),
    }
    if let Some((left, right)) = &mut node.children {
        let key = (point.coords[node.dim], point.id);
        let split = node.split.expect("internal node has a split");
        if key <= split {
            update_level(left, point, weight);
        } else {
            update_level(right, point, weight);
        }
    }
}

/// Canonical decomposition over one level: prune disjoint subtrees, take
/// fully covered subtrees whole (querying their nested structure), and
/// expand partly covered ones.
fn query_level<F>(root: &Node, query: &QueryBox, visits: &mut QueryVisits, seg_query: F) -> MaxEntry
where
    F: Fn(&MaxSegTree, f64, f64) -> MaxEntry + Copy,
{
    let mut local = 0usize;
    let result = query_walk(root, query, visits, &mut local, seg_query);
    visits.max_single_level = visits.max_single_level.max(local);
    result
}

fn query_walk<F>(
    node: &Node,
    query: &QueryBox,
    visits: &mut QueryVisits,
    local: &mut usize,
    seg_query: F,
) -> MaxEntry
where
    F: Fn(&MaxSegTree, f64, f64) -> MaxEntry + Copy,
{
    *local += 1;
    visits.total_nodes += 1;
    let (lo, hi) = query.ranges()[node.dim];
    if node.key_max < lo || node.key_min > hi {
        return MaxEntry::NEG;
    }
    if lo <= node.key_min && node.key_max <= hi {
        return match &node.nested {
            Nested::Seg(seg) => {
                let (slo, shi) = query.ranges()[0];
                seg_query(seg, slo, shi)
            }
            Nested::Level(level) => query_level(level, query, visits, seg_query),
        };
    }
    match &node.children {
        Some((left, right)) => {
            let a = query_walk(left, query, visits, local, seg_query);
            let b = query_walk(right, query, visits, local, seg_query);
            if b.weight > a.weight || (b.weight == a.weight && b.id < a.id && b.id.is_some()) {
                b
            } else {
                a
            }
        }
        // A leaf's key range is a single value, so the checks above always
        // resolve it; partial overlap cannot reach here.
        None => MaxEntry::NEG,
    }
}

fn count_level(root: &Node, query: &QueryBox, visits: &mut QueryVisits) -> usize {
    let mut local = 0usize;
    let result = count_walk(root, query, visits, &mut local);
    visits.max_single_level = visits.max_single_level.max(local);
    result
}

fn count_walk(node: &Node, query: &QueryBox, visits: &mut QueryVisits, local: &mut usize) -> usize {
    *local += 1;
    visits.total_nodes += 1;
    let (lo, hi) = query.ranges()[node.dim];
    if node.key_max < lo || node.key_min > hi {
        return 0;
    }
    if lo <= node.key_min && node.key_max <= hi {
        return match &node.nested {
            Nested::Seg(seg) => {
                let (slo, shi) = query.ranges()[0];
                seg.count_range(slo, shi)
            }
            Nested::Level(level) => count_level(level, query, visits),
        };
    }
    match &node.children {
        Some((left, right)) => {
            count_walk(left, query, visits, local) + count_walk(right, query, visits, local)
        }
        None => 0,
    }
}

fn audit_node(node: &Node) -> bool {
    let nested_ok = match &node.nested {
        Nested::Seg(seg) => seg.audit(),
        Nested::Level(level) => audit_node(level),
    };
    let children_ok = match &node.children {
        Some((left, right)) => audit_node(left) && audit_node(right),
        None => true,
    };
    nested_ok && children_ok
}
