//! Containment analyses: which circles are nested inside which (for inputs
//! where every two circles are disjoint or nested), and box containment in
//! any dimension (partial overlaps allowed).
//!
//! Circles: each circle splits into a left and a right half-circle; if a
//! circle lies inside another, one of the half-circle pairs is nested too,
//! so sweeping the right halves left-to-right and the left halves
//! right-to-left finds every nested circle. The sweep keeps the disjoint
//! cross-section intervals of the live half-circles in a balanced tree and
//! compares a beginning half-circle's full-height interval against the
//! refreshed intervals it touches.
//!
//! Boxes: a sweep along the last dimension activates each box's
//! `(2d-2)`-dimensional corner point (weighted by its second-to-last upper
//! coordinate) in a range tree; a max-weight query at the box's closing
//! event decides whether some active box dominates it in every coordinate.
//! The counting variant skips the sweep entirely: it builds a `2d`-
//! dimensional range tree over full corner points and range-counts
//! dominance both ways.
//!
//! Containment is closed throughout: boundary contact counts, equal objects
//! contain each other, and an object never contains itself.

mod sweep_tree;

pub use sweep_tree::SweepIntervalTree;

use std::collections::BTreeSet;

use crate::geom::{Circle, HyperRect};
use crate::trees::{QueryBox, RangeTree, WeightedPoint};
use crate::{Error, Result, EPS_GEOM};

/// Per-object containment verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContainmentStatus {
    /// A witness container (smallest id among those found), or `None`.
    pub contained_by: Option<usize>,
    /// Whether this object is the reported witness container of some other.
    pub contains_another: bool,
}

/// Containment report for a whole input set, indexed like the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentReport {
    pub items: Vec<ContainmentStatus>,
}

impl ContainmentReport {
    pub fn is_contained(&self, i: usize) -> bool {
        self.items[i].contained_by.is_some()
    }

    /// Ids of all objects nested inside some other object.
    pub fn contained_ids(&self) -> Vec<usize> {
        (0..self.items.len())
            .filter(|&i| self.is_contained(i))
            .collect()
    }
}

/// Per-box containment counts under closed inclusion, self excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentCounts {
    /// For each box, the number of boxes containing it.
    pub num_containers: Vec<usize>,
    /// For each box, the number of boxes it contains.
    pub num_contained: Vec<usize>,
}

/// Which half of each circle is swept, and in which direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepDirection {
    /// Right half-circles, swept left to right.
    LeftToRight,
    /// Left half-circles, swept right to left.
    RightToLeft,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum CircleEventKind {
    // Ends sort before begins at equal coordinates, so a half-circle that
    // merely touches a beginning one at its vanishing point emits no fact.
    End,
    Begin,
}

/// One sweep pass over half-circles, returning `(inner, outer)` facts.
///
/// The input must be a laminar family (every two circles totally disjoint
/// or nested); partial overlaps produce unspecified facts and are expected
/// to be screened out by the caller or the test oracle, not detected here.
pub fn sweep_half_circles(
    circles: &[Circle],
    direction: SweepDirection,
) -> BTreeSet<(usize, usize)> {
    // Sweeping the left halves right-to-left is the mirror image (x -> -x)
    // of sweeping the right halves left-to-right, so one engine serves both.
    match direction {
        SweepDirection::LeftToRight => sweep_right_halves(circles.to_vec()),
        SweepDirection::RightToLeft => {
            let mirrored: Vec<Circle> = circles
                .iter()
                .map(|c| Circle::new(-c.cx(), c.cy(), c.r()).expect("mirrored circle is valid"))
                .collect();
            sweep_right_halves(mirrored)
        }
    }
}

fn sweep_right_halves(circles: Vec<Circle>) -> BTreeSet<(usize, usize)> {
    // closed-inclusion test on intervals, with slack for chord arithmetic
    fn included(inner: (f64, f64), outer: (f64, f64)) -> bool {
        outer.0 - EPS_GEOM <= inner.0 && inner.1 <= outer.1 + EPS_GEOM
    }

    let mut events: Vec<(f64, CircleEventKind, usize)> = Vec::with_capacity(circles.len() * 2);
    for (i, c) in circles.iter().enumerate() {
        events.push((c.cx(), CircleEventKind::Begin, i));
        events.push((c.cx() + c.r(), CircleEventKind::End, i));
    }
    // ends before begins; among equal kinds the smaller radius first
    events.sort_by(|a, b| {
        a.0.total_cmp(&b.0)
            .then(a.1.cmp(&b.1))
            .then(circles[a.2].r().total_cmp(&circles[b.2].r()))
            .then(a.2.cmp(&b.2))
    });

    let mut facts: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut tree = SweepIntervalTree::new();
    for (x, kind, i) in events {
        match kind {
            CircleEventKind::End => {
                tree.remove(i);
            }
            CircleEventKind::Begin => {
                let full = (
                    circles[i].cy() - circles[i].r(),
                    circles[i].cy() + circles[i].r(),
                );
                let mut swallowed = false;
                for j in tree.intersecting(full.0, full.1) {
                    tree.remove(j);
                    // Refresh j's cross-section at the current sweep position.
                    let cj = &circles[j];
                    let h = (cj.r() * cj.r() - (x - cj.cx()).powi(2)).max(0.0).sqrt();
                    let fresh = (cj.cy() - h, cj.cy() + h);
                    let j_in_i = included(fresh, full);
                    let i_in_j = included(full, fresh);
                    if j_in_i {
                        facts.insert((j, i));
                    }
                    if i_in_j {
                        facts.insert((i, j));
                        swallowed = true;
                    }
                    // A strictly swallowed interval is pruned; everything
                    // else returns with its refreshed extent.
                    if !j_in_i || i_in_j {
                        tree.insert(fresh.0, fresh.1, j);
                    }
                }
                // A zero-radius half-circle ends the instant it begins (its
                // end event was already processed); it must not linger.
                if !swallowed && full.1 > full.0 {
                    tree.insert(full.0, full.1, i);
                }
                debug_assert!(tree.is_disjoint(), "sweep intervals overlapped at x = {x}");
            }
        }
    }
    facts
}

/// Full circle containment: both sweep passes, merged into a report.
///
/// For every nested circle at least one pass finds a container; the witness
/// is the smallest-id container found.
pub fn circle_containment(circles: &[Circle]) -> ContainmentReport {
    let mut facts = sweep_half_circles(circles, SweepDirection::LeftToRight);
    facts.extend(sweep_half_circles(circles, SweepDirection::RightToLeft));

    let mut items = vec![
        ContainmentStatus {
            contained_by: None,
            contains_another: false,
        };
        circles.len()
    ];
    for &(inner, outer) in &facts {
        debug_assert!(inner != outer);
        let slot = &mut items[inner].contained_by;
        if slot.is_none_or(|cur| outer < cur) {
            *slot = Some(outer);
        }
        // every verified container is flagged, witness or not
        items[outer].contains_another = true;
    }

    // Exact duplicates contain each other; the interval rules catch them
    // for positive radii, and this pass also covers coinciding point
    // circles whose intervals never enter the tree.
    let mut order: Vec<usize> = (0..circles.len()).collect();
    order.sort_by(|&a, &b| {
        circles[a]
            .cx()
            .total_cmp(&circles[b].cx())
            .then(circles[a].cy().total_cmp(&circles[b].cy()))
            .then(circles[a].r().total_cmp(&circles[b].r()))
            .then(a.cmp(&b))
    });
    let same = |a: usize, b: usize| circles[a] == circles[b];
    let mut g = 0;
    while g < order.len() {
        let mut h = g + 1;
        while h < order.len() && same(order[g], order[h]) {
            h += 1;
        }
        if h - g >= 2 {
            let min_id = order[g..h].iter().copied().min().unwrap();
            for &i in &order[g..h] {
                let witness = if i == min_id {
                    order[g..h]
                        .iter()
                        .copied()
                        .filter(|&j| j != i)
                        .min()
                        .unwrap()
                } else {
                    min_id
                };
                let slot = &mut items[i].contained_by;
                if slot.is_none_or(|cur| witness < cur) {
                    *slot = Some(witness);
                }
                items[i].contains_another = true;
            }
        }
        g = h;
    }
    ContainmentReport { items }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum RectEventKind {
    // Activations first, then queries (each excluding itself), then the
    // permanent deactivations: boxes sharing the event coordinate stay
    // mutually visible.
    Activate,
    Query,
    Deactivate,
}

/// For each box, a witness box containing it (closed inclusion in all `d`
/// dimensions), found by the range-tree sweep along dimension `d`.
pub fn rect_containment(boxes: &[HyperRect], d: usize) -> Result<ContainmentReport> {
    if d == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    for b in boxes {
        if b.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: b.dim(),
            });
        }
    }
    let n = boxes.len();
    let mut items = vec![
        ContainmentStatus {
            contained_by: None,
            contains_another: false,
        };
        n
    ];

    if n > 1 {
        if d == 1 {
            rect_containment_1d(boxes, &mut items);
        } else {
            rect_containment_sweep(boxes, d, &mut items)?;
        }
    }

    for status in items.clone() {
        if let Some(outer) = status.contained_by {
            items[outer].contains_another = true;
        }
    }
    Ok(ContainmentReport { items })
}

/// `d == 1` has no `(2d-2)`-dimensional structure left; a sort with a
/// running best-right-endpoint does the job.
fn rect_containment_1d(boxes: &[HyperRect], items: &mut [ContainmentStatus]) {
    let n = boxes.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        boxes[a].lo()[0]
            .total_cmp(&boxes[b].lo()[0])
            .then(boxes[b].hi()[0].total_cmp(&boxes[a].hi()[0]))
            .then(a.cmp(&b))
    });
    let mut best: Option<(f64, usize)> = None; // (largest hi so far, smallest id)
    for &i in &order {
        let hi = boxes[i].hi()[0];
        if let Some((bh, bid)) = best {
            if bh >= hi {
                items[i].contained_by = Some(bid);
            }
        }
        if best.is_none_or(|(bh, bid)| hi > bh || (hi == bh && i < bid)) {
            best = Some((hi, i));
        }
    }
    // Exact duplicates contain each other, but the linear pass only looks
    // backwards; fix up every duplicate group.
    let mut g = 0;
    while g < n {
        let mut h = g + 1;
        let key = (boxes[order[g]].lo()[0], boxes[order[g]].hi()[0]);
        while h < n && (boxes[order[h]].lo()[0], boxes[order[h]].hi()[0]) == key {
            h += 1;
        }
        if h - g >= 2 {
            let min_id = order[g..h].iter().copied().min().unwrap();
            for &i in &order[g..h] {
                let witness = if i == min_id {
                    order[g..h]
                        .iter()
                        .copied()
                        .filter(|&j| j != i)
                        .min()
                        .unwrap()
                } else {
                    min_id
                };
                let slot = &mut items[i].contained_by;
                if slot.is_none_or(|cur| witness < cur) {
                    *slot = Some(witness);
                }
            }
        }
        g = h;
    }
}

fn rect_containment_sweep(
    boxes: &[HyperRect],
    d: usize,
    items: &mut [ContainmentStatus],
) -> Result<()> {
    let k = 2 * d - 2;
    let points: Vec<WeightedPoint> = boxes
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let mut coords = Vec::with_capacity(k);
            coords.extend_from_slice(b.lo());
            coords.extend_from_slice(&b.hi()[..d - 2]);
            WeightedPoint::inactive(coords, i)
        })
        .collect::<Result<_>>()?;
    let mut rt = RangeTree::new(points, k)?;

    let mut events: Vec<(f64, RectEventKind, usize)> = Vec::with_capacity(boxes.len() * 3);
    for (i, b) in boxes.iter().enumerate() {
        events.push((b.lo()[d - 1], RectEventKind::Activate, i));
        events.push((b.hi()[d - 1], RectEventKind::Query, i));
        events.push((b.hi()[d - 1], RectEventKind::Deactivate, i));
    }
    events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    for (_, kind, i) in events {
        let weight = boxes[i].hi()[d - 2];
        match kind {
            RectEventKind::Activate => rt.set_weight(i, weight)?,
            RectEventKind::Deactivate => rt.set_weight(i, f64::NEG_INFINITY)?,
            RectEventKind::Query => {
                // The box itself always satisfies its own query ranges, so
                // blank it out for the duration of the query.
                rt.set_weight(i, f64::NEG_INFINITY)?;
                let mut ranges = Vec::with_capacity(k);
                for c in 0..d {
                    ranges.push((f64::NEG_INFINITY, boxes[i].lo()[c]));
                }
                for c in 0..d - 2 {
                    ranges.push((boxes[i].hi()[c], f64::INFINITY));
                }
                let (mw, arg) = rt.query_max(&QueryBox::new(ranges)?);
                if mw >= weight {
                    items[i].contained_by = arg;
                }
                rt.set_weight(i, weight)?;
            }
        }
    }
    Ok(())
}

/// For each box, how many boxes contain it and how many it contains, via
/// dominance counting on the `2d`-dimensional corner points.
pub fn rect_containment_counts(boxes: &[HyperRect], d: usize) -> Result<ContainmentCounts> {
    if d == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    for b in boxes {
        if b.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: b.dim(),
            });
        }
    }
    let n = boxes.len();
    if n == 0 {
        return Ok(ContainmentCounts {
            num_containers: Vec::new(),
            num_contained: Vec::new(),
        });
    }

    let k = 2 * d;
    let points: Vec<WeightedPoint> = boxes
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let mut coords = Vec::with_capacity(k);
            coords.extend_from_slice(b.lo());
            coords.extend_from_slice(b.hi());
            WeightedPoint::inactive(coords, i)
        })
        .collect::<Result<_>>()?;
    let rt = RangeTree::new(points, k)?;

    let mut num_containers = Vec::with_capacity(n);
    let mut num_contained = Vec::with_capacity(n);
    for b in boxes {
        let mut containers = Vec::with_capacity(k);
        let mut contained = Vec::with_capacity(k);
        for c in 0..d {
            containers.push((f64::NEG_INFINITY, b.lo()[c]));
            contained.push((b.lo()[c], f64::INFINITY));
        }
        for c in 0..d {
            containers.push((b.hi()[c], f64::INFINITY));
            contained.push((f64::NEG_INFINITY, b.hi()[c]));
        }
        // Each query matches the box itself; subtract it.
        num_containers.push(rt.count(&QueryBox::new(containers)?) - 1);
        num_contained.push(rt.count(&QueryBox::new(contained)?) - 1);
    }
    Ok(ContainmentCounts {
        num_containers,
        num_contained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::oracle::oracle_circle_containment_pairs;

    fn c(cx: f64, cy: f64, r: f64) -> Circle {
        Circle::new(cx, cy, r).unwrap()
    }

    fn rect(lo: &[f64], hi: &[f64]) -> HyperRect {
        HyperRect::new(lo.to_vec(), hi.to_vec()).unwrap()
    }

    #[test]
    fn concentric_circles_found() {
        let circles = [c(0.0, 0.0, 5.0), c(0.0, 0.0, 2.0)];
        let facts_lr = sweep_half_circles(&circles, SweepDirection::LeftToRight);
        let facts_rl = sweep_half_circles(&circles, SweepDirection::RightToLeft);
        assert!(facts_lr.contains(&(1, 0)) || facts_rl.contains(&(1, 0)));
    }

    #[test]
    fn disjoint_circles_no_facts() {
        let circles = [c(0.0, 0.0, 1.0), c(5.0, 0.0, 1.0)];
        assert!(sweep_half_circles(&circles, SweepDirection::LeftToRight).is_empty());
        assert!(sweep_half_circles(&circles, SweepDirection::RightToLeft).is_empty());
    }

    #[test]
    fn nested_chain_report() {
        let circles = [c(0.0, 0.0, 8.0), c(0.0, 0.0, 4.0), c(0.0, 0.0, 2.0)];
        let report = circle_containment(&circles);
        assert!(!report.is_contained(0));
        assert!(report.is_contained(1));
        assert!(report.is_contained(2));
        assert!(report.items[0].contains_another);
        assert_eq!(report.contained_ids(), vec![1, 2]);
    }

    #[test]
    fn off_center_nesting_found() {
        // inner circles sitting left and right of the outer center
        let circles = [c(0.0, 0.0, 10.0), c(-6.0, 1.0, 2.0), c(6.0, -2.0, 2.5)];
        let report = circle_containment(&circles);
        assert_eq!(report.contained_ids(), vec![1, 2]);
        assert_eq!(report.items[1].contained_by, Some(0));
        assert_eq!(report.items[2].contained_by, Some(0));
    }

    #[test]
    fn laminar_families_match_pairwise_oracle() {
        for seed in 0..15u64 {
            let circles = gen::laminar_circles(seed, 50);
            let report = circle_containment(&circles);
            let pairs = oracle_circle_containment_pairs(&circles);
            let oracle_contained: Vec<usize> = (0..circles.len())
                .filter(|&i| pairs.iter().any(|&(inner, _)| inner == i))
                .collect();
            assert_eq!(
                report.contained_ids(),
                oracle_contained,
                "seed {seed}: contained sets differ"
            );
            // every witness is geometrically valid
            for (i, status) in report.items.iter().enumerate() {
                if let Some(outer) = status.contained_by {
                    assert!(circles[outer].contains_circle(&circles[i], EPS_GEOM));
                }
            }
        }
    }

    #[test]
    fn circle_report_translation_invariant() {
        let circles = gen::laminar_circles(3, 40);
        let report = circle_containment(&circles);
        let moved: Vec<Circle> = circles
            .iter()
            .map(|k| c(k.cx() + 123.5, k.cy() - 77.25, k.r()))
            .collect();
        let report_moved = circle_containment(&moved);
        assert_eq!(report.contained_ids(), report_moved.contained_ids());
    }

    #[test]
    fn circle_report_permutation_invariant() {
        let circles = gen::laminar_circles(6, 30);
        let base: Vec<usize> = circle_containment(&circles).contained_ids();

        // rotate the input; map the reported ids back through the rotation
        let k = 11 % circles.len();
        let mut rotated = circles.clone();
        rotated.rotate_left(k);
        let mut mapped: Vec<usize> = circle_containment(&rotated)
            .contained_ids()
            .iter()
            .map(|&i| (i + k) % circles.len())
            .collect();
        mapped.sort_unstable();
        assert_eq!(base, mapped);
    }

    #[test]
    fn zero_radius_circles() {
        // a point circle far from a disjoint circle must produce no facts
        let circles = [c(0.0, 0.0, 0.0), c(5.0, 0.0, 1.0)];
        let report = circle_containment(&circles);
        assert!(report.contained_ids().is_empty(), "{:?}", report.items);

        // a point circle inside a disk is contained
        let circles = [c(0.0, 0.0, 5.0), c(1.0, 0.0, 0.0)];
        let report = circle_containment(&circles);
        assert_eq!(report.items[1].contained_by, Some(0));
        assert!(!report.is_contained(0));

        // identical point circles contain each other (closed semantics)
        let circles = [c(2.0, 3.0, 0.0), c(2.0, 3.0, 0.0)];
        let report = circle_containment(&circles);
        assert_eq!(report.items[0].contained_by, Some(1));
        assert_eq!(report.items[1].contained_by, Some(0));
    }

    #[test]
    fn identical_circles_mutual() {
        let circles = [c(1.0, 1.0, 2.0), c(1.0, 1.0, 2.0), c(9.0, 9.0, 1.0)];
        let report = circle_containment(&circles);
        assert_eq!(report.items[0].contained_by, Some(1));
        assert_eq!(report.items[1].contained_by, Some(0));
        assert_eq!(report.items[2].contained_by, None);
    }

    #[test]
    fn rect_simple_cases() {
        let report = rect_containment(
            &[
                rect(&[0.0, 0.0], &[10.0, 10.0]),
                rect(&[2.0, 2.0], &[3.0, 3.0]),
            ],
            2,
        )
        .unwrap();
        assert_eq!(report.items[1].contained_by, Some(0));
        assert!(report.items[0].contains_another);
        assert!(!report.is_contained(0));

        let report = rect_containment(
            &[
                rect(&[0.0, 0.0], &[1.0, 1.0]),
                rect(&[5.0, 5.0], &[6.0, 6.0]),
            ],
            2,
        )
        .unwrap();
        assert!(report.contained_ids().is_empty());
    }

    #[test]
    fn equal_rects_mutually_contain() {
        let b = rect(&[1.0, 2.0], &[3.0, 4.0]);
        let report = rect_containment(&[b.clone(), b.clone()], 2).unwrap();
        assert_eq!(report.items[0].contained_by, Some(1));
        assert_eq!(report.items[1].contained_by, Some(0));

        let counts = rect_containment_counts(&[b.clone(), b], 2).unwrap();
        assert_eq!(counts.num_containers, vec![1, 1]);
        assert_eq!(counts.num_contained, vec![1, 1]);
    }

    #[test]
    fn counts_simple_pair() {
        let a = rect(&[0.0, 0.0], &[10.0, 10.0]);
        let b = rect(&[2.0, 2.0], &[3.0, 3.0]);
        let counts = rect_containment_counts(&[a, b], 2).unwrap();
        assert_eq!(counts.num_containers, vec![0, 1]);
        assert_eq!(counts.num_contained, vec![1, 0]);
    }

    #[test]
    fn rect_1d_fallback() {
        let boxes = [
            rect(&[0.0], &[10.0]),
            rect(&[1.0], &[4.0]),
            rect(&[5.0], &[12.0]),
            rect(&[1.0], &[4.0]),
        ];
        let report = rect_containment(&boxes, 1).unwrap();
        assert_eq!(report.items[0].contained_by, None);
        assert_eq!(report.items[1].contained_by, Some(0));
        assert_eq!(report.items[2].contained_by, None);
        assert!(report.is_contained(3), "duplicate interval is contained");
        let counts = rect_containment_counts(&boxes, 1).unwrap();
        assert_eq!(counts.num_containers, vec![0, 2, 0, 2]);
        let total_a: usize = counts.num_containers.iter().sum();
        let total_b: usize = counts.num_contained.iter().sum();
        assert_eq!(total_a, total_b);
    }

    fn pairwise_rect_oracle(boxes: &[HyperRect]) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for i in 0..boxes.len() {
            for j in 0..boxes.len() {
                if i != j && boxes[j].contains_rect(&boxes[i]) {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    #[test]
    fn random_boxes_match_oracle_all_dims() {
        for d in 1..=3usize {
            for seed in 0..6u64 {
                let boxes = gen::boxes(seed * 31 + d as u64, 60, d, 20.0, 8.0);
                let report = rect_containment(&boxes, d).unwrap();
                let counts = rect_containment_counts(&boxes, d).unwrap();
                let oracle = pairwise_rect_oracle(&boxes);

                for i in 0..boxes.len() {
                    let oracle_contained = oracle.iter().any(|&(inner, _)| inner == i);
                    assert_eq!(
                        report.is_contained(i),
                        oracle_contained,
                        "d={d} seed={seed} box {i}"
                    );
                    let oracle_containers = oracle.iter().filter(|&&(inner, _)| inner == i).count();
                    let oracle_contained_count =
                        oracle.iter().filter(|&&(_, outer)| outer == i).count();
                    assert_eq!(counts.num_containers[i], oracle_containers);
                    assert_eq!(counts.num_contained[i], oracle_contained_count);
                    // cross-operation consistency
                    assert_eq!(report.is_contained(i), counts.num_containers[i] >= 1);
                    // witnesses are geometrically valid
                    if let Some(w) = report.items[i].contained_by {
                        assert!(boxes[w].contains_rect(&boxes[i]));
                    }
                }
                let sum_a: usize = counts.num_containers.iter().sum();
                let sum_b: usize = counts.num_contained.iter().sum();
                assert_eq!(sum_a, sum_b);
            }
        }
    }

    #[test]
    fn empty_and_single_inputs() {
        assert!(circle_containment(&[]).items.is_empty());
        assert!(rect_containment(&[], 2).unwrap().items.is_empty());
        let counts = rect_containment_counts(&[], 3).unwrap();
        assert!(counts.num_containers.is_empty());
        let single = rect_containment(&[rect(&[0.0], &[1.0])], 1).unwrap();
        assert_eq!(single.items[0].contained_by, None);
    }
}
