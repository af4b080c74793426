//! Property tests for the crate-wide invariants that hold on arbitrary
//! inputs, not just the seeded corpora.

use proptest::prelude::*;

use geomsweep::geom::{
    cover_interval, triangulate_polygon, union_of_intervals, Circle, HyperRect, Interval,
};
use geomsweep::hyperrect::{union_area_2d, union_volume};
use geomsweep::EPS_COV;

fn interval_strategy(span: f64) -> impl Strategy<Value = Interval> {
    (0.0..span, 0.0..3.0f64)
        .prop_map(move |(lo, len)| Interval::new(lo, (lo + len).min(span)).unwrap())
}

proptest! {
    /// Coverage and union are consistent: if the pieces cover the target,
    /// the union restricted to the target is as long as the target (up to
    /// the coverage slack); gaps are disjoint, inside the target, and all
    /// longer than the slack.
    #[test]
    fn coverage_union_consistency(pieces in prop::collection::vec(interval_strategy(10.0), 0..40)) {
        let target = Interval::new(0.0, 10.0).unwrap();
        let coverage = cover_interval(&target, &pieces);

        for w in coverage.gaps.windows(2) {
            prop_assert!(w[0].hi() <= w[1].lo());
        }
        for g in &coverage.gaps {
            prop_assert!(g.lo() >= target.lo() && g.hi() <= target.hi());
            prop_assert!(g.len() > EPS_COV);
        }
        prop_assert_eq!(coverage.covered, coverage.gaps.is_empty());

        let clipped_union: f64 = union_of_intervals(&pieces)
            .iter()
            .map(|s| (s.hi.min(target.hi()) - s.lo.max(target.lo())).max(0.0))
            .sum();
        if coverage.covered {
            prop_assert!(clipped_union >= target.len() - 40.0 * EPS_COV);
        } else {
            let gap_total: f64 = coverage.gaps.iter().map(|g| g.len()).sum();
            prop_assert!((clipped_union + gap_total - target.len()).abs() < 1e-6);
        }
    }

    /// A chord never leaves the disk's bounding box and shrinks with
    /// distance from the center.
    #[test]
    fn chord_within_disk(cx in -5.0..5.0f64, cy in -5.0..5.0f64, r in 0.0..4.0f64, x in -10.0..10.0f64) {
        let c = Circle::new(cx, cy, r).unwrap();
        if let Some((lo, hi)) = c.chord_at_x(x) {
            prop_assert!(lo >= cy - r - 1e-12 && hi <= cy + r + 1e-12);
            prop_assert!(((lo + hi) / 2.0 - cy).abs() < 1e-9);
        } else {
            prop_assert!((x - cx).abs() > r);
        }
    }

    /// The two union-area routes agree and respect the additivity bounds.
    #[test]
    fn union_area_routes_agree(raw in prop::collection::vec((0.0..30.0f64, 0.0..30.0f64, 0.0..8.0f64, 0.0..8.0f64), 1..25)) {
        let boxes: Vec<HyperRect> = raw
            .iter()
            .map(|&(x, y, w, h)| HyperRect::new(vec![x, y], vec![x + w, y + h]).unwrap())
            .collect();
        let recursive = union_volume(&boxes, 2).unwrap();
        let swept = union_area_2d(&boxes).unwrap();
        prop_assert!((recursive - swept).abs() <= 1e-12 * recursive.max(1.0));

        let sum: f64 = boxes.iter().map(|b| b.volume()).sum();
        let largest = boxes.iter().map(|b| b.volume()).fold(0.0, f64::max);
        prop_assert!(recursive <= sum * (1.0 + 1e-12));
        prop_assert!(recursive >= largest * (1.0 - 1e-12));
    }

    /// Triangulating a star-shaped polygon yields n - 2 triangles whose
    /// areas sum to the shoelace area.
    #[test]
    fn triangulation_covers_polygon(seed in 1..5000u64, n in 4..12usize) {
        let poly = geomsweep::gen::star_polygon(seed, n, 10.0);
        let tris = triangulate_polygon(&poly).unwrap();
        prop_assert_eq!(tris.len(), poly.vertices().len() - 2);
        let total: f64 = tris
            .iter()
            .map(|t| {
                ((t[1][0] - t[0][0]) * (t[2][1] - t[0][1])
                    - (t[1][1] - t[0][1]) * (t[2][0] - t[0][0]))
                    .abs()
                    / 2.0
            })
            .sum();
        let v = poly.vertices();
        let mut twice = 0.0;
        for i in 0..v.len() {
            let a = v[i];
            let b = v[(i + 1) % v.len()];
            twice += a[0] * b[1] - b[0] * a[1];
        }
        let shoelace = twice.abs() / 2.0;
        prop_assert!((total - shoelace).abs() <= 1e-9 * shoelace.max(1.0));
    }
}
