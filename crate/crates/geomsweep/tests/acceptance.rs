//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its wall time when run with `--nocapture`. Every tolerance is pinned in
//! the assertions.

use std::time::Instant;

use geomsweep::containment::{circle_containment, rect_containment, rect_containment_counts};
use geomsweep::empty_circle::{largest_empty_circle, union_area_circles};
use geomsweep::gen;
use geomsweep::geom::{Circle, HyperRect, Point};
use geomsweep::hyperrect::{largest_empty_hyper_rect, union_area_2d, union_volume, AspectRatio};
use geomsweep::nfa::{
    max_weight_subsequence, preset_alternating, preset_lis, SequenceInput, SubsequenceResult,
};
use geomsweep::oracle::{
    oracle_circle_containment_pairs, oracle_empty_circle, oracle_nfa_dp,
    oracle_rect_containment_pairs, oracle_union_volume,
};
use geomsweep::trees::{QueryBox, RangeTree, SegmentTree, WeightedPoint};

fn circle(cx: f64, cy: f64, r: f64) -> Circle {
    Circle::new(cx, cy, r).unwrap()
}

fn pass(criterion: &str, started: Instant) {
    println!("PASS {criterion} ({:.2}s)", started.elapsed().as_secs_f64());
}

#[test]
fn criterion_01_empty_circle_basics() {
    let started = Instant::now();
    let container = circle(0.0, 0.0, 10.0);

    let r = largest_empty_circle(&[], &container, 1e-6).unwrap();
    assert_eq!(r.radius, 10.0, "no points: the whole container is empty");

    let r = largest_empty_circle(&[[0.0, 0.0]], &container, 1e-6).unwrap();
    assert!(
        (r.radius - 5.0).abs() <= 1e-5,
        "center point: radius {} != 5",
        r.radius
    );

    assert!(
        started.elapsed().as_secs_f64() < 1.0,
        "criterion 1 exceeded 1 s"
    );
    pass("criterion 01: largest empty circle basics", started);
}

#[test]
fn criterion_02_empty_circle_oracle_agreement() {
    let started = Instant::now();
    let container = circle(0.0, 0.0, 10.0);
    let grid_res = 400;
    let pitch = 2.0 * container.r() / grid_res as f64;
    let tol = 1e-6;

    for seed in 0..50u64 {
        let n = (seed % 13) as usize;
        let points = gen::points_in_circle(seed * 101 + 1, n, &container);
        let fast = largest_empty_circle(&points, &container, tol).unwrap();
        let (oracle_radius, _) = oracle_empty_circle(&points, &container, grid_res);

        assert!(
            fast.radius >= oracle_radius - pitch,
            "seed {seed}: fast {} below oracle {oracle_radius} - pitch",
            fast.radius
        );
        assert!(
            fast.radius <= oracle_radius + tol + pitch,
            "seed {seed}: fast {} above oracle {oracle_radius} + tol + pitch",
            fast.radius
        );
        // the returned circle's own invariants
        for p in &points {
            let d = ((p[0] - fast.center[0]).powi(2) + (p[1] - fast.center[1]).powi(2)).sqrt();
            assert!(d >= fast.radius - 1e-9, "seed {seed}: point inside result");
        }
        let d_center = ((fast.center[0] - container.cx()).powi(2)
            + (fast.center[1] - container.cy()).powi(2))
        .sqrt();
        assert!(
            d_center <= container.r() - fast.radius + 1e-9,
            "seed {seed}: result circle leaves the container"
        );
    }

    assert!(
        started.elapsed().as_secs_f64() < 60.0,
        "criterion 2 exceeded 60 s"
    );
    pass(
        "criterion 02: empty-circle vs grid oracle, 50 instances",
        started,
    );
}

#[test]
fn criterion_03_union_area_circles_closed_forms() {
    let started = Instant::now();
    let pi = std::f64::consts::PI;

    let a = union_area_circles(&[circle(0.0, 0.0, 1.0)]);
    assert!((a - pi).abs() <= 1e-6, "single unit circle: {a}");

    let a = union_area_circles(&[circle(0.0, 0.0, 1.0), circle(1.0, 0.0, 1.0)]);
    let expect = 2.0 * pi - 2.0 * pi / 3.0 + 3.0f64.sqrt() / 2.0;
    assert!((a - expect).abs() <= 1e-6, "lens case: {a} vs {expect}");

    pass("criterion 03: circle union closed forms", started);
}

#[test]
fn criterion_04_union_volume_oracle_agreement() {
    let started = Instant::now();

    for seed in 0..200u64 {
        let n = 1 + ((seed * 7 + 3) % 200) as usize;
        let boxes = gen::boxes(seed, n, 2, 60.0, 18.0);
        let fast = union_volume(&boxes, 2).unwrap();
        let slow = oracle_union_volume(&boxes, 2).unwrap();
        assert!(
            (fast - slow).abs() <= 1e-9 * slow.abs().max(1e-300),
            "d=2 seed {seed}: {fast} vs {slow}"
        );
        let area = union_area_2d(&boxes).unwrap();
        assert!(
            (area - fast).abs() <= 1e-12 * fast.abs().max(1e-300),
            "d=2 seed {seed}: area sweep {area} vs recursion {fast}"
        );
    }

    for seed in 0..200u64 {
        let n = 1 + ((seed * 3 + 1) % 40) as usize;
        let boxes = gen::boxes(seed + 1000, n, 3, 40.0, 15.0);
        let fast = union_volume(&boxes, 3).unwrap();
        let slow = oracle_union_volume(&boxes, 3).unwrap();
        assert!(
            (fast - slow).abs() <= 1e-9 * slow.abs().max(1e-300),
            "d=3 seed {seed}: {fast} vs {slow}"
        );
    }

    assert!(
        started.elapsed().as_secs_f64() < 30.0,
        "criterion 4 exceeded 30 s"
    );
    pass(
        "criterion 04: union volume vs grid oracle, 400 instances",
        started,
    );
}

/// Exact best `l1` for one anchor: the fit bound and, per blocking point,
/// the largest length that keeps the point out of the open interior.
fn anchor_best_l1(anchor: &[f64], points: &[Point], container: &HyperRect, f: &[f64]) -> f64 {
    let d = container.dim();
    let mut best = (0..d)
        .map(|j| (container.hi()[j] - anchor[j]) / f[j])
        .fold(f64::INFINITY, f64::min);
    for p in points {
        if (0..d).all(|j| p.coords()[j] > anchor[j]) {
            let cap = (0..d)
                .map(|j| (p.coords()[j] - anchor[j]) / f[j])
                .fold(f64::NEG_INFINITY, f64::max);
            best = best.min(cap);
        }
    }
    best.max(0.0)
}

/// Candidate-grid oracle: maximize the per-anchor best length over a grid
/// of anchors inside the container.
fn oracle_empty_rect_l1(points: &[Point], container: &HyperRect, f: &[f64], grid: usize) -> f64 {
    let mut best = 0.0f64;
    let step: Vec<f64> = (0..2).map(|j| container.extent(j) / grid as f64).collect();
    for gx in 0..grid {
        for gy in 0..grid {
            let anchor = [
                container.lo()[0] + (gx as f64 + 0.5) * step[0],
                container.lo()[1] + (gy as f64 + 0.5) * step[1],
            ];
            best = best.max(anchor_best_l1(&anchor, points, container, f));
        }
    }
    best
}

#[test]
fn criterion_05_empty_rect_oracle_agreement() {
    let started = Instant::now();

    // symmetry case
    let unit = HyperRect::new(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap();
    let center = [Point::new(vec![0.5, 0.5]).unwrap()];
    let r = largest_empty_hyper_rect(&center, &unit, &AspectRatio::uniform(2), 1e-7).unwrap();
    assert!((r.l1 - 0.5).abs() <= 1e-5, "center point: l1 = {}", r.l1);

    // 50 random d = 2 instances vs the candidate-grid oracle
    let grid = 200;
    let tol = 1e-6;
    let container = HyperRect::new(vec![0.0, 0.0], vec![10.0, 8.0]).unwrap();
    for seed in 0..50u64 {
        let n = 1 + (seed % 11) as usize;
        let points = gen::points_in_rect(seed * 31 + 5, n, &container);
        let f2 = [0.5, 1.0, 1.5, 2.0][(seed % 4) as usize];
        let ratio = AspectRatio::new(vec![1.0, f2]).unwrap();

        let fast = largest_empty_hyper_rect(&points, &container, &ratio, tol).unwrap();
        let oracle = oracle_empty_rect_l1(&points, &container, ratio.factors(), grid);
        let slack: f64 = (0..2)
            .map(|j| container.extent(j) / grid as f64 / ratio.factors()[j])
            .sum();
        assert!(
            (fast.l1 - oracle).abs() <= tol + slack,
            "seed {seed}: fast {} vs oracle {oracle} (slack {slack})",
            fast.l1
        );

        // result box invariants: inside the container, open interior empty
        for j in 0..2 {
            assert!(fast.anchor[j] >= container.lo()[j] - 1e-9);
            assert!(fast.anchor[j] + fast.lengths[j] <= container.hi()[j] + 1e-9);
        }
        for p in &points {
            let strictly_inside = (0..2).all(|j| {
                fast.anchor[j] + 1e-9 < p.coords()[j]
                    && p.coords()[j] < fast.anchor[j] + fast.lengths[j] - 1e-9
            });
            assert!(!strictly_inside, "seed {seed}: point inside result box");
        }
    }

    assert!(
        started.elapsed().as_secs_f64() < 60.0,
        "criterion 5 exceeded 60 s"
    );
    pass("criterion 05: empty rect vs candidate-grid oracle", started);
}

#[test]
fn criterion_06_circle_containment_exact() {
    let started = Instant::now();

    for seed in 0..100u64 {
        let n = 10 + (seed % 91) as usize;
        let circles = gen::laminar_circles(seed, n);
        let report = circle_containment(&circles);
        let pairs = oracle_circle_containment_pairs(&circles);
        let mut oracle_ids: Vec<usize> = pairs.iter().map(|&(inner, _)| inner).collect();
        oracle_ids.sort_unstable();
        oracle_ids.dedup();
        assert_eq!(
            report.contained_ids(),
            oracle_ids,
            "seed {seed}: contained sets differ"
        );
        for (i, status) in report.items.iter().enumerate() {
            if let Some(outer) = status.contained_by {
                assert!(
                    circles[outer].contains_circle(&circles[i], 1e-9),
                    "seed {seed}: witness ({i}, {outer}) not a closed containment"
                );
            }
        }
    }

    pass(
        "criterion 06: circle containment vs oracle, 100 families",
        started,
    );
}

#[test]
fn criterion_07_rect_containment_exact() {
    let started = Instant::now();

    for seed in 0..100u64 {
        let d = 1 + (seed % 3) as usize;
        let n = 20 + ((seed * 17) % 281) as usize;
        let boxes = gen::boxes(seed * 7 + 2, n, d, 50.0, 20.0);

        let report = rect_containment(&boxes, d).unwrap();
        let counts = rect_containment_counts(&boxes, d).unwrap();
        let pairs = oracle_rect_containment_pairs(&boxes);

        let mut containers = vec![0usize; n];
        let mut contained = vec![0usize; n];
        for &(inner, outer) in &pairs {
            containers[inner] += 1;
            contained[outer] += 1;
        }
        for i in 0..n {
            assert_eq!(
                report.is_contained(i),
                containers[i] >= 1,
                "seed {seed} d={d} box {i}: contained flag vs oracle"
            );
            assert_eq!(
                counts.num_containers[i], containers[i],
                "seed {seed} d={d} box {i}: container count"
            );
            assert_eq!(
                counts.num_contained[i], contained[i],
                "seed {seed} d={d} box {i}: contained count"
            );
            // cross-consistency between the two operations
            assert_eq!(report.is_contained(i), counts.num_containers[i] >= 1);
            if let Some(w) = report.items[i].contained_by {
                assert!(boxes[w].contains_rect(&boxes[i]));
            }
        }
    }

    pass(
        "criterion 07: rect containment vs oracle, 100 sets",
        started,
    );
}

fn rescore_exactly(input: &SequenceInput, nfa: &geomsweep::nfa::Nfa, r: &SubsequenceResult) -> f64 {
    let mut total = 0.0;
    for (step, (&i, &j)) in r.indices.iter().zip(&r.states).enumerate() {
        total += input.points()[i].weight;
        if step == 0 {
            assert!(nfa.states()[j].initial);
        } else {
            let (pi, pj) = (r.indices[step - 1], r.states[step - 1]);
            assert!(i > pi);
            let ok = nfa.edges().iter().any(|e| {
                e.from == pj
                    && e.to == j
                    && e.labels.iter().enumerate().all(|(p, &(a, b))| {
                        let diff = input.points()[i].coords[p] - input.points()[pi].coords[p];
                        a <= diff && diff <= b
                    })
            });
            assert!(ok, "transition {step} has no matching edge");
        }
    }
    assert!(nfa.states()[*r.states.last().unwrap()].accepting);
    total
}

fn patience_lis_len(values: &[f64]) -> usize {
    let mut piles: Vec<f64> = Vec::new();
    for &v in values {
        let pos = piles.partition_point(|&top| top < v);
        if pos == piles.len() {
            piles.push(v);
        } else {
            piles[pos] = v;
        }
    }
    piles.len()
}

#[test]
fn criterion_08_nfa_subsequence_exact() {
    let started = Instant::now();

    for seed in 0..300u64 {
        let n = 1 + (seed % 60) as usize;
        let d = 1 + (seed % 2) as usize;
        let (input, nfa) = gen::nfa_instance(seed, n, d, 4, 8);
        let fast = max_weight_subsequence(&input, &nfa).unwrap();
        let slow = oracle_nfa_dp(&input, &nfa).unwrap();
        assert_eq!(
            fast.total_weight, slow.total_weight,
            "seed {seed}: weights differ"
        );
        if let Some(w) = fast.total_weight {
            let rescored = rescore_exactly(&input, &nfa, &fast);
            assert_eq!(rescored, w, "seed {seed}: traceback re-score");
        }
    }

    for seed in 0..100u64 {
        let n = 1 + ((seed * 29) % 500) as usize;
        let values = gen::permutation(seed + 7, n);
        let r = preset_lis(&values).unwrap();
        assert_eq!(
            r.total_weight,
            Some(patience_lis_len(&values) as f64),
            "seed {seed}: LIS length"
        );
    }

    let alt = preset_alternating(&[1.0, 5.0, 2.0, 6.0]).unwrap();
    assert_eq!(alt.total_weight, Some(4.0));

    pass(
        "criterion 08: NFA subsequence vs oracle, 300 + 100 instances",
        started,
    );
}

#[test]
fn criterion_09_complexity_smoke() {
    let boxes = gen::boxes(4242, 2000, 2, 500.0, 60.0);
    let t0 = Instant::now();
    let report = rect_containment(&boxes, 2).unwrap();
    let contain_elapsed = t0.elapsed().as_secs_f64();
    assert!(report.items.len() == 2000);
    assert!(
        contain_elapsed < 5.0,
        "containment on 2000 boxes took {contain_elapsed:.2}s"
    );

    let values = gen::values(99, 100_000, 0.0, 1e6);
    let t1 = Instant::now();
    let lis = preset_lis(&values).unwrap();
    let lis_elapsed = t1.elapsed().as_secs_f64();
    assert!(lis.total_weight.unwrap() >= 1.0);
    assert!(
        lis_elapsed < 5.0,
        "LIS on 100000 values took {lis_elapsed:.2}s"
    );

    println!(
        "PASS criterion 09: containment(2000) {contain_elapsed:.2}s, lis(100000) {lis_elapsed:.2}s"
    );
}

#[test]
fn criterion_10_data_structure_audits() {
    let started = Instant::now();
    let mut rng_state = 0x1234_5678_9abc_def0u64;
    let mut next = move || {
        rng_state ^= rng_state << 13;
        rng_state ^= rng_state >> 7;
        rng_state ^= rng_state << 17;
        rng_state
    };

    // segment tree: 10^4 random updates/queries, then a full audit
    let coords: Vec<f64> = (0..512).map(|i| i as f64 * 0.25).collect();
    let mut seg = SegmentTree::new(&coords).unwrap();
    let mut mirror: Vec<(f64, Option<usize>)> = vec![(f64::NEG_INFINITY, None); coords.len()];
    for _ in 0..10_000 {
        let r = next();
        if r % 3 != 0 {
            let slot = (r >> 3) as usize % coords.len();
            let w = if r % 17 == 0 {
                f64::NEG_INFINITY
            } else {
                ((r >> 9) % 10_000) as f64 / 16.0
            };
            let id = (r >> 5) as usize % 900;
            seg.update(coords[slot], w, id).unwrap();
            mirror[slot] = if w == f64::NEG_INFINITY {
                (w, None)
            } else {
                (w, Some(id))
            };
        } else {
            let a = (r >> 7) as usize % coords.len();
            let b = (r >> 13) as usize % coords.len();
            let (lo, hi) = (coords[a.min(b)], coords[a.max(b)]);
            let got = seg.query_max(lo, hi);
            let expect = mirror
                .iter()
                .enumerate()
                .filter(|(s, _)| coords[*s] >= lo && coords[*s] <= hi)
                .map(|(_, &(w, _))| w)
                .fold(f64::NEG_INFINITY, f64::max);
            assert_eq!(got.0, expect);
        }
    }
    assert!(seg.audit(), "segment tree aggregates corrupted");

    // range tree: 10^4 random weight toggles with queries, then a full
    // audit, then count/max cross-consistency on 10^3 random boxes
    let n = 400;
    let k = 3;
    let coords: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..k).map(|_| (next() % 50) as f64).collect())
        .collect();
    let points: Vec<WeightedPoint> = coords
        .iter()
        .enumerate()
        .map(|(id, c)| WeightedPoint::inactive(c.clone(), id).unwrap())
        .collect();
    let mut rt = RangeTree::new(points, k).unwrap();
    let mut weights: Vec<f64> = vec![f64::NEG_INFINITY; n];
    for _ in 0..10_000 {
        let id = (next() as usize) % n;
        let w = if next() % 4 == 0 {
            f64::NEG_INFINITY
        } else {
            (next() % 1_000_000) as f64 / 128.0
        };
        rt.set_weight(id, w).unwrap();
        weights[id] = w;
    }
    assert!(rt.audit(), "range tree aggregates corrupted");

    for _ in 0..1000 {
        let ranges: Vec<(f64, f64)> = (0..k)
            .map(|_| {
                let a = (next() % 55) as f64 - 2.0;
                let b = (next() % 55) as f64 - 2.0;
                (a.min(b), a.max(b))
            })
            .collect();
        let q = QueryBox::new(ranges).unwrap();
        let inside: Vec<usize> = (0..n)
            .filter(|&i| {
                coords[i]
                    .iter()
                    .zip(q.ranges())
                    .all(|(x, (lo, hi))| lo <= x && x <= hi)
            })
            .collect();
        assert_eq!(rt.count(&q), inside.len(), "count vs direct scan");
        let best = inside
            .iter()
            .map(|&i| weights[i])
            .fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(rt.query_max(&q).0, best, "max vs count-selected points");
    }

    pass(
        "criterion 10: structure audits and cross-consistency",
        started,
    );
}
