//! Cross-check every fast algorithm against its brute-force oracle on
//! seeded random instances, the same pairing the CLI's `--verify` uses.
//!
//! ```bash
//! cargo run --example verify_with_oracles
//! ```

use geomsweep::containment::{circle_containment, rect_containment_counts};
use geomsweep::empty_circle::largest_empty_circle;
use geomsweep::gen;
use geomsweep::geom::Circle;
use geomsweep::hyperrect::union_volume;
use geomsweep::nfa::max_weight_subsequence;
use geomsweep::oracle::{
    oracle_circle_containment_pairs, oracle_empty_circle, oracle_nfa_dp,
    oracle_rect_containment_pairs, oracle_union_volume,
};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2718u64);
    println!("seed {seed}\n");

    // union volume vs compressed grid
    let boxes = gen::boxes(seed, 30, 3, 50.0, 15.0);
    let fast = union_volume(&boxes, 3).unwrap();
    let slow = oracle_union_volume(&boxes, 3).unwrap();
    println!(
        "union volume      fast {fast:.9}  oracle {slow:.9}  agree {}",
        (fast - slow).abs() <= 1e-9 * slow.max(1.0)
    );

    // empty circle vs grid search
    let container = Circle::new(0.0, 0.0, 10.0).unwrap();
    let points = gen::points_in_circle(seed, 10, &container);
    let fast = largest_empty_circle(&points, &container, 1e-6).unwrap();
    let (slow, _) = oracle_empty_circle(&points, &container, 400);
    let pitch = 2.0 * container.r() / 400.0;
    println!(
        "empty circle      fast {:.6}  oracle {slow:.6}  agree {}",
        fast.radius,
        fast.radius >= slow - pitch && fast.radius <= slow + 1e-6 + pitch
    );

    // circle containment vs pairwise predicate
    let circles = gen::laminar_circles(seed, 40);
    let report = circle_containment(&circles);
    let pairs = oracle_circle_containment_pairs(&circles);
    let mut oracle_inner: Vec<usize> = pairs.iter().map(|&(inner, _)| inner).collect();
    oracle_inner.sort_unstable();
    oracle_inner.dedup();
    println!(
        "circle containment  {} nested  agree {}",
        oracle_inner.len(),
        report.contained_ids() == oracle_inner
    );

    // box counts vs pairwise predicate
    let boxes = gen::boxes(seed + 1, 50, 2, 40.0, 15.0);
    let counts = rect_containment_counts(&boxes, 2).unwrap();
    let pairs = oracle_rect_containment_pairs(&boxes);
    let mut containers = vec![0usize; boxes.len()];
    for &(inner, _) in &pairs {
        containers[inner] += 1;
    }
    println!(
        "box counts        {} pairs  agree {}",
        pairs.len(),
        counts.num_containers == containers
    );

    // NFA subsequence vs direct DP
    let (input, nfa) = gen::nfa_instance(seed, 50, 2, 4, 8);
    let fast = max_weight_subsequence(&input, &nfa).unwrap();
    let slow = oracle_nfa_dp(&input, &nfa).unwrap();
    println!(
        "nfa subsequence   fast {:?}  oracle {:?}  agree {}",
        fast.total_weight,
        slow.total_weight,
        fast.total_weight == slow.total_weight
    );
}
