//! Box containment two ways: witness containers from the range-tree sweep,
//! and full counts from dominance counting on corner points.
//!
//! ```bash
//! cargo run --example contain_rects
//! ```

use geomsweep::containment::{rect_containment, rect_containment_counts};
use geomsweep::gen;

fn main() {
    let d = 3;
    let boxes = gen::boxes(99, 14, d, 30.0, 14.0);

    let report = rect_containment(&boxes, d).unwrap();
    let counts = rect_containment_counts(&boxes, d).unwrap();

    println!("{} random boxes in {d}-D\n", boxes.len());
    println!("  id  witness container  #containers  #contained");
    for i in 0..boxes.len() {
        let witness = report.items[i]
            .contained_by
            .map_or("-".to_string(), |j| format!("#{j}"));
        println!(
            "  {i:2}  {witness:>17}  {:11}  {:10}",
            counts.num_containers[i], counts.num_contained[i]
        );
    }

    let nested = report.contained_ids().len();
    let pair_total: usize = counts.num_containers.iter().sum();
    println!("\n{nested} boxes are contained; {pair_total} ordered containment pairs in total");

    // The two operations must agree on who is contained.
    for i in 0..boxes.len() {
        assert_eq!(report.is_contained(i), counts.num_containers[i] >= 1);
    }
    println!("witness sweep and counting variant agree on every box");
}
