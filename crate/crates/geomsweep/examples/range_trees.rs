//! Direct use of the index structures: a segment tree for 1-D range-max
//! queries and a 3-D range tree with weight toggling and counting.
//!
//! ```bash
//! cargo run --example range_trees
//! ```

use geomsweep::trees::{QueryBox, RangeTree, SegmentTree, WeightedPoint};

fn main() {
    // Segment tree over fixed coordinates; leaves activate by update.
    let mut seg = SegmentTree::new(&[1.0, 2.0, 3.5, 7.0, 9.0]).unwrap();
    seg.update(2.0, 10.0, 100).unwrap();
    seg.update(7.0, 25.0, 200).unwrap();
    println!("segment tree over keys [1, 2, 3.5, 7, 9]");
    println!("  max on [0, 5]  -> {:?}", seg.query_max(0.0, 5.0));
    println!("  max on [0, 10] -> {:?}", seg.query_max(0.0, 10.0));
    seg.update(7.0, f64::NEG_INFINITY, 200).unwrap(); // deactivate
    println!("  after removing key 7: {:?}", seg.query_max(0.0, 10.0));

    // Range tree over 3-D points, all starting inactive.
    let points: Vec<WeightedPoint> = [
        ([1.0, 5.0, 2.0], 0),
        ([2.0, 1.0, 8.0], 1),
        ([4.0, 4.0, 4.0], 2),
        ([6.0, 2.0, 1.0], 3),
        ([8.0, 7.0, 6.0], 4),
    ]
    .iter()
    .map(|&(coords, id)| WeightedPoint::inactive(coords.to_vec(), id).unwrap())
    .collect();
    let mut rt = RangeTree::new(points, 3).unwrap();

    for (id, w) in [(0, 3.0), (1, 9.0), (2, 5.0), (3, 1.0)] {
        rt.set_weight(id, w).unwrap();
    }
    let all = QueryBox::full(3);
    println!("\n3-D range tree, four active points");
    println!("  global max           -> {:?}", rt.query_max(&all));
    let octant = QueryBox::new(vec![(0.0, 5.0), (0.0, 5.0), (0.0, 5.0)]).unwrap();
    println!("  max in [0,5]^3       -> {:?}", rt.query_max(&octant));
    println!(
        "  count in [0,5]^3     -> {} (active or not)",
        rt.count(&octant)
    );

    rt.set_weight(1, f64::NEG_INFINITY).unwrap();
    println!("  after deactivating 1 -> {:?}", rt.query_max(&octant));
    println!("  aggregates audit     -> {}", rt.audit());
}
