//! Volume of a union of axis-aligned boxes in three dimensions, plus the
//! two-route cross-check in the plane.
//!
//! ```bash
//! cargo run --example union_volume
//! ```

use geomsweep::gen;
use geomsweep::geom::HyperRect;
use geomsweep::hyperrect::{union_area_2d, union_volume};
use geomsweep::oracle::oracle_union_volume;

fn main() {
    // The textbook pair: [0,2]^3 and [1,3]^3 overlap in a unit cube.
    let cubes = vec![
        HyperRect::new(vec![0.0; 3], vec![2.0; 3]).unwrap(),
        HyperRect::new(vec![1.0; 3], vec![3.0; 3]).unwrap(),
    ];
    println!(
        "two 2x2x2 cubes sharing a unit cube: volume {}",
        union_volume(&cubes, 3).unwrap()
    );

    // A random 3-D instance against the compressed-grid oracle.
    let boxes = gen::boxes(7, 30, 3, 40.0, 12.0);
    let fast = union_volume(&boxes, 3).unwrap();
    let slow = oracle_union_volume(&boxes, 3).unwrap();
    println!("\n30 random boxes in 3-D:");
    println!("  recursive sweep {fast:.9}");
    println!("  grid oracle     {slow:.9}");

    // In the plane, the O(n log n) coverage-tree sweep must agree with the
    // general recursion to near machine precision.
    let flats = gen::boxes(8, 500, 2, 300.0, 40.0);
    let recursive = union_volume(&flats, 2).unwrap();
    let swept = union_area_2d(&flats).unwrap();
    println!("\n500 random rectangles in 2-D:");
    println!("  general recursion {recursive:.9}");
    println!("  coverage-tree sweep {swept:.9}");
    println!(
        "  relative gap {:.3e}",
        (recursive - swept).abs() / recursive
    );
}
