//! Area of a union of simple polygons via triangulation and the slab sweep.
//!
//! ```bash
//! cargo run --example union_area_polygons
//! ```

use geomsweep::empty_circle::union_area_polygons;
use geomsweep::gen;
use geomsweep::geom::Polygon;

fn main() {
    // Two overlapping squares: 4 + 4 - 1 = 7.
    let squares = vec![
        Polygon::new(vec![[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]).unwrap(),
        Polygon::new(vec![[1.0, 1.0], [3.0, 1.0], [3.0, 3.0], [1.0, 3.0]]).unwrap(),
    ];
    println!(
        "two overlapping 2x2 squares: union area {}",
        union_area_polygons(&squares).unwrap()
    );

    // A pile of random star-shaped polygons.
    let polys: Vec<Polygon> = (0..6).map(|s| gen::star_polygon(s + 10, 8, 6.0)).collect();
    let union = union_area_polygons(&polys).unwrap();
    let sum: f64 = polys.iter().map(|p| p.area()).sum();
    println!("\nsix random octagons:");
    for (i, p) in polys.iter().enumerate() {
        println!("  polygon {i}: shoelace area {:.4}", p.area());
    }
    println!("  union area {union:.4} (sum of areas {sum:.4})");
}
