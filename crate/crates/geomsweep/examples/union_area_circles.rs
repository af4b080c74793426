//! Area of a union of overlapping circles, checked against the closed-form
//! two-circle lens.
//!
//! ```bash
//! cargo run --example union_area_circles
//! ```

use std::f64::consts::PI;

use geomsweep::empty_circle::union_area_circles;
use geomsweep::geom::Circle;

fn main() {
    // Two unit circles a distance 1 apart: the union is 2*pi minus the lens.
    let pair = [
        Circle::new(0.0, 0.0, 1.0).unwrap(),
        Circle::new(1.0, 0.0, 1.0).unwrap(),
    ];
    let area = union_area_circles(&pair);
    let lens = 2.0 * (0.5f64).acos() - 0.5 * (4.0f64 - 1.0).sqrt();
    println!("two unit circles at distance 1:");
    println!("  swept union area    {area:.9}");
    println!("  closed-form 2pi-lens {:.9}", 2.0 * PI - lens);

    // A little bubble cluster.
    let cluster = [
        Circle::new(0.0, 0.0, 2.0).unwrap(),
        Circle::new(1.5, 0.8, 1.2).unwrap(),
        Circle::new(-1.0, 1.4, 0.9).unwrap(),
        Circle::new(0.4, -1.7, 1.0).unwrap(),
        Circle::new(3.4, 0.0, 0.5).unwrap(),
    ];
    let area = union_area_circles(&cluster);
    let sum: f64 = cluster.iter().map(|c| PI * c.r() * c.r()).sum();
    println!("\nfive-circle cluster:");
    println!("  union area {area:.6}");
    println!(
        "  sum of areas {sum:.6} (overlap absorbed {:.6})",
        sum - area
    );
}
