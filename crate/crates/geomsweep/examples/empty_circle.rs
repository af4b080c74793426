//! Find the largest circle that fits inside a container circle without
//! swallowing any of a set of points.
//!
//! ```bash
//! cargo run --example empty_circle
//! ```

use geomsweep::empty_circle::largest_empty_circle;
use geomsweep::gen;
use geomsweep::geom::Circle;

fn main() {
    let container = Circle::new(0.0, 0.0, 10.0).unwrap();
    let points = gen::points_in_circle(42, 9, &container);

    println!("container: center (0, 0), radius 10");
    println!("blocking points:");
    for p in &points {
        println!("  ({:8.4}, {:8.4})", p[0], p[1]);
    }

    let result = largest_empty_circle(&points, &container, 1e-7).unwrap();
    println!(
        "\nlargest empty circle: radius {:.6} at ({:.6}, {:.6}) after {} probes",
        result.radius, result.center[0], result.center[1], result.iterations
    );

    // The result validates against its own promises.
    let worst = points
        .iter()
        .map(|p| ((p[0] - result.center[0]).powi(2) + (p[1] - result.center[1]).powi(2)).sqrt())
        .fold(f64::INFINITY, f64::min);
    println!("nearest blocking point sits {:.6} away (>= radius)", worst);
}
