//! Largest empty axis-aligned box with a fixed aspect ratio inside a
//! container box.
//!
//! ```bash
//! cargo run --example empty_rect
//! ```

use geomsweep::gen;
use geomsweep::geom::HyperRect;
use geomsweep::hyperrect::{largest_empty_hyper_rect, AspectRatio};

fn main() {
    let container = HyperRect::new(vec![0.0, 0.0], vec![10.0, 8.0]).unwrap();
    let points = gen::points_in_rect(2024, 12, &container);

    println!("container [0,10] x [0,8], 12 blocking points");

    // A square, and a 1:2 slab, carved around the same points.
    for (label, ratio) in [
        ("square (f = 1,1)", AspectRatio::uniform(2)),
        (
            "tall   (f = 1,2)",
            AspectRatio::new(vec![1.0, 2.0]).unwrap(),
        ),
    ] {
        let r = largest_empty_hyper_rect(&points, &container, &ratio, 1e-7).unwrap();
        println!(
            "\n{label}: l1 = {:.6}, sides {:.4} x {:.4}",
            r.l1, r.lengths[0], r.lengths[1]
        );
        println!(
            "  anchored at ({:.4}, {:.4}), {} probes",
            r.anchor[0], r.anchor[1], r.iterations
        );
        // no point may sit strictly inside
        let blocked = points.iter().any(|p| {
            (0..2)
                .all(|j| r.anchor[j] < p.coords()[j] && p.coords()[j] < r.anchor[j] + r.lengths[j])
        });
        println!("  interior empty: {}", !blocked);
    }

    // Three dimensions work the same way.
    let cube = HyperRect::new(vec![0.0; 3], vec![4.0; 3]).unwrap();
    let pts3 = gen::points_in_rect(7, 6, &cube);
    let r = largest_empty_hyper_rect(&pts3, &cube, &AspectRatio::uniform(3), 1e-6).unwrap();
    println!("\n6 points in [0,4]^3: largest empty cube side {:.5}", r.l1);
}
