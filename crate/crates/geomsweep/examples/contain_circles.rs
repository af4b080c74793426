//! Containment analysis of a laminar circle family (every two circles
//! disjoint or nested) via the half-circle interval sweep.
//!
//! ```bash
//! cargo run --example contain_circles
//! ```

use geomsweep::containment::circle_containment;
use geomsweep::gen;

fn main() {
    let circles = gen::laminar_circles(12, 18);
    let report = circle_containment(&circles);

    println!("{} circles in a laminar family\n", circles.len());
    for (i, c) in circles.iter().enumerate() {
        let status = &report.items[i];
        let role = match (status.contained_by, status.contains_another) {
            (Some(outer), true) => format!("inside #{outer}, holds others"),
            (Some(outer), false) => format!("inside #{outer}"),
            (None, true) => "top level, holds others".to_string(),
            (None, false) => "top level, alone".to_string(),
        };
        println!(
            "  #{i:2}  center ({:8.3}, {:8.3})  r {:7.3}  {role}",
            c.cx(),
            c.cy(),
            c.r()
        );
    }
    println!(
        "\n{} of {} circles are nested inside another",
        report.contained_ids().len(),
        circles.len()
    );
}
