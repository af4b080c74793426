//! The two automaton presets: longest strictly increasing and longest
//! strictly alternating subsequence.
//!
//! ```bash
//! cargo run --example lis_alternating
//! ```

use geomsweep::gen;
use geomsweep::nfa::{preset_alternating, preset_lis};

fn main() {
    let small = [3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0];
    let lis = preset_lis(&small).unwrap();
    println!("values: {small:?}");
    println!(
        "LIS length {}: indices {:?} -> {:?}",
        lis.total_weight.unwrap(),
        lis.indices,
        lis.indices.iter().map(|&i| small[i]).collect::<Vec<_>>()
    );

    let alt = preset_alternating(&small).unwrap();
    println!(
        "alternating length {}: indices {:?} -> {:?}",
        alt.total_weight.unwrap(),
        alt.indices,
        alt.indices.iter().map(|&i| small[i]).collect::<Vec<_>>()
    );

    // Scale: a hundred thousand values in one pass over a segment tree.
    let big = gen::values(1, 100_000, 0.0, 1e9);
    let started = std::time::Instant::now();
    let lis = preset_lis(&big).unwrap();
    println!(
        "\nLIS of 100000 random values: length {} in {:.0} ms",
        lis.total_weight.unwrap(),
        started.elapsed().as_secs_f64() * 1e3
    );
}
