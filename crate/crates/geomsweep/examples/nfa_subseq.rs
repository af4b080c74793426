//! Maximum-weight subsequence accepted by a custom interval-labeled NFA.
//!
//! The automaton below models a two-phase motif over 2-D points: first a
//! "climb" phase where both coordinates must step up by [1, 3], then a
//! "glide" phase where the first coordinate keeps rising while the second
//! may drift anywhere within [-2, 2].
//!
//! ```bash
//! cargo run --example nfa_subseq
//! ```

use geomsweep::nfa::{
    max_weight_subsequence, validate_nfa, Nfa, NfaEdge, NfaState, SequenceInput, SequencePoint,
};

fn main() {
    let climb = NfaEdge {
        from: 0,
        to: 0,
        labels: vec![(1.0, 3.0), (1.0, 3.0)],
    };
    let switch = NfaEdge {
        from: 0,
        to: 1,
        labels: vec![(1.0, f64::INFINITY), (-2.0, 2.0)],
    };
    let glide = NfaEdge {
        from: 1,
        to: 1,
        labels: vec![(1.0, f64::INFINITY), (-2.0, 2.0)],
    };
    let nfa = Nfa::new(
        vec![
            NfaState {
                initial: true,
                accepting: false,
            },
            NfaState {
                initial: false,
                accepting: true,
            },
        ],
        vec![climb, switch, glide],
    );
    assert!(validate_nfa(&nfa, 2).is_empty());

    let raw: [([f64; 2], f64); 8] = [
        ([0.0, 0.0], 1.0),
        ([1.5, 1.2], 2.0),
        ([3.0, 2.8], 1.5),
        ([2.0, 9.0], 4.0), // tempting weight, but off-pattern
        ([4.5, 3.5], 1.0),
        ([6.0, 2.4], 2.5),
        ([7.5, 4.0], 0.5),
        ([9.0, 3.1], 2.0),
    ];
    let input = SequenceInput::new(
        2,
        raw.iter()
            .map(|&(coords, weight)| SequencePoint {
                coords: coords.to_vec(),
                weight,
            })
            .collect(),
    )
    .unwrap();

    let result = max_weight_subsequence(&input, &nfa).unwrap();
    match result.total_weight {
        Some(w) => {
            println!("best accepted subsequence weighs {w}");
            for (&i, &state) in result.indices.iter().zip(&result.states) {
                let p = &input.points()[i];
                println!(
                    "  point {i} at ({:4.1}, {:4.1}) weight {:3.1}  in state {state}",
                    p.coords[0], p.coords[1], p.weight
                );
            }
        }
        None => println!("no subsequence reaches a final state"),
    }
}
