//! Deterministic, seeded instance generators shared by the CLI `gen`
//! subcommand and the test suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{Circle, HyperRect, Point, Polygon};
use crate::nfa::{Nfa, NfaEdge, NfaState, SequenceInput, SequencePoint};

/// The stream cipher generator everything here draws from.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points uniform in the container circle (rejection sampling).
pub fn points_in_circle(seed: u64, n: usize, container: &Circle) -> Vec<[f64; 2]> {
    let mut rng = rng(seed);
    let (cx, cy, r) = (container.cx(), container.cy(), container.r());
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = cx + rng.random_range(-r..=r);
        let y = cy + rng.random_range(-r..=r);
        if (x - cx).powi(2) + (y - cy).powi(2) <= r * r {
            out.push([x, y]);
        }
    }
    out
}

/// `n` points uniform in the box.
pub fn points_in_rect(seed: u64, n: usize, container: &HyperRect) -> Vec<Point> {
    let mut rng = rng(seed);
    (0..n)
        .map(|_| {
            let coords = (0..container.dim())
                .map(|j| {
                    if container.extent(j) == 0.0 {
                        container.lo()[j]
                    } else {
                        rng.random_range(container.lo()[j]..=container.hi()[j])
                    }
                })
                .collect();
            Point::new(coords).expect("finite coordinates")
        })
        .collect()
}

/// `n` random boxes in `[0, span]^d` with sides up to `max_side`.
///
/// A third of the boxes are nested inside an earlier one and a handful are
/// exact duplicates, so containment tests see real positives in every
/// dimension.
pub fn boxes(seed: u64, n: usize, d: usize, span: f64, max_side: f64) -> Vec<HyperRect> {
    let mut rng = rng(seed);
    let mut out: Vec<HyperRect> = Vec::with_capacity(n);
    for i in 0..n {
        let roll: f64 = rng.random_range(0.0..1.0);
        if i > 0 && roll < 0.05 {
            let j = rng.random_range(0..out.len());
            out.push(out[j].clone());
            continue;
        }
        if i > 0 && roll < 0.35 {
            // shrink a random earlier box
            let j = rng.random_range(0..out.len());
            let (mut lo, mut hi) = (out[j].lo().to_vec(), out[j].hi().to_vec());
            for c in 0..d {
                let w = hi[c] - lo[c];
                let cut_lo = rng.random_range(0.0..=0.5) * w;
                let cut_hi = rng.random_range(0.0..=0.5) * w;
                lo[c] += cut_lo;
                hi[c] -= cut_hi;
            }
            out.push(HyperRect::new(lo, hi).expect("shrunken box stays ordered"));
            continue;
        }
        let lo: Vec<f64> = (0..d).map(|_| rng.random_range(0.0..span)).collect();
        let hi: Vec<f64> = lo
            .iter()
            .map(|&a| a + rng.random_range(0.0..max_side))
            .collect();
        out.push(HyperRect::new(lo, hi).expect("ordered corners"));
    }
    out
}

/// A laminar circle family: every two members are disjoint or nested, with
/// margins far above the geometric tolerance.
pub fn laminar_circles(seed: u64, n: usize) -> Vec<Circle> {
    let mut rng = rng(seed);
    let mut out: Vec<Circle> = Vec::with_capacity(n);
    let mut root_x = 0.0;
    while out.len() < n {
        let root = Circle::new(root_x, 0.0, 50.0).expect("valid root");
        root_x += 130.0;
        out.push(root);
        pack_children(&mut rng, &root, &mut out, n, 0);
    }
    out.truncate(n);
    out
}

fn pack_children(
    rng: &mut ChaCha8Rng,
    parent: &Circle,
    out: &mut Vec<Circle>,
    n: usize,
    depth: usize,
) {
    if depth >= 5 {
        return;
    }
    let mut siblings: Vec<Circle> = Vec::new();
    let gap = parent.r() * 0.03;
    for _ in 0..40 {
        if out.len() >= n || siblings.len() >= 5 {
            return;
        }
        let r = parent.r() * rng.random_range(0.12..0.38);
        let reach = parent.r() - r - gap;
        if reach <= 0.0 {
            continue;
        }
        let dist = rng.random_range(0.0..reach);
        let angle = rng.random_range(0.0..std::f64::consts::TAU);
        let c = Circle::new(
            parent.cx() + dist * angle.cos(),
            parent.cy() + dist * angle.sin(),
            r,
        )
        .expect("valid child");
        let clashes = siblings.iter().any(|s| {
            let d = ((s.cx() - c.cx()).powi(2) + (s.cy() - c.cy()).powi(2)).sqrt();
            d < s.r() + c.r() + gap
        });
        if clashes {
            continue;
        }
        out.push(c);
        siblings.push(c);
        if rng.random_bool(0.75) {
            pack_children(rng, &c, out, n, depth + 1);
        }
    }
}

/// A random simple polygon: points sorted by angle around their centroid
/// (star-shaped, hence simple).
pub fn star_polygon(seed: u64, vertices: usize, radius: f64) -> Polygon {
    let mut rng = rng(seed);
    loop {
        let pts: Vec<[f64; 2]> = (0..vertices)
            .map(|_| {
                [
                    rng.random_range(-radius..radius),
                    rng.random_range(-radius..radius),
                ]
            })
            .collect();
        let cx = pts.iter().map(|p| p[0]).sum::<f64>() / vertices as f64;
        let cy = pts.iter().map(|p| p[1]).sum::<f64>() / vertices as f64;
        let mut sorted = pts;
        sorted.sort_by(|a, b| {
            (a[1] - cy)
                .atan2(a[0] - cx)
                .total_cmp(&(b[1] - cy).atan2(b[0] - cx))
        });
        if let Ok(p) = Polygon::new(sorted) {
            return p;
        }
    }
}

/// Uniform values in `[lo, hi)`.
pub fn values(seed: u64, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mut rng = rng(seed);
    (0..n).map(|_| rng.random_range(lo..hi)).collect()
}

/// A random permutation of `1..=n`, as floats.
pub fn permutation(seed: u64, n: usize) -> Vec<f64> {
    let mut rng = rng(seed);
    let mut values: Vec<f64> = (1..=n).map(|v| v as f64).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        values.swap(i, j);
    }
    values
}

/// A random weighted point sequence together with a random automaton whose
/// shape fits it: up to `max_states` states (at least one initial and one
/// final) and up to `max_edges` edges with mixed finite/infinite labels.
pub fn nfa_instance(
    seed: u64,
    n: usize,
    d: usize,
    max_states: usize,
    max_edges: usize,
) -> (SequenceInput, Nfa) {
    let mut rng = rng(seed);
    let m = rng.random_range(1..=max_states.max(1));
    let mut states: Vec<NfaState> = (0..m)
        .map(|_| NfaState {
            initial: rng.random_bool(0.5),
            accepting: rng.random_bool(0.5),
        })
        .collect();
    if !states.iter().any(|s| s.initial) {
        let i = rng.random_range(0..m);
        states[i].initial = true;
    }
    if !states.iter().any(|s| s.accepting) {
        let i = rng.random_range(0..m);
        states[i].accepting = true;
    }

    let edge_count = rng.random_range(1..=max_edges.max(1));
    let edges: Vec<NfaEdge> = (0..edge_count)
        .map(|_| {
            let labels = (0..d)
                .map(|_| {
                    let a = rng.random_range(-3.0..2.0);
                    let b = a + rng.random_range(0.0..4.0);
                    match rng.random_range(0..10) {
                        0 => (f64::NEG_INFINITY, b),
                        1 => (a, f64::INFINITY),
                        2 => (f64::NEG_INFINITY, f64::INFINITY),
                        _ => (a, b),
                    }
                })
                .collect();
            NfaEdge {
                from: rng.random_range(0..m),
                to: rng.random_range(0..m),
                labels,
            }
        })
        .collect();

    let points: Vec<SequencePoint> = (0..n)
        .map(|_| SequencePoint {
            coords: (0..d).map(|_| rng.random_range(0.0..8.0)).collect(),
            weight: rng.random_range(-2.0..5.0),
        })
        .collect();

    (
        SequenceInput::new(d, points).expect("finite generated points"),
        Nfa::new(states, edges),
    )
}
