//! Brute-force reference implementations, deliberately simple and slow.
//!
//! These are the independent side of every fast/slow pair in the crate:
//! they share domain types with the fast algorithms and nothing else, so
//! agreement between the two is evidence rather than tautology. The test
//! suites and the CLI `--verify` flag run them against the fast paths.
//! Size caps keep the whole oracle suite in seconds; exceeding one is an
//! error rather than a long wait.

use crate::geom::{Circle, HyperRect};
use crate::nfa::{validate_nfa, Nfa, SequenceInput, SubsequenceResult};
use crate::{Error, Result, EPS_GEOM};

/// Union measure by coordinate-compression grid: cut space into at most
/// `(2n)^d` cells along all box endpoints, mark the covered cells with
/// per-dimension coverage bitmasks, and sum cell volumes.
///
/// Caps: `n <= 10000` for `d == 1`, `n <= 200` for `d == 2`, `n <= 40` for
/// `d == 3`, and at most twenty million cells beyond that.
pub fn oracle_union_volume(boxes: &[HyperRect], d: usize) -> Result<f64> {
    if d == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    for b in boxes {
        if b.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: b.dim(),
            });
        }
    }
    let n = boxes.len();
    let too_large = match d {
        1 => n > 10_000,
        2 => n > 200,
        3 => n > 40,
        _ => (2 * n).checked_pow(d as u32).is_none_or(|c| c > 20_000_000),
    };
    if too_large {
        return Err(Error::TooLarge(format!("{n} boxes in dimension {d}")));
    }
    if n == 0 {
        return Ok(0.0);
    }

    // Per dimension: sorted distinct endpoint coordinates and, for every
    // primitive interval, the bitmask of boxes spanning it.
    let chunks = n.div_ceil(64);
    let mut coords: Vec<Vec<f64>> = Vec::with_capacity(d);
    let mut masks: Vec<Vec<Vec<u64>>> = Vec::with_capacity(d);
    for dim in 0..d {
        let mut cs: Vec<f64> = boxes
            .iter()
            .flat_map(|b| [b.lo()[dim], b.hi()[dim]])
            .collect();
        cs.sort_by(f64::total_cmp);
        cs.dedup();
        let mut dim_masks = vec![vec![0u64; chunks]; cs.len().saturating_sub(1)];
        for (i, b) in boxes.iter().enumerate() {
            let from = cs.partition_point(|&c| c < b.lo()[dim]);
            let to = cs.partition_point(|&c| c < b.hi()[dim]);
            for row in &mut dim_masks[from..to] {
                row[i / 64] |= 1u64 << (i % 64);
            }
        }
        coords.push(cs);
        masks.push(dim_masks);
    }

    // Walk the full cell grid in mixed-radix order.
    let radix: Vec<usize> = masks.iter().map(|m| m.len()).collect();
    if radix.contains(&0) {
        return Ok(0.0);
    }
    let mut index = vec![0usize; d];
    let mut total = 0.0f64;
    'cells: loop {
        let any = (0..chunks).any(|c| {
            let mut acc = u64::MAX;
            for dim in 0..d {
                acc &= masks[dim][index[dim]][c];
            }
            acc != 0
        });
        if any {
            let vol: f64 = (0..d)
                .map(|dim| coords[dim][index[dim] + 1] - coords[dim][index[dim]])
                .product();
            total += vol;
        }
        for dim in 0..d {
            index[dim] += 1;
            if index[dim] < radix[dim] {
                continue 'cells;
            }
            index[dim] = 0;
        }
        break;
    }
    Ok(total)
}

/// All closed circle-containment pairs `(inner, outer)` by the direct
/// quadratic predicate `dist + r_inner <= r_outer + eps`, self excluded.
pub fn oracle_circle_containment_pairs(circles: &[Circle]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for (i, inner) in circles.iter().enumerate() {
        for (j, outer) in circles.iter().enumerate() {
            if i != j && outer.contains_circle(inner, EPS_GEOM) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// All closed box-containment pairs `(inner, outer)` by the direct
/// quadratic per-dimension inclusion test, self excluded.
pub fn oracle_rect_containment_pairs(boxes: &[HyperRect]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for (i, inner) in boxes.iter().enumerate() {
        for (j, outer) in boxes.iter().enumerate() {
            if i != j && outer.contains_rect(inner) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// The NFA subsequence recurrence evaluated directly, scanning all earlier
/// points per cell instead of querying range trees. Same contract and tie
/// rules as the fast path.
pub fn oracle_nfa_dp(input: &SequenceInput, nfa: &Nfa) -> Result<SubsequenceResult> {
    let problems = validate_nfa(nfa, input.d());
    if !problems.is_empty() {
        return Err(Error::InvalidAutomaton(problems));
    }
    let n = input.len();
    let m = nfa.states().len();
    let neg = f64::NEG_INFINITY;
    let mut table = vec![vec![neg; m]; n];
    let mut prev: Vec<Vec<Option<(usize, usize)>>> = vec![vec![None; m]; n];

    for i in 0..n {
        let pt = &input.points()[i];
        for j in 0..m {
            let mut best: Option<(f64, usize, usize)> = None;
            for e in nfa.edges().iter().filter(|e| e.to == j) {
                for (ip, prev_pt) in input.points().iter().enumerate().take(i) {
                    if table[ip][e.from] == neg {
                        continue;
                    }
                    let fits = e.labels.iter().enumerate().all(|(p, &(a, b))| {
                        let diff = pt.coords[p] - prev_pt.coords[p];
                        a <= diff && diff <= b
                    });
                    if !fits {
                        continue;
                    }
                    let w = table[ip][e.from];
                    let replace = match best {
                        None => true,
                        Some((bw, bi, bj)) => w > bw || (w == bw && (ip, e.from) < (bi, bj)),
                    };
                    if replace {
                        best = Some((w, ip, e.from));
                    }
                }
            }
            let extended = best.map(|(w, ip, jp)| (w + pt.weight, ip, jp));
            let initial = nfa.states()[j].initial;
            (table[i][j], prev[i][j]) = match extended {
                Some((w, ip, jp)) if !initial || w > pt.weight => (w, Some((ip, jp))),
                _ if initial => (pt.weight, None),
                _ => (neg, None),
            };
        }
    }

    let mut best: Option<(f64, usize, usize)> = None;
    for (i, row) in table.iter().enumerate() {
        for (j, &w) in row.iter().enumerate() {
            if nfa.states()[j].accepting && w != neg && best.is_none_or(|(bw, _, _)| w > bw) {
                best = Some((w, i, j));
            }
        }
    }
    let Some((total, mut i, mut j)) = best else {
        return Ok(SubsequenceResult {
            total_weight: None,
            indices: Vec::new(),
            states: Vec::new(),
        });
    };
    let mut chain = vec![(i, j)];
    while let Some((ip, jp)) = prev[i][j] {
        chain.push((ip, jp));
        (i, j) = (ip, jp);
    }
    chain.reverse();
    Ok(SubsequenceResult {
        total_weight: Some(total),
        indices: chain.iter().map(|&(i, _)| i).collect(),
        states: chain.iter().map(|&(_, j)| j).collect(),
    })
}

/// Grid-search lower bound for the largest empty circle: maximize
/// `min(distance to nearest point, container.r - distance to center)` over
/// a `grid_res x grid_res` lattice of candidate centers.
///
/// The optimum exceeds the returned radius by at most about one grid pitch
/// (`2 * container.r / grid_res`).
pub fn oracle_empty_circle(
    points: &[[f64; 2]],
    container: &Circle,
    grid_res: usize,
) -> (f64, [f64; 2]) {
    assert!(grid_res >= 2, "grid resolution too small");
    let (cx, cy, r) = (container.cx(), container.cy(), container.r());
    let pitch = 2.0 * r / grid_res as f64;
    let mut best = (f64::NEG_INFINITY, [cx, cy]);
    for gx in 0..grid_res {
        let x = cx - r + (gx as f64 + 0.5) * pitch;
        for gy in 0..grid_res {
            let y = cy - r + (gy as f64 + 0.5) * pitch;
            let to_rim = r - ((x - cx).powi(2) + (y - cy).powi(2)).sqrt();
            let mut f = to_rim;
            for p in points {
                let dist = ((x - p[0]).powi(2) + (y - p[1]).powi(2)).sqrt();
                f = f.min(dist);
                if f <= best.0 {
                    break;
                }
            }
            if f > best.0 {
                best = (f, [x, y]);
            }
        }
    }
    (best.0.max(0.0), best.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperrect::union_volume;

    fn rect(lo: &[f64], hi: &[f64]) -> HyperRect {
        HyperRect::new(lo.to_vec(), hi.to_vec()).unwrap()
    }

    #[test]
    fn volume_oracle_basics() {
        let v = oracle_union_volume(&[rect(&[0.0, 0.0, 0.0], &[1.0, 1.0, 1.0])], 3).unwrap();
        assert_eq!(v, 1.0);
        let v = oracle_union_volume(
            &[
                rect(&[0.0, 0.0, 0.0], &[2.0, 2.0, 2.0]),
                rect(&[1.0, 1.0, 1.0], &[3.0, 3.0, 3.0]),
            ],
            3,
        )
        .unwrap();
        assert!((v - 15.0).abs() < 1e-12);
    }

    #[test]
    fn volume_oracle_caps() {
        let boxes: Vec<HyperRect> = (0..41)
            .map(|i| rect(&[i as f64; 3], &[i as f64 + 1.0; 3]))
            .collect();
        assert!(matches!(
            oracle_union_volume(&boxes, 3),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn volume_oracle_cross_checks_fast_path() {
        let mut state = 0xabcdef12345u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for round in 0..10 {
            let d = 2 + round % 2;
            let n = 5 + round;
            let boxes: Vec<HyperRect> = (0..n)
                .map(|_| {
                    let lo: Vec<f64> = (0..d).map(|_| next() * 10.0).collect();
                    let hi: Vec<f64> = lo.iter().map(|&a| a + next() * 4.0).collect();
                    rect(&lo, &hi)
                })
                .collect();
            let slow = oracle_union_volume(&boxes, d).unwrap();
            let fast = union_volume(&boxes, d).unwrap();
            assert!(
                (slow - fast).abs() <= 1e-9 * slow.max(1.0),
                "round {round}: {slow} vs {fast}"
            );
        }
    }

    #[test]
    fn circle_pairs_basics() {
        let circles = [
            Circle::new(0.0, 0.0, 5.0).unwrap(),
            Circle::new(1.0, 0.0, 1.0).unwrap(),
            Circle::new(20.0, 0.0, 1.0).unwrap(),
        ];
        let pairs = oracle_circle_containment_pairs(&circles);
        assert_eq!(pairs, vec![(1, 0)]);
    }

    #[test]
    fn rect_pairs_identical_boxes() {
        let b = rect(&[0.0, 0.0], &[1.0, 1.0]);
        let pairs = oracle_rect_containment_pairs(&[b.clone(), b]);
        assert_eq!(pairs, vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn nfa_oracle_basics() {
        use crate::nfa::{Nfa, NfaState, SequenceInput, STRICT_EPS};
        let input = SequenceInput::from_values(&[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        let r = oracle_nfa_dp(&input, &Nfa::lis(STRICT_EPS)).unwrap();
        assert_eq!(r.total_weight, Some(5.0));
        assert_eq!(r.indices, vec![0, 1, 2, 3, 4]);

        let no_final = Nfa::new(
            vec![NfaState {
                initial: true,
                accepting: false,
            }],
            vec![],
        );
        assert!(matches!(
            oracle_nfa_dp(&input, &no_final),
            Err(Error::InvalidAutomaton(_))
        ));
    }

    #[test]
    fn empty_circle_oracle_symmetry() {
        let container = Circle::new(0.0, 0.0, 10.0).unwrap();
        let (r, _) = oracle_empty_circle(&[], &container, 128);
        assert!((r - 10.0).abs() < 2.0 * 20.0 / 128.0, "radius {r}");
        let (r, c) = oracle_empty_circle(&[[0.0, 0.0]], &container, 128);
        assert!((r - 5.0).abs() < 2.0 * 20.0 / 128.0, "radius {r}");
        let d = (c[0].powi(2) + c[1].powi(2)).sqrt();
        assert!((d - 5.0).abs() < 0.5, "optimal centers sit on the mid ring");
    }
}
