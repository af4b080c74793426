//! Maximum-weight subsequence accepted by an interval-labeled NFA.
//!
//! A subsequence `s(0) < ... < s(l)` of weighted d-dimensional points is
//! accepted when there is a state walk `q(u(0)), ..., q(u(l))` from an
//! initial to a final state such that every step `q(u(i-1)) -> q(u(i))`
//! uses an edge whose d label intervals contain the coordinate differences
//! `x(s(i), p) - x(s(i-1), p)`.
//!
//! The dynamic program keeps, per state, a range tree over all points
//! (initially all at the `-inf` sentinel). Point i's best weight for state
//! j is `w(i)` plus the best predecessor weight found by one range-max
//! query per incoming edge; the point is activated in the trees only after
//! its whole row is computed, which is what restricts predecessors to
//! earlier points. A single point is a valid subsequence exactly when some
//! state is both initial and final. For `d == 1` the range tree reduces to
//! a segment tree.

use crate::trees::{MaxSegTree, QueryBox, RangeTree, WeightedPoint};
use crate::{Error, Result};

/// Default epsilon used by the presets to encode strict inequalities as
/// closed intervals. Values closer than this are treated as equal.
pub const STRICT_EPS: f64 = 1e-9;

/// Automaton state flags.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NfaState {
    pub initial: bool,
    /// Accepting ("final") state.
    pub accepting: bool,
}

/// Directed edge labeled with one closed interval per dimension; endpoints
/// may be infinite.
#[derive(Debug, Clone, PartialEq)]
pub struct NfaEdge {
    pub from: usize,
    pub to: usize,
    pub labels: Vec<(f64, f64)>,
}

/// Interval-labeled non-deterministic finite automaton.
#[derive(Debug, Clone, PartialEq)]
pub struct Nfa {
    states: Vec<NfaState>,
    edges: Vec<NfaEdge>,
}

impl Nfa {
    pub fn new(states: Vec<NfaState>, edges: Vec<NfaEdge>) -> Self {
        Nfa { states, edges }
    }

    pub fn states(&self) -> &[NfaState] {
        &self.states
    }

    pub fn edges(&self) -> &[NfaEdge] {
        &self.edges
    }

    /// One state (initial and final) with a self-loop labeled
    /// `[eps, +inf]`: accepts strictly increasing subsequences.
    pub fn lis(eps: f64) -> Self {
        Nfa::new(
            vec![NfaState {
                initial: true,
                accepting: true,
            }],
            vec![NfaEdge {
                from: 0,
                to: 0,
                labels: vec![(eps, f64::INFINITY)],
            }],
        )
    }

    /// Two states (both initial and final) with an up edge `[eps, +inf]`
    /// and a down edge `[-inf, -eps]`: accepts strictly alternating
    /// subsequences starting in either direction.
    pub fn alternating(eps: f64) -> Self {
        let both = NfaState {
            initial: true,
            accepting: true,
        };
        Nfa::new(
            vec![both, both],
            vec![
                NfaEdge {
                    from: 0,
                    to: 1,
                    labels: vec![(eps, f64::INFINITY)],
                },
                NfaEdge {
                    from: 1,
                    to: 0,
                    labels: vec![(f64::NEG_INFINITY, -eps)],
                },
            ],
        )
    }
}

/// A sequence of weighted d-dimensional points.
#[derive(Debug, Clone, PartialEq)]
pub struct SequencePoint {
    pub coords: Vec<f64>,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SequenceInput {
    d: usize,
    points: Vec<SequencePoint>,
}

impl SequenceInput {
    pub fn new(d: usize, points: Vec<SequencePoint>) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("sequence dimension must be at least 1"));
        }
        for (i, p) in points.iter().enumerate() {
            if p.coords.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: p.coords.len(),
                });
            }
            if p.coords.iter().any(|c| !c.is_finite()) || !p.weight.is_finite() {
                return Err(Error::invalid(format!(
                    "point {i} has non-finite coordinates or weight"
                )));
            }
        }
        Ok(SequenceInput { d, points })
    }

    /// 1-D values with unit weights, as the presets use.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        SequenceInput::new(
            1,
            values
                .iter()
                .map(|&v| SequencePoint {
                    coords: vec![v],
                    weight: 1.0,
                })
                .collect(),
        )
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[SequencePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// An accepted subsequence: its total weight, the chosen point indices and
/// the state walked through at each of them. `total_weight == None` means
/// no accepted subsequence exists, and the vectors are empty.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsequenceResult {
    pub total_weight: Option<f64>,
    pub indices: Vec<usize>,
    pub states: Vec<usize>,
}

impl SubsequenceResult {
    fn none() -> Self {
        SubsequenceResult {
            total_weight: None,
            indices: Vec::new(),
            states: Vec::new(),
        }
    }
}

/// Structural diagnostics; an empty list means the automaton is well-formed
/// for dimension `d`.
pub fn validate_nfa(nfa: &Nfa, d: usize) -> Vec<String> {
    let mut problems = Vec::new();
    let m = nfa.states().len();
    if m == 0 {
        problems.push("automaton has no states".to_string());
    }
    if !nfa.states().iter().any(|s| s.initial) {
        problems.push("automaton has no initial state".to_string());
    }
    if !nfa.states().iter().any(|s| s.accepting) {
        problems.push("automaton has no final state".to_string());
    }
    for (k, e) in nfa.edges().iter().enumerate() {
        if e.from >= m {
            problems.push(format!("edge {k}: source state {} out of range", e.from));
        }
        if e.to >= m {
            problems.push(format!("edge {k}: target state {} out of range", e.to));
        }
        if e.labels.len() != d {
            problems.push(format!(
                "edge {k}: {} label intervals for dimension {d}",
                e.labels.len()
            ));
        }
        for (p, &(a, b)) in e.labels.iter().enumerate() {
            if a.is_nan() || b.is_nan() {
                problems.push(format!("edge {k}: label {p} has a NaN endpoint"));
            } else if a > b {
                problems.push(format!("edge {k}: label {p} has inverted endpoints"));
            }
        }
    }
    problems
}

/// Per-state point index: a segment tree for one dimension, a range tree
/// above that.
enum StateIndex {
    Seg(MaxSegTree),
    Tree(RangeTree),
}

impl StateIndex {
    fn build(input: &SequenceInput) -> Result<StateIndex> {
        if input.d() == 1 {
            let mut entries: Vec<(f64, usize)> = input
                .points()
                .iter()
                .enumerate()
                .map(|(i, p)| (p.coords[0], i))
                .collect();
            entries.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            Ok(StateIndex::Seg(MaxSegTree::from_sorted_entries(&entries)))
        } else {
            let points: Vec<WeightedPoint> = input
                .points()
                .iter()
                .enumerate()
                .map(|(i, p)| WeightedPoint::inactive(p.coords.clone(), i))
                .collect::<Result<_>>()?;
            Ok(StateIndex::Tree(RangeTree::new(points, input.d())?))
        }
    }

    fn activate(&mut self, input: &SequenceInput, i: usize, weight: f64) -> Result<()> {
        match self {
            StateIndex::Seg(seg) => {
                let slot = seg
                    .slot_of(input.points()[i].coords[0], i)
                    .expect("every point has a leaf");
                seg.set_slot(slot, weight);
                Ok(())
            }
            StateIndex::Tree(rt) => rt.set_weight(i, weight),
        }
    }

    fn query(&self, ranges: &[(f64, f64)]) -> Result<(f64, Option<usize>)> {
        match self {
            StateIndex::Seg(seg) => {
                let e = seg.query_range(ranges[0].0, ranges[0].1);
                Ok((e.weight, e.id))
            }
            StateIndex::Tree(rt) => Ok(rt.query_max(&QueryBox::new(ranges.to_vec())?)),
        }
    }
}

/// The maximum-weight accepted subsequence, with traceback.
///
/// Ties resolve deterministically: equal-weight optima prefer the smallest
/// ending index, then the smallest state; equal-weight predecessors prefer
/// the smallest `(point, state)` pair; starting fresh at an initial state
/// beats extending when both give the same weight.
pub fn max_weight_subsequence(input: &SequenceInput, nfa: &Nfa) -> Result<SubsequenceResult> {
    let problems = validate_nfa(nfa, input.d());
    if !problems.is_empty() {
        return Err(Error::InvalidAutomaton(problems));
    }
    let n = input.len();
    let m = nfa.states().len();
    if n == 0 {
        return Ok(SubsequenceResult::none());
    }

    let mut edges_into: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (k, e) in nfa.edges().iter().enumerate() {
        edges_into[e.to].push(k);
    }

    let mut indexes: Vec<StateIndex> = (0..m)
        .map(|_| StateIndex::build(input))
        .collect::<Result<_>>()?;

    let neg = f64::NEG_INFINITY;
    let mut weight_table = vec![vec![neg; m]; n];
    let mut prev: Vec<Vec<Option<(usize, usize)>>> = vec![vec![None; m]; n];

    let d = input.d();
    let mut ranges = vec![(0.0f64, 0.0f64); d];
    for i in 0..n {
        let pt = &input.points()[i];
        for j in 0..m {
            // Best predecessor over all incoming edges: one range-max query
            // per edge, looking for earlier points whose coordinate
            // differences fall inside the edge labels.
            let mut best: Option<(f64, usize, usize)> = None;
            for &k in &edges_into[j] {
                let e = &nfa.edges()[k];
                for ((range, &(a, b)), &x) in ranges.iter_mut().zip(&e.labels).zip(&pt.coords) {
                    *range = (x - b, x - a);
                }
                let (w, arg) = indexes[e.from].query(&ranges)?;
                if let Some(ip) = arg {
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
            let (w_max, pred) = match extended {
                Some((w, ip, jp)) if !initial || w > pt.weight => (w, Some((ip, jp))),
                _ if initial => (pt.weight, None),
                _ => (neg, None),
            };
            weight_table[i][j] = w_max;
            prev[i][j] = pred;
        }
        for (j, index) in indexes.iter_mut().enumerate() {
            if weight_table[i][j] != neg {
                index.activate(input, i, weight_table[i][j])?;
            }
        }
    }

    // Answer: the best accepting cell; ascending scan keeps the smallest
    // (index, state) among ties.
    let mut best: Option<(f64, usize, usize)> = None;
    for (i, row) in weight_table.iter().enumerate() {
        for (j, &w) in row.iter().enumerate() {
            if nfa.states()[j].accepting && w != neg && best.is_none_or(|(bw, _, _)| w > bw) {
                best = Some((w, i, j));
            }
        }
    }
    let Some((total, mut i, mut j)) = best else {
        return Ok(SubsequenceResult::none());
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

/// Longest strictly increasing subsequence length (weight-1 points on the
/// LIS automaton), with the default strictness epsilon.
pub fn preset_lis(values: &[f64]) -> Result<SubsequenceResult> {
    preset_lis_with_eps(values, STRICT_EPS)
}

/// As [`preset_lis`], with a caller-chosen strictness epsilon: increases
/// smaller than `eps` do not count.
pub fn preset_lis_with_eps(values: &[f64], eps: f64) -> Result<SubsequenceResult> {
    max_weight_subsequence(&SequenceInput::from_values(values)?, &Nfa::lis(eps))
}

/// Longest strictly alternating subsequence length, starting in either
/// direction, with the default strictness epsilon.
pub fn preset_alternating(values: &[f64]) -> Result<SubsequenceResult> {
    preset_alternating_with_eps(values, STRICT_EPS)
}

/// As [`preset_alternating`], with a caller-chosen strictness epsilon.
pub fn preset_alternating_with_eps(values: &[f64], eps: f64) -> Result<SubsequenceResult> {
    max_weight_subsequence(&SequenceInput::from_values(values)?, &Nfa::alternating(eps))
}
