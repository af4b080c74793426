//! Closed 1-D intervals on a sweep line, coverage counting and unions.

use crate::{Error, Result, EPS_COV};

/// A closed interval `[lo, hi]` with an optional identifier of the object
/// that generated it (circle index, triangle index, ...).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
    owner: Option<usize>,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::invalid("interval endpoints must be finite"));
        }
        if lo > hi {
            return Err(Error::invalid(format!(
                "interval has inverted endpoints: {lo} > {hi}"
            )));
        }
        Ok(Interval {
            lo,
            hi,
            owner: None,
        })
    }

    pub fn with_owner(lo: f64, hi: f64, owner: usize) -> Result<Self> {
        let mut i = Interval::new(lo, hi)?;
        i.owner = Some(owner);
        Ok(i)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn owner(&self) -> Option<usize> {
        self.owner
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0.0
    }
}

/// Outcome of a 1-D coverage decision: whether the target was covered, and
/// the maximal uncovered sub-intervals when it was not.
///
/// `covered` holds exactly when `gaps` is empty; every gap is longer than
/// the coverage slack [`EPS_COV`](crate::EPS_COV) and lies inside the target.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageResult {
    pub covered: bool,
    pub gaps: Vec<Interval>,
}

/// Decides whether `pieces` jointly cover `target`, by the endpoint-counter
/// traversal: sort all piece endpoints clipped to the target, increment a
/// counter at every left endpoint and decrement at every right endpoint,
/// and report the zero-counter runs as gaps.
///
/// Coverage is closed with absolute slack `EPS_COV`: runs no longer than the
/// slack count as covered.
pub fn cover_interval(target: &Interval, pieces: &[Interval]) -> CoverageResult {
    // Events over the clipped pieces: +1 at lo, -1 at hi. At equal
    // coordinates openings are processed first so that touching closed
    // pieces do not produce a phantom zero-length gap.
    let mut events: Vec<(f64, i32)> = Vec::with_capacity(pieces.len() * 2);
    for p in pieces {
        let lo = p.lo.max(target.lo);
        let hi = p.hi.min(target.hi);
        if lo <= hi {
            events.push((lo, 1));
            events.push((hi, -1));
        }
    }
    events.sort_by(|a, b| a.0.total_cmp(&b.0).then(b.1.cmp(&a.1)));

    let mut gaps: Vec<Interval> = Vec::new();
    let mut push_gap = |lo: f64, hi: f64| {
        if hi - lo > EPS_COV {
            gaps.push(Interval::new(lo, hi).expect("gap endpoints are ordered"));
        }
    };

    let mut counter = 0i32;
    let mut cursor = target.lo;
    for (x, delta) in events {
        if counter == 0 && x > cursor {
            push_gap(cursor, x);
        }
        counter += delta;
        if x > cursor {
            cursor = x;
        }
    }
    if cursor < target.hi {
        push_gap(cursor, target.hi);
    }

    // A point target covered by at least one piece produces no events only
    // when no piece touches it; the loop above already handles both cases
    // because a touching piece clips to a zero-length event pair.
    CoverageResult {
        covered: gaps.is_empty(),
        gaps,
    }
}

/// One maximal interval of a union, carrying the identifiers of the pieces
/// whose endpoints realize its low and high ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnionSpan {
    pub lo: f64,
    pub hi: f64,
    pub lo_owner: Option<usize>,
    pub hi_owner: Option<usize>,
}

impl UnionSpan {
    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0.0
    }
}

/// Merges `pieces` into maximal disjoint closed intervals, remembering which
/// piece contributed each resulting endpoint.
///
/// Touching pieces merge (`[0,2]` and `[2,3]` become `[0,3]`). The high
/// owner is the piece that first attained the span's upper end; ties in the
/// sort order break by `(coordinate, owner id)`.
pub fn union_of_intervals(pieces: &[Interval]) -> Vec<UnionSpan> {
    let mut sorted: Vec<&Interval> = pieces.iter().collect();
    sorted.sort_by(|a, b| {
        a.lo.total_cmp(&b.lo)
            .then(a.hi.total_cmp(&b.hi))
            .then(a.owner.cmp(&b.owner))
    });

    let mut spans: Vec<UnionSpan> = Vec::new();
    for piece in sorted {
        match spans.last_mut() {
            Some(span) if piece.lo <= span.hi => {
                if piece.hi > span.hi {
                    span.hi = piece.hi;
                    span.hi_owner = piece.owner;
                }
            }
            _ => spans.push(UnionSpan {
                lo: piece.lo,
                hi: piece.hi,
                lo_owner: piece.owner,
                hi_owner: piece.owner,
            }),
        }
    }
    spans
}
