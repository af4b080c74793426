//! Geometric primitive types and the 1-D interval machinery shared by the
//! sweep-line algorithms.
//!
//! All intervals and boxes are closed; membership tests include the
//! boundary. Coverage decisions absorb floating-point noise at shared
//! endpoints with the crate-wide [`EPS_COV`](crate::EPS_COV) slack.

mod interval;
mod polygon;

pub use interval::{cover_interval, union_of_intervals, CoverageResult, Interval, UnionSpan};
pub use polygon::{triangulate_polygon, Polygon, Triangle};

use crate::{Error, Result, EPS_GEOM};

/// A point with `d >= 1` finite real coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::invalid("a point needs at least one coordinate"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("point coordinates must be finite"));
        }
        Ok(Point { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }
}

/// A circle given by center `(cx, cy)` and radius `r >= 0`.
///
/// Degenerate circles (`r == 0`) are legal; their chord at `x == cx` is a
/// single-point interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    cx: f64,
    cy: f64,
    r: f64,
}

impl Circle {
    pub fn new(cx: f64, cy: f64, r: f64) -> Result<Self> {
        if !(cx.is_finite() && cy.is_finite() && r.is_finite()) {
            return Err(Error::invalid("circle fields must be finite"));
        }
        if r < 0.0 {
            return Err(Error::invalid("circle radius must be non-negative"));
        }
        Ok(Circle { cx, cy, r })
    }

    pub fn cx(&self) -> f64 {
        self.cx
    }

    pub fn cy(&self) -> f64 {
        self.cy
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// Closed membership test.
    pub fn contains_point(&self, x: f64, y: f64) -> bool {
        (x - self.cx).powi(2) + (y - self.cy).powi(2) <= self.r * self.r
    }

    /// Closed containment of another circle: every point of `inner` lies in
    /// `self` (with `eps` slack on the radius comparison).
    pub fn contains_circle(&self, inner: &Circle, eps: f64) -> bool {
        let d = ((inner.cx - self.cx).powi(2) + (inner.cy - self.cy).powi(2)).sqrt();
        d + inner.r <= self.r + eps
    }

    /// The y-extent cut out of the disk by the vertical line at `x`, if the
    /// line meets it: `[cy - h, cy + h]` with `h = sqrt(r^2 - (x - cx)^2)`.
    pub fn chord_at_x(&self, x: f64) -> Option<(f64, f64)> {
        let dx = x - self.cx;
        let h2 = self.r * self.r - dx * dx;
        if h2 < 0.0 {
            return None;
        }
        let h = h2.sqrt();
        Some((self.cy - h, self.cy + h))
    }
}

/// A `d`-dimensional closed axis-aligned box given by its lower and upper
/// corners. Membership is closed: all points with `lo[j] <= x[j] <= hi[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperRect {
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl HyperRect {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.is_empty() || lo.len() != hi.len() {
            return Err(Error::invalid(
                "box corners must be non-empty and of equal dimension",
            ));
        }
        for j in 0..lo.len() {
            if !(lo[j].is_finite() && hi[j].is_finite()) {
                return Err(Error::invalid("box corners must be finite"));
            }
            if lo[j] > hi[j] {
                return Err(Error::invalid(format!(
                    "box has inverted bounds in dimension {j}: {} > {}",
                    lo[j], hi[j]
                )));
            }
        }
        Ok(HyperRect { lo, hi })
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[f64] {
        &self.lo
    }

    pub fn hi(&self) -> &[f64] {
        &self.hi
    }

    pub fn extent(&self, j: usize) -> f64 {
        self.hi[j] - self.lo[j]
    }

    pub fn volume(&self) -> f64 {
        (0..self.dim()).map(|j| self.extent(j)).product()
    }

    /// Closed membership test.
    pub fn contains_point(&self, p: &[f64]) -> bool {
        p.len() == self.dim() && (0..self.dim()).all(|j| self.lo[j] <= p[j] && p[j] <= self.hi[j])
    }

    /// Strict-interior membership test.
    pub fn contains_point_open(&self, p: &[f64]) -> bool {
        p.len() == self.dim() && (0..self.dim()).all(|j| self.lo[j] < p[j] && p[j] < self.hi[j])
    }

    /// Closed containment of another box.
    pub fn contains_rect(&self, inner: &HyperRect) -> bool {
        self.dim() == inner.dim()
            && (0..self.dim()).all(|j| self.lo[j] <= inner.lo[j] && inner.hi[j] <= self.hi[j])
    }
}

/// X-coordinates of all boundary intersection points of two circles.
///
/// Tangency yields one value; disjoint or strictly nested circles yield an
/// empty list; two proper crossings yield two values (which coincide when
/// the radical line is vertical).
pub fn circle_circle_intersection_xs(c1: &Circle, c2: &Circle) -> Result<Vec<f64>> {
    let dx = c2.cx - c1.cx;
    let dy = c2.cy - c1.cy;
    let d = (dx * dx + dy * dy).sqrt();
    if d <= EPS_GEOM && (c1.r - c2.r).abs() <= EPS_GEOM {
        return Err(Error::IdenticalCircles);
    }
    if d > c1.r + c2.r || d < (c1.r - c2.r).abs() || d == 0.0 {
        return Ok(Vec::new());
    }
    // Distance from c1's center to the radical line, then the half-chord.
    let a = (d * d + c1.r * c1.r - c2.r * c2.r) / (2.0 * d);
    let h2 = c1.r * c1.r - a * a;
    let h = h2.max(0.0).sqrt();
    let (ux, uy) = (dx / d, dy / d);
    let px = c1.cx + a * ux;
    if h <= EPS_GEOM {
        return Ok(vec![px]);
    }
    Ok(vec![px - h * uy, px + h * uy])
}

/// The chord of `circle` on the vertical line at `x`, tagged with the
/// caller's identifier for the circle. Absent when the line misses the disk.
pub fn circle_chord_at_x(circle: &Circle, id: usize, x: f64) -> Option<Interval> {
    circle
        .chord_at_x(x)
        .map(|(lo, hi)| Interval::with_owner(lo, hi, id).expect("chord endpoints are ordered"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(cx: f64, cy: f64, r: f64) -> Circle {
        Circle::new(cx, cy, r).unwrap()
    }

    #[test]
    fn intersection_disjoint() {
        let xs = circle_circle_intersection_xs(&c(0.0, 0.0, 1.0), &c(5.0, 0.0, 1.0)).unwrap();
        assert!(xs.is_empty());
    }

    #[test]
    fn intersection_external_tangency() {
        let xs = circle_circle_intersection_xs(&c(0.0, 0.0, 1.0), &c(2.0, 0.0, 1.0)).unwrap();
        assert_eq!(xs, vec![1.0]);
    }

    #[test]
    fn intersection_two_points_same_x() {
        let xs = circle_circle_intersection_xs(&c(0.0, 0.0, 1.0), &c(1.0, 0.0, 1.0)).unwrap();
        assert_eq!(xs, vec![0.5, 0.5]);
    }

    #[test]
    fn intersection_nested_is_empty() {
        let xs = circle_circle_intersection_xs(&c(0.0, 0.0, 5.0), &c(1.0, 0.0, 1.0)).unwrap();
        assert!(xs.is_empty());
    }

    #[test]
    fn intersection_identical_is_error() {
        assert!(matches!(
            circle_circle_intersection_xs(&c(1.0, 2.0, 3.0), &c(1.0, 2.0, 3.0)),
            Err(Error::IdenticalCircles)
        ));
    }

    #[test]
    fn chord_basic() {
        let i = circle_chord_at_x(&c(0.0, 0.0, 1.0), 7, 0.0).unwrap();
        assert_eq!((i.lo(), i.hi(), i.owner()), (-1.0, 1.0, Some(7)));
        assert!(circle_chord_at_x(&c(0.0, 0.0, 1.0), 0, 2.0).is_none());
        let i = circle_chord_at_x(&c(0.0, 0.0, 5.0), 0, 3.0).unwrap();
        assert!((i.lo() + 4.0).abs() < 1e-12 && (i.hi() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn chord_degenerate_circle() {
        let i = circle_chord_at_x(&c(2.0, 3.0, 0.0), 0, 2.0).unwrap();
        assert_eq!((i.lo(), i.hi()), (3.0, 3.0));
        assert!(circle_chord_at_x(&c(2.0, 3.0, 0.0), 0, 2.1).is_none());
    }

    #[test]
    fn chord_symmetry_and_monotone_halfwidth() {
        let circle = c(1.5, -0.5, 3.0);
        let mut last_halfwidth = f64::INFINITY;
        for k in 0..=30 {
            let x = 1.5 + 3.0 * k as f64 / 30.0;
            let (lo, hi) = circle.chord_at_x(x).unwrap();
            assert!(((lo + hi) / 2.0 - circle.cy()).abs() < 1e-12);
            let hw = (hi - lo) / 2.0;
            assert!(hw <= last_halfwidth + 1e-12);
            last_halfwidth = hw;
        }
    }

    #[test]
    fn rect_validation() {
        assert!(HyperRect::new(vec![0.0, 0.0], vec![1.0, 1.0]).is_ok());
        assert!(HyperRect::new(vec![0.0, 2.0], vec![1.0, 1.0]).is_err());
        assert!(HyperRect::new(vec![], vec![]).is_err());
        assert!(HyperRect::new(vec![0.0], vec![f64::NAN]).is_err());
    }

    #[test]
    fn point_validation() {
        assert!(Point::new(vec![1.0, 2.0]).is_ok());
        assert!(Point::new(vec![]).is_err());
        assert!(Point::new(vec![f64::INFINITY]).is_err());
    }
}
