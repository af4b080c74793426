//! Simple polygons and their decomposition into disjoint triangles.

use crate::{Error, Result, EPS_GEOM};

/// A triangle, counter-clockwise or degenerate.
pub type Triangle = [[f64; 2]; 3];

/// A simple polygon with at least three vertices and no self-intersection.
///
/// Simplicity is checked at construction by the quadratic pairwise edge
/// test; robust handling of near-degenerate inputs beyond detection is out
/// of scope.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<[f64; 2]>,
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn seg_contains(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> bool {
    cross(a, b, p).abs() <= EPS_GEOM
        && p[0] >= a[0].min(b[0]) - EPS_GEOM
        && p[0] <= a[0].max(b[0]) + EPS_GEOM
        && p[1] >= a[1].min(b[1]) - EPS_GEOM
        && p[1] <= a[1].max(b[1]) + EPS_GEOM
}

/// Whether closed segments `[a, b]` and `[c, d]` share any point.
fn segments_intersect(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    seg_contains(c, d, a) || seg_contains(c, d, b) || seg_contains(a, b, c) || seg_contains(a, b, d)
}

impl Polygon {
    pub fn new(vertices: Vec<[f64; 2]>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::invalid("a polygon needs at least three vertices"));
        }
        if vertices.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::invalid("polygon vertices must be finite"));
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            if (a[0] - b[0]).abs() <= EPS_GEOM && (a[1] - b[1]).abs() <= EPS_GEOM {
                return Err(Error::invalid(format!(
                    "duplicate consecutive vertices at index {i}"
                )));
            }
        }
        // Adjacent edges must not fold back onto each other; non-adjacent
        // edges must not touch at all.
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            for j in (i + 1)..n {
                let (c, d) = (vertices[j], vertices[(j + 1) % n]);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // Shared vertex s with free tips t1, t2: a spur is the
                    // two edges running along the same ray out of s.
                    let (s, t1, t2) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                    let u = [t1[0] - s[0], t1[1] - s[1]];
                    let v = [t2[0] - s[0], t2[1] - s[1]];
                    if (u[0] * v[1] - u[1] * v[0]).abs() <= EPS_GEOM
                        && u[0] * v[0] + u[1] * v[1] > 0.0
                    {
                        return Err(Error::NotSimple(format!(
                            "edges {i} and {j} fold back onto each other"
                        )));
                    }
                    continue;
                }
                if segments_intersect(a, b, c, d) {
                    return Err(Error::NotSimple(format!("edges {i} and {j} intersect")));
                }
            }
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    /// Shoelace area (always non-negative).
    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut twice = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            twice += a[0] * b[1] - b[0] * a[1];
        }
        twice.abs() / 2.0
    }
}

fn point_in_triangle_closed(t: &Triangle, p: [f64; 2]) -> bool {
    let d1 = cross(t[0], t[1], p);
    let d2 = cross(t[1], t[2], p);
    let d3 = cross(t[2], t[0], p);
    let has_neg = d1 < -EPS_GEOM || d2 < -EPS_GEOM || d3 < -EPS_GEOM;
    let has_pos = d1 > EPS_GEOM || d2 > EPS_GEOM || d3 > EPS_GEOM;
    !(has_neg && has_pos)
}

/// Ear-clipping triangulation of a simple polygon into `n - 2`
/// interior-disjoint triangles whose union is the polygon.
pub fn triangulate_polygon(poly: &Polygon) -> Result<Vec<Triangle>> {
    let mut verts: Vec<[f64; 2]> = poly.vertices().to_vec();

    // Normalize to counter-clockwise orientation.
    let mut twice = 0.0;
    for i in 0..verts.len() {
        let a = verts[i];
        let b = verts[(i + 1) % verts.len()];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    if twice < 0.0 {
        verts.reverse();
    }

    let mut triangles = Vec::with_capacity(verts.len() - 2);
    while verts.len() > 3 {
        let n = verts.len();
        let mut clipped = false;
        for i in 0..n {
            let prev = verts[(i + n - 1) % n];
            let cur = verts[i];
            let next = verts[(i + 1) % n];
            if cross(prev, cur, next) < -EPS_GEOM {
                continue; // reflex corner
            }
            let ear: Triangle = [prev, cur, next];
            let blocked = (0..n)
                .filter(|&j| j != i && j != (i + n - 1) % n && j != (i + 1) % n)
                .any(|j| point_in_triangle_closed(&ear, verts[j]));
            if blocked {
                continue;
            }
            triangles.push(ear);
            verts.remove(i);
            clipped = true;
            break;
        }
        if !clipped {
            // A simple polygon always has an ear; reaching this means the
            // input slipped past the constructor's simplicity test.
            return Err(Error::NotSimple("no ear found while clipping".into()));
        }
    }
    triangles.push([verts[0], verts[1], verts[2]]);
    Ok(triangles)
}
