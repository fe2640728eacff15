//! Canonical forms under unimodular equivalence.
//!
//! Each candidate map sends a vertex `V` to the origin, one incident edge
//! onto the positive x-axis and the polygon into the upper half-plane. The
//! remaining shear freedom is fixed by requiring the other edge at `V` to
//! map to a primitive `(a, b)` with `0 <= a < b`. The canonical form is the
//! lexicographically smallest image cycle (read counterclockwise from the
//! origin) over all candidates of the polygon and its mirror image.

use std::fmt::Write as _;

use serde::Serialize;

use crate::lattice::{extended_gcd, gcd, make_primitive, Point, Polygon, UnimodularMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    vertices: Vec<Point>,
    key: String,
}

impl CanonicalForm {
    fn new(vertices: Vec<Point>) -> Self {
        let mut key = String::new();
        for (i, p) in vertices.iter().enumerate() {
            if i > 0 {
                key.push(',');
            }
            write!(key, "{},{}", p.x, p.y).unwrap();
        }
        CanonicalForm { vertices, key }
    }

    /// Counterclockwise cycle starting at the origin.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Comma-joined decimal rendering of the flattened vertex sequence.
    pub fn key(&self) -> &str {
        &self.key
    }

    pub fn to_polygon(&self) -> Polygon {
        Polygon::from_points(self.vertices.iter().copied()).expect("non-empty")
    }
}

fn mirror() -> UnimodularMap {
    UnimodularMap::linear(1, 0, 0, -1).unwrap()
}

/// Linear map sending the primitive vector `e` to `(1,0)` with determinant 1.
fn align_to_x_axis(e: Point) -> UnimodularMap {
    let (g, s, t) = extended_gcd(e.x, e.y);
    debug_assert_eq!(g, 1);
    UnimodularMap::linear(s, t, -e.y, e.x).unwrap()
}

fn primitive(u: Point) -> Point {
    make_primitive(u.x, u.y).unwrap().as_point()
}

/// The normalizing map at vertex index `i` of a counterclockwise cycle, using
/// the edge to the next vertex (`forward`) or to the previous one.
fn vertex_map(vertices: &[Point], i: usize, forward: bool) -> UnimodularMap {
    let n = vertices.len();
    let v = vertices[i];
    let next = primitive(vertices[(i + 1) % n] - v);
    let prev = primitive(vertices[(i + n - 1) % n] - v);
    let (e, f) = if forward { (next, prev) } else { (prev, next) };

    let mut m = UnimodularMap::translation(-v.x, -v.y).then(&align_to_x_axis(e));
    // The polygon lies left of `next` and right of `prev`.
    if !forward {
        m = m.then(&mirror());
    }
    let fa = m.apply_direction(make_primitive(f.x, f.y).unwrap());
    let (a0, b0) = (fa.x(), fa.y());
    debug_assert!(b0 > 0);
    let k = (a0.rem_euclid(b0) - a0) / b0;
    m.then(&UnimodularMap::linear(1, k, 0, 1).unwrap())
}

/// All `4 * n` candidate maps of a two-dimensional polygon: every vertex,
/// both incident edges, for the polygon and for its mirror image.
pub fn candidate_maps(p: &Polygon) -> Vec<UnimodularMap> {
    assert_eq!(p.dimension(), 2);
    let r = mirror();
    let reflected = p.apply(&r).unwrap();
    let mut out = Vec::with_capacity(4 * p.len());
    for (pre, q) in [(UnimodularMap::IDENTITY, p), (r, &reflected)] {
        for i in 0..q.len() {
            for forward in [true, false] {
                out.push(pre.then(&vertex_map(q.vertices(), i, forward)));
            }
        }
    }
    out
}

/// Image cycle of `p` under `m`, rotated to start at the origin.
fn cycle_from_origin(p: &Polygon, m: &UnimodularMap) -> Vec<Point> {
    let image = p.apply(m).expect("canonicalizing maps stay in range");
    let mut vs = image.vertices().to_vec();
    let at = vs
        .iter()
        .position(|&q| q == Point::ORIGIN)
        .expect("a vertex maps to the origin");
    vs.rotate_left(at);
    vs
}

/// Canonical form together with a map sending `p` onto it.
pub fn canonical_form_with_map(p: &Polygon) -> (CanonicalForm, UnimodularMap) {
    match p.dimension() {
        0 => {
            let q = p.start();
            (
                CanonicalForm::new(vec![Point::ORIGIN]),
                UnimodularMap::translation(-q.x, -q.y),
            )
        }
        1 => {
            let (a, b) = (p.vertices()[0], p.vertices()[1]);
            let d = b - a;
            let g = gcd(d.x, d.y);
            let m = UnimodularMap::translation(-a.x, -a.y).then(&align_to_x_axis(primitive(d)));
            (CanonicalForm::new(vec![Point::ORIGIN, Point::new(g, 0)]), m)
        }
        _ => {
            let (cycle, m) = candidate_maps(p)
                .into_iter()
                .map(|m| (cycle_from_origin(p, &m), m))
                .min_by(|a, b| a.0.cmp(&b.0))
                .unwrap();
            (CanonicalForm::new(cycle), m)
        }
    }
}

pub fn canonical_form(p: &Polygon) -> CanonicalForm {
    canonical_form_with_map(p).0
}

/// A map `m` with `apply_map(m, p) = q`, or `None` when the polygons are not
/// unimodularly equivalent.
pub fn are_equivalent(p: &Polygon, q: &Polygon) -> Option<UnimodularMap> {
    if p.len() != q.len() || p.doubled_area() != q.doubled_area() {
        return None;
    }
    let (cp, mp) = canonical_form_with_map(p);
    let (cq, mq) = canonical_form_with_map(q);
    (cp == cq).then(|| mp.then(&mq.inverse()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::convex_hull;

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        convex_hull(pts.iter().map(|&p| p.into())).unwrap()
    }

    #[test]
    fn degenerate_forms() {
        assert_eq!(canonical_form(&poly(&[(7, -2)])).key(), "0,0");
        assert_eq!(canonical_form(&poly(&[(1, 1), (3, 5)])).key(), "0,0,2,0");
    }

    #[test]
    fn upsilon_and_its_image_agree() {
        let ups = poly(&[(0, 0), (1, 2), (2, 1)]);
        let m = UnimodularMap::new(2, 1, 1, 1, 10, -3).unwrap();
        let image = ups.apply(&m).unwrap();
        assert_eq!(canonical_form(&ups), canonical_form(&image));
        assert_eq!(canonical_form(&ups).key(), "0,0,1,0,2,3");
    }

    #[test]
    fn candidate_count_is_four_per_vertex() {
        let p = poly(&[(0, 0), (3, 1), (4, 3), (1, 4), (-1, 2)]);
        assert_eq!(candidate_maps(&p).len(), 20);
        for m in candidate_maps(&p) {
            let cycle = cycle_from_origin(&p, &m);
            assert_eq!(cycle[0], Point::ORIGIN);
            assert_eq!(cycle[1].y, 0);
            assert!(cycle.iter().all(|q| q.y >= 0));
        }
    }

    #[test]
    fn equivalence_examples() {
        let p = poly(&[(0, 0), (3, 1), (1, 2)]);
        let moved = p.translate(Point::new(5, 7));
        assert_eq!(
            are_equivalent(&p, &moved),
            Some(UnimodularMap::translation(5, 7))
        );

        let d = 4;
        let t = poly(&[(0, 0), (1, d + 1), (d, d + 1)]);
        let ups = poly(&[(0, 0), (1, d), (d, 1)]);
        let m = are_equivalent(&t, &ups).unwrap();
        assert_eq!(t.apply(&m).unwrap(), ups);

        let simplex = poly(&[(0, 0), (1, 0), (0, 1)]);
        let square = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(are_equivalent(&simplex, &square), None);
    }

    #[test]
    fn mirror_images_are_equivalent() {
        // Chiral under rotations alone.
        let p = poly(&[(0, 0), (4, 0), (5, 1), (1, 3)]);
        let q = p.apply(&mirror()).unwrap();
        let m = are_equivalent(&p, &q).unwrap();
        assert_eq!(p.apply(&m).unwrap(), q);
    }
}
