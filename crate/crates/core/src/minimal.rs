//! Vertex deletion, the minimality test and the exceptional triangle
//! `conv{(0,0), (1,d), (d,1)}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{convex_hull, make_primitive, Direction, Point, PointSet, Polygon};
use crate::width::{directions_within, lattice_width, width_in_direction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub is_minimal: bool,
    /// Lexicographically smallest vertex whose removal keeps the width.
    pub offending_vertex: Option<Point>,
    pub width: i64,
}

fn hull_without(points: &PointSet, v: Point) -> Result<Polygon> {
    convex_hull(points.iter().copied().filter(|&q| q != v))
}

/// Hull of all lattice points of `p` except the vertex `v`.
pub fn drop_vertex(p: &Polygon, v: Point) -> Result<Polygon> {
    if !p.is_vertex(v) {
        return Err(Error::NotAVertex(v.x, v.y));
    }
    hull_without(&p.lattice_points(), v)
}

/// Minimal iff removing any single vertex (as a lattice point) lowers the
/// lattice width. A point is minimal; a segment with two or more lattice
/// points is not.
pub fn is_minimal(p: &Polygon) -> MinimalityReport {
    let width = lattice_width(p).width;
    let offending_vertex = match p.dimension() {
        0 => None,
        1 => Some(p.start()),
        _ => {
            let points = p.lattice_points();
            p.vertices()
                .iter()
                .copied()
                .filter(|&v| {
                    let rest =
                        hull_without(&points, v).expect("a 2D polygon has 3+ lattice points");
                    lattice_width(&rest).width == width
                })
                .min()
        }
    };
    MinimalityReport {
        is_minimal: offending_vertex.is_none(),
        offending_vertex,
        width,
    }
}

/// `conv{(0,0), (1,d), (d,1)}`, a minimal triangle of lattice width `d`.
pub fn upsilon(d: i64) -> Result<Polygon> {
    if d < 2 {
        return Err(Error::OutOfRange(format!("upsilon needs d >= 2, got {d}")));
    }
    convex_hull([Point::ORIGIN, Point::new(1, d), Point::new(d, 1)])
}

/// A vertex `P` and direction `v` with `lw_v(p_P) < d` and
/// `lw_v(p_P) < lw_v(p) - 1`, where `d = lw(p)` and `p_P` is `p` with `P`
/// dropped. Vertices are tried in cycle order, directions in scan order.
pub fn upsilon_lemma_witness(p: &Polygon) -> Option<(Point, Direction)> {
    let d = lattice_width(p).width;
    if d == 0 {
        return None;
    }
    let points = p.lattice_points();
    for &v in p.vertices() {
        let rest = hull_without(&points, v).ok()?;
        let candidates = match rest.dimension() {
            2 => directions_within(&rest, d - 1),
            // All other lattice points are collinear. By Pick's formula `p` is
            // then at lattice distance 1 from that line, so only the line's
            // normal can give a witness.
            1 => {
                let e = rest.vertices()[1] - rest.vertices()[0];
                vec![make_primitive(-e.y, e.x).unwrap().normalized()]
            }
            _ => Vec::new(),
        };
        for dir in candidates {
            let dropped = width_in_direction(&rest, dir);
            if dropped < d && dropped < width_in_direction(p, dir) - 1 {
                return Some((v, dir));
            }
        }
    }
    None
}
