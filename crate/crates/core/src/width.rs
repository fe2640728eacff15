//! Lattice width, width directions and lattice size with respect to the
//! unit square.

use serde::Serialize;

use crate::lattice::{
    cross, extended_gcd, gcd, make_primitive, orient, Direction, Point, Polygon, UnimodularMap,
};

/// `max <P,v> - min <P,v>` over the polygon.
pub fn width_in_direction(p: &Polygon, v: Direction) -> i64 {
    let (lo, hi) = extent(p, v);
    hi - lo
}

/// `(min, max)` of `<P,v>` over the vertices.
pub fn extent(p: &Polygon, v: Direction) -> (i64, i64) {
    p.vertices()
        .iter()
        .map(|q| q.dot(v))
        .fold((i64::MAX, i64::MIN), |(lo, hi), t| (lo.min(t), hi.max(t)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WidthResult {
    pub width: i64,
    /// Every width direction up to sign, sign-normalized and in scan order.
    /// Empty for a single point; the segment normal for a segment.
    pub directions: Vec<Direction>,
}

impl WidthResult {
    /// Whether two of the width directions are linearly independent.
    pub fn has_independent_pair(&self) -> bool {
        self.directions.len() >= 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SizeResult {
    pub size: i64,
    /// Places the polygon inside `[0, size]^2`.
    pub witness: UnimodularMap,
}

fn floor_div(a: i64, b: i64) -> i64 {
    if b < 0 {
        (-a).div_euclid(-b)
    } else {
        a.div_euclid(b)
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

/// Integer `y` with `|a*x + b*y| <= bound`; `None` means unconstrained (`b = 0`
/// and the `x` part already satisfies it), `Some(empty)` means infeasible.
fn strip_range(a: i64, b: i64, x: i64, bound: i64) -> Option<(i64, i64)> {
    let ax = a * x;
    if b == 0 {
        return if ax.abs() <= bound {
            None
        } else {
            Some((1, 0))
        };
    }
    let (lo, hi) = (-bound - ax, bound - ax);
    if b > 0 {
        Some((ceil_div(lo, b), floor_div(hi, b)))
    } else {
        Some((ceil_div(hi, b), floor_div(lo, b)))
    }
}

/// Two independent vertex differences spanning a large triangle. A large
/// determinant keeps the candidate parallelogram small.
fn spanning_pair(p: &Polygon) -> (Point, Point) {
    let v = p.vertices();
    let n = v.len();
    debug_assert!(n >= 3);
    if n > 40 {
        let (a, b, c) = (v[0], v[n / 3], v[2 * n / 3]);
        return (b - a, c - a);
    }
    let mut best = (0, 1, 2);
    let mut best_area = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let area = orient(v[i], v[j], v[k]).abs();
                if area > best_area {
                    best_area = area;
                    best = (i, j, k);
                }
            }
        }
    }
    let (i, j, k) = best;
    (v[j] - v[i], v[k] - v[i])
}

/// Every sign-normalized primitive `v` with `width_in_direction(p, v) <= bound`,
/// in scan order. Requires a two-dimensional polygon.
///
/// Any such `v` satisfies `|<v,u>| <= bound` for every difference `u` of two
/// vertices, so the search runs over the parallelogram cut out by two
/// independent differences.
pub fn directions_within(p: &Polygon, bound: i64) -> Vec<Direction> {
    assert_eq!(
        p.dimension(),
        2,
        "directions_within needs a 2-dimensional polygon"
    );
    if bound < 0 {
        return Vec::new();
    }
    let (u1, u2) = spanning_pair(p);
    let det = cross(u1, u2).abs();
    let x_max = (u1.y.abs() + u2.y.abs()) * bound / det;

    let mut out = Vec::new();
    for x in 0..=x_max {
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        let mut feasible = true;
        for u in [u1, u2] {
            if let Some((l, h)) = strip_range(u.x, u.y, x, bound) {
                if l > h {
                    feasible = false;
                }
                lo = lo.max(l);
                hi = hi.min(h);
            }
        }
        if !feasible || lo > hi {
            continue;
        }
        // At least one of u1.y, u2.y is non-zero, so the range is finite.
        if x == 0 {
            if lo <= 1 && 1 <= hi {
                out.push(Direction::new(0, 1).unwrap());
            }
            continue;
        }
        for y in lo..=hi {
            if let Some(v) = Direction::new(x, y) {
                out.push(v);
            }
        }
    }
    out.retain(|&v| width_in_direction(p, v) <= bound);
    out.sort_by_key(|v| v.scan_key());
    out
}

fn segment_normal(p: &Polygon) -> Direction {
    let d = p.vertices()[1] - p.vertices()[0];
    make_primitive(-d.y, d.x).unwrap().normalized()
}

/// Cheap upper bound on the lattice width: axes and primitive edge normals.
fn width_upper_bound(p: &Polygon) -> i64 {
    let axes = [Direction::new(1, 0).unwrap(), Direction::new(0, 1).unwrap()];
    let normals = p
        .edges()
        .map(|(a, b)| make_primitive(a.y - b.y, b.x - a.x).unwrap());
    axes.into_iter()
        .chain(normals)
        .map(|v| width_in_direction(p, v))
        .min()
        .unwrap()
}

pub fn lattice_width(p: &Polygon) -> WidthResult {
    match p.dimension() {
        0 => WidthResult {
            width: 0,
            directions: Vec::new(),
        },
        1 => WidthResult {
            width: 0,
            directions: vec![segment_normal(p)],
        },
        _ => {
            let candidates = directions_within(p, width_upper_bound(p));
            let width = candidates
                .iter()
                .map(|&v| width_in_direction(p, v))
                .min()
                .expect("the bound is attained by some candidate");
            let directions = candidates
                .into_iter()
                .filter(|&v| width_in_direction(p, v) == width)
                .collect();
            WidthResult { width, directions }
        }
    }
}

/// The map with rows `v`, `w`, translated so both minima become zero.
fn fit_map(p: &Polygon, v: Direction, w: Direction) -> UnimodularMap {
    let (vmin, _) = extent(p, v);
    let (wmin, _) = extent(p, w);
    UnimodularMap::from_rows(v, w, -vmin, -wmin).expect("basis has determinant +-1")
}

/// Smallest `s` such that some unimodular image of `p` lies in `[0,s]^2`,
/// with a witness map.
///
/// `p` fits in `[0,s]^2` iff there is a lattice basis `(v, w)` with both
/// `lw_v(p) <= s` and `lw_w(p) <= s`; `s` is searched upward from the lattice
/// width to the bounding-box size.
pub fn lattice_size_square(p: &Polygon) -> SizeResult {
    match p.dimension() {
        0 => {
            let q = p.start();
            SizeResult {
                size: 0,
                witness: UnimodularMap::translation(-q.x, -q.y),
            }
        }
        1 => {
            // Rows (s,t) with <e,(s,t)> = 1 and the normal: the segment lands on
            // [0,g] x {0}.
            let d = p.vertices()[1] - p.vertices()[0];
            let g = gcd(d.x, d.y);
            let e = make_primitive(d.x, d.y).unwrap();
            let (_, s, t) = extended_gcd(e.x(), e.y());
            let v = Direction::new(s, t).unwrap();
            let n = Direction::new(-e.y(), e.x()).unwrap();
            SizeResult {
                size: g,
                witness: fit_map(p, v, n),
            }
        }
        _ => {
            let lw = lattice_width(p).width;
            let (lo, hi) = p.bounding_box();
            let upper = (hi.x - lo.x).max(hi.y - lo.y);
            for s in lw..=upper {
                let candidates = directions_within(p, s);
                // Orientation-preserving bases only: if (v, w) has determinant
                // -1 then (w, v) has +1, so nothing is lost.
                for &v in &candidates {
                    for &w in &candidates {
                        if cross(v.as_point(), w.as_point()) == 1 {
                            return SizeResult {
                                size: s,
                                witness: fit_map(p, v, w),
                            };
                        }
                    }
                }
            }
            unreachable!("the coordinate axes give a basis at the bounding-box size")
        }
    }
}

/// A map into `[0,d]^2` with `d = lw(p)`, or `None` when the lattice size
/// exceeds the lattice width.
pub fn embed_in_square(p: &Polygon) -> Option<UnimodularMap> {
    let size = lattice_size_square(p);
    (size.size == lattice_width(p).width).then_some(size.witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::convex_hull;

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        convex_hull(pts.iter().map(|&p| p.into())).unwrap()
    }

    fn dir(x: i64, y: i64) -> Direction {
        Direction::new(x, y).unwrap()
    }

    fn inside_square(p: &Polygon, m: &UnimodularMap, s: i64) -> bool {
        p.apply(m)
            .unwrap()
            .vertices()
            .iter()
            .all(|q| (0..=s).contains(&q.x) && (0..=s).contains(&q.y))
    }

    #[test]
    fn width_in_direction_examples() {
        let simplex2 = poly(&[(0, 0), (2, 0), (0, 2)]);
        assert_eq!(width_in_direction(&simplex2, dir(1, 0)), 2);
        let ups = poly(&[(0, 0), (1, 2), (2, 1)]);
        assert_eq!(width_in_direction(&ups, dir(1, 1)), 3);
        assert_eq!(width_in_direction(&ups, dir(1, -1)), 2);
    }

    #[test]
    fn lattice_width_examples() {
        assert_eq!(lattice_width(&poly(&[(4, 4)])).width, 0);
        assert!(lattice_width(&poly(&[(4, 4)])).directions.is_empty());
        assert_eq!(lattice_width(&poly(&[(0, 0), (1, 0), (0, 1)])).width, 1);

        let ups = lattice_width(&poly(&[(0, 0), (1, 2), (2, 1)]));
        assert_eq!(ups.width, 2);
        assert_eq!(ups.directions, vec![dir(0, 1), dir(1, 0), dir(1, -1)]);

        let seg = lattice_width(&poly(&[(1, 1), (3, 5)]));
        assert_eq!(seg.width, 0);
        assert_eq!(seg.directions, vec![dir(2, -1)]);
    }

    #[test]
    fn thin_polygon_needs_long_direction() {
        let p = poly(&[(0, 0), (7, 1), (8, 1), (1, 0)]);
        let w = lattice_width(&p);
        assert_eq!(w.width, 1);
        assert_eq!(w.directions, vec![dir(0, 1), dir(1, -7)]);
    }

    #[test]
    fn lattice_size_examples() {
        let simplex = poly(&[(0, 0), (1, 0), (0, 1)]);
        let s = lattice_size_square(&simplex);
        assert_eq!(s.size, 1);
        assert!(inside_square(&simplex, &s.witness, 1));

        let ups = poly(&[(0, 0), (1, 3), (3, 1)]);
        let s = lattice_size_square(&ups);
        assert_eq!(s.size, 3);
        assert!(inside_square(&ups, &s.witness, 3));

        let seg = poly(&[(0, 0), (5, 0)]);
        let s = lattice_size_square(&seg);
        assert_eq!(s.size, 5);
        assert!(inside_square(&seg, &s.witness, 5));

        let pt = poly(&[(-3, 8)]);
        let s = lattice_size_square(&pt);
        assert_eq!(s.size, 0);
        assert!(inside_square(&pt, &s.witness, 0));
    }

    #[test]
    fn embedding_examples() {
        let t = poly(&[(0, 0), (3, 0), (0, 3)]);
        assert_eq!(embed_in_square(&t), Some(UnimodularMap::IDENTITY));

        // Unimodular, hence equivalent to the standard simplex.
        let thin = poly(&[(0, 0), (7, 1), (1, 0)]);
        let m = embed_in_square(&thin).unwrap();
        assert!(inside_square(&thin, &m, 1));

        // Three collinear lattice points cannot fit in the unit square.
        let wide = poly(&[(0, 0), (2, 0), (0, 1)]);
        assert_eq!(lattice_width(&wide).width, 1);
        assert_eq!(lattice_size_square(&wide).size, 2);
        assert_eq!(embed_in_square(&wide), None);
    }

    #[test]
    fn strip_ranges() {
        assert_eq!(strip_range(1, 2, 3, 4), Some((-3, 0)));
        assert_eq!(strip_range(1, -2, 3, 4), Some((0, 3)));
        assert_eq!(strip_range(5, 0, 1, 4), Some((1, 0)));
        assert_eq!(strip_range(3, 0, 1, 4), None);
    }
}
