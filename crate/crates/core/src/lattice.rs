//! Exact integer primitives: points, primitive directions, unimodular maps
//! and convex lattice polygons.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the integer lattice.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, v: Direction) -> i64 {
        self.x * v.x + self.y * v.y
    }
}

impl Add for Point {
    type Output = Point;

    fn add(self, other: Point) -> Point {
        Point::new(self.x + other.x, self.y + other.y)
    }
}

impl Sub for Point {
    type Output = Point;

    fn sub(self, other: Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }
}

impl From<[i64; 2]> for Point {
    fn from([x, y]: [i64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The set of lattice points of a polygon, ordered lexicographically.
pub type PointSet = BTreeSet<Point>;

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// z-component of `(b - a) x (c - a)`; positive when `a, b, c` turn counterclockwise.
pub fn orient(a: Point, b: Point, c: Point) -> i64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

pub(crate) fn cross(u: Point, v: Point) -> i64 {
    u.x * v.y - u.y * v.x
}

/// A lattice direction: a non-zero primitive integer vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct Direction {
    x: i64,
    y: i64,
}

impl Direction {
    /// Accepts `(x, y)` only if it is already primitive.
    pub fn new(x: i64, y: i64) -> Option<Self> {
        (gcd(x, y) == 1).then_some(Direction { x, y })
    }

    pub fn x(self) -> i64 {
        self.x
    }

    pub fn y(self) -> i64 {
        self.y
    }

    /// Representative of `{v, -v}` with `x > 0`, or `x = 0` and `y > 0`.
    pub fn normalized(self) -> Self {
        if self.x > 0 || (self.x == 0 && self.y > 0) {
            self
        } else {
            -self
        }
    }

    pub fn is_normalized(self) -> bool {
        self == self.normalized()
    }

    pub fn as_point(self) -> Point {
        Point::new(self.x, self.y)
    }

    /// Deterministic scan order: increasing `|x|`, then `|y|`, then negative `y` first.
    pub fn scan_key(self) -> (u64, u64, i64, i64) {
        (self.x.unsigned_abs(), self.y.unsigned_abs(), self.x, self.y)
    }
}

impl TryFrom<[i64; 2]> for Direction {
    type Error = String;

    fn try_from([x, y]: [i64; 2]) -> std::result::Result<Self, String> {
        Direction::new(x, y).ok_or_else(|| format!("({x}, {y}) is not primitive"))
    }
}

impl From<Direction> for [i64; 2] {
    fn from(v: Direction) -> Self {
        [v.x, v.y]
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Divides a non-zero vector by the gcd of its coordinates.
impl Neg for Direction {
    type Output = Direction;

    fn neg(self) -> Direction {
        Direction {
            x: -self.x,
            y: -self.y,
        }
    }
}

pub fn make_primitive(x: i64, y: i64) -> Result<Direction> {
    let g = gcd(x, y);
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(Direction { x: x / g, y: y / g })
}

/// An affine map `x -> A x + b` with `A` in GL2(Z) and `b` integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMap", into = "RawMap")]
pub struct UnimodularMap {
    a: [[i64; 2]; 2],
    b: [i64; 2],
}

#[derive(Serialize, Deserialize)]
struct RawMap {
    matrix: [[i64; 2]; 2],
    translation: [i64; 2],
}

impl TryFrom<RawMap> for UnimodularMap {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<Self> {
        let [[a11, a12], [a21, a22]] = raw.matrix;
        UnimodularMap::new(a11, a12, a21, a22, raw.translation[0], raw.translation[1])
    }
}

impl From<UnimodularMap> for RawMap {
    fn from(m: UnimodularMap) -> Self {
        RawMap {
            matrix: m.a,
            translation: m.b,
        }
    }
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap {
        a: [[1, 0], [0, 1]],
        b: [0, 0],
    };

    pub fn new(a11: i64, a12: i64, a21: i64, a22: i64, bx: i64, by: i64) -> Result<Self> {
        let det = a11
            .checked_mul(a22)
            .zip(a12.checked_mul(a21))
            .and_then(|(p, q)| p.checked_sub(q))
            .ok_or(Error::Overflow)?;
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(a11, a12, a21, a22));
        }
        Ok(UnimodularMap {
            a: [[a11, a12], [a21, a22]],
            b: [bx, by],
        })
    }

    pub fn linear(a11: i64, a12: i64, a21: i64, a22: i64) -> Result<Self> {
        Self::new(a11, a12, a21, a22, 0, 0)
    }

    pub fn translation(bx: i64, by: i64) -> Self {
        UnimodularMap {
            a: [[1, 0], [0, 1]],
            b: [bx, by],
        }
    }

    /// The map whose rows are `v` and `w`, i.e. `P -> (<P,v>, <P,w>) + b`.
    pub fn from_rows(v: Direction, w: Direction, bx: i64, by: i64) -> Result<Self> {
        Self::new(v.x, v.y, w.x, w.y, bx, by)
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.a
    }

    pub fn offset(&self) -> [i64; 2] {
        self.b
    }

    pub fn det(&self) -> i64 {
        self.a[0][0] * self.a[1][1] - self.a[0][1] * self.a[1][0]
    }

    pub fn apply(&self, p: Point) -> Result<Point> {
        let row = |r: [i64; 2], b: i64| {
            r[0].checked_mul(p.x)
                .zip(r[1].checked_mul(p.y))
                .and_then(|(s, t)| s.checked_add(t))
                .and_then(|s| s.checked_add(b))
                .ok_or(Error::Overflow)
        };
        Ok(Point::new(
            row(self.a[0], self.b[0])?,
            row(self.a[1], self.b[1])?,
        ))
    }

    /// Image of a direction under the linear part `A`.
    pub fn apply_direction(&self, v: Direction) -> Direction {
        Direction {
            x: self.a[0][0] * v.x + self.a[0][1] * v.y,
            y: self.a[1][0] * v.x + self.a[1][1] * v.y,
        }
    }

    /// The dual action `v -> A^{-T} v`, so that `<A P, dual(v)> = <P, v>`.
    pub fn dual_direction(&self, v: Direction) -> Direction {
        let inv = self.inverse().a;
        Direction {
            x: inv[0][0] * v.x + inv[1][0] * v.y,
            y: inv[0][1] * v.x + inv[1][1] * v.y,
        }
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &UnimodularMap) -> UnimodularMap {
        let (p, q) = (then.a, self.a);
        let a = [
            [
                p[0][0] * q[0][0] + p[0][1] * q[1][0],
                p[0][0] * q[0][1] + p[0][1] * q[1][1],
            ],
            [
                p[1][0] * q[0][0] + p[1][1] * q[1][0],
                p[1][0] * q[0][1] + p[1][1] * q[1][1],
            ],
        ];
        let b = [
            p[0][0] * self.b[0] + p[0][1] * self.b[1] + then.b[0],
            p[1][0] * self.b[0] + p[1][1] * self.b[1] + then.b[1],
        ];
        UnimodularMap { a, b }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let det = self.det();
        let [[a11, a12], [a21, a22]] = self.a;
        let a = [[a22 * det, -a12 * det], [-a21 * det, a11 * det]];
        let b = [
            -(a[0][0] * self.b[0] + a[0][1] * self.b[1]),
            -(a[1][0] * self.b[0] + a[1][1] * self.b[1]),
        ];
        UnimodularMap { a, b }
    }
}

impl Default for UnimodularMap {
    fn default() -> Self {
        Self::IDENTITY
    }
}

pub fn invert_map(m: &UnimodularMap) -> UnimodularMap {
    m.inverse()
}

/// A convex lattice polygon stored as the counterclockwise cycle of its
/// extreme points, starting at the lexicographically smallest one.
///
/// Points and segments are valid polygons of dimension 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn point(p: Point) -> Self {
        Polygon { vertices: vec![p] }
    }

    pub fn from_points<I: IntoIterator<Item = Point>>(points: I) -> Result<Self> {
        convex_hull(points)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.vertices.len().min(3) - 1
    }

    pub fn start(&self) -> Point {
        self.vertices[0]
    }

    pub fn is_vertex(&self, p: Point) -> bool {
        self.vertices.contains(&p)
    }

    /// Directed edges `(v_i, v_{i+1})` of the cycle. A segment yields both
    /// orientations, a point yields nothing.
    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        let count = if n < 2 { 0 } else { n };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn doubled_area(&self) -> i64 {
        doubled_area(self)
    }

    pub fn lattice_points(&self) -> PointSet {
        lattice_points(self)
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_point_count(&self) -> i64 {
        match self.dimension() {
            0 => 1,
            1 => {
                let d = self.vertices[1] - self.vertices[0];
                gcd(d.x, d.y) + 1
            }
            _ => self.edges().map(|(a, b)| gcd(b.x - a.x, b.y - a.y)).sum(),
        }
    }

    /// Inclusive bounding box `(min, max)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0];
        let mut hi = lo;
        for p in &self.vertices[1..] {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    }

    pub fn contains(&self, p: Point) -> bool {
        match self.dimension() {
            0 => self.vertices[0] == p,
            1 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                orient(a, b, p) == 0
                    && (a.x.min(b.x)..=a.x.max(b.x)).contains(&p.x)
                    && (a.y.min(b.y)..=a.y.max(b.y)).contains(&p.y)
            }
            _ => self.edges().all(|(a, b)| orient(a, b, p) >= 0),
        }
    }

    pub fn apply(&self, m: &UnimodularMap) -> Result<Polygon> {
        apply_map(m, self)
    }

    pub fn translate(&self, by: Point) -> Polygon {
        Polygon {
            vertices: self.vertices.iter().map(|&p| p + by).collect(),
        }
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Andrew's monotone chain. Collinear boundary points are dropped, so the
/// result holds exactly the extreme points in counterclockwise order.
pub fn convex_hull<I: IntoIterator<Item = Point>>(points: I) -> Result<Polygon> {
    let mut pts: Vec<Point> = points.into_iter().collect();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 1 {
        return match pts.pop() {
            Some(p) => Ok(Polygon::point(p)),
            None => Err(Error::EmptyInput),
        };
    }

    let mut lower: Vec<Point> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(Polygon { vertices: lower })
}

/// All lattice points in or on the polygon, by scanning the bounding box.
pub fn lattice_points(p: &Polygon) -> PointSet {
    let (lo, hi) = p.bounding_box();
    let mut out = PointSet::new();
    for x in lo.x..=hi.x {
        for y in lo.y..=hi.y {
            let q = Point::new(x, y);
            if p.contains(q) {
                out.insert(q);
            }
        }
    }
    out
}

/// Twice the Euclidean area (shoelace formula).
pub fn doubled_area(p: &Polygon) -> i64 {
    if p.dimension() < 2 {
        return 0;
    }
    p.edges().map(|(a, b)| a.x * b.y - a.y * b.x).sum()
}

/// Image of a polygon; the cycle is rebuilt counterclockwise from its
/// lexicographically smallest vertex (orientation flips when `det = -1`).
pub fn apply_map(m: &UnimodularMap, p: &Polygon) -> Result<Polygon> {
    let images = p
        .vertices
        .iter()
        .map(|&v| m.apply(v))
        .collect::<Result<Vec<_>>>()?;
    convex_hull(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        convex_hull(pts.iter().map(|&p| p.into())).unwrap()
    }

    fn pts(p: &Polygon) -> Vec<(i64, i64)> {
        p.vertices().iter().map(|v| (v.x, v.y)).collect()
    }

    #[test]
    fn primitive_directions() {
        assert_eq!(make_primitive(4, 6).unwrap(), Direction::new(2, 3).unwrap());
        assert_eq!(make_primitive(0, 5).unwrap(), Direction::new(0, 1).unwrap());
        assert_eq!(
            make_primitive(-3, 0).unwrap(),
            Direction::new(-1, 0).unwrap()
        );
        assert_eq!(make_primitive(0, 0), Err(Error::ZeroVector));
        assert!(Direction::new(2, 4).is_none());
        assert_eq!(
            Direction::new(-1, 3).unwrap().normalized(),
            Direction::new(1, -3).unwrap()
        );
        assert_eq!(
            Direction::new(0, -1).unwrap().normalized(),
            Direction::new(0, 1).unwrap()
        );
    }

    #[test]
    fn extended_gcd_identity() {
        for a in -12..=12 {
            for b in -12..=12 {
                let (g, s, t) = extended_gcd(a, b);
                assert_eq!(g, gcd(a, b));
                assert_eq!(s * a + t * b, g);
            }
        }
    }

    #[test]
    fn hull_degenerate_cases() {
        let p = poly(&[(0, 0)]);
        assert_eq!(p.dimension(), 0);
        assert_eq!(pts(&p), vec![(0, 0)]);

        let s = poly(&[(0, 0), (1, 0), (2, 0)]);
        assert_eq!(s.dimension(), 1);
        assert_eq!(pts(&s), vec![(0, 0), (2, 0)]);

        let t = poly(&[(0, 0), (2, 0), (0, 2), (1, 1)]);
        assert_eq!(pts(&t), vec![(0, 0), (2, 0), (0, 2)]);

        assert_eq!(convex_hull(std::iter::empty()), Err(Error::EmptyInput));
    }

    #[test]
    fn hull_starts_at_lexicographic_minimum() {
        let p = poly(&[(3, 1), (0, 2), (0, 1), (2, -1), (1, 3)]);
        assert_eq!(p.start(), Point::new(0, 1));
        assert!(p.doubled_area() > 0);
    }

    #[test]
    fn lattice_point_examples() {
        assert_eq!(poly(&[(0, 0), (2, 0), (0, 2)]).lattice_points().len(), 6);
        let single = poly(&[(3, 5)]).lattice_points();
        assert_eq!(
            single.into_iter().collect::<Vec<_>>(),
            vec![Point::new(3, 5)]
        );
        let upsilon = poly(&[(0, 0), (1, 2), (2, 1)]).lattice_points();
        let expect: PointSet = [(0, 0), (1, 1), (1, 2), (2, 1)]
            .into_iter()
            .map(Point::from)
            .collect();
        assert_eq!(upsilon, expect);
        assert_eq!(poly(&[(0, 0), (4, 2)]).lattice_points().len(), 3);
    }

    #[test]
    fn doubled_area_examples() {
        assert_eq!(poly(&[(0, 0), (4, 2), (2, 4)]).doubled_area(), 12);
        assert_eq!(poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]).doubled_area(), 2);
        assert_eq!(poly(&[(0, 0), (5, 0)]).doubled_area(), 0);
    }

    #[test]
    fn map_examples() {
        let t = poly(&[(0, 0), (1, 4), (3, 4)]);
        let shear = UnimodularMap::linear(1, 0, -1, 1).unwrap();
        assert_eq!(pts(&t.apply(&shear).unwrap()), vec![(0, 0), (3, 1), (1, 3)]);

        let s = poly(&[(0, 0), (2, 0), (0, 2)]);
        assert_eq!(s.apply(&UnimodularMap::IDENTITY).unwrap(), s);
        let flip = UnimodularMap::linear(1, 0, 0, -1).unwrap();
        assert_eq!(pts(&s.apply(&flip).unwrap()), vec![(0, -2), (2, 0), (0, 0)]);

        assert!(matches!(
            UnimodularMap::linear(2, 0, 0, 1),
            Err(Error::NotUnimodular(..))
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(UnimodularMap::IDENTITY.inverse(), UnimodularMap::IDENTITY);
        let m = UnimodularMap::linear(1, 1, 0, 1).unwrap();
        assert_eq!(m.inverse(), UnimodularMap::linear(1, -1, 0, 1).unwrap());
        let swap = UnimodularMap::new(0, 1, 1, 0, 2, 3).unwrap();
        assert_eq!(
            swap.inverse(),
            UnimodularMap::new(0, 1, 1, 0, -3, -2).unwrap()
        );
    }

    #[test]
    fn map_serde_rejects_non_unimodular() {
        let m: UnimodularMap =
            serde_json::from_str(r#"{"matrix":[[2,1],[1,1]],"translation":[1,-1]}"#).unwrap();
        assert_eq!(m.det(), 1);
        let bad = serde_json::from_str::<UnimodularMap>(
            r#"{"matrix":[[2,0],[0,1]],"translation":[0,0]}"#,
        );
        assert!(bad.is_err());
    }
}
