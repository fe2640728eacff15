//! Classification-free enumeration of minimal polygons.
//!
//! Every minimal polygon of width `d` has a unimodular image inside
//! `[0,d]^2`, so listing all convex lattice polygons there and filtering by
//! width and minimality finds every class without using the families.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::classify::par_map;
use crate::equivalence::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::lattice::{convex_hull, cross, gcd, Point, Polygon};
use crate::minimal::is_minimal;
use crate::width::lattice_width;

/// Largest width accepted by the brute-force oracle.
pub const ORACLE_LIMIT: i64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleClass {
    pub key: String,
    #[serde(skip)]
    pub canonical: CanonicalForm,
    pub point_count: usize,
    pub doubled_area: i64,
    /// First polygon of the class met by the search.
    pub vertices: Vec<Point>,
}

/// Angular position in `(-90°, 270°]`, the order of edge directions around a
/// polygon read counterclockwise from its lexicographically smallest vertex.
fn half(v: Point) -> u8 {
    match (v.x.signum(), v.y.signum()) {
        (1, _) => 0,
        (0, 1) => 1,
        (-1, _) => 2,
        _ => 3,
    }
}

fn angle_cmp(u: Point, v: Point) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| 0.cmp(&cross(u, v)))
}

struct Search {
    d: i64,
    dirs: Vec<Point>,
    index: HashMap<Point, usize>,
    start: Point,
    chain: Vec<Point>,
    out: Vec<Polygon>,
}

impl Search {
    fn inside(&self, q: Point) -> bool {
        (0..=self.d).contains(&q.x) && (0..=self.d).contains(&q.y) && q > self.start
    }

    fn extend(&mut self, from_dir: usize) {
        let cur = *self.chain.last().unwrap();
        if self.chain.len() >= 3 {
            let back = self.start - cur;
            let g = gcd(back.x, back.y);
            let prim = Point::new(back.x / g, back.y / g);
            if self.index.get(&prim).is_some_and(|&j| j >= from_dir) {
                self.out
                    .push(convex_hull(self.chain.iter().copied()).expect("non-empty"));
            }
        }
        for j in from_dir..self.dirs.len() {
            let e = self.dirs[j];
            let mut next = cur + e;
            while self.inside(next) {
                self.chain.push(next);
                self.extend(j + 1);
                self.chain.pop();
                next = next + e;
            }
        }
    }
}

/// Every two-dimensional convex lattice polygon with vertices in `[0,d]^2`,
/// each exactly once, built from edge sequences sorted by angle.
pub fn convex_polygons_in_square(d: i64) -> Vec<Polygon> {
    let mut dirs: Vec<Point> = (-d..=d)
        .flat_map(|x| (-d..=d).map(move |y| Point::new(x, y)))
        .filter(|v| gcd(v.x, v.y) == 1)
        .collect();
    dirs.sort_by(|&u, &v| angle_cmp(u, v));
    let index = dirs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut search = Search {
        d,
        dirs,
        index,
        start: Point::ORIGIN,
        chain: Vec::new(),
        out: Vec::new(),
    };
    for x in 0..=d {
        for y in 0..=d {
            search.start = Point::new(x, y);
            search.chain = vec![search.start];
            search.extend(0);
        }
    }
    search.out
}

/// Convex lattice polygons in `[0,d]^2` of lattice width exactly `d`.
pub fn width_universe(d: i64, jobs: usize) -> Vec<Polygon> {
    if d == 0 {
        return vec![Polygon::point(Point::ORIGIN)];
    }
    let all = convex_polygons_in_square(d);
    let keep = par_map(&all, jobs, |p| lattice_width(p).width == d);
    all.into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect()
}

/// Minimal classes of width `d` found by exhaustive search, sorted by
/// `(point_count, key)`.
pub fn brute_force_minimal(d: i64) -> Result<Vec<OracleClass>> {
    brute_force_minimal_jobs(d, 1)
}

pub fn brute_force_minimal_jobs(d: i64, jobs: usize) -> Result<Vec<OracleClass>> {
    if !(0..=ORACLE_LIMIT).contains(&d) {
        return Err(Error::OutOfRange(format!(
            "the brute-force oracle supports 0 <= d <= {ORACLE_LIMIT}, got {d}"
        )));
    }
    let universe = width_universe(d, jobs);
    let minimal = par_map(&universe, jobs, |p| {
        is_minimal(p).is_minimal.then(|| canonical_form(p))
    });
    let mut classes: BTreeMap<String, OracleClass> = BTreeMap::new();
    for (p, canonical) in universe.iter().zip(minimal) {
        let Some(canonical) = canonical else { continue };
        classes
            .entry(canonical.key().to_string())
            .or_insert_with(|| OracleClass {
                key: canonical.key().to_string(),
                canonical,
                point_count: p.lattice_points().len(),
                doubled_area: p.doubled_area(),
                vertices: p.vertices().to_vec(),
            });
    }
    let mut out: Vec<_> = classes.into_values().collect();
    out.sort_by(|a, b| (a.point_count, &a.key).cmp(&(b.point_count, &b.key)));
    Ok(out)
}
