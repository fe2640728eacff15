//! Independent helpers for integration tests: random inputs and naive
//! recomputations that share no code with the library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use latwidth::{convex_hull, Point, Polygon, UnimodularMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Hull of 3 to `max_points` uniform points in `[-r, r]^2`, retried until
/// two-dimensional.
pub fn random_polygon(rng: &mut ChaCha8Rng, r: i64, max_points: usize) -> Polygon {
    loop {
        let k = rng.random_range(3..=max_points);
        let pts = (0..k).map(|_| Point::new(rng.random_range(-r..=r), rng.random_range(-r..=r)));
        let p = convex_hull(pts).unwrap();
        if p.dimension() == 2 {
            return p;
        }
    }
}

/// Unimodular map with all entries (matrix and translation) in `[-r, r]`.
pub fn random_map(rng: &mut ChaCha8Rng, r: i64) -> UnimodularMap {
    loop {
        let [a, b, c, d] = [0; 4].map(|_| rng.random_range(-r..=r));
        if (a * d - b * c).abs() == 1 {
            return UnimodularMap::new(
                a,
                b,
                c,
                d,
                rng.random_range(-r..=r),
                rng.random_range(-r..=r),
            )
            .unwrap();
        }
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn coords(p: &Polygon) -> Vec<(i64, i64)> {
    p.vertices().iter().map(|v| (v.x, v.y)).collect()
}

/// Lattice points of a counterclockwise convex polygon by half-plane tests.
pub fn naive_lattice_points(p: &Polygon) -> BTreeSet<(i64, i64)> {
    let v = coords(p);
    let (xs, ys): (Vec<i64>, Vec<i64>) = v.iter().copied().unzip();
    let mut out = BTreeSet::new();
    for x in *xs.iter().min().unwrap()..=*xs.iter().max().unwrap() {
        for y in *ys.iter().min().unwrap()..=*ys.iter().max().unwrap() {
            let inside = match v.len() {
                1 => true,
                2 => cross(v[0], v[1], (x, y)) == 0,
                n => (0..n).all(|i| cross(v[i], v[(i + 1) % n], (x, y)) >= 0),
            };
            if inside {
                out.insert((x, y));
            }
        }
    }
    out
}

/// Points on the boundary, by the gcd of each edge.
pub fn naive_boundary(p: &Polygon) -> i64 {
    let v = coords(p);
    let n = v.len();
    (0..n)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            gcd(b.0 - a.0, b.1 - a.1)
        })
        .sum()
}

pub fn naive_doubled_area(p: &Polygon) -> i64 {
    let v = coords(p);
    let n = v.len();
    (0..n)
        .map(|i| v[i].0 * v[(i + 1) % n].1 - v[(i + 1) % n].0 * v[i].1)
        .sum::<i64>()
        .abs()
}

fn naive_width_in(v: &[(i64, i64)], d: (i64, i64)) -> i64 {
    let dots: Vec<i64> = v.iter().map(|p| p.0 * d.0 + p.1 * d.1).collect();
    dots.iter().max().unwrap() - dots.iter().min().unwrap()
}

/// Lattice width and its normalized directions by scanning every primitive
/// vector in a box that provably holds all directions of width at most
/// `min(lw_x, lw_y)`.
///
/// With edge vectors `e1, e2` of determinant `D != 0`, any `v` with
/// `|<v,e1>|, |<v,e2>| <= W` has `|v_i| <= W (|e1|_inf + |e2|_inf) / |D|`.
pub fn naive_width(p: &Polygon) -> (i64, BTreeSet<(i64, i64)>) {
    let v = coords(p);
    let n = v.len();
    let w0 = naive_width_in(&v, (1, 0)).min(naive_width_in(&v, (0, 1)));
    let edges: Vec<(i64, i64)> = (0..n)
        .map(|i| (v[(i + 1) % n].0 - v[i].0, v[(i + 1) % n].1 - v[i].1))
        .collect();
    let mut best = (0, 1);
    let mut best_det = 0i64;
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            let det = (a.0 * b.1 - a.1 * b.0).abs();
            if det > best_det {
                best_det = det;
                best = (a.0.abs().max(a.1.abs()), b.0.abs().max(b.1.abs()));
            }
        }
    }
    assert!(best_det > 0, "needs a two-dimensional polygon");
    let r = (w0 * (best.0 + best.1) + best_det - 1) / best_det;
    let mut width = i64::MAX;
    let mut dirs = BTreeSet::new();
    for x in 0..=r {
        for y in -r..=r {
            if (x == 0 && y <= 0) || gcd(x, y) != 1 {
                continue;
            }
            let w = naive_width_in(&v, (x, y));
            if w < width {
                width = w;
                dirs.clear();
            }
            if w == width {
                dirs.insert((x, y));
            }
        }
    }
    (width, dirs)
}
