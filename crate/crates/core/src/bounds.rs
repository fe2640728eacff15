//! Lattice-point and area bounds over the enumerated minimal classes.
//!
//! Areas are handled as doubled areas so every threshold is an integer.

use serde::Serialize;

use crate::classify::{enumerate_minimal, generate, MinimalClass, Shape, TypeParams};
use crate::equivalence::canonical_form;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound: &'static str,
    pub d: i64,
    pub bound_value: i64,
    /// Maximum point count, or minimum doubled area, over all classes.
    pub achieved_max_or_min: i64,
    /// Keys of the classes attaining `achieved_max_or_min`.
    pub witnesses: Vec<String>,
    /// Every class respects the bound.
    pub holds: bool,
}

impl BoundReport {
    /// The bound is attained.
    pub fn is_sharp(&self) -> bool {
        self.achieved_max_or_min == self.bound_value
    }
}

/// `max((d-1)^2 + 4, (d+1)(d+2)/2)` for `d >= 2`.
pub fn point_bound(d: i64) -> Result<i64> {
    if d < 2 {
        return Err(Error::OutOfRange(format!(
            "the lattice-point bound needs d >= 2, got {d}"
        )));
    }
    Ok(((d - 1) * (d - 1) + 4).max((d + 1) * (d + 2) / 2))
}

/// Doubled-area threshold: `3d^2/4` for even `d`, `(3d^2 + 1)/4` for odd `d`.
pub fn doubled_volume_bound(d: i64) -> i64 {
    if d % 2 == 0 {
        3 * d * d / 4
    } else {
        (3 * d * d + 1) / 4
    }
}

fn witnesses<F: Fn(&MinimalClass) -> i64>(
    classes: &[MinimalClass],
    value: i64,
    f: F,
) -> Vec<String> {
    classes
        .iter()
        .filter(|c| f(c) == value)
        .map(|c| c.key().to_string())
        .collect()
}

pub fn point_bound_report(d: i64, classes: &[MinimalClass]) -> Result<BoundReport> {
    let bound_value = point_bound(d)?;
    let count = |c: &MinimalClass| c.point_count as i64;
    let achieved = classes.iter().map(count).max().unwrap_or(0);
    Ok(BoundReport {
        bound: "lattice-points",
        d,
        bound_value,
        achieved_max_or_min: achieved,
        witnesses: witnesses(classes, achieved, count),
        holds: classes.iter().all(|c| count(c) <= bound_value),
    })
}

pub fn volume_bound_report(d: i64, classes: &[MinimalClass]) -> Result<BoundReport> {
    if d < 1 {
        return Err(Error::OutOfRange(format!(
            "the area bound needs d >= 1, got {d}"
        )));
    }
    let bound_value = doubled_volume_bound(d);
    let area = |c: &MinimalClass| c.doubled_area;
    let achieved = classes.iter().map(area).min().unwrap_or(0);
    Ok(BoundReport {
        bound: "doubled-area",
        d,
        bound_value,
        achieved_max_or_min: achieved,
        witnesses: witnesses(classes, achieved, area),
        holds: classes.iter().all(|c| area(c) >= bound_value),
    })
}

pub fn verify_point_bound(d: i64) -> Result<BoundReport> {
    point_bound(d)?;
    point_bound_report(d, &enumerate_minimal(d)?)
}

pub fn verify_volume_bound(d: i64) -> Result<BoundReport> {
    if d < 1 {
        return Err(Error::OutOfRange(format!(
            "the area bound needs d >= 1, got {d}"
        )));
    }
    volume_bound_report(d, &enumerate_minimal(d)?)
}

/// Key of the class expected to attain the lattice-point bound: the
/// simplex `conv{(0,0),(d,0),(0,d)}` while `(d+1)(d+2)/2` dominates, the
/// quadrangle `conv{(1,0),(d,1),(d-1,d),(0,d-1)}` otherwise.
pub fn point_bound_witness(d: i64) -> Result<String> {
    let bound = point_bound(d)?;
    let shape = if bound == (d + 1) * (d + 2) / 2 {
        Shape::T1 { x: 0, y: 0 }
    } else {
        Shape::T2 {
            x1: 1,
            x2: d - 1,
            y1: d - 1,
            y2: 1,
        }
    };
    let p = generate(&TypeParams::new(d, shape))?;
    Ok(canonical_form(&p).key().to_string())
}

/// Key of the T1 triangle attaining the area bound.
pub fn volume_bound_witness(d: i64) -> Result<String> {
    let (x, y) = if d % 2 == 0 {
        (d / 2, d / 2)
    } else {
        ((d - 1) / 2, (d + 1) / 2)
    };
    let p = generate(&TypeParams::new(d, Shape::T1 { x, y }))?;
    Ok(canonical_form(&p).key().to_string())
}
