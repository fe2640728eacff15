//! The polygon file format: `{"vertices": [[x, y], ...]}`.
//!
//! Readers accept any list of points and take its convex hull; writers emit
//! the counterclockwise cycle starting at the lexicographically smallest
//! vertex.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{convex_hull, Point, Polygon};

/// Largest accepted absolute coordinate in polygon files.
pub const COORDINATE_LIMIT: i64 = 1_000_000;

#[derive(Debug, Serialize, Deserialize)]
struct PolygonFile {
    vertices: Vec<Point>,
}

pub fn parse_polygon(text: &str) -> Result<Polygon> {
    let file: PolygonFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if let Some(c) = file
        .vertices
        .iter()
        .flat_map(|p| [p.x, p.y])
        .find(|c| c.unsigned_abs() > COORDINATE_LIMIT as u64)
    {
        return Err(Error::CoordinateLimit(c));
    }
    convex_hull(file.vertices)
}

pub fn polygon_to_json(p: &Polygon) -> String {
    serde_json::to_string(&PolygonFile {
        vertices: p.vertices().to_vec(),
    })
    .expect("points always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_any_point_list() {
        let p = parse_polygon(r#"{"vertices": [[2,0],[1,1],[0,2],[0,0],[1,0]]}"#).unwrap();
        assert_eq!(polygon_to_json(&p), r#"{"vertices":[[0,0],[2,0],[0,2]]}"#);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_polygon("{"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_polygon(r#"{"vertices": [[0.5, 1]]}"#),
            Err(Error::Parse(_))
        ));
        assert_eq!(parse_polygon(r#"{"vertices": []}"#), Err(Error::EmptyInput));
        assert_eq!(
            parse_polygon(r#"{"vertices": [[0,0],[1000001,0]]}"#),
            Err(Error::CoordinateLimit(1_000_001))
        );
        assert!(parse_polygon(r#"{"vertices": [[0,0],[-1000000,0]]}"#).is_ok());
    }
}
