//! Deterministic SVG figures of a polygon on the lattice, with the square
//! `[0,d]^2` and optionally the hexagon `H_l`.

use std::fmt::Write as _;

use crate::classify::hexagon;
use crate::error::Result;
use crate::lattice::{Point, Polygon};

/// Pixels per lattice unit.
pub const PITCH: i64 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlotOptions {
    /// Side of the outlined square `[0,d]^2`.
    pub d: i64,
    /// Draw the dashed hexagon with this `l`.
    pub hexagon: Option<i64>,
}

fn points_attr(pts: &[Point], to_px: &impl Fn(Point) -> (i64, i64)) -> String {
    pts.iter()
        .map(|&p| {
            let (x, y) = to_px(p);
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render(p: &Polygon, opts: PlotOptions) -> Result<String> {
    let hex = opts.hexagon.map(|l| hexagon(opts.d, l)).transpose()?;

    let (mut lo, mut hi) = p.bounding_box();
    let mut include = |q: Point| {
        lo = Point::new(lo.x.min(q.x), lo.y.min(q.y));
        hi = Point::new(hi.x.max(q.x), hi.y.max(q.y));
    };
    include(Point::ORIGIN);
    include(Point::new(opts.d, opts.d));
    let (lo, hi) = (lo - Point::new(1, 1), hi + Point::new(1, 1));
    let to_px = |q: Point| ((q.x - lo.x) * PITCH, (hi.y - q.y) * PITCH);
    let (width, height) = ((hi.x - lo.x) * PITCH, (hi.y - lo.y) * PITCH);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(
        s,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    )
    .unwrap();

    s.push_str("<g class=\"grid\" fill=\"#bbbbbb\">\n");
    for y in (lo.y..=hi.y).rev() {
        for x in lo.x..=hi.x {
            let (px, py) = to_px(Point::new(x, y));
            writeln!(s, r#"<circle cx="{px}" cy="{py}" r="2"/>"#).unwrap();
        }
    }
    s.push_str("</g>\n");

    let (sx, sy) = to_px(Point::new(0, opts.d));
    let side = opts.d * PITCH;
    writeln!(
        s,
        "<rect class=\"square\" x=\"{sx}\" y=\"{sy}\" width=\"{side}\" height=\"{side}\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>"
    )
    .unwrap();

    if let Some(h) = &hex {
        writeln!(
            s,
            "<polygon class=\"hexagon\" points=\"{}\" fill=\"none\" stroke=\"#cc3333\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>",
            points_attr(h.vertices(), &to_px)
        )
        .unwrap();
    }

    let pts = points_attr(p.vertices(), &to_px);
    match p.dimension() {
        2 => writeln!(
            s,
            "<polygon class=\"polygon\" points=\"{pts}\" fill=\"#3366cc\" fill-opacity=\"0.3\" stroke=\"#3366cc\" stroke-width=\"2\"/>"
        ),
        1 => writeln!(
            s,
            "<polyline class=\"polygon\" points=\"{pts}\" fill=\"none\" stroke=\"#3366cc\" stroke-width=\"2\"/>"
        ),
        _ => Ok(()),
    }
    .unwrap();

    s.push_str("<g class=\"lattice-points\" fill=\"#000000\">\n");
    for q in p.lattice_points() {
        let (px, py) = to_px(q);
        writeln!(
            s,
            r#"<circle class="lattice-point" cx="{px}" cy="{py}" r="4"/>"#
        )
        .unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::convex_hull;

    #[test]
    fn marks_every_lattice_point() {
        let t = convex_hull([(0, 0), (3, 0), (0, 3)].map(Point::from)).unwrap();
        let svg = render(
            &t,
            PlotOptions {
                d: 3,
                hexagon: None,
            },
        )
        .unwrap();
        assert_eq!(svg.matches(r#"class="lattice-point""#).count(), 10);
        assert!(svg.contains("fill-opacity=\"0.3\""));
        assert!(!svg.contains("hexagon"));
        assert_eq!(
            svg,
            render(
                &t,
                PlotOptions {
                    d: 3,
                    hexagon: None
                }
            )
            .unwrap()
        );
    }

    #[test]
    fn dashed_hexagon() {
        let t =
            convex_hull([(1, 0), (3, 1), (4, 3), (3, 4), (1, 3), (0, 1)].map(Point::from)).unwrap();
        let svg = render(
            &t,
            PlotOptions {
                d: 4,
                hexagon: Some(2),
            },
        )
        .unwrap();
        assert!(svg.contains(r#"stroke-dasharray="6 3""#));
        assert!(render(
            &t,
            PlotOptions {
                d: 4,
                hexagon: Some(5)
            }
        )
        .is_err());
    }
}
