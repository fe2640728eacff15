//! Exact lattice geometry for convex lattice polygons: lattice width and
//! width directions, lattice size with respect to the unit square,
//! unimodular canonical forms, inclusion-minimality, and enumeration and
//! classification of minimal polygons of a fixed lattice width.
//!
//! All arithmetic is on `i64`; areas are kept doubled so they stay integral.

pub mod bounds;
pub mod classify;
pub mod equivalence;
pub mod error;
pub mod io;
pub mod lattice;
pub mod minimal;
pub mod oracle;
pub mod svg;
pub mod width;

pub use classify::{
    classify_polygon, enumerate_minimal, enumerate_with_stats, four_direction_quadrangle, generate,
    hexagon, is_inscribed_in_hexagon, Classification, MinimalClass, Shape, Tag, TypeParams,
};
pub use equivalence::{are_equivalent, canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use lattice::{
    apply_map, convex_hull, doubled_area, invert_map, lattice_points, make_primitive, Direction,
    Point, PointSet, Polygon, UnimodularMap,
};
pub use minimal::{drop_vertex, is_minimal, upsilon, upsilon_lemma_witness, MinimalityReport};
pub use oracle::brute_force_minimal;
pub use width::{
    embed_in_square, lattice_size_square, lattice_width, width_in_direction, SizeResult,
    WidthResult,
};
