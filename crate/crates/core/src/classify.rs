//! The five parameterized families of minimal polygons, the hexagon that
//! circumscribes the last three, enumeration of all minimal polygons of a
//! given width up to equivalence, and recognition by table lookup.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::equivalence::{are_equivalent, canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::lattice::{convex_hull, orient, Point, Polygon, UnimodularMap};
use crate::minimal::{is_minimal, MinimalityReport};
use crate::width::lattice_width;

/// Largest width accepted by the parameter-driven enumerator.
pub const ENUMERATION_LIMIT: i64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Tag {
    T1,
    T2,
    T3,
    T4,
    T5,
}

impl Tag {
    pub const ALL: [Tag; 5] = [Tag::T1, Tag::T2, Tag::T3, Tag::T4, Tag::T5];

    /// Vertex count of the generating formula.
    pub fn max_vertices(self) -> usize {
        match self {
            Tag::T1 => 3,
            Tag::T2 => 4,
            Tag::T3 | Tag::T4 => 5,
            Tag::T5 => 6,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Parameters of one family member. Field order defines the tie-breaking
/// order between representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Shape {
    T1 {
        x: i64,
        y: i64,
    },
    T2 {
        x1: i64,
        x2: i64,
        y1: i64,
        y2: i64,
    },
    T3 {
        ell: i64,
        x: i64,
        y: i64,
        z: i64,
    },
    T4 {
        ell: i64,
        x: i64,
        y: i64,
        z: i64,
        z_prime: i64,
    },
    T5 {
        ell: i64,
        x1: i64,
        x2: i64,
        y1: i64,
        y2: i64,
        z1: i64,
        z2: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeParams {
    pub d: i64,
    pub shape: Shape,
}

impl TypeParams {
    pub fn new(d: i64, shape: Shape) -> Self {
        TypeParams { d, shape }
    }

    pub fn tag(&self) -> Tag {
        match self.shape {
            Shape::T1 { .. } => Tag::T1,
            Shape::T2 { .. } => Tag::T2,
            Shape::T3 { .. } => Tag::T3,
            Shape::T4 { .. } => Tag::T4,
            Shape::T5 { .. } => Tag::T5,
        }
    }

    /// The hexagon parameter of T3-T5.
    pub fn ell(&self) -> Option<i64> {
        match self.shape {
            Shape::T3 { ell, .. } | Shape::T4 { ell, .. } | Shape::T5 { ell, .. } => Some(ell),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.d;
        let fail = || Err(Error::ParamOutOfRange(format!("{self:?}")));
        let within = |v: i64, lo: i64, hi: i64| (lo..=hi).contains(&v);
        if d < 0 {
            return fail();
        }
        let ok = match self.shape {
            Shape::T1 { x, y } => within(x, 0, d) && within(y, 0, d) && x + y <= d,
            Shape::T2 { x1, x2, y1, y2 } => {
                [x1, x2, y1, y2].iter().all(|&v| within(v, 1, d - 1))
                    && x2.max(y2) >= x1.min(y1)
                    && (d - x2).max(y1) >= (d - x1).min(y2)
            }
            Shape::T3 { ell, x, y, z } => {
                within(ell, 2, d - 2)
                    && within(x, 1, d - ell - 1)
                    && within(y, 1, ell - 1)
                    && within(z, 1, ell - 1)
            }
            Shape::T4 {
                ell,
                x,
                y,
                z,
                z_prime,
            } => {
                within(ell, 2, d - 2)
                    && within(y, 1, ell - 1)
                    && within(z, 1, ell - 1)
                    && within(x, 1, d - ell - 1)
                    && within(z_prime, 1, d - ell - 1)
            }
            Shape::T5 {
                ell,
                x1,
                x2,
                y1,
                y2,
                z1,
                z2,
            } => {
                within(ell, 2, d - 2)
                    && [x1, y2, z1].iter().all(|&v| within(v, 1, ell - 1))
                    && [x2, y1, z2].iter().all(|&v| within(v, 1, d - ell - 1))
            }
        };
        if ok {
            Ok(())
        } else {
            fail()
        }
    }

    /// The literal points of the family's formula.
    pub fn formula_points(&self) -> Vec<Point> {
        let d = self.d;
        let p = Point::new;
        match self.shape {
            Shape::T1 { x, y } => vec![p(0, 0), p(d, y), p(x, d)],
            Shape::T2 { x1, x2, y1, y2 } => vec![p(x1, 0), p(d, y2), p(x2, d), p(0, y1)],
            Shape::T3 { ell, x, y, z } => vec![
                p(0, 0),
                p(ell, 0),
                p(d, y + d - ell),
                p(x + ell, d),
                p(z, z + d - ell),
            ],
            Shape::T4 {
                ell,
                x,
                y,
                z,
                z_prime,
            } => vec![
                p(0, 0),
                p(z_prime + ell, z_prime),
                p(d, y + d - ell),
                p(x + ell, d),
                p(z, z + d - ell),
            ],
            Shape::T5 {
                ell,
                x1,
                x2,
                y1,
                y2,
                z1,
                z2,
            } => vec![
                p(x1, 0),
                p(z2 + ell, z2),
                p(d, d - ell + y2),
                p(x2 + ell, d),
                p(z1, z1 + d - ell),
                p(0, y1),
            ],
        }
    }
}

impl Serialize for TypeParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.shape.serialize(s)
    }
}

pub fn generate(params: &TypeParams) -> Result<Polygon> {
    params.validate()?;
    convex_hull(params.formula_points())
}

/// Every in-range parameter tuple for width `d`, ordered by tag and then
/// lexicographically by the tuple.
pub fn all_params(d: i64) -> Vec<TypeParams> {
    let mut out = Vec::new();
    let mut push = |shape| {
        let t = TypeParams::new(d, shape);
        if t.validate().is_ok() {
            out.push(t);
        }
    };
    for x in 0..=d {
        for y in 0..=d - x {
            push(Shape::T1 { x, y });
        }
    }
    for x1 in 1..d {
        for x2 in 1..d {
            for y1 in 1..d {
                for y2 in 1..d {
                    push(Shape::T2 { x1, x2, y1, y2 });
                }
            }
        }
    }
    for ell in 2..=d - 2 {
        let (short, long) = (1..ell, 1..d - ell);
        for x in long.clone() {
            for y in short.clone() {
                for z in short.clone() {
                    push(Shape::T3 { ell, x, y, z });
                }
            }
        }
    }
    for ell in 2..=d - 2 {
        let (short, long) = (1..ell, 1..d - ell);
        for x in long.clone() {
            for y in short.clone() {
                for z in short.clone() {
                    for z_prime in long.clone() {
                        push(Shape::T4 {
                            ell,
                            x,
                            y,
                            z,
                            z_prime,
                        });
                    }
                }
            }
        }
    }
    for ell in 2..=d - 2 {
        let (short, long) = (1..ell, 1..d - ell);
        for x1 in short.clone() {
            for x2 in long.clone() {
                for y1 in long.clone() {
                    for y2 in short.clone() {
                        for z1 in short.clone() {
                            for z2 in long.clone() {
                                push(Shape::T5 {
                                    ell,
                                    x1,
                                    x2,
                                    y1,
                                    y2,
                                    z1,
                                    z2,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn hexagon_corners(d: i64, ell: i64) -> [Point; 6] {
    let p = Point::new;
    [
        p(0, 0),
        p(ell, 0),
        p(d, d - ell),
        p(d, d),
        p(ell, d),
        p(0, d - ell),
    ]
}

/// `conv{(0,0), (l,0), (d,d-l), (d,d), (l,d), (0,d-l)}`; collapses to a
/// triangle for `l` in `{0, d}`.
pub fn hexagon(d: i64, ell: i64) -> Result<Polygon> {
    if d < 0 || !(0..=d).contains(&ell) {
        return Err(Error::ParamOutOfRange(format!("hexagon d={d} l={ell}")));
    }
    convex_hull(hexagon_corners(d, ell))
}

fn on_segment(q: Point, a: Point, b: Point) -> bool {
    orient(a, b, q) == 0
        && (a.x.min(b.x)..=a.x.max(b.x)).contains(&q.x)
        && (a.y.min(b.y)..=a.y.max(b.y)).contains(&q.y)
}

/// `p` lies in the hexagon and each of its six sides (a single corner when
/// degenerate) meets `p` in a lattice point.
///
/// Each side lies on a supporting line of the hexagon, so once `p` is
/// inside, the side meets `p` iff it contains a vertex of `p`.
pub fn is_inscribed_in_hexagon(p: &Polygon, d: i64, ell: i64) -> bool {
    let Ok(h) = hexagon(d, ell) else {
        return false;
    };
    if !p.vertices().iter().all(|&v| h.contains(v)) {
        return false;
    }
    let c = hexagon_corners(d, ell);
    (0..6).all(|i| {
        let (a, b) = (c[i], c[(i + 1) % 6]);
        p.vertices().iter().any(|&v| on_segment(v, a, b))
    })
}

/// `conv{(d/2,0), (0,d/2), (d/2,d), (d,d/2)}` for even `d >= 2`.
pub fn four_direction_quadrangle(d: i64) -> Result<Polygon> {
    if d < 2 || d % 2 != 0 {
        return Err(Error::OutOfRange(format!(
            "four-direction quadrangle needs an even d >= 2, got {d}"
        )));
    }
    let h = d / 2;
    convex_hull([
        Point::new(h, 0),
        Point::new(0, h),
        Point::new(h, d),
        Point::new(d, h),
    ])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalClass {
    pub canonical: CanonicalForm,
    pub params: TypeParams,
    pub point_count: usize,
    pub doubled_area: i64,
}

impl MinimalClass {
    pub fn key(&self) -> &str {
        self.canonical.key()
    }

    pub fn tag(&self) -> Tag {
        self.params.tag()
    }

    pub fn d(&self) -> i64 {
        self.params.d
    }

    /// The representative rebuilt from its parameters.
    pub fn polygon(&self) -> Polygon {
        generate(&self.params).expect("stored parameters are in range")
    }
}

impl Serialize for MinimalClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MinimalClass", 7)?;
        st.serialize_field("key", self.key())?;
        st.serialize_field("tag", &self.tag())?;
        st.serialize_field("d", &self.d())?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("point_count", &self.point_count)?;
        st.serialize_field("doubled_area", &self.doubled_area)?;
        st.serialize_field("vertices", self.polygon().vertices())?;
        st.end()
    }
}

/// Per-family bookkeeping of one enumeration run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TagStats {
    /// In-range parameter tuples.
    pub tuples: usize,
    /// Tuples whose polygon does not have lattice width `d`.
    pub wrong_width: usize,
    /// Tuples of width `d` that fail the minimality test.
    pub not_minimal: usize,
    /// Minimal tuples equivalent to an earlier tuple.
    pub collisions: usize,
    /// Classes whose representative comes from this family.
    pub classes: usize,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub d: i64,
    pub classes: Vec<MinimalClass>,
    pub stats: BTreeMap<Tag, TagStats>,
}

enum Outcome {
    WrongWidth,
    NotMinimal,
    Minimal(CanonicalForm, usize, i64),
}

fn examine(params: &TypeParams) -> Outcome {
    let p = generate(params).expect("all_params yields in-range tuples");
    let report = is_minimal(&p);
    if report.width != params.d {
        Outcome::WrongWidth
    } else if !report.is_minimal {
        Outcome::NotMinimal
    } else {
        Outcome::Minimal(
            canonical_form(&p),
            p.lattice_points().len(),
            p.doubled_area(),
        )
    }
}

fn check_limit(d: i64) -> Result<()> {
    if !(0..=ENUMERATION_LIMIT).contains(&d) {
        return Err(Error::OutOfRange(format!(
            "enumeration supports 0 <= d <= {ENUMERATION_LIMIT}, got {d}"
        )));
    }
    Ok(())
}

/// Evaluates `f` on every item with up to `jobs` scoped threads, keeping
/// input order.
pub(crate) fn par_map<T: Sync, U: Send>(
    items: &[T],
    jobs: usize,
    f: impl Fn(&T) -> U + Sync,
) -> Vec<U> {
    let jobs = jobs.max(1);
    if jobs == 1 || items.len() < 2 * jobs {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    let f = &f;
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| s.spawn(move || c.iter().map(f).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

/// Runs every parameter tuple of width `d` through the minimality filter and
/// deduplicates by canonical key. The first tuple (in tag and tuple order)
/// of each class is its representative.
pub fn enumerate_with_stats(d: i64, jobs: usize) -> Result<Enumeration> {
    check_limit(d)?;
    let params = all_params(d);
    let outcomes = par_map(&params, jobs, examine);

    let mut stats: BTreeMap<Tag, TagStats> =
        Tag::ALL.iter().map(|&t| (t, TagStats::default())).collect();
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut classes = Vec::new();
    for (params, outcome) in params.into_iter().zip(outcomes) {
        let st = stats.get_mut(&params.tag()).unwrap();
        st.tuples += 1;
        match outcome {
            Outcome::WrongWidth => st.wrong_width += 1,
            Outcome::NotMinimal => st.not_minimal += 1,
            Outcome::Minimal(canonical, point_count, doubled_area) => {
                if seen.contains_key(canonical.key()) {
                    st.collisions += 1;
                    continue;
                }
                st.classes += 1;
                seen.insert(canonical.key().to_string(), classes.len());
                classes.push(MinimalClass {
                    canonical,
                    params,
                    point_count,
                    doubled_area,
                });
            }
        }
    }
    classes.sort_by(|a, b| (a.point_count, a.key()).cmp(&(b.point_count, b.key())));
    Ok(Enumeration { d, classes, stats })
}

/// All minimal polygons of lattice width `d` up to equivalence, sorted by
/// `(point_count, key)`.
pub fn enumerate_minimal(d: i64) -> Result<Vec<MinimalClass>> {
    Ok(enumerate_with_stats(d, 1)?.classes)
}

type Table = HashMap<String, MinimalClass>;

fn table(d: i64) -> Result<Arc<Table>> {
    static TABLES: OnceLock<Mutex<HashMap<i64, Arc<Table>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.lock().unwrap().get(&d) {
        return Ok(Arc::clone(t));
    }
    let built: Table = enumerate_minimal(d)?
        .into_iter()
        .map(|c| (c.key().to_string(), c))
        .collect();
    let mut guard = tables.lock().unwrap();
    Ok(Arc::clone(
        guard.entry(d).or_insert_with(|| Arc::new(built)),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// `witness` maps the input onto the class representative.
    Minimal {
        class: MinimalClass,
        witness: UnimodularMap,
    },
    NotMinimal(MinimalityReport),
    /// Minimal but absent from the enumeration table.
    Unlisted {
        canonical: CanonicalForm,
        width: i64,
    },
}

pub fn classify_polygon(p: &Polygon) -> Result<Classification> {
    let report = is_minimal(p);
    if !report.is_minimal {
        return Ok(Classification::NotMinimal(report));
    }
    let table = table(report.width)?;
    let canonical = canonical_form(p);
    Ok(match table.get(canonical.key()) {
        Some(class) => {
            let witness = are_equivalent(p, &class.polygon())
                .expect("equal canonical keys imply equivalence");
            Classification::Minimal {
                class: class.clone(),
                witness,
            }
        }
        None => Classification::Unlisted {
            canonical,
            width: lattice_width(p).width,
        },
    })
}
