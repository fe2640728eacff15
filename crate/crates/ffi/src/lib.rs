//! C ABI for `latwidth`.
//!
//! Polygons and enumeration results are opaque handles owned by the caller
//! and released with the matching `*_free` function. Every function returns
//! an [`LwStatus`]; on failure [`lw_last_error_message`] describes the error.
//! Strings returned through out-parameters are released with
//! [`lw_string_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use latwidth::io::{parse_polygon, polygon_to_json, COORDINATE_LIMIT};
use latwidth::{
    are_equivalent, canonical_form, classify_polygon, embed_in_square, enumerate_with_stats,
    is_minimal, lattice_size_square, lattice_width, Classification, Error, MinimalClass, Point,
    Polygon, Tag, UnimodularMap,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    OutOfRange = 3,
    Overflow = 4,
    IndexOutOfBounds = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LwPoint {
    pub x: i64,
    pub y: i64,
}

/// The affine map `p -> A p + b` with `A = [[a11, a12], [a21, a22]]`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LwMap {
    pub a11: i64,
    pub a12: i64,
    pub a21: i64,
    pub a22: i64,
    pub bx: i64,
    pub by: i64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LwTag {
    None = 0,
    T1 = 1,
    T2 = 2,
    T3 = 3,
    T4 = 4,
    T5 = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LwKind {
    Minimal = 0,
    NotMinimal = 1,
    /// Minimal but absent from the enumeration table.
    Unlisted = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LwClassification {
    pub kind: LwKind,
    /// `LW_TAG_NONE` unless `kind` is `LW_KIND_MINIMAL`.
    pub tag: LwTag,
    pub width: i64,
    pub point_count: usize,
    pub doubled_area: i64,
    /// Maps the input onto the class representative (minimal only).
    pub witness: LwMap,
    pub has_offending_vertex: bool,
    pub offending_vertex: LwPoint,
}

/// Opaque convex lattice polygon.
pub struct LwPolygon(Polygon);

/// Opaque list of minimal classes of one lattice width.
pub struct LwClassList(Vec<MinimalClass>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: Error) -> LwStatus {
    let status = match e {
        Error::Overflow => LwStatus::Overflow,
        Error::OutOfRange(_) | Error::ParamOutOfRange(_) | Error::CoordinateLimit(_) => {
            LwStatus::OutOfRange
        }
        _ => LwStatus::InvalidInput,
    };
    set_error(e.to_string());
    status
}

fn fail(status: LwStatus, msg: &str) -> LwStatus {
    set_error(msg.to_string());
    status
}

type Ffi = Result<(), LwStatus>;

fn guard<F: FnOnce() -> Ffi>(f: F) -> LwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LwStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => fail(LwStatus::Panic, "internal panic"),
    }
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, LwStatus> {
    p.as_ref()
        .ok_or_else(|| fail(LwStatus::NullPointer, "null pointer argument"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Ffi {
    if out.is_null() {
        return Err(fail(LwStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Writes `value` when `out` is non-null.
unsafe fn put_opt<T>(out: *mut T, value: T) {
    if !out.is_null() {
        out.write(value);
    }
}

fn point(p: Point) -> LwPoint {
    LwPoint { x: p.x, y: p.y }
}

fn to_lw_map(m: &UnimodularMap) -> LwMap {
    let [[a11, a12], [a21, a22]] = m.matrix();
    let [bx, by] = m.offset();
    LwMap {
        a11,
        a12,
        a21,
        a22,
        bx,
        by,
    }
}

fn from_lw_map(m: &LwMap) -> Result<UnimodularMap, LwStatus> {
    UnimodularMap::new(m.a11, m.a12, m.a21, m.a22, m.bx, m.by).map_err(status_of)
}

fn tag(t: Tag) -> LwTag {
    match t {
        Tag::T1 => LwTag::T1,
        Tag::T2 => LwTag::T2,
        Tag::T3 => LwTag::T3,
        Tag::T4 => LwTag::T4,
        Tag::T5 => LwTag::T5,
    }
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Ffi {
    let c = CString::new(s).map_err(|_| fail(LwStatus::InvalidInput, "string contains NUL"))?;
    put(out, c.into_raw())
}

unsafe fn put_polygon(out: *mut *mut LwPolygon, p: Polygon) -> Ffi {
    put(out, Box::into_raw(Box::new(LwPolygon(p))))
}

/// Copies up to `cap` points into `buf` and stores the total in `count`.
unsafe fn put_points(
    items: impl ExactSizeIterator<Item = LwPoint>,
    buf: *mut LwPoint,
    cap: usize,
    count: *mut usize,
) -> Ffi {
    put(count, items.len())?;
    if cap > 0 && buf.is_null() {
        return Err(fail(
            LwStatus::NullPointer,
            "null buffer with nonzero capacity",
        ));
    }
    for (i, p) in items.take(cap).enumerate() {
        buf.add(i).write(p);
    }
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn lw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` is NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Convex hull of `n_points` points given as `x0, y0, x1, y1, ...`.
///
/// # Safety
/// `coords` points to `2 * n_points` readable values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_polygon_new(
    coords: *const i64,
    n_points: usize,
    out: *mut *mut LwPolygon,
) -> LwStatus {
    guard(|| {
        if coords.is_null() {
            return Err(fail(LwStatus::NullPointer, "null coordinate array"));
        }
        let flat = std::slice::from_raw_parts(
            coords,
            n_points.checked_mul(2).ok_or(LwStatus::OutOfRange)?,
        );
        if let Some(&c) = flat
            .iter()
            .find(|c| c.unsigned_abs() > COORDINATE_LIMIT as u64)
        {
            return Err(status_of(Error::CoordinateLimit(c)));
        }
        let p = Polygon::from_points(flat.chunks_exact(2).map(|c| Point::new(c[0], c[1])))
            .map_err(status_of)?;
        put_polygon(out, p)
    })
}

/// Parses `{"vertices": [[x, y], ...]}`.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_polygon_from_json(
    json: *const c_char,
    out: *mut *mut LwPolygon,
) -> LwStatus {
    guard(|| {
        if json.is_null() {
            return Err(fail(LwStatus::NullPointer, "null string"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| fail(LwStatus::InvalidInput, "input is not UTF-8"))?;
        put_polygon(out, parse_polygon(text).map_err(status_of)?)
    })
}

/// # Safety
/// `p` is a live polygon handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_polygon_to_json(
    p: *const LwPolygon,
    out: *mut *mut c_char,
) -> LwStatus {
    guard(|| put_string(out, polygon_to_json(&get(p)?.0)))
}

/// # Safety
/// `p` is NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn lw_polygon_free(p: *mut LwPolygon) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Vertices in counterclockwise order from the lexicographically smallest.
///
/// # Safety
/// `buf` holds `cap` writable points (may be NULL when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn lw_polygon_vertices(
    p: *const LwPolygon,
    buf: *mut LwPoint,
    cap: usize,
    count: *mut usize,
) -> LwStatus {
    guard(|| {
        let p = &get(p)?.0;
        put_points(p.vertices().iter().map(|&v| point(v)), buf, cap, count)
    })
}

/// Image of `p` under a unimodular map.
///
/// # Safety
/// Pointers are valid; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_polygon_apply(
    p: *const LwPolygon,
    map: *const LwMap,
    out: *mut *mut LwPolygon,
) -> LwStatus {
    guard(|| {
        let m = from_lw_map(get(map)?)?;
        put_polygon(out, get(p)?.0.apply(&m).map_err(status_of)?)
    })
}

/// # Safety
/// `p` is a live polygon handle; `width` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_width(p: *const LwPolygon, width: *mut i64) -> LwStatus {
    guard(|| put(width, lattice_width(&get(p)?.0).width))
}

/// Normalized width directions in scan order.
///
/// # Safety
/// As for [`lw_polygon_vertices`].
#[no_mangle]
pub unsafe extern "C" fn lw_width_directions(
    p: *const LwPolygon,
    buf: *mut LwPoint,
    cap: usize,
    count: *mut usize,
) -> LwStatus {
    guard(|| {
        let w = lattice_width(&get(p)?.0);
        put_points(
            w.directions.iter().map(|d| point(d.as_point())),
            buf,
            cap,
            count,
        )
    })
}

/// Lattice size with respect to the unit square. `witness` may be NULL.
///
/// # Safety
/// `p` is a live polygon handle; non-null outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_size_square(
    p: *const LwPolygon,
    size: *mut i64,
    witness: *mut LwMap,
) -> LwStatus {
    guard(|| {
        let s = lattice_size_square(&get(p)?.0);
        put(size, s.size)?;
        put_opt(witness, to_lw_map(&s.witness));
        Ok(())
    })
}

/// A map into the square of side `lw(p)`, if one exists. `map` may be NULL.
///
/// # Safety
/// `p` is a live polygon handle; non-null outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn lw_embed_in_square(
    p: *const LwPolygon,
    found: *mut bool,
    map: *mut LwMap,
) -> LwStatus {
    guard(|| {
        let m = embed_in_square(&get(p)?.0);
        put(found, m.is_some())?;
        if let Some(m) = m {
            put_opt(map, to_lw_map(&m));
        }
        Ok(())
    })
}

/// `offending` (may be NULL) receives the smallest vertex whose removal
/// keeps the width; it is written only when the polygon is not minimal.
///
/// # Safety
/// `p` is a live polygon handle; non-null outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn lw_is_minimal(
    p: *const LwPolygon,
    minimal: *mut bool,
    offending: *mut LwPoint,
) -> LwStatus {
    guard(|| {
        let r = is_minimal(&get(p)?.0);
        put(minimal, r.is_minimal)?;
        if let Some(v) = r.offending_vertex {
            put_opt(offending, point(v));
        }
        Ok(())
    })
}

/// Canonical key; equal keys mean unimodularly equivalent polygons.
///
/// # Safety
/// `p` is a live polygon handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_canonical_key(p: *const LwPolygon, out: *mut *mut c_char) -> LwStatus {
    guard(|| put_string(out, canonical_form(&get(p)?.0).key().to_string()))
}

/// `map` (may be NULL) receives a map sending `p` onto `q` when equivalent.
///
/// # Safety
/// `p` and `q` are live polygon handles; non-null outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn lw_are_equivalent(
    p: *const LwPolygon,
    q: *const LwPolygon,
    equivalent: *mut bool,
    map: *mut LwMap,
) -> LwStatus {
    guard(|| {
        let m = are_equivalent(&get(p)?.0, &get(q)?.0);
        put(equivalent, m.is_some())?;
        if let Some(m) = m {
            put_opt(map, to_lw_map(&m));
        }
        Ok(())
    })
}

/// # Safety
/// `p` is a live polygon handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_classify(p: *const LwPolygon, out: *mut LwClassification) -> LwStatus {
    guard(|| {
        let p = &get(p)?.0;
        let mut c = LwClassification {
            kind: LwKind::Minimal,
            tag: LwTag::None,
            width: 0,
            point_count: 0,
            doubled_area: p.doubled_area(),
            witness: LwMap::default(),
            has_offending_vertex: false,
            offending_vertex: LwPoint::default(),
        };
        match classify_polygon(p).map_err(status_of)? {
            Classification::Minimal { class, witness } => {
                c.tag = tag(class.tag());
                c.width = class.d();
                c.point_count = class.point_count;
                c.witness = to_lw_map(&witness);
            }
            Classification::NotMinimal(r) => {
                c.kind = LwKind::NotMinimal;
                c.width = r.width;
                c.point_count = p.lattice_points().len();
                if let Some(v) = r.offending_vertex {
                    c.has_offending_vertex = true;
                    c.offending_vertex = point(v);
                }
            }
            Classification::Unlisted { width, .. } => {
                c.kind = LwKind::Unlisted;
                c.width = width;
                c.point_count = p.lattice_points().len();
            }
        }
        put(out, c)
    })
}

/// All minimal classes of lattice width `d`, sorted by point count and key.
/// `jobs` is the number of worker threads (0 is treated as 1).
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_enumerate_minimal(
    d: i64,
    jobs: usize,
    out: *mut *mut LwClassList,
) -> LwStatus {
    guard(|| {
        let e = enumerate_with_stats(d, jobs.max(1)).map_err(status_of)?;
        put(out, Box::into_raw(Box::new(LwClassList(e.classes))))
    })
}

/// # Safety
/// `list` is NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn lw_class_list_free(list: *mut LwClassList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// # Safety
/// `list` is a live handle; `len` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_class_list_len(list: *const LwClassList, len: *mut usize) -> LwStatus {
    guard(|| put(len, get(list)?.0.len()))
}

unsafe fn class_at<'a>(list: *const LwClassList, i: usize) -> Result<&'a MinimalClass, LwStatus> {
    get(list)?
        .0
        .get(i)
        .ok_or_else(|| fail(LwStatus::IndexOutOfBounds, "class index out of bounds"))
}

/// # Safety
/// `list` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_class_list_key(
    list: *const LwClassList,
    i: usize,
    out: *mut *mut c_char,
) -> LwStatus {
    guard(|| put_string(out, class_at(list, i)?.key().to_string()))
}

/// # Safety
/// `list` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_class_list_tag(
    list: *const LwClassList,
    i: usize,
    out: *mut LwTag,
) -> LwStatus {
    guard(|| put(out, tag(class_at(list, i)?.tag())))
}

/// Representative polygon of class `i`, as a new handle.
///
/// # Safety
/// `list` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_class_list_polygon(
    list: *const LwClassList,
    i: usize,
    out: *mut *mut LwPolygon,
) -> LwStatus {
    guard(|| put_polygon(out, class_at(list, i)?.polygon()))
}

/// The whole list in the `enumerate` JSON format.
///
/// # Safety
/// `list` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lw_class_list_to_json(
    list: *const LwClassList,
    out: *mut *mut c_char,
) -> LwStatus {
    guard(|| {
        let text = serde_json::to_string(&get(list)?.0)
            .map_err(|e| fail(LwStatus::InvalidInput, &e.to_string()))?;
        put_string(out, text)
    })
}
