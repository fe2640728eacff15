#ifndef LATWIDTH_H
#define LATWIDTH_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LwStatus {
  LW_STATUS_OK = 0,
  LW_STATUS_NULL_POINTER = 1,
  LW_STATUS_INVALID_INPUT = 2,
  LW_STATUS_OUT_OF_RANGE = 3,
  LW_STATUS_OVERFLOW = 4,
  LW_STATUS_INDEX_OUT_OF_BOUNDS = 5,
  LW_STATUS_PANIC = 6,
} LwStatus;

typedef enum LwKind {
  LW_KIND_MINIMAL = 0,
  LW_KIND_NOT_MINIMAL = 1,
  /**
   * Minimal but absent from the enumeration table.
   */
  LW_KIND_UNLISTED = 2,
} LwKind;

typedef enum LwTag {
  LW_TAG_NONE = 0,
  LW_TAG_T1 = 1,
  LW_TAG_T2 = 2,
  LW_TAG_T3 = 3,
  LW_TAG_T4 = 4,
  LW_TAG_T5 = 5,
} LwTag;

/**
 * Opaque list of minimal classes of one lattice width.
 */
typedef struct LwClassList LwClassList;

/**
 * Opaque convex lattice polygon.
 */
typedef struct LwPolygon LwPolygon;

typedef struct LwPoint {
  int64_t x;
  int64_t y;
} LwPoint;

/**
 * The affine map `p -> A p + b` with `A = [[a11, a12], [a21, a22]]`.
 */
typedef struct LwMap {
  int64_t a11;
  int64_t a12;
  int64_t a21;
  int64_t a22;
  int64_t bx;
  int64_t by;
} LwMap;

typedef struct LwClassification {
  enum LwKind kind;
  /**
   * `LW_TAG_NONE` unless `kind` is `LW_KIND_MINIMAL`.
   */
  enum LwTag tag;
  int64_t width;
  size_t point_count;
  int64_t doubled_area;
  /**
   * Maps the input onto the class representative (minimal only).
   */
  struct LwMap witness;
  bool has_offending_vertex;
  struct LwPoint offending_vertex;
} LwClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into this library on the same thread.
 */
const char *lw_last_error_message(void);

/**
 * # Safety
 * `s` is NULL or a string returned by this library and not yet freed.
 */
void lw_string_free(char *s);

/**
 * Convex hull of `n_points` points given as `x0, y0, x1, y1, ...`.
 *
 * # Safety
 * `coords` points to `2 * n_points` readable values; `out` is writable.
 */
enum LwStatus lw_polygon_new(const int64_t *coords, size_t n_points, struct LwPolygon **out);

/**
 * Parses `{"vertices": [[x, y], ...]}`.
 *
 * # Safety
 * `json` is a NUL-terminated string; `out` is writable.
 */
enum LwStatus lw_polygon_from_json(const char *json, struct LwPolygon **out);

/**
 * # Safety
 * `p` is a live polygon handle; `out` is writable.
 */
enum LwStatus lw_polygon_to_json(const struct LwPolygon *p, char **out);

/**
 * # Safety
 * `p` is NULL or a handle from this library that has not been freed.
 */
void lw_polygon_free(struct LwPolygon *p);

/**
 * Vertices in counterclockwise order from the lexicographically smallest.
 *
 * # Safety
 * `buf` holds `cap` writable points (may be NULL when `cap` is 0).
 */
enum LwStatus lw_polygon_vertices(const struct LwPolygon *p,
                                  struct LwPoint *buf,
                                  size_t cap,
                                  size_t *count);

/**
 * Image of `p` under a unimodular map.
 *
 * # Safety
 * Pointers are valid; `out` is writable.
 */
enum LwStatus lw_polygon_apply(const struct LwPolygon *p,
                               const struct LwMap *map,
                               struct LwPolygon **out);

/**
 * # Safety
 * `p` is a live polygon handle; `width` is writable.
 */
enum LwStatus lw_lattice_width(const struct LwPolygon *p, int64_t *width);

/**
 * Normalized width directions in scan order.
 *
 * # Safety
 * As for [`lw_polygon_vertices`].
 */
enum LwStatus lw_width_directions(const struct LwPolygon *p,
                                  struct LwPoint *buf,
                                  size_t cap,
                                  size_t *count);

/**
 * Lattice size with respect to the unit square. `witness` may be NULL.
 *
 * # Safety
 * `p` is a live polygon handle; non-null outputs are writable.
 */
enum LwStatus lw_lattice_size_square(const struct LwPolygon *p,
                                     int64_t *size,
                                     struct LwMap *witness);

/**
 * A map into the square of side `lw(p)`, if one exists. `map` may be NULL.
 *
 * # Safety
 * `p` is a live polygon handle; non-null outputs are writable.
 */
enum LwStatus lw_embed_in_square(const struct LwPolygon *p, bool *found, struct LwMap *map);

/**
 * `offending` (may be NULL) receives the smallest vertex whose removal
 * keeps the width; it is written only when the polygon is not minimal.
 *
 * # Safety
 * `p` is a live polygon handle; non-null outputs are writable.
 */
enum LwStatus lw_is_minimal(const struct LwPolygon *p, bool *minimal, struct LwPoint *offending);

/**
 * Canonical key; equal keys mean unimodularly equivalent polygons.
 *
 * # Safety
 * `p` is a live polygon handle; `out` is writable.
 */
enum LwStatus lw_canonical_key(const struct LwPolygon *p, char **out);

/**
 * `map` (may be NULL) receives a map sending `p` onto `q` when equivalent.
 *
 * # Safety
 * `p` and `q` are live polygon handles; non-null outputs are writable.
 */
enum LwStatus lw_are_equivalent(const struct LwPolygon *p,
                                const struct LwPolygon *q,
                                bool *equivalent,
                                struct LwMap *map);

/**
 * # Safety
 * `p` is a live polygon handle; `out` is writable.
 */
enum LwStatus lw_classify(const struct LwPolygon *p, struct LwClassification *out);

/**
 * All minimal classes of lattice width `d`, sorted by point count and key.
 * `jobs` is the number of worker threads (0 is treated as 1).
 *
 * # Safety
 * `out` is writable.
 */
enum LwStatus lw_enumerate_minimal(int64_t d, size_t jobs, struct LwClassList **out);

/**
 * # Safety
 * `list` is NULL or a handle from this library that has not been freed.
 */
void lw_class_list_free(struct LwClassList *list);

/**
 * # Safety
 * `list` is a live handle; `len` is writable.
 */
enum LwStatus lw_class_list_len(const struct LwClassList *list, size_t *len);

/**
 * # Safety
 * `list` is a live handle; `out` is writable.
 */
enum LwStatus lw_class_list_key(const struct LwClassList *list, size_t i, char **out);

/**
 * # Safety
 * `list` is a live handle; `out` is writable.
 */
enum LwStatus lw_class_list_tag(const struct LwClassList *list, size_t i, enum LwTag *out);

/**
 * Representative polygon of class `i`, as a new handle.
 *
 * # Safety
 * `list` is a live handle; `out` is writable.
 */
enum LwStatus lw_class_list_polygon(const struct LwClassList *list,
                                    size_t i,
                                    struct LwPolygon **out);

/**
 * The whole list in the `enumerate` JSON format.
 *
 * # Safety
 * `list` is a live handle; `out` is writable.
 */
enum LwStatus lw_class_list_to_json(const struct LwClassList *list, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATWIDTH_H */
