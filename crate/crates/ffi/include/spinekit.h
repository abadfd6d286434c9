#ifndef SPINEKIT_H
#define SPINEKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * `n` tetrahedra at angle `pi / 3n`.
 */
#define SPK_FAMILY_MN 0

/**
 * `n = 5 + 4s` tetrahedra at angle `2pi / 3n`.
 */
#define SPK_FAMILY_WN 1

typedef enum SpkStatus {
  SPK_STATUS_OK = 0,
  SPK_STATUS_NULL_POINTER = 1,
  SPK_STATUS_INVALID_UTF8 = 2,
  SPK_STATUS_PARSE_ERROR = 3,
  SPK_STATUS_INVALID_ARGUMENT = 4,
  SPK_STATUS_TOO_MANY_COMPONENTS = 5,
  SPK_STATUS_BOUNDARY_ERROR = 6,
  SPK_STATUS_VOLUME_ERROR = 7,
  SPK_STATUS_BUFFER_TOO_SMALL = 8,
  SPK_STATUS_PANIC = 9,
} SpkStatus;

/**
 * A validated o-graph.
 */
typedef struct SpkOGraph SpkOGraph;

/**
 * An ideal triangulation together with its dual spine.
 */
typedef struct SpkSpine SpkSpine;

typedef struct SpkSummary {
  size_t tetrahedra;
  size_t triple_edges;
  size_t edge_classes;
  int64_t euler;
  size_t boundary_components;
} SpkSummary;

typedef struct SpkVolume {
  double theta;
  double via_integral;
  double via_lobachevsky;
  bool agreed;
} SpkVolume;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a
 * successful call. Valid until the next call on the same thread.
 */
const char *spk_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *spk_version(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void spk_string_free(char *s);

/**
 * Parses an o-graph in text form.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SpkStatus spk_ograph_parse(const char *text, struct SpkOGraph **out);

/**
 * The decorated graph with `5 + 4s` vertices.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum SpkStatus spk_ograph_generate(uint32_t s, struct SpkOGraph **out);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `graph` must be NULL or a live handle.
 */
size_t spk_ograph_vertex_count(const struct SpkOGraph *graph);

/**
 * Canonical text form. Free the result with [`spk_string_free`].
 *
 * # Safety
 * `graph` must be a live handle and `out` a writable pointer.
 */
enum SpkStatus spk_ograph_serialize(const struct SpkOGraph *graph, char **out);

/**
 * # Safety
 * `graph` must be NULL or a handle from this library not yet freed.
 */
void spk_ograph_free(struct SpkOGraph *graph);

/**
 * Builds the dual triangulation and spine of an o-graph.
 *
 * # Safety
 * `graph` must be a live handle and `out` a writable pointer.
 */
enum SpkStatus spk_spine_from_ograph(const struct SpkOGraph *graph, struct SpkSpine **out);

/**
 * Parses an o-graph or a triangulation, chosen by the header line.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SpkStatus spk_spine_parse(const char *text, struct SpkSpine **out);

/**
 * Triangulation text form. Free the result with [`spk_string_free`].
 *
 * # Safety
 * `spine` must be a live handle and `out` a writable pointer.
 */
enum SpkStatus spk_spine_serialize(const struct SpkSpine *spine, char **out);

/**
 * # Safety
 * `spine` must be NULL or a handle from this library not yet freed.
 */
void spk_spine_free(struct SpkSpine *spine);

/**
 * Cell counts of the spine and the number of boundary components.
 *
 * # Safety
 * `spine` must be a live handle and `out` a writable pointer.
 */
enum SpkStatus spk_spine_summary(const struct SpkSpine *spine, struct SpkSummary *out);

/**
 * Copies the edge-class sizes into `buf`. `len` receives the number of
 * classes even when `capacity` is too small.
 *
 * # Safety
 * `buf` must have room for `capacity` values (it may be NULL when
 * `capacity` is 0) and `len` must be writable.
 */
enum SpkStatus spk_spine_edge_class_sizes(const struct SpkSpine *spine,
                                          size_t *buf,
                                          size_t capacity,
                                          size_t *len);

/**
 * Whether the spine has no proper simple subpolyhedron.
 *
 * # Safety
 * `spine` must be a live handle and `out` a writable pointer.
 */
enum SpkStatus spk_spine_is_poor(const struct SpkSpine *spine, bool *out);

/**
 * The invariant in exact form `a + b*eps`, and optionally as a float.
 * Free the string with [`spk_string_free`].
 *
 * # Safety
 * `spine` must be a live handle and `out` a writable pointer. `value` may
 * be NULL.
 */
enum SpkStatus spk_spine_epsilon(const struct SpkSpine *spine, char **out, double *value);

/**
 * Full `key: value` report. Free the result with [`spk_string_free`].
 *
 * # Safety
 * `spine` must be a live handle and `out` a writable pointer.
 */
enum SpkStatus spk_spine_report(const struct SpkSpine *spine, char **out);

/**
 * The Lobachevsky function.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum SpkStatus spk_lobachevsky(double x, double *out);

/**
 * Volume of the regular truncated tetrahedron with angle `theta`, by both
 * formulas.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum SpkStatus spk_volume_regular(double theta, struct SpkVolume *out);

/**
 * Volume of a family member; `family` is [`SPK_FAMILY_MN`] or
 * [`SPK_FAMILY_WN`].
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum SpkStatus spk_volume_family(uint32_t family, uint64_t n, struct SpkVolume *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPINEKIT_H */
