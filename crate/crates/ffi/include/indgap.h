#ifndef INDGAP_H
#define INDGAP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IgStatus {
  IG_STATUS_OK = 0,
  IG_STATUS_NULL_ARGUMENT = 1,
  IG_STATUS_INVALID_UTF8 = 2,
  IG_STATUS_PARSE = 3,
  IG_STATUS_PARAMETER = 4,
  IG_STATUS_CAPACITY = 5,
  IG_STATUS_DOMAIN = 6,
  IG_STATUS_PRECONDITION = 7,
  IG_STATUS_INTERNAL = 8,
} IgStatus;

/**
 * Opaque graph handle.
 */
typedef struct IgGraph IgGraph;

/**
 * Scalar part of a gap report.
 */
typedef struct IgGapSummary {
  size_t alpha;
  size_t idom;
  size_t gap;
  size_t omega;
  size_t theta;
  bool semi_perfect;
} IgGapSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses one graph6 line into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum IgStatus ig_graph_from_graph6(const char *text, struct IgGraph **out);

/**
 * Parses an edge list (`n` on the first line, then one `u v` pair per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum IgStatus ig_graph_from_edge_list(const char *text, struct IgGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2 * m`
 * consecutive endpoints.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or may be null when `m` is 0).
 */
enum IgStatus ig_graph_from_edges(size_t n, const size_t *edges, size_t m, struct IgGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and must not be used afterwards.
 */
void ig_graph_free(struct IgGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t ig_graph_vertex_count(const struct IgGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t ig_graph_edge_count(const struct IgGraph *g);

/**
 * graph6 encoding of `g`, released with `ig_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum IgStatus ig_graph_to_graph6(const struct IgGraph *g, char **out);

/**
 * α, i, their difference, ω, θ and semi-perfectness.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum IgStatus ig_gap_report(const struct IgGraph *g, struct IgGapSummary *out);

/**
 * Full gap report, witnesses included, as a JSON object.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer. The string is
 * released with `ig_string_free`.
 */
enum IgStatus ig_gap_report_json(const struct IgGraph *g, char **out);

/**
 * Largest gap over all nonempty induced subgraphs.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum IgStatus ig_hereditary_gap(const struct IgGraph *g, size_t *out);

/**
 * Whether `g` has no induced claw and no induced pair of disjoint P3s.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum IgStatus ig_is_claw_2p3_free(const struct IgGraph *g, bool *out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void ig_string_free(char *s);

/**
 * Message for the most recent failure on this thread, or null. The
 * pointer stays valid until the next call into the library.
 */
const char *ig_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *ig_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INDGAP_H */
