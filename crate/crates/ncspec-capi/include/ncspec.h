#ifndef NCSPEC_H
#define NCSPEC_H

/* Generated by cbindgen from the ncspec-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Flag bit: adjacency energy is below the vertex count.
#define NCS_FLAG_HYPOENERGETIC (1 << 0)

// Flag bit: adjacency energy exceeds that of the complete graph, 2(n-1).
#define NCS_FLAG_HYPERENERGETIC (1 << 1)

// Flag bit: Laplacian energy exceeds 2(n-1).
#define NCS_FLAG_L_HYPERENERGETIC (1 << 2)

// Flag bit: signless-Laplacian energy exceeds 2(n-1).
#define NCS_FLAG_Q_HYPERENERGETIC (1 << 3)

// Flag bit: every signless-Laplacian eigenvalue is an integer. Only
// meaningful when `NCS_FLAG_Q_INTEGRAL_KNOWN` is also set.
#define NCS_FLAG_Q_INTEGRAL (1 << 4)

// Flag bit: an exact route decided Q-integrality (in either direction).
#define NCS_FLAG_Q_INTEGRAL_KNOWN (1 << 5)

// Which energy to read from an analysis.
typedef enum NcsEnergyKind {
  // Adjacency energy: sum of absolute adjacency eigenvalues.
  NCS_ENERGY_KIND_ADJACENCY = 0,
  // Laplacian energy: sum of |mu_i - mean degree|.
  NCS_ENERGY_KIND_LAPLACIAN = 1,
  // Signless-Laplacian energy: sum of |q_i - mean degree|.
  NCS_ENERGY_KIND_SIGNLESS_LAPLACIAN = 2,
} NcsEnergyKind;

// Result of a fallible call.
typedef enum NcsStatus {
  // Success; out-pointers have been written.
  NCS_STATUS_OK = 0,
  // A required pointer argument was NULL.
  NCS_STATUS_NULL_POINTER = 1,
  // The group description was not valid UTF-8.
  NCS_STATUS_INVALID_UTF8 = 2,
  // The group description could not be parsed or constructed.
  NCS_STATUS_PARSE_ERROR = 3,
  // The group is abelian, so its non-commuting graph has no vertices.
  NCS_STATUS_ABELIAN_GROUP = 4,
  // The analysis failed internally.
  NCS_STATUS_COMPUTATION_ERROR = 5,
} NcsStatus;

// Opaque handle to one analyzed non-commuting graph.
typedef struct NcsAnalysis NcsAnalysis;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Analyze the group described by `spec` and return an opaque handle.
//
// `spec` accepts the same descriptions as the `ncspec` CLI, e.g. `"D6"`,
// `"Q:4n=16"`, `"F(7,3)"`, `"A4xZ2"`. On success `*out` owns the handle;
// release it with `ncs_analysis_free`.
//
// # Safety
// `spec` must be a valid NUL-terminated string and `out` a valid pointer.
enum NcsStatus ncs_analysis_new(const char *spec, struct NcsAnalysis **out);

// Release a handle returned by `ncs_analysis_new`. NULL is ignored.
//
// # Safety
// `analysis` must be NULL or a pointer returned by `ncs_analysis_new` that
// has not been freed yet.
void ncs_analysis_free(struct NcsAnalysis *analysis);

// Number of vertices of the non-commuting graph (group order minus center).
//
// # Safety
// `analysis` must be a live handle and `out` a valid pointer.
enum NcsStatus ncs_analysis_vertex_count(const struct NcsAnalysis *analysis, size_t *out);

// Number of edges of the non-commuting graph.
//
// # Safety
// `analysis` must be a live handle and `out` a valid pointer.
enum NcsStatus ncs_analysis_edge_count(const struct NcsAnalysis *analysis, size_t *out);

// Order of the underlying group.
//
// # Safety
// `analysis` must be a live handle and `out` a valid pointer.
enum NcsStatus ncs_analysis_group_order(const struct NcsAnalysis *analysis, size_t *out);

// Size of the center of the underlying group.
//
// # Safety
// `analysis` must be a live handle and `out` a valid pointer.
enum NcsStatus ncs_analysis_center_size(const struct NcsAnalysis *analysis, size_t *out);

// Read one of the three graph energies as a double.
//
// The value is exact whenever a closed form applies, and otherwise comes
// from the dense symmetric eigensolver.
//
// # Safety
// `analysis` must be a live handle and `out` a valid pointer.
enum NcsStatus ncs_analysis_energy(const struct NcsAnalysis *analysis,
                                   enum NcsEnergyKind kind,
                                   double *out);

// Read the classification flags as a bitmask of `NCS_FLAG_*` constants.
//
// # Safety
// `analysis` must be a live handle and `out` a valid pointer.
enum NcsStatus ncs_analysis_flags(const struct NcsAnalysis *analysis, uint32_t *out);

// Render the full analysis (group, graph, spectra, energies) as a JSON
// document.
//
// On success `*out` receives a NUL-terminated string owned by the caller;
// release it with `ncs_string_free`.
//
// # Safety
// `analysis` must be a live handle and `out` a valid pointer.
enum NcsStatus ncs_analysis_json(const struct NcsAnalysis *analysis, char **out);

// Release a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a string pointer returned by this library that has
// not been freed yet.
void ncs_string_free(char *s);

// Library version as a static NUL-terminated string. Do not free.
const char *ncs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCSPEC_H */
