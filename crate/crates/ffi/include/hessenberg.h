#ifndef HESSENBERG_H
#define HESSENBERG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define HESS_HIGHLIGHT_NONE 0

#define HESS_HIGHLIGHT_COMPONENTS 1

#define HESS_HIGHLIGHT_SINGULAR 2

typedef enum HessStatus {
  HESS_STATUS_OK = 0,
  HESS_STATUS_INVALID_ARGUMENT = 1,
  HESS_STATUS_NOT_STANDARD_POSITION = 2,
  HESS_STATUS_INCONSISTENCY = 3,
  HESS_STATUS_GUARD_EXCEEDED = 4,
  HESS_STATUS_INTERNAL = 5,
} HessStatus;

// Opaque decomposition of `B(S, H_Δ)`.
typedef struct HessDecomposition HessDecomposition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread; empty after a success.
// The pointer stays valid until the next call on this thread.
const char *hess_last_error(void);

// Decompose `B(S, H_Δ)` for type `cartan_type` (`'A'`..`'D'`) of the given
// rank; `s_values` is comma-separated (`"1,1,-1,-1"`, fractions as `p/q`).
//
// # Safety
// `s_values` is a NUL-terminated string; `out` is valid for one write.
enum HessStatus hess_decomposition_new(char cartan_type,
                                       size_t rank,
                                       const char *s_values,
                                       struct HessDecomposition **out);

// # Safety
// `d` is null or came from [`hess_decomposition_new`] and is not used again.
void hess_decomposition_free(struct HessDecomposition *d);

// Number of irreducible components; 0 for a null handle.
//
// # Safety
// `d` is null or a live handle.
size_t hess_decomposition_component_count(const struct HessDecomposition *d);

// # Safety
// `d` is null or a live handle.
size_t hess_decomposition_variety_dim(const struct HessDecomposition *d);

// Number of singular fixed points.
//
// # Safety
// `d` is null or a live handle.
size_t hess_decomposition_singular_count(const struct HessDecomposition *d);

// # Safety
// `d` is a live handle; `out` is valid for one write.
enum HessStatus hess_decomposition_to_json(const struct HessDecomposition *d, char **out);

// GKM graph of `B(S, H_Δ)` as DOT; `highlight` is one of the
// `HESS_HIGHLIGHT_*` constants.
//
// # Safety
// `s_values` is a NUL-terminated string; `out` is valid for one write.
enum HessStatus hess_gkm_dot(char cartan_type,
                             size_t rank,
                             const char *s_values,
                             int highlight,
                             char **out);

// Patch ideal at `w` (a word such as `"s2s1"`) in type A with `n` = the
// number of values in `s_values`. A null `h` selects the standard
// Hessenberg function.
//
// # Safety
// String arguments are NUL-terminated (`h` may be null); `out` is valid
// for one write.
enum HessStatus hess_patch_json(const char *s_values,
                                const char *h,
                                const char *w,
                                uint64_t seed,
                                char **out);

// Tangent-dimension scan in type A. `local_dim >= 0` supplies the local
// dimension; a negative value selects the combinatorial dimension for the
// standard `h` and no dimension otherwise.
//
// # Safety
// String arguments are NUL-terminated (`h` may be null); `out` is valid
// for one write.
enum HessStatus hess_scan_json(const char *s_values,
                               const char *h,
                               int64_t local_dim,
                               uint64_t seed,
                               char **out);

// Compare the Jacobian criterion with the combinatorial singular locus;
// `*agree` is set to 1 or 0.
//
// # Safety
// `s_values` is a NUL-terminated string; `agree` is valid for one write.
enum HessStatus hess_verify(const char *s_values, int *agree);

// # Safety
// `s` is null or a string returned by this library, not yet freed.
void hess_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HESSENBERG_H */
