#ifndef TOPCOH_H
#define TOPCOH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes. Values 2 to 4 match the exit codes of the `topcoh` binary.
typedef enum TopcohStatus {
  TOPCOH_STATUS_OK = 0,
  TOPCOH_STATUS_ERROR = 1,
  TOPCOH_STATUS_PARSE = 2,
  TOPCOH_STATUS_HYPOTHESIS_NOT_MET = 3,
  TOPCOH_STATUS_THEOREM_VIOLATION = 4,
  TOPCOH_STATUS_NULL_POINTER = 5,
  TOPCOH_STATUS_INVALID_UTF8 = 6,
  TOPCOH_STATUS_PANIC = 7,
} TopcohStatus;

// Opaque ideal.
typedef struct TopcohIdeal TopcohIdeal;

// Opaque polynomial ring.
typedef struct TopcohRing TopcohRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or an empty string.
// The pointer stays valid until the next `topcoh_*` call on this thread.
const char *topcoh_last_error(void);

// Creates a ring over Q (`characteristic == 0`) or F_p with the given
// variable names, ordered by graded reverse lexicographic order.
//
// # Safety
// `names` must point to `len` NUL-terminated strings; `out` must be writable.
enum TopcohStatus topcoh_ring_new(const char *const *names,
                                  uintptr_t len,
                                  uint64_t characteristic,
                                  struct TopcohRing **out);

// # Safety
// `ring` must come from `topcoh_ring_new` and not be used afterwards.
void topcoh_ring_free(struct TopcohRing *ring);

// Creates the ideal generated by the parsed polynomials.
//
// # Safety
// `ring` must be a live handle, `generators` must point to `len`
// NUL-terminated strings and `out` must be writable.
enum TopcohStatus topcoh_ideal_new(const struct TopcohRing *ring,
                                   const char *const *generators,
                                   uintptr_t len,
                                   struct TopcohIdeal **out);

// # Safety
// `ideal` must come from `topcoh_ideal_new` and not be used afterwards.
void topcoh_ideal_free(struct TopcohIdeal *ideal);

// Krull dimension of `R/I`; `-1` for the unit ideal.
//
// # Safety
// `ideal` must be a live handle and `out` writable.
enum TopcohStatus topcoh_ideal_krull_dim(const struct TopcohIdeal *ideal, int64_t *out);

// Reduced Gröbner basis as a JSON array of polynomial strings.
//
// # Safety
// `ideal` must be a live handle and `out` writable.
enum TopcohStatus topcoh_ideal_gb_json(const struct TopcohIdeal *ideal, char **out);

// Attached primes and annihilator of the top local cohomology of `R/I`
// with support in `a`, as a JSON object. `I` must be a monomial ideal.
//
// # Safety
// `ideal` and `a` must be live handles over the same ring; `out` writable.
enum TopcohStatus topcoh_ann_top_json(const struct TopcohIdeal *ideal,
                                      const struct TopcohIdeal *a,
                                      char **out);

// Runs a CLI command on a JSON job document and returns the JSON result.
// `command` may be null to use the command named in the document.
//
// # Safety
// `job_json` must be a NUL-terminated string, `command` null or
// NUL-terminated, and `out` writable.
enum TopcohStatus topcoh_run_json(const char *command, const char *job_json, char **out);

// # Safety
// `s` must be null or a string returned by this library.
void topcoh_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TOPCOH_H */
