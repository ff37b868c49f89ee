/* C interface for the isochain partial-isometry enumeration library. */

#ifndef ISOCHAIN_H
#define ISOCHAIN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Element family selector.
typedef enum IsochainFamily {
  // All partial injections on the chain.
  ISOCHAIN_FAMILY_FULL = 0,
  // Partial injections that move no point up.
  ISOCHAIN_FAMILY_DECREASING_INJECTIVE = 1,
  // Distance-preserving partial injections.
  ISOCHAIN_FAMILY_ISOMETRY = 2,
  // Order-preserving distance-preserving partial injections.
  ISOCHAIN_FAMILY_ORDER_PRESERVING_ISOMETRY = 3,
  // Distance-preserving partial injections that move no point up.
  ISOCHAIN_FAMILY_DECREASING_ISOMETRY = 4,
  // Order-preserving members of the decreasing isometries.
  ISOCHAIN_FAMILY_ORDER_PRESERVING_DECREASING_ISOMETRY = 5,
} IsochainFamily;

// Histogram selector for `isochain_count_histogram`.
typedef enum IsochainStat {
  // Count elements by domain size.
  ISOCHAIN_STAT_HEIGHT = 0,
  // Count elements by number of fixed points.
  ISOCHAIN_STAT_FIX = 1,
} IsochainStat;

// Result code returned by every fallible function.
typedef enum IsochainStatus {
  // The call succeeded and the out parameters are valid.
  ISOCHAIN_STATUS_OK = 0,
  // A required pointer argument was NULL.
  ISOCHAIN_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  ISOCHAIN_STATUS_INVALID_UTF8 = 2,
  // An argument was rejected; see `isochain_last_error_message`.
  ISOCHAIN_STATUS_INVALID_ARGUMENT = 3,
  // Two elements live on chains of different sizes.
  ISOCHAIN_STATUS_CHAIN_MISMATCH = 4,
  // The requested chain size exceeds the configured ceiling.
  ISOCHAIN_STATUS_CEILING_EXCEEDED = 5,
  // The operation is not defined for the requested family.
  ISOCHAIN_STATUS_UNSUPPORTED = 6,
  // An internal invariant failed; the handle state is unchanged.
  ISOCHAIN_STATUS_INTERNAL_ERROR = 7,
} IsochainStatus;

// Opaque handle to one partial injection.
typedef struct IsochainElement IsochainElement;

// Opaque handle to an ordered list of elements.
typedef struct IsochainElementList IsochainElementList;

// Scalar facts about one element.
typedef struct IsochainStats {
  // Size of the underlying chain.
  uint32_t n;
  // Number of points in the domain.
  uint32_t height;
  // Number of fixed points.
  uint32_t fix;
  // The element preserves all pairwise distances.
  bool is_isometry;
  // The element preserves the chain order on its domain.
  bool is_order_preserving;
  // The element reverses the chain order on its domain.
  bool is_order_reversing;
  // The element moves no point up.
  bool is_order_decreasing;
  // The element equals its own square.
  bool is_idempotent;
  // The element fixes every point of its domain.
  bool is_partial_identity;
  // Some power of the element is the empty map.
  bool is_nilpotent;
} IsochainStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses an element from its text form, e.g. `"[n=3] 2->2 3->1"`.
//
// On success writes a new handle to `out`; free it with
// `isochain_element_free`.
// # Safety
// `text`, when non-NULL, must point to a NUL-terminated string.
enum IsochainStatus isochain_element_parse(const char *text, struct IsochainElement **out);

// Builds an element on the chain `{1..n}` from parallel arrays mapping
// `domain[i]` to `image[i]`. The arrays may be NULL when `len` is 0.
// # Safety
// `domain` and `image`, when non-NULL, must be readable for `len` entries.
enum IsochainStatus isochain_element_make(uint32_t n,
                                          const uint32_t *domain,
                                          const uint32_t *image,
                                          size_t len,
                                          struct IsochainElement **out);

// Copies an element into a new independently owned handle.
// # Safety
// `el`, when non-NULL, must be a live handle from this library.
enum IsochainStatus isochain_element_clone(const struct IsochainElement *el,
                                           struct IsochainElement **out);

// Releases an element handle. NULL is ignored.
// # Safety
// `el` must be NULL or a handle from this library, not yet freed.
void isochain_element_free(struct IsochainElement *el);

// Renders an element in its canonical text form.
// # Safety
// `el`, when non-NULL, must be a live handle from this library.
enum IsochainStatus isochain_element_to_text(const struct IsochainElement *el, char **out);

// Renders an element as a JSON object with fields `n` and `pairs`.
// # Safety
// `el`, when non-NULL, must be a live handle from this library.
enum IsochainStatus isochain_element_to_json(const struct IsochainElement *el, char **out);

// Writes the chain size the element lives on.
// # Safety
// `el`, when non-NULL, must be a live handle from this library.
enum IsochainStatus isochain_element_chain(const struct IsochainElement *el, uint32_t *out_n);

// Evaluates the element at `x`. Writes whether the value is defined and,
// when defined, the value itself.
// # Safety
// `el`, when non-NULL, must be a live handle from this library.
enum IsochainStatus isochain_element_apply(const struct IsochainElement *el,
                                           uint32_t x,
                                           bool *out_defined,
                                           uint32_t *out_value);

// Composes two elements left to right: the result maps `x` to `b(a(x))`.
// # Safety
// `a` and `b`, when non-NULL, must be live handles from this library.
enum IsochainStatus isochain_element_compose(const struct IsochainElement *a,
                                             const struct IsochainElement *b,
                                             struct IsochainElement **out);

// Builds the inverse element, which swaps domain and image.
// # Safety
// `el`, when non-NULL, must be a live handle from this library.
enum IsochainStatus isochain_element_inverse(const struct IsochainElement *el,
                                             struct IsochainElement **out);

// Fills a stats record for the element.
// # Safety
// `el`, when non-NULL, must be a live handle from this library.
enum IsochainStatus isochain_element_stats(const struct IsochainElement *el,
                                           struct IsochainStats *out);

// Writes whether the element belongs to the given family.
// # Safety
// `el`, when non-NULL, must be a live handle from this library.
enum IsochainStatus isochain_element_is_member(const struct IsochainElement *el,
                                               enum IsochainFamily family,
                                               bool *out);

// Copies the element's pairs into parallel arrays using the two-call
// pattern: the required length is always written to `out_len`, and the
// arrays are filled only when `cap` is large enough.
// # Safety
// `el`, when non-NULL, must be a live handle; `domain` and `image`,
// when non-NULL, must be writable for `cap` entries.
enum IsochainStatus isochain_element_pairs(const struct IsochainElement *el,
                                           uint32_t *domain,
                                           uint32_t *image,
                                           size_t cap,
                                           size_t *out_len);

// Enumerates a family on the chain `{1..n}` in canonical order. With
// `fast` set, uses the direct constructions where available instead of
// filtering all partial injections.
// # Safety
// `out`, when non-NULL, must be writable.
enum IsochainStatus isochain_enumerate(enum IsochainFamily family,
                                       uint32_t n,
                                       uint32_t ceiling,
                                       bool fast,
                                       struct IsochainElementList **out);

// Number of elements in a list; 0 for NULL.
// # Safety
// `list` must be NULL or a live list handle from this library.
size_t isochain_list_len(const struct IsochainElementList *list);

// Borrows the element at `index`. The pointer is valid until the list is
// freed; returns NULL when the index is out of range.
// # Safety
// `list` must be NULL or a live list handle from this library.
const struct IsochainElement *isochain_list_get(const struct IsochainElementList *list,
                                                size_t index);

// Releases a list and every element it owns. NULL is ignored.
// # Safety
// `list` must be NULL or a list handle from this library, not yet freed.
void isochain_list_free(struct IsochainElementList *list);

// Counts a family on the chain `{1..n}` by enumeration.
// # Safety
// `out`, when non-NULL, must be writable.
enum IsochainStatus isochain_order(enum IsochainFamily family,
                                   uint32_t n,
                                   uint32_t ceiling,
                                   uint64_t *out);

// Evaluates the closed-form order without enumerating. Defined for the
// decreasing-isometry families on chains up to 62 points.
// # Safety
// `out`, when non-NULL, must be writable.
enum IsochainStatus isochain_closed_order(enum IsochainFamily family, uint32_t n, uint64_t *out);

// Writes a histogram of element counts (index 0 through n) using the
// two-call pattern: `out_len` always receives `n + 1`, and `buf` is
// filled only when `cap` is large enough.
// # Safety
// `buf`, when non-NULL, must be writable for `cap` entries; `out_len`,
// when non-NULL, must be writable.
enum IsochainStatus isochain_count_histogram(enum IsochainFamily family,
                                             enum IsochainStat stat,
                                             uint32_t n,
                                             uint32_t ceiling,
                                             uint64_t *buf,
                                             size_t cap,
                                             size_t *out_len);

// Builds the multiplication structure for a family on `{1..n}` and
// returns its property report as a JSON object.
// # Safety
// `out`, when non-NULL, must be writable.
enum IsochainStatus isochain_property_report_json(enum IsochainFamily family,
                                                  uint32_t n,
                                                  uint32_t ceiling,
                                                  char **out);

// Releases a string returned by this library. NULL is ignored.
// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void isochain_string_free(char *s);

// Static description of a status code; never NULL.
const char *isochain_status_text(enum IsochainStatus status);

// Returns the detailed message for the most recent failure on this
// thread, or NULL when the last call succeeded. Free the result with
// `isochain_string_free`.
char *isochain_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ISOCHAIN_H */
