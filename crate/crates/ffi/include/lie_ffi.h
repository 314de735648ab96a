#ifndef LIE_FFI_H
#define LIE_FFI_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum LieStatus {
  LIE_STATUS_OK = 0,
  LIE_STATUS_NULL_ARGUMENT = 1,
  LIE_STATUS_INVALID_UTF8 = 2,
  LIE_STATUS_PARSE = 3,
  LIE_STATUS_INDEX_OUT_OF_RANGE = 4,
  LIE_STATUS_MISMATCH = 5,
  LIE_STATUS_NOT_DOMINANT = 6,
  LIE_STATUS_UNSUPPORTED = 7,
  LIE_STATUS_INVALID = 8,
  LIE_STATUS_PANIC = 9,
} LieStatus;

/**
 * Element of the algebra of the table it was created from.
 */
typedef struct LieElem LieElem;

/**
 * Structure table of a simple Lie algebra.
 */
typedef struct LieTable LieTable;

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library on the same thread.
 */
const char *lie_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void lie_string_free(char *s);

/**
 * Builds the structure table for a Cartan type such as `"E8"` or `"D7"`.
 *
 * # Safety
 * `cartan_type` must be a nul-terminated string; `out` must be writable.
 */
enum LieStatus lie_table_new(const char *cartan_type, struct LieTable **out);

/**
 * Loads a table from its text dump.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum LieStatus lie_table_load(const char *text, struct LieTable **out);

/**
 * # Safety
 * `table` must be null or a handle from `lie_table_new`/`lie_table_load`.
 */
void lie_table_free(struct LieTable *table);

/**
 * Dimension of the algebra, or 0 for a null handle.
 *
 * # Safety
 * `table` must be null or a live table handle.
 */
size_t lie_table_dim(const struct LieTable *table);

/**
 * Text dump of the table.
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum LieStatus lie_table_dump(const struct LieTable *table, char **out);

/**
 * Parses an element such as `"3/2*X[47] - Y[1]"` or `"X[4,5,6]"`.
 *
 * # Safety
 * `table` must be a live handle, `text` a nul-terminated string and `out`
 * writable.
 */
enum LieStatus lie_element_parse(const struct LieTable *table,
                                 const char *text,
                                 struct LieElem **out);

/**
 * `[a, b]`.
 *
 * # Safety
 * All handles must be live; `out` must be writable.
 */
enum LieStatus lie_element_bracket(const struct LieTable *table,
                                   const struct LieElem *a,
                                   const struct LieElem *b,
                                   struct LieElem **out);

/**
 * Canonical text form, e.g. `"-3/2*H[2] + 1*X[47]"`.
 *
 * # Safety
 * `elem` must be a live handle; `out` must be writable.
 */
enum LieStatus lie_element_to_string(const struct LieElem *elem, char **out);

/**
 * # Safety
 * `elem` must be null or a live element handle.
 */
void lie_element_free(struct LieElem *elem);

/**
 * Dimension of the irreducible module with highest weight `coords`
 * (fundamental-weight coordinates), as a decimal string.
 *
 * # Safety
 * `coords` must point to `len` integers; `out` must be writable.
 */
enum LieStatus lie_weyl_dim(const char *cartan_type, const int64_t *coords, size_t len, char **out);

/**
 * Decomposition of `V(a) ⊗ V(b)`, one `SUMMAND` line per irreducible.
 *
 * # Safety
 * `a` and `b` must each point to `len` integers; `out` must be writable.
 */
enum LieStatus lie_tensor_decompose(const char *cartan_type,
                                    const int64_t *a,
                                    const int64_t *b,
                                    size_t len,
                                    char **out);

/**
 * Runs the claim registry and writes the text report. `only` is null for
 * all claims or a comma-separated list of ids. `all_passed` may be null.
 *
 * # Safety
 * `only` must be null or nul-terminated; `out` must be writable.
 */
enum LieStatus lie_verify(const char *only, uint64_t seed, char **out, bool *all_passed);

#endif  /* LIE_FFI_H */
