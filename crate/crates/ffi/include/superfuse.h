#ifndef SUPERFUSE_H
#define SUPERFUSE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SfStatus {
  SF_STATUS_OK = 0,
  SF_STATUS_NULL_POINTER = 1,
  SF_STATUS_INVALID_UTF8 = 2,
  SF_STATUS_PARSE = 3,
  SF_STATUS_INVALID_ARGUMENT = 4,
  SF_STATUS_INCONSISTENCY = 5,
  SF_STATUS_PANIC = 6,
} SfStatus;

/*
 The decomposition of `S^i ⊗ S^j` for Gl(2|2).
 */
typedef struct SfDecomposition SfDecomposition;

/*
 A formal sum of bipartitions.
 */
typedef struct SfRtElement SfRtElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or an empty string. The
 pointer stays valid until the next call into the library on this thread.
 */
const char *sf_last_error_message(void);

/*
 Parses an operand such as `AS3`, `AL2`, `R(3,1)` or `(3|1,1,1)`, or an
 element in its JSON encoding.

 # Safety
 `src` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SfStatus sf_rt_parse(const char *src, struct SfRtElement **out);

/*
 # Safety
 `x` must be a live handle and `out` a valid pointer.
 */
enum SfStatus sf_rt_to_json(const struct SfRtElement *x, char **out);

/*
 # Safety
 `x` must be a live handle and `out` a valid pointer.
 */
enum SfStatus sf_rt_to_text(const struct SfRtElement *x, char **out);

/*
 # Safety
 `x` must be a live handle and `out` a valid pointer.
 */
enum SfStatus sf_rt_lift(const struct SfRtElement *x, struct SfRtElement **out);

/*
 # Safety
 `x` must be a live handle and `out` a valid pointer.
 */
enum SfStatus sf_rt_lift_inv(const struct SfRtElement *x, struct SfRtElement **out);

/*
 Product in the generic ring.

 # Safety
 `x` and `y` must be live handles and `out` a valid pointer.
 */
enum SfStatus sf_rt_tensor(const struct SfRtElement *x,
                           const struct SfRtElement *y,
                           struct SfRtElement **out);

/*
 Product of indecomposables at `δ = 0`.

 # Safety
 `x` and `y` must be live handles and `out` a valid pointer.
 */
enum SfStatus sf_gl0_tensor(const struct SfRtElement *x,
                            const struct SfRtElement *y,
                            struct SfRtElement **out);

/*
 Keeps the terms surviving in Gl(n|n).

 # Safety
 `x` must be a live handle and `out` a valid pointer.
 */
enum SfStatus sf_rt_truncate(const struct SfRtElement *x, uint32_t n, struct SfRtElement **out);

/*
 # Safety
 `x` must be a live handle and `out` a valid pointer.
 */
enum SfStatus sf_rt_project_max_atypical(const struct SfRtElement *x, struct SfRtElement **out);

/*
 # Safety
 `x` must be null or a handle from this library that has not been freed.
 */
void sf_rt_free(struct SfRtElement *x);

/*
 Decomposes `S^i ⊗ S^j` for `i, j ≥ 1`.

 # Safety
 `out` must be a valid pointer.
 */
enum SfStatus sf_fuse(int64_t i, int64_t j, struct SfDecomposition **out);

/*
 # Safety
 `d` must be a live handle and `out` a valid pointer.
 */
enum SfStatus sf_decomposition_to_json(const struct SfDecomposition *d, char **out);

/*
 # Safety
 `d` must be null or a handle from this library that has not been freed.
 */
void sf_decomposition_free(struct SfDecomposition *d);

/*
 Littlewood-Richardson coefficient `c^λ_{αβ}` for partitions given as
 text, e.g. `"(2,1)"`.

 # Safety
 The three strings must be NUL-terminated and `out` a valid pointer.
 */
enum SfStatus sf_lr_coeff(const char *alpha, const char *beta, const char *lambda, uint64_t *out);

/*
 # Safety
 `s` must be null or a string returned by this library that has not been freed.
 */
void sf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERFUSE_H */
