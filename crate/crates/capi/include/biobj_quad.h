#ifndef BIOBJ_QUAD_H
#define BIOBJ_QUAD_H

/* Generated by cbindgen from biobj-quad-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible call.
 */
typedef enum BqStatus {
  BQ_STATUS_OK = 0,
  BQ_STATUS_NULL_POINTER = 1,
  BQ_STATUS_INVALID_ARGUMENT = 2,
  BQ_STATUS_NOT_POSITIVE_DEFINITE = 3,
  BQ_STATUS_NOT_PROPORTIONAL = 4,
  BQ_STATUS_IO_ERROR = 5,
  BQ_STATUS_PARSE_ERROR = 6,
  BQ_STATUS_INTERNAL_ERROR = 7,
} BqStatus;

/**
 * Opaque benchmark instance: a materialized descriptor plus its
 * evaluable problem.
 */
typedef struct BqInstance BqInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *bq_version(void);

/**
 * Static name of a status code.
 */
const char *bq_status_name(enum BqStatus status);

/**
 * Message of the last failing call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bq_last_error_message(void);

/**
 * Generates an instance of one of the seven classes.
 *
 * `class` is one of "sep-k", "sep-o", "sep-two-o", "one", "one-o",
 * "two", "two-o"; `k` is the 1-based axis index for "sep-k" and must be
 * 0 otherwise; `spectrum` is "sphere", "cigtab", "ellipsoid" or a
 * comma-separated list of positive reals; `normalization` is "fig2",
 * "kappa-unit" or "none".
 *
 * # Safety
 * String arguments must be valid NUL-terminated strings; `out` must be a
 * valid pointer. On success `*out` owns the instance and must be
 * released with [`bq_instance_free`].
 */
enum BqStatus bq_instance_generate(const char *class_,
                                   size_t k,
                                   size_t n,
                                   const char *spectrum,
                                   uint64_t seed,
                                   const char *normalization,
                                   struct BqInstance **out);

/**
 * The fixed 10-dimensional power-law instance.
 *
 * # Safety
 * As for [`bq_instance_generate`].
 */
enum BqStatus bq_instance_p10(const char *normalization, struct BqInstance **out);

/**
 * Loads an instance from a JSON file written by [`bq_instance_save`].
 *
 * # Safety
 * As for [`bq_instance_generate`].
 */
enum BqStatus bq_instance_load(const char *path, struct BqInstance **out);

/**
 * Writes the instance to a JSON file, byte-identical for identical
 * instances.
 *
 * # Safety
 * `instance` must be a live handle; `path` a valid NUL-terminated string.
 */
enum BqStatus bq_instance_save(const struct BqInstance *instance, const char *path);

/**
 * Releases an instance handle. Null is ignored.
 *
 * # Safety
 * `instance` must be a pointer returned by a constructor, not yet freed.
 */
void bq_instance_free(struct BqInstance *instance);

/**
 * Search-space dimension, or 0 for a null handle.
 *
 * # Safety
 * `instance` must be a live handle or null.
 */
size_t bq_instance_dimension(const struct BqInstance *instance);

/**
 * Evaluates both objectives at `x` (length `len`, which must equal the
 * instance dimension).
 *
 * # Safety
 * `x` must point to `len` readable doubles; output pointers must be
 * valid.
 */
enum BqStatus bq_instance_evaluate(const struct BqInstance *instance,
                                   const double *x,
                                   size_t len,
                                   double *out_f1,
                                   double *out_f2);

/**
 * The Pareto-optimal point at curve parameter `t` in [0, 1], written to
 * `out_x` (length `len` = dimension).
 *
 * # Safety
 * `out_x` must point to `len` writable doubles.
 */
enum BqStatus bq_instance_pareto_point(const struct BqInstance *instance,
                                       double t,
                                       double *out_x,
                                       size_t len);

/**
 * Samples the exact Pareto front at `m >= 2` parameters.
 *
 * `grid` is "uniform" or "chebyshev". `out_t`, `out_f1` and `out_f2`
 * must each hold `m` doubles. `out_x` may be null; otherwise it must
 * hold `m * dimension` doubles and receives the decision vectors
 * row-major.
 *
 * # Safety
 * Output buffers must have the stated capacities.
 */
enum BqStatus bq_instance_front(const struct BqInstance *instance,
                                size_t m,
                                const char *grid,
                                double *out_t,
                                double *out_f1,
                                double *out_f2,
                                double *out_x);

/**
 * Writes the proportionality factor of the scaled Hessians to
 * `out_gamma`, or returns `NotProportional`.
 *
 * # Safety
 * `out_gamma` must be a valid pointer.
 */
enum BqStatus bq_instance_proportionality(const struct BqInstance *instance, double *out_gamma);

/**
 * The endpoint tangent limits of the front: the left limit is strictly
 * positive, the right strictly negative.
 *
 * # Safety
 * Output pointers must be valid.
 */
enum BqStatus bq_instance_tangent_limits(const struct BqInstance *instance,
                                         double *out_zero,
                                         double *out_one);

/**
 * 2-D hypervolume of `len` objective pairs against the reference point.
 * Dominated, duplicated and out-of-reference points contribute nothing.
 *
 * # Safety
 * `f1` and `f2` must point to `len` readable doubles; `out` must be
 * valid.
 */
enum BqStatus bq_hypervolume_2d(const double *f1,
                                const double *f2,
                                size_t len,
                                double ref_f1,
                                double ref_f2,
                                double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIOBJ_QUAD_H */
