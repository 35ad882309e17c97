#ifndef HLZETA_H
#define HLZETA_H

#include <stddef.h>
#include <stdint.h>
#include <stdbool.h>

typedef enum HlzStatus {
  HLZ_STATUS_OK = 0,
  HLZ_STATUS_DOMAIN = 1,
  HLZ_STATUS_POLE = 2,
  HLZ_STATUS_CONVERGENCE = 3,
  HLZ_STATUS_OVERFLOW = 4,
  HLZ_STATUS_UNKNOWN_IDENTITY = 5,
  HLZ_STATUS_CONSTRAINT = 6,
  HLZ_STATUS_EXHAUSTED = 7,
  HLZ_STATUS_CONFIG = 8,
  HLZ_STATUS_IO = 9,
  HLZ_STATUS_NULL_POINTER = 10,
  HLZ_STATUS_INVALID_UTF8 = 11,
  HLZ_STATUS_PANIC = 12,
} HlzStatus;

// A parameter point under construction.
typedef struct HlzPoint HlzPoint;

// Accuracy settings.
typedef struct HlzPolicy HlzPolicy;

// A finished suite run.
typedef struct HlzReport HlzReport;

typedef struct HlzComplex {
  double re;
  double im;
} HlzComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. Valid until
// the next call into this library on the same thread.
const char *hlz_last_error(void);

const char *hlz_version(void);

// Default policy. Never NULL.
struct HlzPolicy *hlz_policy_default(void);

// # Safety
// `out` must be valid for writes.
enum HlzStatus hlz_policy_new(double rel_tol,
                              double abs_tol,
                              size_t max_terms,
                              double diff_step,
                              struct HlzPolicy **out);

// # Safety
// `p` must be NULL or come from `hlz_policy_*` and not be freed twice.
void hlz_policy_free(struct HlzPolicy *p);

// Hurwitz-Lerch zeta Phi(z, s, v) by series.
//
// # Safety
// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
enum HlzStatus hlz_lerch_phi(const struct HlzPolicy *policy,
                             struct HlzComplex z,
                             struct HlzComplex s,
                             struct HlzComplex v,
                             struct HlzComplex *out);

// Phi(z, s, v) by quadrature.
//
// # Safety
// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
enum HlzStatus hlz_lerch_phi_integral(const struct HlzPolicy *policy,
                                      struct HlzComplex z,
                                      struct HlzComplex s,
                                      struct HlzComplex v,
                                      struct HlzComplex *out);

// Hurwitz zeta(s, a).
//
// # Safety
// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
enum HlzStatus hlz_hurwitz_zeta(const struct HlzPolicy *policy,
                                struct HlzComplex s,
                                struct HlzComplex a,
                                struct HlzComplex *out);

// Li_s(z).
//
// # Safety
// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
enum HlzStatus hlz_polylog(const struct HlzPolicy *policy,
                           struct HlzComplex s,
                           struct HlzComplex z,
                           struct HlzComplex *out);

// Continuous-branch log Gamma; `policy` is unused.
//
// # Safety
// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
enum HlzStatus hlz_log_gamma(const struct HlzPolicy *policy,
                             struct HlzComplex z,
                             struct HlzComplex *out);

// psi(z); `policy` is unused.
//
// # Safety
// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
enum HlzStatus hlz_digamma(const struct HlzPolicy *policy,
                           struct HlzComplex z,
                           struct HlzComplex *out);

// H_z; `policy` is unused.
//
// # Safety
// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
enum HlzStatus hlz_harmonic(const struct HlzPolicy *policy,
                            struct HlzComplex z,
                            struct HlzComplex *out);

// First generalized Stieltjes constant gamma_1(a).
//
// # Safety
// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
enum HlzStatus hlz_stieltjes_gamma1(const struct HlzPolicy *policy,
                                    struct HlzComplex a,
                                    struct HlzComplex *out);

struct HlzPoint *hlz_point_new(void);

// Sets field `name` (one of a, m, k, x, r, z, s).
//
// # Safety
// `pt` must be a live point handle and `name` a NUL-terminated string.
enum HlzStatus hlz_point_set(struct HlzPoint *pt, const char *name, struct HlzComplex value);

// # Safety
// `pt` must be a live point handle.
enum HlzStatus hlz_point_set_n(struct HlzPoint *pt, uint32_t n);

// # Safety
// `pt` must be NULL or a point handle not yet freed.
void hlz_point_free(struct HlzPoint *pt);

size_t hlz_identity_count(void);

// Id of registry entry `index`, or NULL when out of range. Static storage.
const char *hlz_identity_id(size_t index);

// Evaluates both sides of identity `id` at `pt`.
//
// # Safety
// `id` must be NUL-terminated, `pt` a live point, `policy` NULL or live,
// and `lhs`, `rhs` valid for writes.
enum HlzStatus hlz_evaluate_sides(const char *id,
                                  const struct HlzPoint *pt,
                                  const struct HlzPolicy *policy,
                                  struct HlzComplex *lhs,
                                  struct HlzComplex *rhs);

// Runs the suite. `filter` is NULL (all entries) or a comma-separated id
// list; `seed` and `count` of 0 keep the defaults.
//
// # Safety
// `filter` must be NULL or NUL-terminated, `policy` NULL or live, `out`
// valid for writes.
enum HlzStatus hlz_run_suite(const struct HlzPolicy *policy,
                             const char *filter,
                             uint64_t seed,
                             size_t count,
                             struct HlzReport **out);

// # Safety
// `r` must be a live report handle.
size_t hlz_report_rows(const struct HlzReport *r);

// # Safety
// `r` must be a live report handle.
bool hlz_report_all_passed(const struct HlzReport *r);

// Id of row `i`; valid while the report lives. NULL when out of range.
//
// # Safety
// `r` must be a live report handle.
const char *hlz_report_row_id(const struct HlzReport *r, size_t i);

// Pass count, point count and worst relative error of row `i`.
//
// # Safety
// `r` must be a live report handle; the outputs must be valid for writes.
enum HlzStatus hlz_report_row_stats(const struct HlzReport *r,
                                    size_t i,
                                    size_t *passed,
                                    size_t *points,
                                    double *worst_rel_err);

// The report as JSON; release with [`hlz_string_free`].
//
// # Safety
// `r` must be a live report handle and `out` valid for writes.
enum HlzStatus hlz_report_to_json(const struct HlzReport *r, uint64_t timestamp, char **out);

// # Safety
// `r` must be NULL or a report handle not yet freed.
void hlz_report_free(struct HlzReport *r);

// # Safety
// `s` must be NULL or a string returned by this library, freed once.
void hlz_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HLZETA_H */
