/* C interface to the vdwaccel library. All handles are opaque; every call
 * returns a vdw_status and leaves a message in vdw_last_error() on failure.
 * Message buffers are thread-local and valid until the next failing call on
 * the same thread. */
#ifndef VDWACCEL_H
#define VDWACCEL_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(VDWACCEL_BUILDING)
#    define VDW_API __declspec(dllexport)
#  else
#    define VDW_API __declspec(dllimport)
#  endif
#else
#  define VDW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vdw_status {
  VDW_OK = 0,
  VDW_INVALID_ARGUMENT,
  VDW_OUT_OF_DOMAIN,
  VDW_DEGENERATE_ACCELERATION,
  VDW_NEGATIVE_SEPARATION,
  VDW_ZERO_DISTANCE,
  VDW_NON_UNIT_VECTOR,
  VDW_RESONANCE_POLE,
  VDW_SUPERLUMINAL_BOOST,
  VDW_INSUFFICIENT_SAMPLING,
  VDW_NON_CONVERGENCE,
  VDW_DIVERGENCE,
  VDW_UNSUPPORTED_MODEL,
  VDW_IO,
  VDW_NULL_POINTER,
  VDW_INTERNAL
} vdw_status;

typedef enum vdw_units { VDW_UNITS_GAUSSIAN = 0, VDW_UNITS_NATURAL = 1 } vdw_units;
typedef enum vdw_axis { VDW_AXIS_IMAGINARY = 0, VDW_AXIS_REAL = 1 } vdw_axis;
typedef enum vdw_far_form { VDW_FAR_CLOSED = 0, VDW_FAR_INTEGRAL = 1 } vdw_far_form;
typedef enum vdw_regime {
  VDW_REGIME_NEAR = 0,
  VDW_REGIME_INTERMEDIATE = 1,
  VDW_REGIME_FAR = 2
} vdw_regime;

typedef struct vdw_context vdw_context;
typedef struct vdw_model vdw_model;

typedef struct vdw_pair {
  const vdw_model* alpha_A;
  const vdw_model* alpha_B;
  double R;
  double a;
  double t;
} vdw_pair;

typedef struct vdw_validity {
  double at_over_c;
  double aR_over_c2;
  int nonrelativistic;
  int locally_inertial;
  int zone_mismatch;
  vdw_regime regime;
} vdw_validity;

typedef struct vdw_energy {
  double rest;
  double a2t_term;
  double a2t2_term;
  double total;
  double rest_error;
  double a2t_error;
  double a2t2_error;
  double coef_rest;
  double coef_a2t;
  double coef_a2t2;
  int converged;
  vdw_validity validity;
} vdw_energy;

typedef struct vdw_consistency {
  double rest_expected;
  double rest_imaginary;
  double rest_real;
  double rest_contraction;
  int rest_consistent;
  double a2t_expected;
  double a2t_imaginary;
  double a2t_real;
  double a2t_contraction;
  int a2t_consistent;
  double a2t2_production;
  double a2t2_regulated;
  double a2t2_contraction;
  double a2t2_ratio;
  int a2t2_production_matches;
  int a2t2_regulated_matches;
  int a2t2_discrepancy;
  double tolerance;
  vdw_validity probe;
  int ok;
} vdw_consistency;

/* Row-major 3x3 tensors. */
typedef struct vdw_tensor_dump {
  double closed[9];
  double numeric[9];
  double max_diff;
  double max_entry;
  double numeric_error;
  size_t samples;
  int short_window;
} vdw_tensor_dump;

VDW_API const char* vdw_status_string(vdw_status status);
VDW_API const char* vdw_last_error(void);
VDW_API const char* vdw_version(void);

VDW_API vdw_status vdw_context_create(vdw_units units, vdw_context** out);
VDW_API void vdw_context_destroy(vdw_context* ctx);
VDW_API vdw_status vdw_context_set_rel_tol(vdw_context* ctx, double rel_tol);
VDW_API vdw_status vdw_context_set_regulator(vdw_context* ctx, double initial,
                                             size_t levels);
VDW_API vdw_status vdw_context_constants(const vdw_context* ctx, double* hbar,
                                         double* c, double* k_B);

/* model string: "static:A0" | "lorentz:A0:K0" | "table:PATH" */
VDW_API vdw_status vdw_model_parse(const char* spec, vdw_model** out);
VDW_API vdw_status vdw_model_static(double alpha0, vdw_model** out);
VDW_API vdw_status vdw_model_lorentz(double alpha0, double k0, vdw_model** out);
VDW_API vdw_status vdw_model_tabulated(const double* u, const double* alpha,
                                       size_t n, vdw_model** out);
VDW_API void vdw_model_destroy(vdw_model* model);
VDW_API vdw_status vdw_model_eval_imag(const vdw_model* model, double u,
                                       double* out);
/* Writes at most len bytes including the terminator; *needed (optional)
 * receives the full length. */
VDW_API vdw_status vdw_model_describe(const vdw_model* model, char* buf,
                                      size_t len, size_t* needed);

/* error and converged may be null. */
VDW_API vdw_status vdw_rest_energy(const vdw_context* ctx, const vdw_pair* pair,
                                   vdw_axis axis, double* value, double* error,
                                   int* converged);
VDW_API vdw_status vdw_accelerated_energy(const vdw_context* ctx,
                                          const vdw_pair* pair, vdw_energy* out);
VDW_API vdw_status vdw_near_zone_energy(const vdw_context* ctx,
                                        const vdw_pair* pair, vdw_energy* out);
VDW_API vdw_status vdw_far_zone_energy(const vdw_context* ctx,
                                       const vdw_pair* pair, vdw_far_form form,
                                       vdw_energy* out);
VDW_API vdw_status vdw_mode_contraction_energy(const vdw_context* ctx,
                                               const vdw_pair* pair,
                                               vdw_energy* out);
VDW_API vdw_status vdw_polarizability_overlap(const vdw_context* ctx,
                                              const vdw_pair* pair,
                                              double* value);
VDW_API vdw_status vdw_consistency_report(const vdw_context* ctx,
                                          const vdw_pair* pair,
                                          double tolerance,
                                          vdw_consistency* out);
VDW_API vdw_validity vdw_assess_validity(const vdw_context* ctx,
                                         const vdw_pair* pair);

/* samples = 0 picks 64 points per period. */
VDW_API vdw_status vdw_tensor_dump_compute(const vdw_context* ctx, double k,
                                           double R, double a, double t,
                                           size_t samples, vdw_tensor_dump* out);

VDW_API vdw_status vdw_effective_distance(const vdw_context* ctx, double a,
                                          double rho, double t, double* out);
VDW_API vdw_status vdw_unruh_temperature(const vdw_context* ctx, double a,
                                         double* out);

#ifdef __cplusplus
}
#endif

#endif
