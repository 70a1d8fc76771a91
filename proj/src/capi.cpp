#include "vdwaccel/vdwaccel.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "vdwaccel/energy.hpp"
#include "vdwaccel/error.hpp"
#include "vdwaccel/kinematics.hpp"
#include "vdwaccel/polarizability.hpp"
#include "vdwaccel/potential_tensor.hpp"

struct vdw_context {
  vdwaccel::energy::Settings settings;
};

struct vdw_model {
  vdwaccel::PolarizabilityModel model;
};

namespace {

using namespace vdwaccel;

thread_local std::string last_error;

struct NullArgument : std::exception {
  const char* what() const noexcept override { return "pair has a null model"; }
};

vdw_status status_of(ErrorCode code) {
  return static_cast<vdw_status>(static_cast<int>(code) + 1);
}

vdw_status fail(vdw_status s, const char* msg) {
  last_error = msg;
  return s;
}

template <class F>
vdw_status guarded(F&& f) {
  try {
    f();
    return VDW_OK;
  } catch (const NullArgument& e) {
    return fail(VDW_NULL_POINTER, e.what());
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(VDW_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VDW_INTERNAL, e.what());
  } catch (...) {
    return fail(VDW_INTERNAL, "unknown error");
  }
}

#define VDW_REQUIRE(ptr)                                          \
  do {                                                            \
    if (!(ptr)) return fail(VDW_NULL_POINTER, #ptr " is null");   \
  } while (0)

energy::AtomPair to_pair(const vdw_context* ctx, const vdw_pair* p) {
  if (!p->alpha_A || !p->alpha_B) throw NullArgument();
  return {p->alpha_A->model, p->alpha_B->model, p->R,
          kinematics::Trajectory(p->a, ctx->settings.constants.c), p->t};
}

vdw_validity to_c(const energy::Validity& v) {
  vdw_validity out{};
  out.at_over_c = v.at_over_c;
  out.aR_over_c2 = v.aR_over_c2;
  out.nonrelativistic = v.nonrelativistic;
  out.locally_inertial = v.locally_inertial;
  out.zone_mismatch = v.zone_mismatch;
  out.regime = static_cast<vdw_regime>(static_cast<int>(v.regime));
  return out;
}

void to_c(const energy::EnergyBreakdown& e, vdw_energy* out) {
  out->rest = e.rest;
  out->a2t_term = e.a2t_term;
  out->a2t2_term = e.a2t2_term;
  out->total = e.total;
  out->rest_error = e.rest_error;
  out->a2t_error = e.a2t_error;
  out->a2t2_error = e.a2t2_error;
  out->coef_rest = e.coefficients.rest;
  out->coef_a2t = e.coefficients.a2t;
  out->coef_a2t2 = e.coefficients.a2t2;
  out->converged = e.converged;
  out->validity = to_c(e.validity);
}

void copy_matrix(const Mat3& m, double* out) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[3 * i + j] = m(i, j);
}

vdw_status new_model(PolarizabilityModel m, vdw_model** out) {
  *out = new vdw_model{std::move(m)};
  return VDW_OK;
}

} // namespace

extern "C" {

const char* vdw_status_string(vdw_status status) {
  switch (status) {
    case VDW_OK: return "ok";
    case VDW_NULL_POINTER: return "null_pointer";
    case VDW_INTERNAL: return "internal";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(ErrorCode::io))
    return vdwaccel::to_string(static_cast<ErrorCode>(code));
  return "unknown";
}

const char* vdw_last_error(void) { return last_error.c_str(); }

const char* vdw_version(void) { return "0.1.0"; }

vdw_status vdw_context_create(vdw_units units, vdw_context** out) {
  VDW_REQUIRE(out);
  if (units != VDW_UNITS_GAUSSIAN && units != VDW_UNITS_NATURAL)
    return fail(VDW_INVALID_ARGUMENT, "unknown unit system");
  return guarded([&] {
    auto* ctx = new vdw_context;
    ctx->settings.constants = Constants::of(
        units == VDW_UNITS_NATURAL ? UnitSystem::natural : UnitSystem::gaussian);
    *out = ctx;
  });
}

void vdw_context_destroy(vdw_context* ctx) { delete ctx; }

vdw_status vdw_context_set_rel_tol(vdw_context* ctx, double rel_tol) {
  VDW_REQUIRE(ctx);
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    return fail(VDW_INVALID_ARGUMENT, "rel_tol must lie in (0, 1)");
  ctx->settings.quadrature.rel_tol = rel_tol;
  return VDW_OK;
}

vdw_status vdw_context_set_regulator(vdw_context* ctx, double initial,
                                     size_t levels) {
  VDW_REQUIRE(ctx);
  return guarded([&] {
    auto spec = ctx->settings.quadrature;
    spec.initial_regulator = initial;
    spec.regulator_levels = levels;
    spec.validate();
    ctx->settings.quadrature = spec;
  });
}

vdw_status vdw_context_constants(const vdw_context* ctx, double* hbar,
                                 double* c, double* k_B) {
  VDW_REQUIRE(ctx);
  if (hbar) *hbar = ctx->settings.constants.hbar;
  if (c) *c = ctx->settings.constants.c;
  if (k_B) *k_B = ctx->settings.constants.k_B;
  return VDW_OK;
}

vdw_status vdw_model_parse(const char* spec, vdw_model** out) {
  VDW_REQUIRE(spec);
  VDW_REQUIRE(out);
  return guarded([&] { new_model(PolarizabilityModel::parse(spec), out); });
}

vdw_status vdw_model_static(double alpha0, vdw_model** out) {
  VDW_REQUIRE(out);
  return guarded([&] { new_model(PolarizabilityModel::static_model(alpha0), out); });
}

vdw_status vdw_model_lorentz(double alpha0, double k0, vdw_model** out) {
  VDW_REQUIRE(out);
  return guarded([&] { new_model(PolarizabilityModel::lorentz(alpha0, k0), out); });
}

vdw_status vdw_model_tabulated(const double* u, const double* alpha, size_t n,
                               vdw_model** out) {
  VDW_REQUIRE(u);
  VDW_REQUIRE(alpha);
  VDW_REQUIRE(out);
  return guarded([&] {
    new_model(PolarizabilityModel::tabulated({u, u + n}, {alpha, alpha + n}), out);
  });
}

void vdw_model_destroy(vdw_model* model) { delete model; }

vdw_status vdw_model_eval_imag(const vdw_model* model, double u, double* out) {
  VDW_REQUIRE(model);
  VDW_REQUIRE(out);
  return guarded([&] { *out = model->model.eval_imag(u); });
}

vdw_status vdw_model_describe(const vdw_model* model, char* buf, size_t len,
                              size_t* needed) {
  VDW_REQUIRE(model);
  return guarded([&] {
    const std::string s = model->model.describe();
    if (needed) *needed = s.size() + 1;
    if (buf && len > 0) {
      const size_t n = std::min(len - 1, s.size());
      std::memcpy(buf, s.data(), n);
      buf[n] = '\0';
    }
  });
}

vdw_status vdw_rest_energy(const vdw_context* ctx, const vdw_pair* pair,
                           vdw_axis axis, double* value, double* error,
                           int* converged) {
  VDW_REQUIRE(ctx);
  VDW_REQUIRE(pair);
  VDW_REQUIRE(value);
  return guarded([&] {
    const auto r = energy::rest_energy(
        to_pair(ctx, pair),
        axis == VDW_AXIS_REAL ? energy::Axis::real : energy::Axis::imaginary,
        ctx->settings);
    *value = r.value;
    if (error) *error = r.error_estimate;
    if (converged) *converged = r.converged;
  });
}

vdw_status vdw_accelerated_energy(const vdw_context* ctx, const vdw_pair* pair,
                                  vdw_energy* out) {
  VDW_REQUIRE(ctx);
  VDW_REQUIRE(pair);
  VDW_REQUIRE(out);
  return guarded([&] {
    to_c(energy::accelerated_energy(to_pair(ctx, pair), ctx->settings), out);
  });
}

vdw_status vdw_near_zone_energy(const vdw_context* ctx, const vdw_pair* pair,
                                vdw_energy* out) {
  VDW_REQUIRE(ctx);
  VDW_REQUIRE(pair);
  VDW_REQUIRE(out);
  return guarded([&] {
    to_c(energy::near_zone_energy(to_pair(ctx, pair), ctx->settings), out);
  });
}

vdw_status vdw_far_zone_energy(const vdw_context* ctx, const vdw_pair* pair,
                               vdw_far_form form, vdw_energy* out) {
  VDW_REQUIRE(ctx);
  VDW_REQUIRE(pair);
  VDW_REQUIRE(out);
  return guarded([&] {
    const auto f = form == VDW_FAR_INTEGRAL ? energy::FarForm::integral
                                            : energy::FarForm::closed;
    to_c(energy::far_zone_energy(to_pair(ctx, pair), f, ctx->settings), out);
  });
}

vdw_status vdw_mode_contraction_energy(const vdw_context* ctx,
                                       const vdw_pair* pair, vdw_energy* out) {
  VDW_REQUIRE(ctx);
  VDW_REQUIRE(pair);
  VDW_REQUIRE(out);
  return guarded([&] {
    to_c(energy::mode_contraction_energy(to_pair(ctx, pair), ctx->settings), out);
  });
}

vdw_status vdw_polarizability_overlap(const vdw_context* ctx,
                                      const vdw_pair* pair, double* value) {
  VDW_REQUIRE(ctx);
  VDW_REQUIRE(pair);
  VDW_REQUIRE(value);
  return guarded([&] {
    *value = energy::polarizability_overlap(to_pair(ctx, pair), ctx->settings).value;
  });
}

vdw_status vdw_consistency_report(const vdw_context* ctx, const vdw_pair* pair,
                                  double tolerance, vdw_consistency* out) {
  VDW_REQUIRE(ctx);
  VDW_REQUIRE(pair);
  VDW_REQUIRE(out);
  if (!(tolerance > 0.0))
    return fail(VDW_INVALID_ARGUMENT, "tolerance must be > 0");
  return guarded([&] {
    const auto r =
        energy::consistency_report(to_pair(ctx, pair), ctx->settings, tolerance);
    out->rest_expected = r.rest.expected;
    out->rest_imaginary = r.rest.imaginary_axis;
    out->rest_real = r.rest.real_axis;
    out->rest_contraction = r.rest.contraction;
    out->rest_consistent = r.rest.consistent;
    out->a2t_expected = r.a2t.expected;
    out->a2t_imaginary = r.a2t.imaginary_axis;
    out->a2t_real = r.a2t.real_axis;
    out->a2t_contraction = r.a2t.contraction;
    out->a2t_consistent = r.a2t.consistent;
    out->a2t2_production = r.a2t2_production;
    out->a2t2_regulated = r.a2t2_regulated;
    out->a2t2_contraction = r.a2t2_contraction;
    out->a2t2_ratio = r.a2t2_ratio;
    out->a2t2_production_matches = r.a2t2_production_matches;
    out->a2t2_regulated_matches = r.a2t2_regulated_matches;
    out->a2t2_discrepancy = r.a2t2_discrepancy;
    out->tolerance = r.tolerance;
    out->probe = to_c(r.probe);
    out->ok = r.ok;
  });
}

vdw_validity vdw_assess_validity(const vdw_context* ctx, const vdw_pair* pair) {
  vdw_validity v{};
  if (!ctx || !pair) {
    fail(VDW_NULL_POINTER, "null argument");
    return v;
  }
  guarded([&] { v = to_c(energy::assess_validity(to_pair(ctx, pair))); });
  return v;
}

vdw_status vdw_tensor_dump_compute(const vdw_context* ctx, double k, double R,
                                   double a, double t, size_t samples,
                                   vdw_tensor_dump* out) {
  VDW_REQUIRE(ctx);
  VDW_REQUIRE(out);
  return guarded([&] {
    const tensor::ModeContext mc{
        k, R, t, kinematics::Trajectory(a, ctx->settings.constants.c)};
    const Mat3 closed = tensor::time_average_closed(mc);
    const auto numeric = tensor::time_average_numeric(
        mc, samples ? samples : tensor::samples_for(mc));
    copy_matrix(closed, out->closed);
    copy_matrix(numeric.value, out->numeric);
    out->max_diff = tensor::diagonal_max_difference(closed, numeric.value);
    out->max_entry = closed.diagonal().cwiseAbs().maxCoeff();
    out->numeric_error = numeric.error_estimate;
    out->samples = numeric.samples;
    out->short_window = numeric.short_window;
  });
}

vdw_status vdw_effective_distance(const vdw_context* ctx, double a, double rho,
                                  double t, double* out) {
  VDW_REQUIRE(ctx);
  VDW_REQUIRE(out);
  return guarded([&] {
    *out = kinematics::effective_distance(
        kinematics::Trajectory(a, ctx->settings.constants.c), rho, t);
  });
}

vdw_status vdw_unruh_temperature(const vdw_context* ctx, double a, double* out) {
  VDW_REQUIRE(ctx);
  VDW_REQUIRE(out);
  return guarded([&] {
    *out = energy::unruh_temperature(
        kinematics::Trajectory(a, ctx->settings.constants.c), ctx->settings.constants);
  });
}

} // extern "C"
