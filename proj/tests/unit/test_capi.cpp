#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "../oracles.hpp"
#include "vdwaccel/vdwaccel.h"

namespace {

constexpr double pi = std::numbers::pi;

struct Handles {
  vdw_context* ctx = nullptr;
  vdw_model* stat = nullptr;
  vdw_model* lor = nullptr;

  explicit Handles(vdw_units units = VDW_UNITS_NATURAL) {
    REQUIRE(vdw_context_create(units, &ctx) == VDW_OK);
    REQUIRE(vdw_model_static(1.0, &stat) == VDW_OK);
    REQUIRE(vdw_model_lorentz(1.0, 1.0, &lor) == VDW_OK);
  }
  ~Handles() {
    vdw_model_destroy(stat);
    vdw_model_destroy(lor);
    vdw_context_destroy(ctx);
  }
};

} // namespace

TEST_CASE("capi: status strings and version") {
  CHECK(std::string(vdw_status_string(VDW_OK)) == "ok");
  CHECK(std::strlen(vdw_status_string(VDW_DIVERGENCE)) > 0);
  CHECK(std::strlen(vdw_status_string(static_cast<vdw_status>(999))) > 0);
  CHECK(std::string(vdw_version()) == "0.1.0");
}

TEST_CASE("capi: null pointers") {
  vdw_model* m = nullptr;
  CHECK(vdw_model_parse(nullptr, &m) == VDW_NULL_POINTER);
  CHECK(vdw_model_static(1.0, nullptr) == VDW_NULL_POINTER);
  CHECK(vdw_context_create(VDW_UNITS_NATURAL, nullptr) == VDW_NULL_POINTER);
  Handles h;
  double v = 0.0;
  CHECK(vdw_rest_energy(h.ctx, nullptr, VDW_AXIS_IMAGINARY, &v, nullptr, nullptr) == VDW_NULL_POINTER);
  vdw_pair p{nullptr, h.stat, 1.0, 0.0, 0.0};
  CHECK(vdw_rest_energy(h.ctx, &p, VDW_AXIS_IMAGINARY, &v, nullptr, nullptr) == VDW_NULL_POINTER);
  CHECK(std::strlen(vdw_last_error()) > 0);
  vdw_model_destroy(nullptr);
  vdw_context_destroy(nullptr);
}

TEST_CASE("capi: error codes and messages") {
  Handles h;
  vdw_model* m = nullptr;
  CHECK(vdw_model_static(-1.0, &m) == VDW_INVALID_ARGUMENT);
  CHECK(m == nullptr);
  CHECK(std::string(vdw_last_error()).find("> 0") != std::string::npos);
  CHECK(vdw_model_parse("table:/nonexistent/file.csv", &m) == VDW_IO);
  CHECK(vdw_model_parse("bogus:1", &m) == VDW_INVALID_ARGUMENT);

  double v = 0.0;
  vdw_pair neg{h.stat, h.stat, -1.0, 0.0, 0.0};
  CHECK(vdw_rest_energy(h.ctx, &neg, VDW_AXIS_IMAGINARY, &v, nullptr, nullptr) == VDW_NEGATIVE_SEPARATION);
  vdw_pair lor{h.lor, h.lor, 1.0, 0.0, 0.0};
  CHECK(vdw_rest_energy(h.ctx, &lor, VDW_AXIS_REAL, &v, nullptr, nullptr) == VDW_UNSUPPORTED_MODEL);
  CHECK(vdw_context_set_rel_tol(h.ctx, 0.0) == VDW_INVALID_ARGUMENT);
  CHECK(vdw_context_set_rel_tol(h.ctx, 1e-8) == VDW_OK);
  CHECK(vdw_unruh_temperature(h.ctx, -1.0, &v) != VDW_OK);
}

TEST_CASE("capi: models") {
  vdw_model* m = nullptr;
  REQUIRE(vdw_model_parse("lorentz:2:3", &m) == VDW_OK);
  double v = 0.0;
  CHECK(vdw_model_eval_imag(m, 3.0, &v) == VDW_OK);
  CHECK(v == doctest::Approx(1.0));
  CHECK(vdw_model_eval_imag(m, -1.0, &v) == VDW_OUT_OF_DOMAIN);

  char buf[7];
  std::size_t needed = 0;
  CHECK(vdw_model_describe(m, buf, sizeof buf, &needed) == VDW_OK);
  CHECK(needed == std::strlen("lorentz:2:3") + 1);
  CHECK(std::string(buf) == "lorent");
  char big[64];
  CHECK(vdw_model_describe(m, big, sizeof big, nullptr) == VDW_OK);
  CHECK(std::string(big) == "lorentz:2:3");
  vdw_model_destroy(m);

  const double u[] = {0.0, 1.0, 2.0};
  const double a[] = {4.0, 2.0, 1.0};
  REQUIRE(vdw_model_tabulated(u, a, 3, &m) == VDW_OK);
  CHECK(vdw_model_eval_imag(m, 1.0, &v) == VDW_OK);
  CHECK(v == doctest::Approx(2.0));
  vdw_model_destroy(m);
  CHECK(vdw_model_tabulated(u, a, 1, &m) == VDW_INVALID_ARGUMENT);
}

TEST_CASE("capi: energies") {
  Handles h;
  vdw_pair p{h.stat, h.stat, 10.0, 1e-3, 30.0};
  double v = 0.0, err = 0.0;
  int conv = 0;
  REQUIRE(vdw_rest_energy(h.ctx, &p, VDW_AXIS_IMAGINARY, &v, &err, &conv) == VDW_OK);
  CHECK(v * 1e7 == doctest::Approx(-23.0 / (4.0 * pi)).epsilon(1e-10));
  CHECK(conv == 1);

  vdw_energy e{};
  REQUIRE(vdw_accelerated_energy(h.ctx, &p, &e) == VDW_OK);
  CHECK(e.rest == doctest::Approx(v).epsilon(1e-14));
  CHECK(e.coef_a2t == doctest::Approx(11.0 / 8.0).epsilon(1e-10));
  CHECK(e.coef_a2t2 == doctest::Approx(27.0 / 24.0).epsilon(1e-10));
  CHECK(e.total == doctest::Approx(e.rest + e.a2t_term + e.a2t2_term).epsilon(1e-14));
  CHECK(e.converged == 1);
  CHECK(e.validity.regime == VDW_REGIME_FAR);
  CHECK(e.validity.at_over_c == doctest::Approx(0.03));

  REQUIRE(vdw_far_zone_energy(h.ctx, &p, VDW_FAR_CLOSED, &e) == VDW_OK);
  CHECK(e.coef_a2t2 == doctest::Approx(7.0 / 24.0));
  REQUIRE(vdw_mode_contraction_energy(h.ctx, &p, &e) == VDW_OK);
  CHECK(e.coef_rest == doctest::Approx(23.0 / 4.0).epsilon(1e-4));

  vdw_pair near{h.lor, h.lor, 0.01, 0.1, 1.0};
  REQUIRE(vdw_near_zone_energy(h.ctx, &near, &e) == VDW_OK);
  CHECK(e.validity.regime == VDW_REGIME_NEAR);
  CHECK(e.validity.zone_mismatch == 0);
  REQUIRE(vdw_polarizability_overlap(h.ctx, &near, &v) == VDW_OK);
  CHECK(v == doctest::Approx(oracle::lorentz_overlap(1, 1, 1, 1)).epsilon(1e-9));

  const vdw_validity val = vdw_assess_validity(h.ctx, &near);
  CHECK(val.regime == VDW_REGIME_NEAR);
}

TEST_CASE("capi: consistency report") {
  Handles h;
  vdw_pair p{h.stat, h.stat, 100.0, 1e-4, 10.0};
  vdw_consistency r{};
  REQUIRE(vdw_consistency_report(h.ctx, &p, 0.01, &r) == VDW_OK);
  CHECK(r.ok == 1);
  CHECK(r.rest_expected == 23.0 / 4.0);
  CHECK(r.a2t_real == doctest::Approx(11.0 / 8.0).epsilon(1e-3));
  CHECK(r.a2t2_discrepancy == 1);
  CHECK(r.tolerance == 0.01);
  CHECK(vdw_consistency_report(h.ctx, &p, -1.0, &r) != VDW_OK);
}

TEST_CASE("capi: tensor dump") {
  Handles h;
  vdw_tensor_dump d{};
  REQUIRE(vdw_tensor_dump_compute(h.ctx, 1.0, 1.0, 1e-4, 1000.0, 0, &d) == VDW_OK);
  CHECK(d.max_diff <= 1e-3 * d.max_entry);
  CHECK(d.samples >= 40 * 1000 / 6);
  CHECK(d.short_window == 0);
  CHECK(d.closed[1] == 0.0);
  CHECK(vdw_tensor_dump_compute(h.ctx, 1.0, 1.0, 1e-4, 1000.0, 100, &d) == VDW_INSUFFICIENT_SAMPLING);
  CHECK(vdw_tensor_dump_compute(h.ctx, 1.0, 0.0, 1e-4, 1000.0, 0, &d) == VDW_ZERO_DISTANCE);
}

TEST_CASE("capi: kinematics helpers and constants") {
  Handles g(VDW_UNITS_GAUSSIAN);
  double hbar = 0, c = 0, kB = 0;
  REQUIRE(vdw_context_constants(g.ctx, &hbar, &c, &kB) == VDW_OK);
  CHECK(c == oracle::c_cgs);
  double T = 0;
  REQUIRE(vdw_unruh_temperature(g.ctx, oracle::unruh_acceleration_for(1.0), &T) == VDW_OK);
  CHECK(T == doctest::Approx(1.0).epsilon(1e-14));

  Handles n;
  double d = 0;
  REQUIRE(vdw_effective_distance(n.ctx, 1e-2, 2.0, 1.0, &d) == VDW_OK);
  CHECK(d - 2.0 == doctest::Approx(1.0 - 100.0 * std::atan(1e-2)).epsilon(1e-8));
  REQUIRE(vdw_effective_distance(n.ctx, 0.0, 2.0, 1.0, &d) == VDW_OK);
  CHECK(d == 2.0);
}
