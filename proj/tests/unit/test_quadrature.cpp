#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "vdwaccel/error.hpp"
#include "vdwaccel/quadrature.hpp"

using namespace vdwaccel;
using namespace vdwaccel::quad;

TEST_CASE("finite interval") {
  const QuadratureSpec spec;
  const auto r = integrate_interval([](double x) { return std::sin(x); }, 0.0, M_PI, spec);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.converged);
  const auto peak = integrate_interval([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0, spec);
  CHECK(peak.value == doctest::Approx(2.0 / 1e-2 * std::atan(1.0 / 1e-2)).epsilon(1e-9));
  CHECK_THROWS_AS(integrate_interval([](double) { return 1.0; }, 1.0, 1.0, spec), Error);
}

TEST_CASE("damped integrals: Laplace moments") {
  const QuadratureSpec spec;
  for (double R : {1e-3, 1e-1, 1.0, 10.0, 1e3}) {
    CHECK(integrate_damped([&](double u) { return std::exp(-2 * u * R); }, 1.0 / R, spec).value ==
          doctest::Approx(1.0 / (2 * R)).epsilon(1e-12));
    for (int n = 0; n <= 6; ++n) {
      const auto r = integrate_damped(
          [&](double u) { return std::pow(u, n) * std::exp(-2 * u * R); }, 1.0 / R, spec);
      CHECK(r.value == doctest::Approx(oracle::laplace_moment(n, R)).epsilon(1e-9));
      CHECK(r.converged);
    }
  }
}

TEST_CASE("damped integrals: algebraic tails") {
  const QuadratureSpec spec;
  for (double k0 : {1e-2, 1.0, 1e4}) {
    const auto r = integrate_damped(
        [&](double u) {
          const double d = 1.0 + u * u / (k0 * k0);
          return 1.0 / (d * d);
        },
        k0, spec);
    CHECK(r.value == doctest::Approx(M_PI * k0 / 4.0).epsilon(1e-8));
  }
}

TEST_CASE("damped integrals report exhaustion") {
  QuadratureSpec spec;
  spec.max_subdivisions = 2;
  spec.rel_tol = 1e-15;
  try {
    integrate_damped([](double u) { return std::sin(50 * u) * std::exp(-u); }, 1.0, spec);
    FAIL("expected non-convergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_convergence);
  }
}

TEST_CASE("oscillatory integrals: Abel moments") {
  const QuadratureSpec spec;
  for (double R : {0.5, 1.0, 3.0}) {
    CHECK(integrate_oscillatory([&](double k) { return std::sin(2 * k * R); }, R, spec).value ==
          doctest::Approx(1.0 / (2 * R)).epsilon(1e-6));
    for (int n = 0; n <= 4; ++n) {
      const double scale = oracle::factorial(n) / std::pow(2 * R, n + 1);
      const auto s = integrate_oscillatory(
          [&](double k) { return std::pow(k, n) * std::sin(2 * k * R); }, R, spec);
      const auto c = integrate_oscillatory(
          [&](double k) { return std::pow(k, n) * std::cos(2 * k * R); }, R, spec);
      CHECK(std::abs(s.value - oracle::abel_moment_sin(n, R)) < 1e-3 * scale);
      CHECK(std::abs(c.value - oracle::abel_moment_cos(n, R)) < 1e-3 * scale);
    }
  }
  const double R = 1.25;
  CHECK(integrate_oscillatory([&](double k) { return k * k * k * std::cos(2 * k * R); }, R, spec).value ==
        doctest::Approx(3.0 / (8.0 * std::pow(R, 4))).epsilon(1e-3));
  CHECK(integrate_oscillatory([&](double k) { return k * k * std::sin(2 * k * R); }, R, spec).value ==
        doctest::Approx(-1.0 / (4.0 * R * R * R)).epsilon(1e-3));
}

TEST_CASE("oscillatory integrals do not depend on the starting regulator") {
  QuadratureSpec a, b;
  b.initial_regulator = 0.25;
  auto f = [](double k) { return k * k * std::sin(2 * k) + 3 * std::cos(2 * k) * k; };
  const auto ra = integrate_oscillatory(f, 1.0, a);
  const auto rb = integrate_oscillatory(f, 1.0, b);
  CHECK(std::abs(ra.value - rb.value) <= ra.error_estimate + rb.error_estimate);
}

TEST_CASE("oscillatory engine rejects non-summable input") {
  const QuadratureSpec spec;
  try {
    integrate_oscillatory([](double k) { return 1.0 + 0.0 * k; }, 1.0, spec);
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::divergence);
  }
}

TEST_CASE("deterministic results") {
  const QuadratureSpec spec;
  auto f = [](double k) { return k * k * k * std::cos(2 * k * 0.7); };
  const auto a = integrate_oscillatory(f, 0.7, spec);
  const auto b = integrate_oscillatory(f, 0.7, spec);
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
}

TEST_CASE("spec validation") {
  QuadratureSpec s;
  CHECK(s.regulator_sequence().size() == 8);
  CHECK(s.regulator_sequence().front() == 0.5);
  for (std::size_t i = 1; i < 8; ++i)
    CHECK(s.regulator_sequence()[i] == 0.5 * s.regulator_sequence()[i - 1]);
  s.rel_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), Error);
  QuadratureSpec t;
  t.regulator_levels = 3;
  CHECK_THROWS_AS(t.validate(), Error);
}
