#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracles.hpp"
#include "vdwaccel/energy.hpp"
#include "vdwaccel/error.hpp"

using namespace vdwaccel;
using namespace vdwaccel::energy;
using kinematics::Trajectory;

namespace {

constexpr double pi = std::numbers::pi;

Settings natural() {
  Settings s;
  s.constants = Constants::natural();
  return s;
}

AtomPair pair(PolarizabilityModel a, PolarizabilityModel b, double R, double acc = 0.0,
              double t = 0.0, double c = 1.0) {
  return {std::move(a), std::move(b), R, Trajectory(acc, c), t};
}

const auto unit_static = PolarizabilityModel::static_model(1.0);
const auto unit_lorentz = PolarizabilityModel::lorentz(1.0, 1.0);

} // namespace

TEST_CASE("mode kernel") {
  const Mat3 k0 = mode_kernel(1e-8, 1.0);
  CHECK(k0(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(k0(2, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(mode_kernel(pi, 1.0)(2, 2) == doctest::Approx(2.0 / (pi * pi)).epsilon(1e-14));

  // Series and direct branches agree around the switch point.
  for (double x : {0.3, 0.49, 0.5, 0.51}) {
    const double g = std::cos(x) / (x * x) - std::sin(x) / (x * x * x);
    const Mat3 m = mode_kernel(x, 1.0);
    CHECK(m(2, 2) == doctest::Approx(-2.0 * g).epsilon(1e-11));
    CHECK(m(0, 0) == doctest::Approx(std::sin(x) / x + g).epsilon(1e-11));
  }
  CHECK(std::abs(mode_kernel(1e4, 1.0)(2, 2)) < 1e-7);
}

TEST_CASE("rest energy, static polarizabilities") {
  const auto s = natural();
  const double expected = -oracle::rest_coefficient() / pi;
  for (double R : {1.0, 10.0, 100.0}) {
    const auto p = pair(unit_static, unit_static, R);
    const double scale = std::pow(R, 7);
    const auto im = rest_energy(p, Axis::imaginary, s);
    const auto re = rest_energy(p, Axis::real, s);
    CHECK(im.value * scale == doctest::Approx(expected).epsilon(1e-10));
    CHECK(re.value * scale == doctest::Approx(expected).epsilon(1e-4));
    CHECK(std::abs(im.value - re.value) <= im.error_estimate + re.error_estimate);
  }
  // Gaussian units carry hbar c.
  Settings g;
  const auto p = pair(PolarizabilityModel::static_model(1e-24), PolarizabilityModel::static_model(2e-24), 1e-4, 0.0, 0.0, oracle::c_cgs);
  const double want = -23.0 / 4.0 * oracle::hbar_cgs * oracle::c_cgs / pi * 2e-48 / std::pow(1e-4, 7);
  CHECK(rest_energy(p, Axis::imaginary, g).value == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("rest energy, Lorentz polarizabilities") {
  const auto s = natural();
  // Far zone approaches the static result; near zone approaches the
  // London form built from the exact overlap integral, twice the
  // near-zone approximation below.
  const auto far = rest_energy(pair(unit_lorentz, unit_lorentz, 200.0), Axis::imaginary, s);
  CHECK(far.value * std::pow(200.0, 7) * -pi == doctest::Approx(23.0 / 4.0).epsilon(0.005));

  const double R = 1e-3;
  const double J = oracle::lorentz_overlap(1.0, 1.0, 1.0, 1.0);
  const auto close = rest_energy(pair(unit_lorentz, unit_lorentz, R), Axis::imaginary, s);
  CHECK(close.value == doctest::Approx(-3.0 / (pi * std::pow(R, 6)) * J).epsilon(0.005));

  CHECK_THROWS_AS(rest_energy(pair(unit_lorentz, unit_lorentz, 1.0), Axis::real, s), Error);
}

TEST_CASE("polarizability overlap") {
  const auto s = natural();
  const auto a = PolarizabilityModel::lorentz(2.0, 0.5);
  const auto b = PolarizabilityModel::lorentz(3.0, 4.0);
  CHECK(polarizability_overlap(pair(a, b, 1.0), s).value ==
        doctest::Approx(oracle::lorentz_overlap(2.0, 0.5, 3.0, 4.0)).epsilon(1e-9));
  CHECK(polarizability_overlap(pair(unit_lorentz, unit_lorentz, 1.0), s).value ==
        doctest::Approx(pi / 4.0).epsilon(1e-9));
  try {
    polarizability_overlap(pair(unit_static, unit_lorentz, 1.0), s);
    FAIL("static overlap accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported_model);
  }
}

TEST_CASE("accelerated energy reduces to the rest energy") {
  const auto s = natural();
  for (double R : {0.01, 1.0, 100.0}) {
    const auto rest = rest_energy(pair(unit_lorentz, unit_lorentz, R), Axis::imaginary, s);
    const auto a0 = accelerated_energy(pair(unit_lorentz, unit_lorentz, R, 0.0, 5.0), s);
    const auto t0 = accelerated_energy(pair(unit_lorentz, unit_lorentz, R, 0.2, 0.0), s);
    CHECK(a0.total == rest.value);
    CHECK(t0.total == rest.value);
    CHECK(a0.a2t_term == 0.0);
    CHECK(t0.a2t2_term == 0.0);
  }
}

TEST_CASE("accelerated energy, static coefficients") {
  const auto s = natural();
  const double R = 50.0, a = 1e-3, t = 20.0;
  const auto e = accelerated_energy(pair(unit_static, unit_static, R, a, t), s);
  CHECK(e.coefficients.rest == doctest::Approx(oracle::rest_coefficient()).epsilon(1e-10));
  CHECK(e.coefficients.a2t == doctest::Approx(oracle::a2t_coefficient()).epsilon(1e-10));
  CHECK(e.coefficients.a2t2 == doctest::Approx(oracle::a2t2_production_coefficient()).epsilon(1e-10));
  CHECK(e.a2t_term == doctest::Approx(11.0 * a * a * t / (8.0 * pi * std::pow(R, 6))).epsilon(1e-10));
  CHECK(e.rest < 0.0);
  CHECK(e.a2t_term > 0.0);
  CHECK(e.total < 0.0);
  CHECK(e.converged);
  CHECK(e.validity.ok());
  CHECK(e.validity.at_over_c == doctest::Approx(0.02));
  CHECK(e.validity.aR_over_c2 == doctest::Approx(0.05));
}

TEST_CASE("exchange symmetry") {
  const auto s = natural();
  const auto a = PolarizabilityModel::lorentz(1.0, 2.0);
  const auto b = PolarizabilityModel::lorentz(3.0, 0.3);
  const auto ab = accelerated_energy(pair(a, b, 0.7, 0.1, 1.5), s);
  const auto ba = accelerated_energy(pair(b, a, 0.7, 0.1, 1.5), s);
  CHECK(ab.total == doctest::Approx(ba.total).epsilon(1e-14));
  CHECK(ab.a2t2_term == doctest::Approx(ba.a2t2_term).epsilon(1e-14));
}

TEST_CASE("near-zone approximation") {
  const auto s = natural();
  const double R = 0.01, a = 0.1, t = 2.0;
  const auto p = pair(unit_lorentz, unit_lorentz, R, a, t);
  const auto near = near_zone_energy(p, s);
  const double J = pi / 4.0;
  const double london = 3.0 / (2.0 * pi * std::pow(R, 6)) * J;
  CHECK(near.rest == doctest::Approx(-london).epsilon(1e-9));
  CHECK(near.a2t2_term / -near.rest == doctest::Approx(4.0 * a * a * t * t / 9.0).epsilon(1e-12));
  CHECK(near.a2t_term == doctest::Approx(a * a * t * J / (pi * std::pow(R, 5))).epsilon(1e-9));
  CHECK(near.validity.regime == Regime::near);
  CHECK_FALSE(near.validity.zone_mismatch);

  // Against the full expression: the two correction terms agree within 2%;
  // the full rest term is twice the near-zone rest term.
  const auto full = accelerated_energy(p, s);
  CHECK(full.a2t_term == doctest::Approx(near.a2t_term).epsilon(0.02));
  CHECK(full.a2t2_term == doctest::Approx(near.a2t2_term).epsilon(0.02));
  CHECK(full.rest / near.rest == doctest::Approx(2.0).epsilon(0.02));

  CHECK(near_zone_energy(pair(unit_lorentz, unit_lorentz, 5.0), s).validity.zone_mismatch);
  CHECK_THROWS_AS(near_zone_energy(pair(unit_static, unit_static, 0.01), s), Error);
}

TEST_CASE("far-zone approximation") {
  const auto s = natural();
  const double R = 100.0, a = 1e-3, t = 0.2 / 1e-3 * 0.0 + std::sqrt(0.2) / 1e-3;
  const auto p = pair(unit_static, unit_static, R, a, t);
  const auto closed = far_zone_energy(p, FarForm::closed, s);
  CHECK(closed.coefficients.rest == doctest::Approx(23.0 / 4.0));
  CHECK(closed.coefficients.a2t == doctest::Approx(11.0 / 8.0));
  CHECK(closed.coefficients.a2t2 == doctest::Approx(7.0 / 24.0));
  CHECK(closed.a2t2_term / -closed.rest == doctest::Approx(7.0 / 24.0 * 0.2 / (23.0 / 4.0)).epsilon(1e-12));

  const auto integral = far_zone_energy(p, FarForm::integral, s);
  CHECK(integral.coefficients.rest == doctest::Approx(oracle::rest_coefficient_real()).epsilon(1e-4));
  CHECK(integral.coefficients.a2t == doctest::Approx(oracle::a2t_coefficient_real()).epsilon(1e-4));
  CHECK(integral.coefficients.a2t2 == doctest::Approx(oracle::a2t2_coefficient_real()).epsilon(1e-3));
  CHECK(integral.converged);

  // Lorentz atoms far apart: rest and a^2 t terms follow the closed form.
  const auto lp = pair(unit_lorentz, unit_lorentz, 60.0, 1e-3, 10.0);
  const auto full = accelerated_energy(lp, s);
  const auto approx = far_zone_energy(lp, FarForm::closed, s);
  CHECK(full.rest == doctest::Approx(approx.rest).epsilon(0.02));
  CHECK(full.a2t_term == doctest::Approx(approx.a2t_term).epsilon(0.02));
  CHECK_FALSE(approx.validity.zone_mismatch);
  CHECK(far_zone_energy(pair(unit_lorentz, unit_lorentz, 1.0), FarForm::closed, s).validity.zone_mismatch);
}

TEST_CASE("mode contraction reproduces the real-axis coefficients") {
  const auto s = natural();
  const auto e = mode_contraction_energy(pair(unit_static, unit_static, 3.0, 0.01, 2.0), s);
  CHECK(e.coefficients.rest == doctest::Approx(23.0 / 4.0).epsilon(1e-4));
  CHECK(e.coefficients.a2t == doctest::Approx(11.0 / 8.0).epsilon(1e-4));
  CHECK(e.coefficients.a2t2 == doctest::Approx(7.0 / 24.0).epsilon(1e-3));
  CHECK_THROWS_AS(mode_contraction_energy(pair(unit_lorentz, unit_lorentz, 3.0), s), Error);
}

TEST_CASE("consistency report") {
  const auto s = natural();
  auto r = consistency_report(pair(unit_static, unit_static, 100.0, 1e-4, 10.0), s);
  CHECK(r.ok);
  CHECK(r.rest.consistent);
  CHECK(r.a2t.consistent);
  CHECK(r.a2t2_production == doctest::Approx(27.0 / 24.0).epsilon(0.01));
  CHECK(r.a2t2_regulated == doctest::Approx(7.0 / 24.0).epsilon(0.01));
  CHECK(r.a2t2_production_matches);
  CHECK(r.a2t2_regulated_matches);
  CHECK(r.a2t2_discrepancy);
  CHECK(r.a2t2_ratio == doctest::Approx(27.0 / 7.0).epsilon(0.01));
  CHECK(r.probe.at_over_c == doctest::Approx(1e-3));
  CHECK(r.probe.aR_over_c2 == doctest::Approx(1e-2));

  // Fault injection: a corrupted rest coefficient flips the verdict.
  r.rest.real_axis *= 1.05;
  assess(r);
  CHECK_FALSE(r.rest.consistent);
  CHECK_FALSE(r.ok);

  CHECK_THROWS_AS(consistency_report(pair(unit_lorentz, unit_lorentz, 10.0), s), Error);
}

TEST_CASE("validity classification") {
  const auto lz = PolarizabilityModel::lorentz(1.0, 2.0);
  CHECK(assess_validity(pair(lz, lz, 0.01)).regime == Regime::near);
  CHECK(assess_validity(pair(lz, lz, 1.0)).regime == Regime::intermediate);
  CHECK(assess_validity(pair(lz, lz, 10.0)).regime == Regime::far);
  CHECK(assess_validity(pair(unit_static, unit_static, 1e-6)).regime == Regime::far);
  const auto v = assess_validity(pair(lz, lz, 0.5, 1.0, 0.5));
  CHECK_FALSE(v.nonrelativistic);
  CHECK_FALSE(v.locally_inertial);
  CHECK_FALSE(v.ok());
}

TEST_CASE("input validation") {
  const auto s = natural();
  try {
    accelerated_energy(pair(unit_static, unit_static, -1.0), s);
    FAIL("negative R accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::negative_separation);
  }
  CHECK_THROWS_AS(accelerated_energy(pair(unit_static, unit_static, 1.0, 0.1, -1.0), s), Error);
  // Trajectory built for a different speed of light.
  CHECK_THROWS_AS(accelerated_energy(pair(unit_static, unit_static, 1.0, 0.1, 1.0, 3.0), s), Error);
}

TEST_CASE("Unruh temperature") {
  const Constants g = Constants::gaussian();
  CHECK(unruh_temperature(Trajectory(0.0, g.c), g) == 0.0);
  const double a1 = oracle::unruh_acceleration_for(1.0);
  CHECK(a1 == doctest::Approx(2.4661e22).epsilon(1e-4));
  CHECK(unruh_temperature(Trajectory(a1, g.c), g) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(unruh_temperature(Trajectory(2.47e22, g.c), g) == doctest::Approx(1.0).epsilon(0.002));
  CHECK(unruh_temperature(Trajectory(2 * a1, g.c), g) == doctest::Approx(2.0).epsilon(1e-14));
}
