#include "vdwaccel/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vdwaccel/error.hpp"
#include "vdwaccel/potential_tensor.hpp"

namespace vdwaccel::energy {

namespace {

constexpr double pi = std::numbers::pi;

const Mat3 kT = Vec3(1.0, 1.0, -2.0).asDiagonal();
const Mat3 kS = Vec3(1.0, 1.0, 0.0).asDiagonal();

void check_pair(const AtomPair& pair, const Settings& settings) {
  if (!(pair.R > 0.0) || !std::isfinite(pair.R))
    throw Error(ErrorCode::negative_separation, "interatomic distance must be > 0");
  if (!(pair.t >= 0.0) || !std::isfinite(pair.t))
    throw Error(ErrorCode::out_of_domain, "observation time must be >= 0");
  const double c = settings.constants.c;
  if (std::abs(pair.traj.light_speed() - c) > 1e-12 * c)
    throw Error(ErrorCode::invalid_argument,
                "trajectory and constants use different speeds of light");
}

void require_static(const AtomPair& pair, const char* who) {
  if (!pair.alpha_A.is_static() || !pair.alpha_B.is_static())
    throw Error(ErrorCode::unsupported_model,
                std::string(who) +
                    ": real-axis integrals need static polarizabilities "
                    "(a resonance lies on the contour)");
}

double static_product(const AtomPair& pair) {
  return pair.alpha_A.static_value() * pair.alpha_B.static_value();
}

// alphaA(iu) alphaB(iu) / (alphaA(0) alphaB(0)) at u = x / 2R.
double overlap_ratio(const AtomPair& pair, double x) {
  const double u = x / (2.0 * pair.R);
  return pair.alpha_A.eval_imag(u) * pair.alpha_B.eval_imag(u) / static_product(pair);
}

// Energies per unit of the (a, t) factor multiplying each term.
struct TermUnits {
  double rest = 0.0;
  double per_a2t = 0.0;   // times a^2 t
  double per_a2t2 = 0.0;  // times a^2 t^2
  double rest_error = 0.0;
  double per_a2t_error = 0.0;
  double per_a2t2_error = 0.0;
  bool converged = true;
};

// Normalizations that turn the units above into the dimensionless
// coefficients documented on `Coefficients`.
struct Norms {
  double rest;
  double a2t;
  double a2t2;
};

Norms norms(const AtomPair& pair, const Settings& settings) {
  const double hbar = settings.constants.hbar;
  const double c = settings.constants.c;
  const double aa = static_product(pair);
  const double R = pair.R;
  const double R6 = std::pow(R, 6);
  const double R7 = R6 * R;
  return {hbar * c / pi * aa / R7, hbar / (pi * c * c) * aa / R6,
          hbar / (pi * c) * aa / R7};
}

EnergyBreakdown assemble(const AtomPair& pair, const Settings& settings,
                         const TermUnits& u) {
  const double a = pair.traj.acceleration();
  const double t = pair.t;
  const double a2t = a * a * t;
  const double a2t2 = a2t * t;
  EnergyBreakdown e;
  e.rest = u.rest;
  e.a2t_term = a2t * u.per_a2t;
  e.a2t2_term = a2t2 * u.per_a2t2;
  e.total = e.rest + e.a2t_term + e.a2t2_term;
  e.rest_error = u.rest_error;
  e.a2t_error = a2t * u.per_a2t_error;
  e.a2t2_error = a2t2 * u.per_a2t2_error;
  e.converged = u.converged;
  const auto n = norms(pair, settings);
  e.coefficients = {-u.rest / n.rest, u.per_a2t / n.a2t, u.per_a2t2 / n.a2t2};
  e.validity = assess_validity(pair);
  return e;
}

quad::QuadratureResult damped(const AtomPair& pair, const Settings& settings,
                              double (*poly)(double)) {
  return quad::integrate_damped(
      [&](double x) { return overlap_ratio(pair, x) * poly(x) * std::exp(-x); },
      1.0, settings.quadrature);
}

// Polynomials of the imaginary-axis integrands in x = 2uR.
double rest_poly(double x) { return (((x + 4.0) * x + 20.0) * x + 48.0) * x + 48.0; }
double a2t_poly(double x) { return (3.0 * x + 8.0) * x + 8.0; }
double a2t2_poly(double x) { return (((-x + 8.0) * x + 32.0) * x + 64.0) * x + 64.0; }

// Real-axis integrands in y = kR; each oscillates as sin/cos(2y).
double rest_real(double y) {
  const double s = std::sin(2 * y), c = std::cos(2 * y);
  return y * y * y * y * s + 2 * y * y * y * c - 5 * y * y * s - 6 * y * c + 3 * s;
}
double a2t_real(double y) {
  const double s = std::sin(2 * y), c = std::cos(2 * y);
  return 3 * y * y * s + 4 * y * c - 2 * s;
}
double a2t2_real(double y) {
  const double s = std::sin(2 * y), c = std::cos(2 * y);
  return y * y * y * y * s - 2 * y * y * y * c + 3 * y * y * s + 2 * y * c - s;
}

// sin(x)/x and cos(x)/x^2 - sin(x)/x^3 with series near 0.
void kernel_functions(double x, double& sinc, double& g) {
  if (std::abs(x) >= 0.5) {
    const double s = std::sin(x), c = std::cos(x);
    sinc = s / x;
    g = c / (x * x) - s / (x * x * x);
    return;
  }
  const double x2 = x * x;
  // sinc = sum_m (-1)^m x^{2m} / (2m+1)!
  // g    = sum_{m>=1} (-1)^m 2m x^{2m-2} / (2m+1)!
  double term = -1.0 / 6.0;  // (-1)^m x^{2m-2} / (2m+1)!
  sinc = 1.0;
  g = 0.0;
  for (int m = 1; m < 12; ++m) {
    g += 2.0 * m * term;
    sinc += term * x2;
    term *= -x2 / ((2.0 * m + 2.0) * (2.0 * m + 3.0));
  }
}

} // namespace

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::near: return "near";
    case Regime::intermediate: return "intermediate";
    case Regime::far: return "far";
  }
  return "unknown";
}

Validity assess_validity(const AtomPair& pair) {
  const double a = pair.traj.acceleration();
  const double c = pair.traj.light_speed();
  Validity v;
  v.at_over_c = a * pair.t / c;
  v.aR_over_c2 = a * pair.R / (c * c);
  v.nonrelativistic = v.at_over_c < nonrelativistic_limit;
  v.locally_inertial = v.aR_over_c2 < inertial_frame_limit;

  const auto ka = pair.alpha_A.characteristic_wavenumber();
  const auto kb = pair.alpha_B.characteristic_wavenumber();
  if (!ka && !kb) {
    v.regime = Regime::far;
  } else {
    const double lo = std::min(ka.value_or(INFINITY), kb.value_or(INFINITY));
    const double hi = std::max(ka.value_or(0.0), kb.value_or(0.0));
    if (pair.R * hi <= near_zone_limit)
      v.regime = Regime::near;
    else if (pair.R * lo >= far_zone_limit)
      v.regime = Regime::far;
    else
      v.regime = Regime::intermediate;
  }
  return v;
}

Mat3 mode_kernel(double k, double R) {
  double sinc = 0.0, g = 0.0;
  kernel_functions(k * R, sinc, g);
  return kS * sinc + kT * g;
}

quad::QuadratureResult rest_energy(const AtomPair& pair, Axis axis,
                                   const Settings& settings) {
  check_pair(pair, settings);
  const auto n = norms(pair, settings);
  quad::QuadratureResult r;
  if (axis == Axis::imaginary) {
    r = damped(pair, settings, rest_poly);
    r.value /= 32.0;
    r.error_estimate /= 32.0;
  } else {
    require_static(pair, "rest_energy");
    r = quad::integrate_oscillatory(rest_real, 1.0, settings.quadrature);
  }
  r.value *= -n.rest;
  r.error_estimate *= n.rest;
  return r;
}

EnergyBreakdown accelerated_energy(const AtomPair& pair,
                                   const Settings& settings) {
  check_pair(pair, settings);
  const auto n = norms(pair, settings);
  const auto rest = damped(pair, settings, rest_poly);
  const auto lin = damped(pair, settings, a2t_poly);
  const auto quadr = damped(pair, settings, a2t2_poly);
  TermUnits u;
  u.rest = -n.rest * rest.value / 32.0;
  u.rest_error = n.rest * rest.error_estimate / 32.0;
  u.per_a2t = n.a2t * lin.value / 16.0;
  u.per_a2t_error = n.a2t * lin.error_estimate / 16.0;
  u.per_a2t2 = n.a2t2 * quadr.value / 192.0;
  u.per_a2t2_error = n.a2t2 * quadr.error_estimate / 192.0;
  u.converged = rest.converged && lin.converged && quadr.converged;
  return assemble(pair, settings, u);
}

quad::QuadratureResult polarizability_overlap(const AtomPair& pair,
                                              const Settings& settings) {
  const auto ka = pair.alpha_A.characteristic_wavenumber();
  const auto kb = pair.alpha_B.characteristic_wavenumber();
  if (!ka || !kb)
    throw Error(ErrorCode::unsupported_model,
                "integral of alphaA(iu) alphaB(iu) diverges for a static model");
  const double scale = std::min(*ka, *kb);
  auto r = quad::integrate_damped(
      [&](double u) {
        return pair.alpha_A.eval_imag(u) * pair.alpha_B.eval_imag(u) / static_product(pair);
      },
      scale, settings.quadrature);
  r.value *= static_product(pair);
  r.error_estimate *= static_product(pair);
  return r;
}

EnergyBreakdown near_zone_energy(const AtomPair& pair,
                                 const Settings& settings) {
  check_pair(pair, settings);
  const auto J = polarizability_overlap(pair, settings);
  const double hbar = settings.constants.hbar;
  const double c = settings.constants.c;
  const double R = pair.R;
  const double R5 = std::pow(R, 5);
  const double london = 3.0 * hbar * c / (2.0 * pi * R5 * R);
  TermUnits u;
  u.rest = -london * J.value;
  u.rest_error = london * J.error_estimate;
  u.per_a2t2 = 4.0 / (9.0 * c * c) * london * J.value;
  u.per_a2t2_error = 4.0 / (9.0 * c * c) * london * J.error_estimate;
  u.per_a2t = hbar / (pi * c * c * R5) * J.value;
  u.per_a2t_error = hbar / (pi * c * c * R5) * J.error_estimate;
  u.converged = J.converged;
  auto e = assemble(pair, settings, u);
  if (e.validity.regime != Regime::near) e.validity.zone_mismatch = true;
  return e;
}

EnergyBreakdown far_zone_energy(const AtomPair& pair, FarForm form,
                                const Settings& settings) {
  check_pair(pair, settings);
  const auto n = norms(pair, settings);
  TermUnits u;
  if (form == FarForm::closed) {
    u.rest = -n.rest * 23.0 / 4.0;
    u.per_a2t = n.a2t * 11.0 / 8.0;
    u.per_a2t2 = n.a2t2 * 7.0 / 24.0;
  } else {
    const auto& spec = settings.quadrature;
    const auto rest = quad::integrate_oscillatory(rest_real, 1.0, spec);
    const auto lin = quad::integrate_oscillatory(a2t_real, 1.0, spec);
    const auto quadr = quad::integrate_oscillatory(a2t2_real, 1.0, spec);
    u.rest = -n.rest * rest.value;
    u.rest_error = n.rest * rest.error_estimate;
    u.per_a2t = -n.a2t * lin.value / 2.0;
    u.per_a2t_error = n.a2t * lin.error_estimate / 2.0;
    u.per_a2t2 = -n.a2t2 * quadr.value / 6.0;
    u.per_a2t2_error = n.a2t2 * quadr.error_estimate / 6.0;
    u.converged = rest.converged && lin.converged && quadr.converged;
  }
  auto e = assemble(pair, settings, u);
  if (e.validity.regime != Regime::far) e.validity.zone_mismatch = true;
  return e;
}

EnergyBreakdown mode_contraction_energy(const AtomPair& pair,
                                        const Settings& settings) {
  check_pair(pair, settings);
  require_static(pair, "mode_contraction_energy");
  const auto n = norms(pair, settings);
  const auto& spec = settings.quadrature;

  // Everything in y = kR with R = 1; the R powers sit in the norms.
  enum Piece { rest, linear, quadratic };
  auto contraction = [](Piece piece) {
    return [piece](double y) {
      const auto terms = tensor::closed_average_terms(y, 1.0);
      const Mat3& V = piece == rest ? terms.rest
                      : piece == linear ? terms.linear
                                        : terms.quadratic;
      return mode_kernel(y, 1.0).cwiseProduct(V).sum() * y * y * y;
    };
  };
  const auto r = quad::integrate_oscillatory(contraction(rest), 1.0, spec);
  const auto l = quad::integrate_oscillatory(contraction(linear), 1.0, spec);
  const auto q = quad::integrate_oscillatory(contraction(quadratic), 1.0, spec);

  TermUnits u;
  u.rest = n.rest * r.value;
  u.rest_error = n.rest * r.error_estimate;
  u.per_a2t = n.a2t * l.value;
  u.per_a2t_error = n.a2t * l.error_estimate;
  u.per_a2t2 = n.a2t2 * q.value;
  u.per_a2t2_error = n.a2t2 * q.error_estimate;
  u.converged = r.converged && l.converged && q.converged;
  return assemble(pair, settings, u);
}

void assess(ConsistencyReport& report) {
  const double tol = report.tolerance;
  auto close = [tol](double value, double expected) {
    return std::abs(value - expected) <= tol * std::abs(expected);
  };
  auto check = [&](CoefficientComparison& cmp) {
    cmp.consistent = close(cmp.imaginary_axis, cmp.expected) &&
                     close(cmp.real_axis, cmp.expected) &&
                     close(cmp.contraction, cmp.expected) &&
                     close(cmp.imaginary_axis, cmp.real_axis);
  };
  check(report.rest);
  check(report.a2t);
  report.a2t2_production_matches = close(report.a2t2_production, 27.0 / 24.0);
  report.a2t2_regulated_matches = close(report.a2t2_regulated, 7.0 / 24.0) &&
                                  close(report.a2t2_contraction, 7.0 / 24.0);
  report.a2t2_ratio = report.a2t2_production / report.a2t2_regulated;
  report.a2t2_discrepancy =
      !close(report.a2t2_production, report.a2t2_regulated);
  report.ok = report.rest.consistent && report.a2t.consistent;
}

ConsistencyReport consistency_report(const AtomPair& pair,
                                     const Settings& settings,
                                     double tolerance) {
  require_static(pair, "consistency_report");
  const auto production = accelerated_energy(pair, settings);
  const auto regulated = far_zone_energy(pair, FarForm::integral, settings);
  const auto contracted = mode_contraction_energy(pair, settings);

  ConsistencyReport report;
  report.tolerance = tolerance;
  report.rest = {23.0 / 4.0, production.coefficients.rest,
                 regulated.coefficients.rest, contracted.coefficients.rest, false};
  report.a2t = {11.0 / 8.0, production.coefficients.a2t,
                regulated.coefficients.a2t, contracted.coefficients.a2t, false};
  report.a2t2_production = production.coefficients.a2t2;
  report.a2t2_regulated = regulated.coefficients.a2t2;
  report.a2t2_contraction = contracted.coefficients.a2t2;
  report.probe = production.validity;
  assess(report);
  return report;
}

double unruh_temperature(const kinematics::Trajectory& traj,
                         const Constants& constants) {
  return constants.hbar * traj.acceleration() /
         (2.0 * pi * traj.light_speed() * constants.k_B);
}

} // namespace vdwaccel::energy
