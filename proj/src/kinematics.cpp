#include "vdwaccel/kinematics.hpp"

#include <cmath>
#include <string>

#include "vdwaccel/error.hpp"

namespace vdwaccel::kinematics {

namespace {

void require_accelerating(const Trajectory& traj, const char* what) {
  if (traj.inertial())
    throw Error(ErrorCode::degenerate_acceleration,
                std::string(what) + ": undefined for a = 0, use lab time");
}

// x - arctan(x), accurate for small x where the difference cancels.
double x_minus_arctan(double x) {
  if (std::abs(x) >= 0.1) return x - std::atan(x);
  const double x2 = x * x;
  double term = x * x2;  // x^3
  double sum = 0.0;
  for (int n = 1; n < 12; ++n) {
    const double contrib = term / (2 * n + 1);
    sum += (n % 2 == 1) ? contrib : -contrib;
    term *= x2;
  }
  return sum;
}

} // namespace

Trajectory::Trajectory(double acceleration, double light_speed)
    : a_(acceleration), c_(light_speed) {
  if (!(light_speed > 0.0) || !std::isfinite(light_speed))
    throw Error(ErrorCode::invalid_argument, "speed of light must be > 0");
  if (!(acceleration >= 0.0) || !std::isfinite(acceleration))
    throw Error(ErrorCode::invalid_argument, "acceleration must be >= 0");
}

double position_lab(const Trajectory& traj, double t) {
  if (traj.inertial()) return 0.0;
  const double a = traj.acceleration();
  const double x = a * t / traj.light_speed();
  // (c^2/a)(sqrt(1+x^2) - 1) without the cancellation at small x.
  return a * t * t / (std::sqrt(1.0 + x * x) + 1.0);
}

double position_proper(const Trajectory& traj, double tau) {
  require_accelerating(traj, "position_proper");
  const double c = traj.light_speed();
  const double a = traj.acceleration();
  const double half = std::sinh(0.5 * a * tau / c);
  return 2.0 * c * c / a * half * half;
}

double lab_time_from_proper(const Trajectory& traj, double tau) {
  require_accelerating(traj, "lab_time_from_proper");
  const double c = traj.light_speed();
  const double a = traj.acceleration();
  return c / a * std::sinh(a * tau / c);
}

double proper_time_from_lab(const Trajectory& traj, double t) {
  require_accelerating(traj, "proper_time_from_lab");
  const double c = traj.light_speed();
  const double a = traj.acceleration();
  return c / a * std::asinh(a * t / c);
}

double beta(const Trajectory& traj, double t, Motion mode) {
  const double x = traj.acceleration() * t / traj.light_speed();
  if (mode == Motion::nonrelativistic) return x;
  return x / std::sqrt(1.0 + x * x);
}

double gamma(const Trajectory& traj, double t, Motion mode) {
  const double x = traj.acceleration() * t / traj.light_speed();
  if (mode == Motion::nonrelativistic) return 1.0 + 0.5 * x * x;
  return std::sqrt(1.0 + x * x);
}

SourceDerivatives source_derivatives(const Trajectory& traj, double t,
                                     Motion mode) {
  const double a = traj.acceleration();
  if (mode == Motion::nonrelativistic) return {a * t, a, 0.0};
  const double c = traj.light_speed();
  const double x = a * t / c;
  const double s = 1.0 + x * x;
  const double root = std::sqrt(s);
  return {a * t / root, a / (s * root), -3.0 * a * a * a * t / (c * c * s * s * root)};
}

double effective_distance(const Trajectory& traj, double rho, double t) {
  if (!(rho > 0.0))
    throw Error(ErrorCode::negative_separation,
                "effective_distance: rho must be > 0");
  if (!(t >= 0.0))
    throw Error(ErrorCode::out_of_domain, "effective_distance: t must be >= 0");
  if (traj.inertial()) return rho;
  const double c = traj.light_speed();
  const double a = traj.acceleration();
  return rho + c * c / a * x_minus_arctan(a * t / c);
}

} // namespace vdwaccel::kinematics
