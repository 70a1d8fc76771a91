#pragma once

namespace vdwaccel::kinematics {

/// Which form of the velocity factors to use. `nonrelativistic` keeps the
/// expansion to second order in at/c that the energy pipeline relies on.
enum class Motion { exact, nonrelativistic };

/// Hyperbolic worldline with proper acceleration `a` along x, starting at rest
/// at the origin. a = 0 is the inertial case.
class Trajectory {
public:
  Trajectory(double acceleration, double light_speed);

  double acceleration() const noexcept { return a_; }
  double light_speed() const noexcept { return c_; }
  bool inertial() const noexcept { return a_ == 0.0; }

private:
  double a_;
  double c_;
};

/// x(t) in the laboratory frame. Even in t; exactly 0 for a = 0.
double position_lab(const Trajectory& traj, double t);

/// x(tau) as a function of proper time. Requires a > 0.
double position_proper(const Trajectory& traj, double tau);

/// t(tau) = (c/a) sinh(a tau / c). Requires a > 0.
double lab_time_from_proper(const Trajectory& traj, double tau);

/// Inverse of lab_time_from_proper. Requires a > 0.
double proper_time_from_lab(const Trajectory& traj, double t);

double beta(const Trajectory& traj, double t, Motion mode);
double gamma(const Trajectory& traj, double t, Motion mode);

/// Velocity, acceleration and jerk of the source along x at lab time t.
struct SourceDerivatives {
  double velocity;
  double acceleration;
  double jerk;
};

SourceDerivatives source_derivatives(const Trajectory& traj, double t,
                                     Motion mode);

/// Distance covered by a light signal exchanged between two atoms separated
/// by rho (orthogonal to the motion) when received at time t:
///   rho + c (t - (c/a) arctan(a t / c)).
/// Grows like rho + a^2 t^3 / (3c) for small at/c.
double effective_distance(const Trajectory& traj, double rho, double t);

} // namespace vdwaccel::kinematics
