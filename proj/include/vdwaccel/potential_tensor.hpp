#pragma once

#include <cstddef>

#include "vdwaccel/kinematics.hpp"
#include "vdwaccel/linalg.hpp"

namespace vdwaccel::tensor {

/// One field mode seen by the pair. The separation R lies along z and the
/// common acceleration along x; omega = c k.
struct ModeContext {
  double k;
  double R;
  double t;
  kinematics::Trajectory traj;

  double omega() const noexcept { return traj.light_speed() * k; }
};

/// A = cos(wt) cos(w(t - R/c)),  B = cos(wt) sin(w(t - R/c)).
struct ModeFunctions {
  double A;
  double B;
};

ModeFunctions mode_functions(const ModeContext& ctx);

/// Co-moving potential tensor at the instant ctx.t, built with the
/// nonrelativistic beta and gamma and including the A<->B exchange factor 2.
Mat3 v_tilde(const ModeContext& ctx);

struct AveragedTensor {
  Mat3 value;
  double error_estimate;  ///< max-norm Richardson estimate of the Simpson error
  std::size_t samples;
  bool short_window;      ///< omega t < 50: the long-time closed form does not apply
};

/// Minimum number of samples per oscillation period 2 pi / omega.
inline constexpr double min_samples_per_period = 40.0;

/// (1/t) * integral_0^t v_tilde(t') dt' with composite Simpson on `samples`
/// uniform intervals (rounded up to a multiple of 4). Throws insufficient_sampling if
/// the grid is coarser than 40 points per period.
AveragedTensor time_average_numeric(const ModeContext& ctx, std::size_t samples);

/// Samples needed for `per_period` points per oscillation over [0, t].
std::size_t samples_for(const ModeContext& ctx, double per_period = 64.0);

/// Acceleration correction to the averaged tensor. Z11 = 0 and only the
/// diagonal is populated.
Mat3 z_tensor(const ModeContext& ctx);

/// Closed-form long-time average:
///   (1 + a^2 t^2 / 6c^2) (1/R^3) { T [cos kR + kR sin kR] - S k^2 R^2 cos kR } + Z
/// with T = diag(1,1,-2), S = diag(1,1,0).
Mat3 time_average_closed(const ModeContext& ctx);

/// time_average_closed split by its dependence on (a, t):
///   <V> = rest + (a^2 t / c^3) linear + (a^2 t^2 / c^2) quadratic.
/// `quadratic` includes the rest/6 part coming from the average of gamma.
struct ClosedAverageTerms {
  Mat3 rest;
  Mat3 linear;
  Mat3 quadratic;
};

ClosedAverageTerms closed_average_terms(double k, double R);

/// Max |difference| over the diagonal, the entries the closed form defines.
double diagonal_max_difference(const Mat3& lhs, const Mat3& rhs);

} // namespace vdwaccel::tensor
