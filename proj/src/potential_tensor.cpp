#include "vdwaccel/potential_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vdwaccel/error.hpp"

namespace vdwaccel::tensor {

namespace {

using kinematics::Motion;

const Mat3 kT = Vec3(1.0, 1.0, -2.0).asDiagonal();
const Mat3 kS = Vec3(1.0, 1.0, 0.0).asDiagonal();
const Vec3 kAxis(0.0, 0.0, 1.0);

void require_separation(double R) {
  if (!(R > 0.0))
    throw Error(ErrorCode::zero_distance, "potential tensor requires R > 0");
}

// Z split into its a^2 t / c^3 and a^2 t^2 / c^2 parts (diagonal only).
struct ZParts {
  Mat3 linear = Mat3::Zero();
  Mat3 quadratic = Mat3::Zero();
};

ZParts z_parts(double k, double R) {
  const double x = k * R;
  const double c = std::cos(x), s = std::sin(x);
  // Bracket shared by Z22 (times T33) and Z33 (times T22).
  const double shared_linear = c / (2.0 * R * R);
  const double shared_quadratic = c / (3.0 * R * R * R) + k * s / (3.0 * R * R);
  ZParts z;
  z.linear(1, 1) = kT(2, 2) * shared_linear;
  z.quadratic(1, 1) = kT(2, 2) * shared_quadratic;
  z.linear(2, 2) = kT(1, 1) * shared_linear + kS(1, 1) * k * s / R;
  z.quadratic(2, 2) = kT(1, 1) * shared_quadratic - kS(1, 1) * k * k * c / (3.0 * R);
  return z;
}

Mat3 rest_average(double k, double R) {
  const double x = k * R;
  const double c = std::cos(x), s = std::sin(x);
  return (kT * (c + x * s) - kS * (x * x * c)) / (R * R * R);
}

} // namespace

ModeFunctions mode_functions(const ModeContext& ctx) {
  const double w = ctx.omega();
  const double carrier = std::cos(w * ctx.t);
  const double retarded = w * ctx.t - ctx.k * ctx.R;
  return {carrier * std::cos(retarded), carrier * std::sin(retarded)};
}

Mat3 v_tilde(const ModeContext& ctx) {
  require_separation(ctx.R);
  const double R = ctx.R;
  const double k = ctx.k;
  const double t = ctx.t;
  const double c = ctx.traj.light_speed();
  const double a = ctx.traj.acceleration();
  const double w = ctx.omega();
  const double b = kinematics::beta(ctx.traj, t, Motion::nonrelativistic);
  const double g = kinematics::gamma(ctx.traj, t, Motion::nonrelativistic);
  const auto [A, B] = mode_functions(ctx);

  const double static_part = -A / R + k * B;
  // Factors shared by the velocity-dependent terms of rows 2 and 3.
  const double axial = w * (k * A + B / R);
  const double near = (a / R) * (-(1.0 / c + t / R) * A + t * k * B);
  const double far = (a * w / (c * c)) * (w * t * A + 2.0 * B);

  Mat3 V;
  for (int j = 0; j < 3; ++j) {
    const double x_row =
        kT(0, j) / R * static_part + kS(0, j) * k * k * A +
        kAxis(j) * (a / (c * c)) *
            ((1.0 / R + w * k * t) * A + (w * t / R + 2.0 * k) * B);
    V(0, j) = -2.0 * g / R * x_row;

    // Row i in {y, z} picks up the boost of the magnetic field along
    // the z (for y) or y (for z) direction.
    for (int i = 1; i < 3; ++i) {
      const int partner = (i == 1) ? 2 : 1;
      const double sign = (i == 1) ? -1.0 : 1.0;
      double boosted = 0.0;
      for (int l = 0; l < 3; ++l) {
        boosted += kAxis(l) * levi_civita(partner, l, j) * axial +
                   kT(partner, l) * levi_civita(l, j, 0) * near +
                   kS(partner, l) * levi_civita(l, j, 0) * far;
      }
      const double row = kT(i, j) / R * static_part + kS(i, j) * k * k * A +
                         sign * (b / c) * boosted;
      V(i, j) = -2.0 * g / R * row;
    }
  }
  return V;
}

std::size_t samples_for(const ModeContext& ctx, double per_period) {
  const double periods = ctx.omega() * ctx.t / (2.0 * std::numbers::pi);
  const auto n = static_cast<std::size_t>(std::ceil(per_period * periods));
  return std::max<std::size_t>(n, 64);
}

AveragedTensor time_average_numeric(const ModeContext& ctx,
                                    std::size_t samples) {
  require_separation(ctx.R);
  if (!(ctx.t > 0.0))
    throw Error(ErrorCode::out_of_domain, "time average requires t > 0");
  const std::size_t n = (samples + 3) / 4 * 4;
  const double periods = ctx.omega() * ctx.t / (2.0 * std::numbers::pi);
  if (static_cast<double>(n) < min_samples_per_period * periods)
    throw Error(ErrorCode::insufficient_sampling,
                "time average needs at least 40 samples per oscillation period");

  const double h = ctx.t / static_cast<double>(n);
  Mat3 fine = Mat3::Zero();
  Mat3 coarse = Mat3::Zero();
  ModeContext at = ctx;
  for (std::size_t i = 0; i <= n; ++i) {
    at.t = h * static_cast<double>(i);
    const Mat3 v = v_tilde(at);
    const double wf = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    fine += wf * v;
    if (i % 2 == 0) {
      const std::size_t j = i / 2;
      const double wc = (j == 0 || j == n / 2) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      coarse += wc * v;
    }
  }
  fine *= h / 3.0 / ctx.t;
  coarse *= 2.0 * h / 3.0 / ctx.t;

  AveragedTensor out;
  out.value = fine;
  out.error_estimate = (fine - coarse).cwiseAbs().maxCoeff() / 15.0;
  out.samples = n;
  out.short_window = ctx.omega() * ctx.t < 50.0;
  return out;
}

Mat3 z_tensor(const ModeContext& ctx) {
  require_separation(ctx.R);
  const double c = ctx.traj.light_speed();
  const double a = ctx.traj.acceleration();
  const auto z = z_parts(ctx.k, ctx.R);
  return (a * a * ctx.t / (c * c * c)) * z.linear +
         (a * a * ctx.t * ctx.t / (c * c)) * z.quadratic;
}

Mat3 time_average_closed(const ModeContext& ctx) {
  require_separation(ctx.R);
  const double c = ctx.traj.light_speed();
  const double a = ctx.traj.acceleration();
  const double growth = 1.0 + a * a * ctx.t * ctx.t / (6.0 * c * c);
  return growth * rest_average(ctx.k, ctx.R) + z_tensor(ctx);
}

ClosedAverageTerms closed_average_terms(double k, double R) {
  require_separation(R);
  const auto z = z_parts(k, R);
  const Mat3 rest = rest_average(k, R);
  return {rest, z.linear, rest / 6.0 + z.quadratic};
}

double diagonal_max_difference(const Mat3& lhs, const Mat3& rhs) {
  return (lhs.diagonal() - rhs.diagonal()).cwiseAbs().maxCoeff();
}

} // namespace vdwaccel::tensor
