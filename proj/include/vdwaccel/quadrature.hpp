#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace vdwaccel::quad {

using Integrand = std::function<double(double)>;

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-30;
  std::size_t max_subdivisions = 200;

  // Abel regulator for the oscillatory engine, in units of 2R:
  // delta_n = initial_regulator * 2^-n, n = 0 .. regulator_levels-1.
  double initial_regulator = 0.5;
  std::size_t regulator_levels = 8;
  // Convergence target for the extrapolated limit, relative to the
  // magnitude of the regulated values.
  double extrapolation_tol = 1e-3;

  std::vector<double> regulator_sequence() const;
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (7/15) on a finite interval, global subdivision of
/// the worst segment.
QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureSpec& spec);

/// integral_0^inf f(u) du for f decaying on the scale u ~ `scale`
/// (exponentially or at least like u^-2). Works in x = u/scale on
/// [0, 64] plus the tail mapped by x = 64/s. Throws non_convergence when
/// max_subdivisions is exhausted.
QuadratureResult integrate_damped(const Integrand& f, double scale,
                                  const QuadratureSpec& spec);

/// Abel-regularized integral lim_{eps->0+} integral_0^inf f(k) e^{-eps k} dk
/// for f of the form polynomial(k) * sin/cos(2kR). The regulated integrals are
/// computed on a shared node grid and Richardson-extrapolated (order 3) in
/// eps. Throws divergence if the extrapolated sequence does not settle.
QuadratureResult integrate_oscillatory(const Integrand& f, double R,
                                       const QuadratureSpec& spec);

} // namespace vdwaccel::quad
