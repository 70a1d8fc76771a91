#pragma once

namespace vdwaccel {

enum class UnitSystem { gaussian, natural };

/// Physical constants of one unit system. Gaussian values are CODATA 2018
/// in CGS (erg, cm, s, K); natural units set hbar = c = k_B = 1.
struct Constants {
  double hbar;
  double c;
  double k_B;

  static constexpr Constants gaussian() {
    return {1.054571817e-27, 2.99792458e10, 1.380649e-16};
  }
  static constexpr Constants natural() { return {1.0, 1.0, 1.0}; }
  static constexpr Constants of(UnitSystem u) {
    return u == UnitSystem::natural ? natural() : gaussian();
  }
};

} // namespace vdwaccel
