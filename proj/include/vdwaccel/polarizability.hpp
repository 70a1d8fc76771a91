#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vdwaccel {

/// Isotropic dynamic polarizability of one atom, in cm^3 (or natural units).
///
/// - static:    alpha(k) = alpha0 everywhere.
/// - lorentz:   single undamped oscillator with resonance wavenumber k0,
///              alpha(iu) = alpha0 / (1 + u^2/k0^2).
/// - tabulated: alpha(iu) sampled on a strictly increasing u grid; monotone
///              cubic (Fritsch-Carlson) in between, constant below the grid
///              and u^-2 decay above it. Imaginary axis only.
class PolarizabilityModel {
public:
  enum class Variant { constant, lorentz, tabulated };

  static PolarizabilityModel static_model(double alpha0);
  static PolarizabilityModel lorentz(double alpha0, double k0);
  static PolarizabilityModel tabulated(std::vector<double> u,
                                       std::vector<double> alpha);

  /// Two-column CSV with header `u_cm^-1,alpha_cm^3`.
  static PolarizabilityModel from_csv(const std::filesystem::path& path);

  /// "static:A0" | "lorentz:A0:K0" | "table:PATH"
  static PolarizabilityModel parse(std::string_view spec);

  double eval_imag(double u) const;
  double eval_real(double k) const;

  Variant variant() const noexcept { return variant_; }
  bool is_static() const noexcept { return variant_ == Variant::constant; }

  /// alpha(0).
  double static_value() const noexcept { return alpha0_; }

  /// Wavenumber at which the response rolls off: k0 for lorentz, the first
  /// grid point where alpha(iu) <= alpha(0)/2 (or the last grid point) for
  /// tables, nothing for a static model.
  std::optional<double> characteristic_wavenumber() const;

  std::string describe() const;

private:
  PolarizabilityModel() = default;

  Variant variant_ = Variant::constant;
  double alpha0_ = 0.0;
  double k0_ = 0.0;
  std::vector<double> grid_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  std::string source_;
};

} // namespace vdwaccel
