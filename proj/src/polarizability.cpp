#include "vdwaccel/polarizability.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vdwaccel/error.hpp"

namespace vdwaccel {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view context) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    throw Error(ErrorCode::invalid_argument,
                "cannot parse number '" + std::string(text) + "' in " +
                    std::string(context));
  return value;
}

// Fritsch-Carlson slopes; zero at local extrema keeps each cubic monotone.
std::vector<double> monotone_slopes(const std::vector<double>& x,
                                    const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> secant(n - 1), slope(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    secant[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  slope.front() = secant.front();
  slope.back() = secant.back();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (secant[i - 1] * secant[i] <= 0.0) continue;
    const double h0 = x[i] - x[i - 1];
    const double h1 = x[i + 1] - x[i];
    const double w1 = 2.0 * h1 + h0;
    const double w2 = h1 + 2.0 * h0;
    slope[i] = (w1 + w2) / (w1 / secant[i - 1] + w2 / secant[i]);
  }
  // Endpoint secants can overshoot next to a flat segment.
  if (n > 2 && secant[0] * secant[1] <= 0.0) slope.front() = 0.0;
  if (n > 2 && secant[n - 2] * secant[n - 3] <= 0.0) slope.back() = 0.0;
  return slope;
}

} // namespace

PolarizabilityModel PolarizabilityModel::static_model(double alpha0) {
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0))
    throw Error(ErrorCode::invalid_argument, "static polarizability must be > 0");
  PolarizabilityModel m;
  m.variant_ = Variant::constant;
  m.alpha0_ = alpha0;
  return m;
}

PolarizabilityModel PolarizabilityModel::lorentz(double alpha0, double k0) {
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0))
    throw Error(ErrorCode::invalid_argument, "static polarizability must be > 0");
  if (!(k0 > 0.0) || !std::isfinite(k0))
    throw Error(ErrorCode::invalid_argument, "resonance wavenumber must be > 0");
  PolarizabilityModel m;
  m.variant_ = Variant::lorentz;
  m.alpha0_ = alpha0;
  m.k0_ = k0;
  return m;
}

PolarizabilityModel PolarizabilityModel::tabulated(std::vector<double> u,
                                                   std::vector<double> alpha) {
  if (u.size() != alpha.size() || u.size() < 2)
    throw Error(ErrorCode::invalid_argument,
                "polarizability table needs at least two (u, alpha) rows");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!std::isfinite(u[i]) || !std::isfinite(alpha[i]) || u[i] < 0.0 ||
        alpha[i] < 0.0)
      throw Error(ErrorCode::invalid_argument,
                  "polarizability table entries must be finite and >= 0");
    if (i > 0 && !(u[i] > u[i - 1]))
      throw Error(ErrorCode::invalid_argument,
                  "polarizability table grid must be strictly increasing");
  }
  if (!(alpha.front() > 0.0))
    throw Error(ErrorCode::invalid_argument,
                "polarizability table must start with alpha > 0");
  PolarizabilityModel m;
  m.variant_ = Variant::tabulated;
  m.alpha0_ = alpha.front();
  m.slopes_ = monotone_slopes(u, alpha);
  m.grid_ = std::move(u);
  m.values_ = std::move(alpha);
  return m;
}

PolarizabilityModel PolarizabilityModel::from_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::io, "cannot open polarizability table " + path.string());
  std::string line;
  bool header_seen = false;
  std::vector<double> u, alpha;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!header_seen) {
      if (text != "u_cm^-1,alpha_cm^3")
        throw Error(ErrorCode::io, path.string() +
                                       ": expected header 'u_cm^-1,alpha_cm^3'");
      header_seen = true;
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
      throw Error(ErrorCode::io,
                  path.string() + ":" + std::to_string(line_no) + ": expected two columns");
    const std::string where = path.string() + ":" + std::to_string(line_no);
    u.push_back(parse_number(text.substr(0, comma), where));
    alpha.push_back(parse_number(text.substr(comma + 1), where));
  }
  if (!header_seen)
    throw Error(ErrorCode::io, path.string() + ": empty polarizability table");
  auto m = tabulated(std::move(u), std::move(alpha));
  m.source_ = path.string();
  return m;
}

PolarizabilityModel PolarizabilityModel::parse(std::string_view spec) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::invalid_argument,
                "model must be static:A0, lorentz:A0:K0 or table:PATH");
  const auto kind = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (kind == "static") return static_model(parse_number(rest, "static model"));
  if (kind == "lorentz") {
    const auto sep = rest.find(':');
    if (sep == std::string_view::npos)
      throw Error(ErrorCode::invalid_argument, "lorentz model needs A0:K0");
    return lorentz(parse_number(rest.substr(0, sep), "lorentz model"),
                   parse_number(rest.substr(sep + 1), "lorentz model"));
  }
  if (kind == "table") return from_csv(std::filesystem::path(std::string(rest)));
  throw Error(ErrorCode::invalid_argument,
              "unknown model kind '" + std::string(kind) + "'");
}

double PolarizabilityModel::eval_imag(double u) const {
  if (!(u >= 0.0))
    throw Error(ErrorCode::out_of_domain, "alpha(iu) requires u >= 0");
  switch (variant_) {
    case Variant::constant:
      return alpha0_;
    case Variant::lorentz: {
      const double r = u / k0_;
      return alpha0_ / (1.0 + r * r);
    }
    case Variant::tabulated: {
      if (u <= grid_.front()) return values_.front();
      if (u >= grid_.back()) {
        const double r = grid_.back() / u;
        return values_.back() * r * r;
      }
      const auto hi = static_cast<std::size_t>(
          std::upper_bound(grid_.begin(), grid_.end(), u) - grid_.begin());
      const std::size_t lo = hi - 1;
      const double h = grid_[hi] - grid_[lo];
      const double s = (u - grid_[lo]) / h;
      const double s2 = s * s, s3 = s2 * s;
      return (2 * s3 - 3 * s2 + 1) * values_[lo] + (s3 - 2 * s2 + s) * h * slopes_[lo] +
             (-2 * s3 + 3 * s2) * values_[hi] + (s3 - s2) * h * slopes_[hi];
    }
  }
  return alpha0_;
}

double PolarizabilityModel::eval_real(double k) const {
  if (!(k >= 0.0))
    throw Error(ErrorCode::out_of_domain, "alpha(k) requires k >= 0");
  switch (variant_) {
    case Variant::constant:
      return alpha0_;
    case Variant::lorentz: {
      const double r = k / k0_;
      const double denom = 1.0 - r * r;
      if (std::abs(denom) < 1e-12)
        throw Error(ErrorCode::resonance_pole,
                    "alpha(k) evaluated on the resonance k = k0");
      return alpha0_ / denom;
    }
    case Variant::tabulated:
      break;
  }
  throw Error(ErrorCode::unsupported_model,
              "tabulated polarizabilities are defined on the imaginary axis only");
}

std::optional<double> PolarizabilityModel::characteristic_wavenumber() const {
  switch (variant_) {
    case Variant::constant:
      return std::nullopt;
    case Variant::lorentz:
      return k0_;
    case Variant::tabulated:
      for (std::size_t i = 0; i < grid_.size(); ++i)
        if (values_[i] <= 0.5 * alpha0_ && grid_[i] > 0.0) return grid_[i];
      return grid_.back() > 0.0 ? std::optional<double>(grid_.back()) : std::nullopt;
  }
  return std::nullopt;
}

std::string PolarizabilityModel::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (variant_) {
    case Variant::constant: os << "static:" << alpha0_; break;
    case Variant::lorentz: os << "lorentz:" << alpha0_ << ':' << k0_; break;
    case Variant::tabulated:
      os << "table:" << (source_.empty() ? "<memory>" : source_) << " ("
         << grid_.size() << " rows)";
      break;
  }
  return os.str();
}

} // namespace vdwaccel
