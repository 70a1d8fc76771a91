#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace vdwcli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

IniFile IniFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

IniFile IniFile::parse(const std::string& text, const std::string& origin) {
  IniFile ini;
  ini.origin_ = origin;
  std::istringstream in(text);
  std::string line, section;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto where = origin + ":" + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3)
        throw ConfigError(where + "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + "empty key");
    const auto full = section.empty() ? key : section + "." + key;
    if (ini.values_.count(full)) throw ConfigError(where + "duplicate key '" + full + "'");
    ini.values_[full] = value;
  }
  return ini;
}

std::optional<std::string> IniFile::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  used_[key] = true;
  return it->second;
}

std::optional<double> IniFile::number(const std::string& key) const {
  const auto s = get(key);
  if (!s) return std::nullopt;
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s->data(), s->data() + s->size(), v);
  if (ec != std::errc() || p != s->data() + s->size() || !std::isfinite(v))
    throw ConfigError(origin_ + ": '" + key + "' is not a finite number: " + *s);
  return v;
}

std::optional<std::size_t> IniFile::count(const std::string& key) const {
  const auto s = get(key);
  if (!s) return std::nullopt;
  long long v = 0;
  const auto [p, ec] = std::from_chars(s->data(), s->data() + s->size(), v);
  if (ec != std::errc() || p != s->data() + s->size() || v < 0)
    throw ConfigError(origin_ + ": '" + key + "' is not a non-negative integer: " + *s);
  return static_cast<std::size_t>(v);
}

void IniFile::reject_unused() const {
  for (const auto& [key, value] : values_)
    if (!used_.count(key)) throw ConfigError(origin_ + ": unknown key '" + key + "'");
}

Spacing parse_spacing(const std::string& s) {
  if (s == "linear") return Spacing::linear;
  if (s == "log") return Spacing::log;
  throw ConfigError("spacing must be 'linear' or 'log', got '" + s + "'");
}

void Grid::validate(const char* name, bool allow_zero) const {
  const std::string n = name;
  if (count < 1) throw ConfigError(n + " grid: count must be >= 1");
  if (!std::isfinite(start) || !std::isfinite(stop))
    throw ConfigError(n + " grid: bounds must be finite");
  if (allow_zero ? start < 0.0 : !(start > 0.0))
    throw ConfigError(n + (allow_zero ? " grid: start must be >= 0" : " grid: start must be > 0"));
  if (count > 1 && !(stop > start))
    throw ConfigError(n + " grid: stop must exceed start when count > 1");
  if (spacing == Spacing::log && !(start > 0.0))
    throw ConfigError(n + " grid: log spacing needs start > 0");
}

double Grid::at(std::size_t i) const {
  if (count == 1) return start;
  if (i + 1 == count) return stop;
  const double f = static_cast<double>(i) / static_cast<double>(count - 1);
  if (spacing == Spacing::log) return start * std::pow(stop / start, f);
  return start + (stop - start) * f;
}

void RunConfig::apply(const IniFile& ini) {
  auto atom = [&](const std::string& sec, std::string& spec) {
    if (auto m = ini.get(sec + ".model")) {
      spec = *m;
      return;
    }
    const auto variant = ini.get(sec + ".variant");
    if (!variant) return;
    std::ostringstream s;
    s.precision(17);
    if (*variant == "static") {
      const auto a0 = ini.number(sec + ".alpha0");
      if (!a0) throw ConfigError(sec + ": static model needs alpha0");
      s << "static:" << *a0;
    } else if (*variant == "lorentz") {
      const auto a0 = ini.number(sec + ".alpha0");
      const auto k0 = ini.number(sec + ".k0");
      if (!a0 || !k0) throw ConfigError(sec + ": lorentz model needs alpha0 and k0");
      s << "lorentz:" << *a0 << ":" << *k0;
    } else if (*variant == "table") {
      const auto path = ini.get(sec + ".path");
      if (!path) throw ConfigError(sec + ": table model needs path");
      s << "table:" << *path;
    } else {
      throw ConfigError(sec + ": unknown variant '" + *variant + "'");
    }
    spec = s.str();
  };
  atom("atomA", alpha_A);
  atom("atomB", alpha_B);

  auto grid = [&](const std::string& sec, Grid& g) {
    const auto start = ini.number(sec + ".start");
    if (start) g.start = *start;
    if (auto v = ini.number(sec + ".stop")) g.stop = *v;
    else if (start) g.stop = g.start;
    if (auto v = ini.count(sec + ".count")) g.count = *v;
    if (auto v = ini.get(sec + ".spacing")) g.spacing = parse_spacing(*v);
  };
  grid("R", R);
  grid("t", t);

  if (auto v = ini.number("motion.a")) a = *v;
  if (auto v = ini.get("units")) units = *v;
  if (auto v = ini.get("out")) out = *v;
  if (auto v = ini.count("threads")) threads = *v;
  if (auto v = ini.number("quadrature.rel_tol")) rel_tol = *v;
  if (auto v = ini.get("rest.axis")) axis = *v;
  if (auto v = ini.get("far.form")) form = *v;
  if (auto v = ini.number("tensor.k")) k = *v;
  if (auto v = ini.count("tensor.samples")) samples = *v;
  if (auto v = ini.number("consistency.tolerance")) tolerance = *v;
  ini.reject_unused();
}

void RunConfig::validate() const {
  R.validate("R", false);
  t.validate("t", true);
  if (!std::isfinite(a) || a < 0.0) throw ConfigError("a must be finite and >= 0");
  if (units != "gaussian" && units != "natural")
    throw ConfigError("units must be 'gaussian' or 'natural'");
  if (rel_tol && !(*rel_tol > 0.0 && *rel_tol < 1.0))
    throw ConfigError("rel-tol must lie in (0, 1)");
  if (axis != "imaginary" && axis != "real")
    throw ConfigError("axis must be 'imaginary' or 'real'");
  if (form != "closed" && form != "integral")
    throw ConfigError("form must be 'closed' or 'integral'");
  if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError("k must be > 0");
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
  if (threads < 1) throw ConfigError("threads must be >= 1");
}

} // namespace vdwcli
