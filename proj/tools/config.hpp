#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace vdwcli {

/// Bad input: unreadable or malformed config, invalid grid, unknown model.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat `section.key -> value` view of an INI-style file. Keys before the
/// first section header have no prefix. `#` and `;` start comments.
class IniFile {
public:
  static IniFile load(const std::string& path);
  static IniFile parse(const std::string& text, const std::string& origin);

  std::optional<std::string> get(const std::string& key) const;
  std::optional<double> number(const std::string& key) const;
  std::optional<std::size_t> count(const std::string& key) const;

  /// Throws on any key that was never looked up.
  void reject_unused() const;

private:
  std::map<std::string, std::string> values_;
  mutable std::map<std::string, bool> used_;
  std::string origin_;
};

enum class Spacing { linear, log };

struct Grid {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;
  Spacing spacing = Spacing::linear;

  /// Checks count >= 1, finiteness, stop > start when count > 1, and
  /// start > 0 for log spacing. `name` prefixes error messages.
  void validate(const char* name, bool allow_zero) const;
  double at(std::size_t i) const;
};

struct RunConfig {
  std::string alpha_A = "static:1";
  std::string alpha_B = "static:1";
  Grid R{10.0, 10.0, 1, Spacing::linear};
  Grid t{0.0, 0.0, 1, Spacing::linear};
  double a = 0.0;
  std::string units = "natural";
  std::optional<double> rel_tol;
  std::string out;  // empty: stdout
  std::string axis = "imaginary";
  std::string form = "closed";
  double k = 1.0;
  std::size_t samples = 0;
  double tolerance = 0.01;
  std::size_t threads = 1;

  /// Apply every key present in the file.
  void apply(const IniFile& ini);
  void validate() const;
};

Spacing parse_spacing(const std::string& s);

} // namespace vdwcli
