#pragma once

#include <stdexcept>
#include <string>

namespace vdwaccel {

enum class ErrorCode {
  invalid_argument,
  out_of_domain,
  degenerate_acceleration,
  negative_separation,
  zero_distance,
  non_unit_vector,
  resonance_pole,
  superluminal_boost,
  insufficient_sampling,
  non_convergence,
  divergence,
  unsupported_model,
  io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace vdwaccel
