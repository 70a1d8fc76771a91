#include "vdwaccel/error.hpp"

namespace vdwaccel {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::out_of_domain: return "argument out of domain";
    case ErrorCode::degenerate_acceleration: return "degenerate acceleration";
    case ErrorCode::negative_separation: return "non-positive separation";
    case ErrorCode::zero_distance: return "zero distance";
    case ErrorCode::non_unit_vector: return "non-unit direction vector";
    case ErrorCode::resonance_pole: return "resonance pole";
    case ErrorCode::superluminal_boost: return "superluminal boost";
    case ErrorCode::insufficient_sampling: return "insufficient sampling";
    case ErrorCode::non_convergence: return "quadrature did not converge";
    case ErrorCode::divergence: return "regulated integral does not settle";
    case ErrorCode::unsupported_model: return "unsupported polarizability model";
    case ErrorCode::io: return "i/o error";
  }
  return "unknown error";
}

} // namespace vdwaccel
