#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pia {

enum class ErrorCode {
  InvalidInput,
  InvalidPolygon,
  NotConvex,
  DegenerateInterior,
  Degenerate,
  GenerationFailed,
  Infeasible,
  Unbounded,
  NumericalBreakdown,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable error code. what() starts with the
/// code name, e.g. "NotConvex: polygon has a reflex vertex".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::DegenerateInterior: return "DegenerateInterior";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
  }
  return "Unknown";
}

}  // namespace pia
