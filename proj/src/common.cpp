#include "heatswitch/common.hpp"

#include <cmath>

namespace heatswitch {

std::string_view to_string(Phase p) noexcept {
  return p == Phase::Charging ? "charging" : "discharging";
}

std::string_view to_string(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TargetUnreachable: return "TargetUnreachable";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NegativeGap: return "NegativeGap";
    case ErrorCode::SingularPivot: return "SingularPivot";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

void PhysicalParams::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::ValidationError, msg); };
  if (!std::isfinite(diffusivity) || !(diffusivity > 0.0)) fail("a > 0 required");
  if (!std::isfinite(u0) || !(u0 > 0.0)) fail("u0 > 0 required");
  if (!(lower_mass > 0.0)) fail("m > 0 required");
  if (!(lower_mass < upper_mass)) fail("m < M required");
  if (!(upper_mass < u0)) fail("M < u0 required");
}

}  // namespace heatswitch
