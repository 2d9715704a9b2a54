#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heatswitch {

/// Which boundary value is active. Charging holds both ends at u0,
/// Discharging holds them at 0.
enum class Phase { Charging, Discharging };

constexpr Phase flipped(Phase p) noexcept {
  return p == Phase::Charging ? Phase::Discharging : Phase::Charging;
}

std::string_view to_string(Phase p) noexcept;

enum class ErrorCode {
  InvalidArgument,
  TargetUnreachable,
  NonConvergence,
  OutOfRange,
  NegativeGap,
  SingularPivot,
  ParseError,
  ValidationError,
  IndexMismatch,
  IoError,
};

std::string_view to_string(ErrorCode c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Physical parameters of the controlled problem u_t = a u_xx on (0,1).
struct PhysicalParams {
  double diffusivity = 1.0;
  double u0 = 1.0;
  double upper_mass = 0.0;  // M
  double lower_mass = 0.0;  // m

  /// Throws ValidationError unless 0 < m < M < u0 and a > 0.
  void validate() const;

  bool operator==(const PhysicalParams&) const = default;
};

}  // namespace heatswitch
