#include "heatswitch/series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "heatswitch/kernels.hpp"

namespace heatswitch {

using std::numbers::pi;

void SeriesConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::ValidationError, msg); };
  if (num_modes < 1) fail("K >= 1 required");
  if (!(crossing_tol > 0.0)) fail("crossing_tol > 0 required");
  if (!(mass_tail_tol > 0.0)) fail("mass_tail_tol > 0 required");
  const double tail = relative_mass_tail(num_modes);
  if (tail > mass_tail_tol) {
    fail("mass tail " + std::to_string(tail) + " of K = " + std::to_string(num_modes) +
         " exceeds mass_tail_tol");
  }
}

double theta_eval(double x, double t, int num_terms) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "theta_eval needs t > 0");
  if (num_terms < 1) throw Error(ErrorCode::InvalidArgument, "theta_eval needs num_terms >= 1");
  double sum = 0.0;
  // smallest terms first
  for (int n = num_terms; n >= 1; --n) {
    const double nn = static_cast<double>(n);
    sum += std::exp(-nn * nn * pi * pi * t) * std::cos(nn * pi * x);
  }
  return 0.5 + sum;
}

double theta_tail_bound(double t, int num_terms) {
  const double n1 = static_cast<double>(num_terms) + 1.0;
  const double lead = std::exp(-n1 * n1 * pi * pi * t);
  const double ratio = std::exp(-pi * pi * t * (2.0 * num_terms + 3.0));
  return lead / (1.0 - ratio);
}

std::vector<ModeState> make_modes(int num_modes, double diffusivity) {
  if (num_modes < 1) throw Error(ErrorCode::InvalidArgument, "num_modes >= 1 required");
  std::vector<ModeState> modes(static_cast<std::size_t>(num_modes));
  for (int k = 0; k < num_modes; ++k) {
    const double w = (2.0 * k + 1.0) * pi;
    modes[static_cast<std::size_t>(k)] = ModeState{k, diffusivity * w * w, 0.0};
  }
  return modes;
}

ModeState mode_advance(const ModeState& state, Phase phase, double dt) {
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "mode_advance needs dt > 0");
  ModeState next = state;
  next.psi = psi_after(state, phase, std::exp(-state.lambda_sq * dt));
  return next;
}

double mass_weight(int k) noexcept {
  const double w = (2.0 * k + 1.0) * pi;
  return 8.0 / (w * w);
}

double truncated_steady_fraction(int num_modes) {
  double sum = 0.0;
  for (int k = num_modes - 1; k >= 0; --k) sum += mass_weight(k);
  return sum;
}

double relative_mass_tail(int num_modes) {
  // sum_{k>=0} (2k+1)^-2 = pi^2/8, so the full weight sum is exactly 1
  return std::max(0.0, 1.0 - truncated_steady_fraction(num_modes));
}

double mass_eval(std::span<const ModeState> modes, const PhysicalParams& params) {
  return kernels::mass_serial(modes, params.u0);
}

double mass_after(std::span<const ModeState> modes, Phase phase, double dt,
                  const PhysicalParams& params) {
  double sum = 0.0;
  for (const auto& s : modes) {
    sum += mass_weight(s.k) * psi_after(s, phase, std::exp(-s.lambda_sq * dt));
  }
  return params.u0 * sum;
}

double mass_rate(std::span<const ModeState> modes, Phase phase, const PhysicalParams& params) {
  double sum = 0.0;
  for (const auto& s : modes) {
    const double dpsi = phase == Phase::Charging ? s.lambda_sq * (1.0 - s.psi) : -s.lambda_sq * s.psi;
    sum += mass_weight(s.k) * dpsi;
  }
  return params.u0 * sum;
}

double profile_eval(std::span<const ModeState> modes, const PhysicalParams& params, double x) {
  const double xs[1] = {x};
  double out[1] = {0.0};
  kernels::profile_grid_serial(modes, params.u0, xs, out);
  return out[0];
}

}  // namespace heatswitch
