#pragma once

// Truncated odd-mode series for the symmetric boundary-controlled heat
// equation. Each odd sine mode (2k+1) carries a normalized response psi in
// [0,1] that relaxes toward 1 while the boundary holds u0 and toward 0 while
// it holds 0. Mass and profile are fixed linear functionals of the psi's.

#include <cstddef>
#include <span>
#include <vector>

#include "heatswitch/common.hpp"

namespace heatswitch {

struct SeriesConfig {
  int num_modes = 64;
  double crossing_tol = 1e-10;
  double mass_tail_tol = 1e-2;

  /// Throws ValidationError on bad fields or when the rigorous relative mass
  /// tail of num_modes exceeds mass_tail_tol.
  void validate() const;

  bool operator==(const SeriesConfig&) const = default;
};

struct ModeState {
  int k = 0;
  double lambda_sq = 0.0;  // a (2k+1)^2 pi^2
  double psi = 0.0;
};

/// theta(x,t) = 1/2 + sum_{n=1}^{num_terms} exp(-n^2 pi^2 t) cos(n pi x).
/// Throws InvalidArgument for t <= 0 or num_terms < 1.
double theta_eval(double x, double t, int num_terms);

/// Geometric bound on |theta - theta_eval(x, t, num_terms)|.
double theta_tail_bound(double t, int num_terms);

/// num_modes modes with psi = 0 (u(x,0) = 0).
std::vector<ModeState> make_modes(int num_modes, double diffusivity);

/// Exact evolution of one mode over dt with a constant boundary value.
ModeState mode_advance(const ModeState& state, Phase phase, double dt);

/// psi after dt without building a new state.
inline double psi_after(const ModeState& s, Phase phase, double decay) noexcept {
  return phase == Phase::Charging ? 1.0 + (s.psi - 1.0) * decay : s.psi * decay;
}

/// 8 / ((2k+1)^2 pi^2): fraction of u0 the mode contributes at psi = 1.
double mass_weight(int k) noexcept;

/// sum_{k<K} mass_weight(k); tends to 1.
double truncated_steady_fraction(int num_modes);

/// (8/pi^2) sum_{k>=K} (2k+1)^-2, computed from the closed form pi^2/8.
double relative_mass_tail(int num_modes);

double mass_eval(std::span<const ModeState> modes, const PhysicalParams& params);

/// Mass after every mode advances by dt in the given phase. Does not mutate.
double mass_after(std::span<const ModeState> modes, Phase phase, double dt,
                  const PhysicalParams& params);

/// dmu/dt at the current state for the given phase.
double mass_rate(std::span<const ModeState> modes, Phase phase, const PhysicalParams& params);

/// u(x) = u0 sum_k 4/((2k+1) pi) psi_k sin((2k+1) pi x). Zero at x = 0 and 1;
/// shows Gibbs ringing near the ends while psi differs from 0.
double profile_eval(std::span<const ModeState> modes, const PhysicalParams& params, double x);

}  // namespace heatswitch
