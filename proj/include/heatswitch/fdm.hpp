#pragma once

// Backward-Euler finite differences for u_t = a u_xx on a uniform grid, with
// the boundary value switched by the trapezoidal mass crossing M or m.

#include <span>
#include <string>
#include <vector>

#include "heatswitch/common.hpp"
#include "heatswitch/records.hpp"
#include "heatswitch/switching.hpp"

namespace heatswitch {

struct FdmConfig {
  int J = 50;          // space panels, dx = 1/J
  double dt = 0.1;
  double T = 20.0;
  int snapshot_stride = 10;  // steps between profile snapshots

  double dx() const noexcept { return 1.0 / J; }
  /// a dt / dx^2
  double coefficient(double diffusivity) const noexcept { return diffusivity * dt * J * J; }
  long steps() const noexcept;

  void validate() const;

  bool operator==(const FdmConfig&) const = default;
};

struct FdmState {
  long step = 0;
  std::vector<double> U;  // J+1 nodes
  Phase phase = Phase::Charging;
  double mass = 0.0;
};

/// U = 0 in the interior, boundary nodes at u0, Charging. The stored mass is
/// that of the initial data, 0.
FdmState initial_state(const FdmConfig& cfg, const PhysicalParams& params);

/// Solves the tridiagonal system with sub-diagonal lower (lower[0] unused),
/// diagonal diag and super-diagonal upper (upper[n-1] unused). No pivoting.
/// Throws SingularPivot if an eliminated pivot is below 1e-300 in magnitude.
std::vector<double> thomas_solve(std::span<const double> lower, std::span<const double> diag,
                                 std::span<const double> upper, std::span<const double> rhs);

/// One implicit step with the current phase's boundary value.
FdmState fdm_step(const FdmState& state, const FdmConfig& cfg, const PhysicalParams& params);

/// (h/2) sum_{j=0}^{J-1} (U_j + U_{j+1}).
double trapezoid_mass(std::span<const double> U, double h);

struct FdmRun {
  Schedule schedule;
  std::vector<TraceRecord> trace;       // t = 0 and every step
  std::vector<ProfileSnapshot> profiles;
  std::vector<std::string> warnings;
  bool no_switch_before_horizon = false;
  // observed over every step, for invariant checks
  double min_value = 0.0;
  double max_value = 0.0;
  double max_asymmetry = 0.0;
};

/// Full relay-controlled run to T. A switch is recorded at the first grid time
/// whose mass is >= M (Charging) or <= m (Discharging); the new boundary value
/// is used from the next solve on.
FdmRun run_fdm_schedule(const FdmConfig& cfg, const PhysicalParams& params);

/// Independent runs, optionally spread over OpenMP threads. Results are in
/// input order and identical either way.
std::vector<FdmRun> run_fdm_sweep(std::span<const FdmConfig> configs,
                                  std::span<const PhysicalParams> params, bool parallel);

}  // namespace heatswitch
