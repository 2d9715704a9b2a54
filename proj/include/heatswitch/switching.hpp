#pragma once

// Relay (two-threshold) control on top of the mode series: the boundary holds
// u0 until the mass reaches M, then 0 until it falls to m, and so on. Switch
// instants are found by root-finding on the exact per-phase mass curve.

#include <optional>
#include <span>
#include <vector>

#include "heatswitch/common.hpp"
#include "heatswitch/records.hpp"
#include "heatswitch/series.hpp"

namespace heatswitch {

struct SwitchEvent {
  int n = 0;
  double t = 0.0;
  double gap = 0.0;  // t_n - t_{n-1}, with t_0 = 0
  double mass_at_switch = 0.0;
  Phase ended_phase = Phase::Charging;

  bool operator==(const SwitchEvent&) const = default;
};

/// Stop at whichever comes first. At least one must be set.
struct StopRule {
  std::optional<double> final_time;
  std::optional<int> max_switches;

  void validate() const;

  static StopRule horizon(double t) { return {t, std::nullopt}; }
  static StopRule switches(int n) { return {std::nullopt, n}; }

  bool operator==(const StopRule&) const = default;
};

struct Schedule {
  PhysicalParams params;
  std::optional<SeriesConfig> series;  // empty for finite-difference schedules
  std::vector<SwitchEvent> events;
  StopRule stop;
};

inline constexpr int kDefaultCrossingIterations = 200;

/// Elapsed time from the current state until the mass reaches target under a
/// constant phase. Brackets by doubling from tol, then bisects to width tol.
/// Returns 0 if the mass already equals target.
/// Throws TargetUnreachable when target lies outside the phase's range and
/// NonConvergence when max_iterations is exhausted.
double find_crossing(std::span<const ModeState> modes, Phase phase, double target,
                     const PhysicalParams& params, double tol,
                     int max_iterations = kDefaultCrossingIterations);

/// Switch sequence of the spectral model, starting Charging from u = 0.
Schedule run_analytic_schedule(const PhysicalParams& params, const SeriesConfig& series,
                               const StopRule& stop);

struct AnalyticTrace {
  std::vector<TraceRecord> trace;
  std::vector<ProfileSnapshot> profiles;
};

/// Replays a spectral schedule on a uniform sample grid t = i * sample_dt up
/// to horizon. A profile on profile_points + 1 equispaced nodes is taken every
/// snapshot_stride samples and at the first sample of each stage.
AnalyticTrace sample_analytic(const Schedule& schedule, double sample_dt, double horizon,
                              int snapshot_stride, int profile_points);

}  // namespace heatswitch
