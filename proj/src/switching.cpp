#include "heatswitch/switching.hpp"

#include <cmath>
#include <string>

#include "heatswitch/kernels.hpp"

namespace heatswitch {

void StopRule::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::ValidationError, msg); };
  if (!final_time && !max_switches) fail("a final time or a switch cap is required");
  if (final_time && !(*final_time > 0.0)) fail("final time > 0 required");
  if (max_switches && *max_switches < 1) fail("max_switches >= 1 required");
}

double find_crossing(std::span<const ModeState> modes, Phase phase, double target,
                     const PhysicalParams& params, double tol, int max_iterations) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "crossing tolerance must be > 0");
  const double current = mass_eval(modes, params);
  if (target == current) return 0.0;

  if (phase == Phase::Charging) {
    double steady = 0.0;
    for (const auto& s : modes) steady += mass_weight(s.k);
    steady *= params.u0;
    if (target < current || target >= steady) {
      throw Error(ErrorCode::TargetUnreachable,
                  "charging cannot reach mass " + std::to_string(target) + " from " +
                      std::to_string(current) + " (asymptote " + std::to_string(steady) + ")");
    }
  } else if (target > current || target <= 0.0) {
    throw Error(ErrorCode::TargetUnreachable,
                "discharging cannot reach mass " + std::to_string(target) + " from " +
                    std::to_string(current));
  }

  // g < 0 before the crossing, >= 0 after; strictly increasing in either phase
  const double sign = phase == Phase::Charging ? 1.0 : -1.0;
  auto g = [&](double dt) { return sign * (mass_after(modes, phase, dt, params) - target); };

  int iterations = 0;
  double lo = 0.0;
  double hi = tol;
  while (g(hi) < 0.0) {
    if (++iterations > max_iterations) {
      throw Error(ErrorCode::NonConvergence, "no bracket for mass " + std::to_string(target));
    }
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > tol) {
    if (++iterations > max_iterations) {
      throw Error(ErrorCode::NonConvergence, "bisection budget exhausted");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    (gm < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Schedule run_analytic_schedule(const PhysicalParams& params, const SeriesConfig& series,
                               const StopRule& stop) {
  params.validate();
  series.validate();
  stop.validate();
  const double steady = params.u0 * truncated_steady_fraction(series.num_modes);
  if (params.upper_mass >= steady) {
    throw Error(ErrorCode::TargetUnreachable,
                "M = " + std::to_string(params.upper_mass) +
                    " is not below the truncated steady mass " + std::to_string(steady));
  }

  Schedule schedule{params, series, {}, stop};
  auto modes = make_modes(series.num_modes, params.diffusivity);
  double t = 0.0;
  Phase phase = Phase::Charging;
  while (!stop.max_switches || static_cast<int>(schedule.events.size()) < *stop.max_switches) {
    const double target = phase == Phase::Charging ? params.upper_mass : params.lower_mass;
    const double dt = find_crossing(modes, phase, target, params, series.crossing_tol);
    if (stop.final_time && t + dt > *stop.final_time) break;
    kernels::advance_serial(modes, phase, dt);
    t += dt;
    schedule.events.push_back(SwitchEvent{static_cast<int>(schedule.events.size()) + 1, t, dt,
                                          mass_eval(modes, params), phase});
    phase = flipped(phase);
  }
  return schedule;
}

AnalyticTrace sample_analytic(const Schedule& schedule, double sample_dt, double horizon,
                              int snapshot_stride, int profile_points) {
  if (!schedule.series) {
    throw Error(ErrorCode::InvalidArgument, "schedule has no series configuration");
  }
  if (!(sample_dt > 0.0) || !(horizon >= 0.0) || snapshot_stride < 1 || profile_points < 2) {
    throw Error(ErrorCode::InvalidArgument, "bad sampling parameters");
  }
  const auto& params = schedule.params;
  auto modes = make_modes(schedule.series->num_modes, params.diffusivity);

  std::vector<double> xs(static_cast<std::size_t>(profile_points) + 1);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    xs[j] = static_cast<double>(j) / profile_points;
  }

  AnalyticTrace out;
  std::vector<ModeState> scratch;
  const double half[1] = {0.5};
  double center[1] = {0.0};
  std::size_t next_event = 0;
  double t_state = 0.0;
  Phase phase = Phase::Charging;
  int last_stage = -1;
  const auto samples = static_cast<long>(std::floor(horizon / sample_dt + 1e-9));
  for (long i = 0; i <= samples; ++i) {
    const double ts = static_cast<double>(i) * sample_dt;
    // the new phase owns the switch instant
    while (next_event < schedule.events.size() && schedule.events[next_event].t <= ts) {
      const double step = schedule.events[next_event].t - t_state;
      if (step > 0.0) kernels::advance_serial(modes, phase, step);
      t_state = schedule.events[next_event].t;
      phase = flipped(phase);
      ++next_event;
    }
    scratch = modes;
    if (ts > t_state) kernels::advance_serial(scratch, phase, ts - t_state);

    kernels::profile_grid_serial(scratch, params.u0, half, center);
    out.trace.push_back(TraceRecord{ts, kernels::mass_serial(scratch, params.u0), phase, center[0]});

    const int stage = static_cast<int>(next_event);
    if (stage != last_stage || i % snapshot_stride == 0) {
      ProfileSnapshot snap{stage, ts, xs, std::vector<double>(xs.size())};
      kernels::profile_grid_parallel(scratch, params.u0, snap.x, snap.u);
      out.profiles.push_back(std::move(snap));
      last_stage = stage;
    }
  }
  return out;
}

}  // namespace heatswitch
