#include "heatswitch/runner.hpp"

#include <cmath>
#include <ostream>

namespace heatswitch {

namespace {

using std::filesystem::path;

struct Outputs {
  path dir;
  std::vector<path> written;

  template <class Writer>
  void write(const char* name, Writer&& writer) {
    const path p = dir / name;
    write_file(p, std::forward<Writer>(writer));
    written.push_back(p);
  }
};

void write_series_outputs(Outputs& outputs, const Schedule& schedule,
                          std::span<const TraceRecord> trace,
                          std::span<const ProfileSnapshot> profiles, bool svg) {
  outputs.write("switches.csv", [&](std::ostream& o) { emit_switch_table(schedule, o); });
  outputs.write("trace.csv", [&](std::ostream& o) { emit_trace(trace, o); });
  outputs.write("profiles.csv", [&](std::ostream& o) { emit_profiles(profiles, o); });
  if (svg) outputs.write("trace.svg", [&](std::ostream& o) { emit_trace_svg(trace, o); });
}

Schedule estimate_schedule(const RunConfig& config) {
  const auto& p = config.physical;
  const auto est = derive_alpha_beta(p);
  Schedule s{p, std::nullopt, {}, config.stop};
  double previous = 0.0;
  for (int n = 1; n <= config.stop.max_switches.value_or(20); ++n) {
    const double t = higher_order_switch_time(n, est, p.diffusivity);
    if (config.stop.final_time && t > *config.stop.final_time) break;
    const Phase ended = n % 2 == 1 ? Phase::Charging : Phase::Discharging;
    s.events.push_back(SwitchEvent{n, t, t - previous,
                                   ended == Phase::Charging ? p.upper_mass : p.lower_mass, ended});
    previous = t;
  }
  return s;
}

double horizon_of(const RunConfig& config, const Schedule& schedule) {
  if (config.stop.final_time) return *config.stop.final_time;
  return schedule.events.empty() ? 0.0 : schedule.events.back().t;
}

}  // namespace

std::vector<path> execute(const RunConfig& config, std::ostream& log) {
  Outputs outputs{config.output_dir, {}};
  std::error_code ec;
  std::filesystem::create_directories(outputs.dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + outputs.dir.string() + ": " + ec.message());

  switch (config.mode) {
    case RunMode::Analytic: {
      const auto schedule = run_analytic_schedule(config.physical, config.series, config.stop);
      const auto sampled = sample_analytic(schedule, config.sample_dt, horizon_of(config, schedule),
                                           config.snapshot_stride, config.profile_points);
      write_series_outputs(outputs, schedule, sampled.trace, sampled.profiles, config.emit_svg);
      log << "analytic: " << schedule.events.size() << " switches\n";
      break;
    }
    case RunMode::Fdm: {
      const auto run = run_fdm_schedule(*config.fdm, config.physical);
      for (const auto& w : run.warnings) log << "warning: " << w << '\n';
      write_series_outputs(outputs, run.schedule, run.trace, run.profiles, config.emit_svg);
      log << "fdm: " << run.schedule.events.size() << " switches\n";
      break;
    }
    case RunMode::Estimate: {
      const auto schedule = estimate_schedule(config);
      outputs.write("switches.csv", [&](std::ostream& o) { emit_switch_table(schedule, o); });
      log << "estimate: " << schedule.events.size() << " switch times\n";
      break;
    }
    case RunMode::Compare: {
      const auto run = run_fdm_schedule(*config.fdm, config.physical);
      for (const auto& w : run.warnings) log << "warning: " << w << '\n';
      const auto analytic = run_analytic_schedule(config.physical, config.series,
                                                  StopRule::horizon(config.fdm->T));
      const auto est = derive_alpha_beta(config.physical);
      outputs.write("compare.csv",
                    [&](std::ostream& o) { compare_report(analytic, run.schedule, est, o); });
      log << "compare: " << run.schedule.events.size() << " fdm / " << analytic.events.size()
          << " analytic switches\n";
      break;
    }
  }
  return outputs.written;
}

}  // namespace heatswitch
