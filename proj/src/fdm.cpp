#include "heatswitch/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "heatswitch/estimates.hpp"

namespace heatswitch {

long FdmConfig::steps() const noexcept {
  return static_cast<long>(std::floor(T / dt + 1e-9));
}

void FdmConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::ValidationError, msg); };
  if (J < 3) fail("J >= 3 required");
  if (!(dt > 0.0)) fail("dt > 0 required");
  if (!(dt < T)) fail("dt < T required");
  if (snapshot_stride < 1) fail("snapshot_stride >= 1 required");
}

FdmState initial_state(const FdmConfig& cfg, const PhysicalParams& params) {
  FdmState s;
  s.U.assign(static_cast<std::size_t>(cfg.J) + 1, 0.0);
  s.U.front() = s.U.back() = params.u0;
  s.phase = Phase::Charging;
  s.mass = 0.0;
  return s;
}

std::vector<double> thomas_solve(std::span<const double> lower, std::span<const double> diag,
                                 std::span<const double> upper, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0 || lower.size() != n || upper.size() != n || rhs.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "tridiagonal arrays must share one nonzero size");
  }
  constexpr double kTiny = 1e-300;
  std::vector<double> c(n), d(n), x(n);

  double pivot = diag[0];
  if (std::abs(pivot) < kTiny) throw Error(ErrorCode::SingularPivot, "pivot 0");
  c[0] = upper[0] / pivot;
  d[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - lower[i] * c[i - 1];
    if (std::abs(pivot) < kTiny) {
      throw Error(ErrorCode::SingularPivot, "pivot " + std::to_string(i));
    }
    c[i] = upper[i] / pivot;
    d[i] = (rhs[i] - lower[i] * d[i - 1]) / pivot;
  }
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

double trapezoid_mass(std::span<const double> U, double h) {
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < U.size(); ++j) sum += U[j] + U[j + 1];
  return 0.5 * h * sum;
}

FdmState fdm_step(const FdmState& state, const FdmConfig& cfg, const PhysicalParams& params) {
  const auto J = static_cast<std::size_t>(cfg.J);
  if (state.U.size() != J + 1) throw Error(ErrorCode::InvalidArgument, "state size != J + 1");
  const double b = cfg.coefficient(params.diffusivity);
  const double boundary = state.phase == Phase::Charging ? params.u0 : 0.0;
  const std::size_t n = J - 1;

  std::vector<double> lower(n, -b), diag(n, 1.0 + 2.0 * b), upper(n, -b);
  std::vector<double> rhs(state.U.begin() + 1, state.U.end() - 1);
  rhs.front() += b * boundary;
  rhs.back() += b * boundary;
  const auto interior = thomas_solve(lower, diag, upper, rhs);

  FdmState next;
  next.step = state.step + 1;
  next.phase = state.phase;
  next.U.resize(J + 1);
  next.U.front() = next.U.back() = boundary;
  std::copy(interior.begin(), interior.end(), next.U.begin() + 1);
  next.mass = trapezoid_mass(next.U, cfg.dx());
  return next;
}

namespace {

double center_value(const FdmState& s) { return s.U[s.U.size() / 2]; }

ProfileSnapshot snapshot(const FdmState& s, int stage, double t) {
  ProfileSnapshot snap{stage, t, std::vector<double>(s.U.size()), s.U};
  const double h = 1.0 / static_cast<double>(s.U.size() - 1);
  for (std::size_t j = 0; j < s.U.size(); ++j) snap.x[j] = static_cast<double>(j) * h;
  return snap;
}

void expected_gap_warning(const FdmConfig& cfg, const PhysicalParams& params, FdmRun& run) {
  try {
    const auto gaps = higher_order_gaps(derive_alpha_beta(params), params.diffusivity);
    const double shortest = std::min(gaps.down_gap, gaps.up_gap);
    if (cfg.dt > shortest / 5.0) {
      run.warnings.push_back("dt = " + std::to_string(cfg.dt) +
                             " is not much smaller than the estimated gap " +
                             std::to_string(shortest));
    }
  } catch (const Error&) {
    // no estimate available for these bounds
  }
}

}  // namespace

FdmRun run_fdm_schedule(const FdmConfig& cfg, const PhysicalParams& params) {
  cfg.validate();
  params.validate();

  FdmRun run;
  run.schedule.params = params;
  run.schedule.stop = StopRule::horizon(cfg.T);
  expected_gap_warning(cfg, params, run);

  FdmState state = initial_state(cfg, params);
  run.min_value = *std::min_element(state.U.begin(), state.U.end());
  run.max_value = *std::max_element(state.U.begin(), state.U.end());
  run.trace.push_back(TraceRecord{0.0, state.mass, state.phase, center_value(state)});
  run.profiles.push_back(snapshot(state, 0, 0.0));

  int stage = 0;
  long last_switch_step = 0;
  bool stage_start = false;
  const long steps = cfg.steps();
  for (long n = 0; n < steps; ++n) {
    state = fdm_step(state, cfg, params);
    const double t = static_cast<double>(state.step) * cfg.dt;

    const std::size_t J = state.U.size() - 1;
    for (std::size_t j = 0; j <= J; ++j) {
      run.min_value = std::min(run.min_value, state.U[j]);
      run.max_value = std::max(run.max_value, state.U[j]);
      run.max_asymmetry = std::max(run.max_asymmetry, std::abs(state.U[j] - state.U[J - j]));
    }
    run.trace.push_back(TraceRecord{t, state.mass, state.phase, center_value(state)});

    const bool hit = state.phase == Phase::Charging ? state.mass >= params.upper_mass
                                                    : state.mass <= params.lower_mass;
    if (hit || stage_start || state.step % cfg.snapshot_stride == 0 || n + 1 == steps) {
      run.profiles.push_back(snapshot(state, stage, t));
    }
    stage_start = false;
    if (!hit) continue;

    auto& events = run.schedule.events;
    events.push_back(SwitchEvent{static_cast<int>(events.size()) + 1, t,
                                 static_cast<double>(state.step - last_switch_step) * cfg.dt,
                                 state.mass, state.phase});
    last_switch_step = state.step;
    state.phase = flipped(state.phase);
    state.U.front() = state.U.back() = state.phase == Phase::Charging ? params.u0 : 0.0;
    ++stage;
    stage_start = true;
  }

  if (run.schedule.events.empty()) {
    run.no_switch_before_horizon = true;
    run.warnings.push_back("NoSwitchBeforeHorizon: mass never reached M = " +
                           std::to_string(params.upper_mass) + " by T = " + std::to_string(cfg.T));
  }
  return run;
}

std::vector<FdmRun> run_fdm_sweep(std::span<const FdmConfig> configs,
                                  std::span<const PhysicalParams> params, bool parallel) {
  if (configs.size() != params.size()) {
    throw Error(ErrorCode::InvalidArgument, "sweep needs one parameter set per config");
  }
  std::vector<FdmRun> runs(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  const auto count = static_cast<long>(configs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      runs[k] = run_fdm_schedule(configs[k], params[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return runs;
}

}  // namespace heatswitch
