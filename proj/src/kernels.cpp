#include "heatswitch/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heatswitch::kernels {

namespace {

// sin((2k+1) pi x) is symmetric about x = 1/2 for odd multiples, so fold
// onto [0, 1/2]; this makes both endpoints exactly zero.
inline double profile_at(std::span<const ModeState> modes, double u0, double x) {
  const double y = std::min(x, 1.0 - x);
  double sum = 0.0;
  for (const auto& s : modes) {
    const double w = (2.0 * s.k + 1.0) * std::numbers::pi;
    sum += (4.0 / w) * s.psi * std::sin(w * y);
  }
  return u0 * sum;
}

void check_sizes(std::span<const double> xs, std::span<double> out) {
  if (xs.size() != out.size()) {
    throw Error(ErrorCode::InvalidArgument, "profile grid and output sizes differ");
  }
}

}  // namespace

void advance_serial(std::span<ModeState> modes, Phase phase, double dt) {
  for (auto& s : modes) s.psi = psi_after(s, phase, std::exp(-s.lambda_sq * dt));
}

void advance_parallel(std::span<ModeState> modes, Phase phase, double dt) {
  const auto n = static_cast<long>(modes.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    auto& s = modes[static_cast<std::size_t>(i)];
    s.psi = psi_after(s, phase, std::exp(-s.lambda_sq * dt));
  }
}

double mass_serial(std::span<const ModeState> modes, double u0) {
  double sum = 0.0;
  for (const auto& s : modes) sum += mass_weight(s.k) * s.psi;
  return u0 * sum;
}

double mass_parallel(std::span<const ModeState> modes, double u0) {
  const auto n = static_cast<long>(modes.size());
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (long i = 0; i < n; ++i) {
    const auto& s = modes[static_cast<std::size_t>(i)];
    sum += mass_weight(s.k) * s.psi;
  }
  return u0 * sum;
}

void profile_grid_serial(std::span<const ModeState> modes, double u0, std::span<const double> xs,
                         std::span<double> out) {
  check_sizes(xs, out);
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = profile_at(modes, u0, xs[i]);
}

void profile_grid_parallel(std::span<const ModeState> modes, double u0,
                           std::span<const double> xs, std::span<double> out) {
  check_sizes(xs, out);
  const auto n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i);
    out[j] = profile_at(modes, u0, xs[j]);
  }
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace heatswitch::kernels
