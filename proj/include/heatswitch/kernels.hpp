#pragma once

// Per-mode and per-node loops in two flavors: a plain serial reference and an
// OpenMP version. Elementwise kernels give bitwise-identical results; the
// parallel reduction may differ from the serial one by rounding only.

#include <span>

#include "heatswitch/series.hpp"

namespace heatswitch::kernels {

void advance_serial(std::span<ModeState> modes, Phase phase, double dt);
void advance_parallel(std::span<ModeState> modes, Phase phase, double dt);

/// sum_k mass_weight(k) psi_k, times u0.
double mass_serial(std::span<const ModeState> modes, double u0);
double mass_parallel(std::span<const ModeState> modes, double u0);

/// out[i] = profile at xs[i]. Sizes must match.
void profile_grid_serial(std::span<const ModeState> modes, double u0, std::span<const double> xs,
                         std::span<double> out);
void profile_grid_parallel(std::span<const ModeState> modes, double u0,
                           std::span<const double> xs, std::span<double> out);

int max_threads() noexcept;

}  // namespace heatswitch::kernels
