#pragma once

// Closed-form switch times from keeping only the slowest mode (lambda_1 = pi)
// in the mass series. Times scale as 1/a and masses as u0 relative to the
// unit problem.

#include "heatswitch/common.hpp"

namespace heatswitch {

/// Bound parameters: M = u0 (1 - (8/pi^2) alpha), m = u0 (8/pi^2) beta.
struct EstimateParams {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Throws OutOfRange if alpha or beta falls outside (0,1).
EstimateParams derive_alpha_beta(const PhysicalParams& params);

/// t_n = ln((1-alpha)^{n-1} / alpha^n) / (a pi^2), symmetric bounds.
/// Requires 0 < alpha < 1/2 and n >= 1.
double first_term_switch_time(int n, double alpha, double diffusivity);

/// ln((1-alpha)/alpha) / (a pi^2); the same for every n.
double first_term_gap(double alpha, double diffusivity);

/// exp(-lambda_1^2 t_n) for asymmetric bounds:
///   n = 2j:   alpha^j beta^j / ((1-alpha)^j (1-beta)^(j-1))
///   n = 2j+1: alpha^(j+1) beta^j / ((1-alpha)^j (1-beta)^j)
double higher_order_switch_value(int n, const EstimateParams& est);

/// -ln(higher_order_switch_value(n, est)) / (a pi^2).
double higher_order_switch_time(int n, const EstimateParams& est, double diffusivity);

struct PhaseGaps {
  double down_gap = 0.0;  // t_{2n} - t_{2n-1}, boundary at 0
  double up_gap = 0.0;    // t_{2n+1} - t_{2n}, boundary at u0
};

/// down = ln((1-alpha)/beta) / (a pi^2), up = ln((1-beta)/alpha) / (a pi^2).
/// Throws NegativeGap if either log argument is <= 1.
PhaseGaps higher_order_gaps(const EstimateParams& est, double diffusivity);

}  // namespace heatswitch
