#include "heatswitch/estimates.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace heatswitch {

namespace {

constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

void require_first_term_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw Error(ErrorCode::InvalidArgument,
                "first-term estimate needs 0 < alpha < 1/2, got " + std::to_string(alpha));
  }
}

void require_diffusivity(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "diffusivity must be > 0");
}

void require_unit_interval(const EstimateParams& est) {
  if (!(est.alpha > 0.0 && est.alpha < 1.0) || !(est.beta > 0.0 && est.beta < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "alpha = " + std::to_string(est.alpha) +
                                           ", beta = " + std::to_string(est.beta) +
                                           " must lie in (0,1)");
  }
}

}  // namespace

EstimateParams derive_alpha_beta(const PhysicalParams& params) {
  params.validate();
  EstimateParams est{(1.0 - params.upper_mass / params.u0) * kPiSq / 8.0,
                     (params.lower_mass / params.u0) * kPiSq / 8.0};
  require_unit_interval(est);
  return est;
}

double first_term_switch_time(int n, double alpha, double diffusivity) {
  require_first_term_alpha(alpha);
  require_diffusivity(diffusivity);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "switch index must be >= 1");
  const double log_value = (n - 1) * std::log1p(-alpha) - n * std::log(alpha);
  return log_value / (diffusivity * kPiSq);
}

double first_term_gap(double alpha, double diffusivity) {
  require_first_term_alpha(alpha);
  require_diffusivity(diffusivity);
  return std::log((1.0 - alpha) / alpha) / (diffusivity * kPiSq);
}

double higher_order_switch_value(int n, const EstimateParams& est) {
  require_unit_interval(est);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "switch index must be >= 1");
  const int j = n / 2;
  const double a = est.alpha;
  const double b = est.beta;
  if (n % 2 == 0) {
    return std::pow(a * b / (1.0 - a), j) / std::pow(1.0 - b, j - 1);
  }
  return a * std::pow(a * b / ((1.0 - a) * (1.0 - b)), j);
}

double higher_order_switch_time(int n, const EstimateParams& est, double diffusivity) {
  require_diffusivity(diffusivity);
  return -std::log(higher_order_switch_value(n, est)) / (diffusivity * kPiSq);
}

PhaseGaps higher_order_gaps(const EstimateParams& est, double diffusivity) {
  require_unit_interval(est);
  require_diffusivity(diffusivity);
  const double down_arg = (1.0 - est.alpha) / est.beta;
  const double up_arg = (1.0 - est.beta) / est.alpha;
  if (!(down_arg > 1.0) || !(up_arg > 1.0)) {
    throw Error(ErrorCode::NegativeGap, "alpha + beta must be below 1 for positive gaps");
  }
  return {std::log(down_arg) / (diffusivity * kPiSq), std::log(up_arg) / (diffusivity * kPiSq)};
}

}  // namespace heatswitch
