#pragma once

#include <vector>

#include "heatswitch/common.hpp"

namespace heatswitch {

/// One sample of the controlled observable.
struct TraceRecord {
  double t = 0.0;
  double mass = 0.0;
  Phase phase = Phase::Charging;  // phase in force while reaching t
  double center_value = 0.0;      // u at the node nearest x = 1/2
};

/// A concentration profile at one instant. stage counts the switches that
/// happened before t (stage 0 is the initial Charging stage).
struct ProfileSnapshot {
  int stage = 0;
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> u;
};

}  // namespace heatswitch
