#include <random>
#include <vector>

#include "doctest.h"
#include "heatswitch/fdm.hpp"
#include "heatswitch/kernels.hpp"

using namespace heatswitch;

namespace {

std::vector<ModeState> random_modes(int K, double a, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit01(0.0, 1.0);
  auto modes = make_modes(K, a);
  for (auto& m : modes) m.psi = unit01(rng);
  return modes;
}

}  // namespace

TEST_CASE("parallel advance matches the serial reference exactly") {
  for (int K : {1, 7, 64, 5000}) {
    auto serial = random_modes(K, 0.05, 1);
    auto parallel = serial;
    for (Phase phase : {Phase::Charging, Phase::Discharging}) {
      kernels::advance_serial(serial, phase, 0.37);
      kernels::advance_parallel(parallel, phase, 0.37);
      for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].psi == parallel[i].psi);
    }
  }
}

TEST_CASE("parallel mass agrees with the serial reference to rounding") {
  for (int K : {1, 64, 100000}) {
    const auto modes = random_modes(K, 1.0, 2);
    const double s = kernels::mass_serial(modes, 3.0);
    CHECK(kernels::mass_parallel(modes, 3.0) == doctest::Approx(s).epsilon(1e-13));
  }
}

TEST_CASE("parallel profile grid matches the serial reference exactly") {
  const auto modes = random_modes(128, 1.0, 3);
  std::vector<double> xs(257);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i) / 256.0;
  std::vector<double> a(xs.size()), b(xs.size());
  kernels::profile_grid_serial(modes, 2.0, xs, a);
  kernels::profile_grid_parallel(modes, 2.0, xs, b);
  CHECK(a == b);
  CHECK(a.front() == 0.0);
  CHECK(a.back() == 0.0);

  std::vector<double> short_out(3);
  CHECK_THROWS_AS(kernels::profile_grid_serial(modes, 2.0, xs, short_out), Error);
}

TEST_CASE("parallel FDM sweep returns the serial results in order") {
  std::vector<FdmConfig> configs;
  std::vector<PhysicalParams> params;
  for (int i = 0; i < 6; ++i) {
    configs.push_back(FdmConfig{20 + 10 * i, 0.05, 5.0, 10});
    params.push_back(PhysicalParams{0.05 + 0.01 * i, 10.0, 7.0, 3.0});
  }
  const auto serial = run_fdm_sweep(configs, params, false);
  const auto parallel = run_fdm_sweep(configs, params, true);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].schedule.events == parallel[i].schedule.events);
    CHECK(serial[i].schedule.params == params[i]);
  }
}

TEST_CASE("sweep surfaces per-run errors") {
  std::vector<FdmConfig> configs{FdmConfig{50, 0.1, 2.0, 10}, FdmConfig{2, 0.1, 2.0, 10}};
  std::vector<PhysicalParams> params(2, PhysicalParams{0.05, 10.0, 7.0, 3.0});
  CHECK_THROWS_AS(run_fdm_sweep(configs, params, true), Error);
  CHECK_THROWS_AS(run_fdm_sweep(configs, std::span(params).first(1), true), Error);
}
