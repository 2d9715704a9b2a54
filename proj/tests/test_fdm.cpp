#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "heatswitch/fdm.hpp"

using namespace heatswitch;

TEST_CASE("thomas_solve examples") {
  const std::vector<double> zero(4, 0.0), one(4, 1.0), rhs{1.0, -2.0, 3.5, 0.25};
  CHECK(thomas_solve(zero, one, zero, rhs) == rhs);

  const auto x = thomas_solve(std::vector{0.0, -1.0}, std::vector{3.0, 3.0}, std::vector{-1.0, 0.0},
                              std::vector{2.0, 2.0});
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-15));

  // constants are fixed points once the boundary terms are folded in
  const double b = 7.3, c = 4.2;
  const std::size_t n = 9;
  std::vector<double> lo(n, -b), di(n, 1 + 2 * b), up(n, -b), r(n, c);
  r.front() += b * c;
  r.back() += b * c;
  for (double v : thomas_solve(lo, di, up, r)) CHECK(v == doctest::Approx(c).epsilon(1e-13));
}

TEST_CASE("thomas_solve against a dense residual") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial * 3;
    std::vector<double> lo(n), di(n), up(n), r(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = u(rng);
      up[i] = u(rng);
      di[i] = 2.5 + u(rng);
      r[i] = u(rng);
    }
    const auto x = thomas_solve(lo, di, up, r);
    for (std::size_t i = 0; i < n; ++i) {
      double ax = di[i] * x[i];
      if (i > 0) ax += lo[i] * x[i - 1];
      if (i + 1 < n) ax += up[i] * x[i + 1];
      CHECK(ax == doctest::Approx(r[i]).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("thomas_solve errors") {
  CHECK_THROWS_AS(thomas_solve(std::vector{0.0}, std::vector{0.0}, std::vector{0.0}, std::vector{1.0}),
                  Error);
  CHECK_THROWS_AS(
      thomas_solve(std::vector{0.0, 1.0}, std::vector{1.0, 1.0}, std::vector{1.0, 0.0}, std::vector{1.0, 1.0}),
      Error);  // second pivot is 1 - 1*1 = 0
  CHECK_THROWS_AS(thomas_solve(std::vector{0.0}, std::vector{1.0, 1.0}, std::vector{0.0}, std::vector{1.0}),
                  Error);
}

TEST_CASE("trapezoid_mass examples") {
  const int J = 50;
  const double h = 1.0 / J;
  std::vector<double> U(J + 1, 3.25);
  CHECK(trapezoid_mass(U, h) == doctest::Approx(3.25).epsilon(1e-14));
  for (int j = 0; j <= J; ++j) U[j] = j * h;
  CHECK(trapezoid_mass(U, h) == doctest::Approx(0.5).epsilon(1e-15));
  for (int j = 0; j <= J; ++j) U[j] = std::sin(std::numbers::pi * j * h);
  CHECK(std::abs(trapezoid_mass(U, h) - 2.0 / std::numbers::pi) <= 3e-4);
}

TEST_CASE("fdm_step fixed points and symmetry") {
  const PhysicalParams p{0.05, 10.0, 7.0, 3.0};
  const FdmConfig cfg{50, 0.1, 20.0, 10};

  FdmState full{0, std::vector<double>(51, 10.0), Phase::Charging, 10.0};
  auto next = fdm_step(full, cfg, p);
  for (double v : next.U) CHECK(v == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(next.step == 1);

  FdmState empty{0, std::vector<double>(51, 0.0), Phase::Discharging, 0.0};
  for (double v : fdm_step(empty, cfg, p).U) CHECK(v == 0.0);

  // J = 4, b = 1: interior system [[3,-1,0],[-1,3,-1],[0,-1,3]] U = [u0,0,u0]
  // solves to U = u0 * [3/7, 2/7, 3/7]
  const FdmConfig small{4, 1.0 / 16.0, 1.0, 1};
  const PhysicalParams unit{1.0, 1.0, 0.5, 0.2};
  auto s = fdm_step(initial_state(small, unit), small, unit);
  CHECK(s.U[1] == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
  CHECK(s.U[2] == doctest::Approx(2.0 / 7.0).epsilon(1e-14));
  CHECK(s.U[3] == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
  CHECK(s.U[0] == 1.0);
  CHECK(s.U[4] == 1.0);
}

TEST_CASE("Table 1 run") {
  const auto run = run_fdm_schedule(FdmConfig{50, 0.1, 20.0, 10}, PhysicalParams{0.05, 10.0, 7.0, 3.0});
  const auto& ev = run.schedule.events;
  REQUIRE(ev.size() >= 14);
  CHECK(ev[0].t == doctest::Approx(2.1).epsilon(1e-12));
  for (std::size_t i = 1; i < 14; ++i) CHECK(ev[i].gap == doctest::Approx(1.2).epsilon(1e-12));
  for (const auto& e : ev) {
    const double steps = e.t / 0.1;
    CHECK(std::abs(steps - std::round(steps)) < 1e-9);
  }
  CHECK(!run.no_switch_before_horizon);
  CHECK(run.warnings.empty());
  CHECK(run.min_value >= 0.0);
  CHECK(run.max_value <= 10.0);
  CHECK(run.max_asymmetry <= 1e-12);
  CHECK(run.trace.size() == 201);
  CHECK(run.trace.front().mass == 0.0);
}

TEST_CASE("Table 2 run") {
  const auto run =
      run_fdm_schedule(FdmConfig{50, 0.02, 20.0, 10}, PhysicalParams{0.05, 10.0, 5.0, 2.0});
  const auto& ev = run.schedule.events;
  REQUIRE(ev.size() == 26);
  CHECK(ev[0].t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ev[1].gap == doctest::Approx(0.94).epsilon(1e-12));
  for (std::size_t i = 2; i < ev.size(); ++i) {
    CHECK(ev[i].gap == doctest::Approx(ev[i].ended_phase == Phase::Charging ? 0.48 : 1.02).epsilon(1e-12));
  }
  CHECK(ev.back().t == doctest::Approx(19.94).epsilon(1e-12));
}

TEST_CASE("unreachable upper bound warns") {
  // the trapezoid steady state is u0, so a short horizon keeps M out of reach
  const auto run = run_fdm_schedule(FdmConfig{20, 0.1, 1.0, 2}, PhysicalParams{0.05, 10.0, 9.9, 3.0});
  CHECK(run.no_switch_before_horizon);
  REQUIRE(!run.warnings.empty());
  CHECK(run.warnings.back().find("NoSwitchBeforeHorizon") != std::string::npos);
  CHECK(run.schedule.events.empty());
  CHECK(run.trace.front().mass == 0.0);
}

TEST_CASE("coarse time steps raise the expected-gap warning") {
  const auto run = run_fdm_schedule(FdmConfig{50, 1.0, 20.0, 10}, PhysicalParams{0.05, 10.0, 7.0, 3.0});
  REQUIRE(!run.warnings.empty());
  CHECK(run.warnings.front().find("not much smaller") != std::string::npos);
}

TEST_CASE("unconditional stability for large b") {
  const auto run = run_fdm_schedule(FdmConfig{100, 1.0, 40.0, 10}, PhysicalParams{0.05, 10.0, 7.0, 3.0});
  CHECK(run.min_value >= 0.0);
  CHECK(run.max_value <= 10.0);
  CHECK(run.schedule.events.size() > 2);
}

TEST_CASE("profile snapshots bracket every stage") {
  const PhysicalParams p{0.05, 10.0, 7.0, 3.0};
  const auto run = run_fdm_schedule(FdmConfig{50, 0.1, 20.0, 5}, p);
  int stages = 0;
  for (const auto& s : run.profiles) stages = std::max(stages, s.stage + 1);
  CHECK(stages == static_cast<int>(run.schedule.events.size()) + 1);

  // last snapshot of stage 0 is the detecting step: boundary u0, interior below
  const ProfileSnapshot* last0 = nullptr;
  const ProfileSnapshot* first1 = nullptr;
  for (const auto& s : run.profiles) {
    if (s.stage == 0) last0 = &s;
    if (s.stage == 1 && !first1) first1 = &s;
  }
  REQUIRE(last0);
  REQUIRE(first1);
  CHECK(last0->t == doctest::Approx(2.1));
  CHECK(last0->u.front() == 10.0);
  CHECK(last0->u.back() == 10.0);
  for (std::size_t j = 1; j + 1 < last0->u.size(); ++j) CHECK(last0->u[j] < 10.0);
  CHECK(first1->t == doctest::Approx(2.2));
  CHECK(first1->u.front() == 0.0);
  for (std::size_t j = 1; j + 1 < first1->u.size(); ++j) CHECK(first1->u[j] > 0.0);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS((FdmConfig{2, 0.1, 1.0, 1}.validate()), Error);
  CHECK_THROWS_AS((FdmConfig{10, 0.0, 1.0, 1}.validate()), Error);
  CHECK_THROWS_AS((FdmConfig{10, 2.0, 1.0, 1}.validate()), Error);
  CHECK(FdmConfig{50, 0.1, 20.0, 1}.steps() == 200);
  CHECK(FdmConfig{50, 0.02, 20.0, 1}.steps() == 1000);
}
