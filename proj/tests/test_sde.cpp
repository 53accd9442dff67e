#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "graphmass/exit_times.hpp"
#include "graphmass/moment_ode.hpp"
#include "graphmass/sde.hpp"

using namespace graphmass;

TEST_CASE("independent-set faces are fixed points") {
  const SdeConfig cfg{Graph::cycle(4), 0.0, 1e-3, BoundaryPolicy::absorb_at_zero};
  const SimplexPoint x0({0.4, 0.0, 0.6, 0.0});
  Rng rng(2);
  const auto path = simulate_sde(cfg, x0, 1.0, 100, rng);
  for (const auto& state : path.states) {
    CHECK(state[0] == 0.4);
    CHECK(state[1] == 0.0);
    CHECK(state[2] == 0.6);
    CHECK(state[3] == 0.0);
  }
  CHECK(path.clip_events == 0);
}

TEST_CASE("mass stays on the simplex and absorbed coordinates stay absorbed") {
  const SdeConfig cfg{Graph::complete(3), 0.0, 1e-3, BoundaryPolicy::absorb_at_zero};
  const SimplexPoint x0({0.2, 0.5, 0.3}, 1e-9);
  for (int k = 0; k < 10; ++k) {
    Rng rng(400, k);
    const auto path = simulate_sde(cfg, x0, 3.0, 10, rng);
    bool was_zero[3] = {false, false, false};
    for (const auto& state : path.states) {
      double sum = 0;
      for (int i = 0; i < 3; ++i) {
        CHECK(state[i] >= 0.0);
        CHECK(state[i] <= 1.0 + 1e-12);
        if (was_zero[i]) CHECK(state[i] == 0.0);
        if (state[i] == 0.0) was_zero[i] = true;
        sum += state[i];
      }
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
    CHECK(path.max_renorm_drift < 1e-12);
  }
}

TEST_CASE("per-coordinate means are conserved (martingale)") {
  const SdeConfig cfg{Graph::complete(3), 0.0, 1e-3, BoundaryPolicy::absorb_at_zero};
  const SimplexPoint x0({0.5, 0.3, 0.2}, 1e-9);
  const int paths = 4000;
  std::vector<double> mean(3, 0.0), m2(3, 0.0);
  for (int k = 0; k < paths; ++k) {
    Rng rng(41, k);
    const auto path = simulate_sde(cfg, x0, 1.0, 1000, rng);
    const auto& last = path.states.back();
    for (int i = 0; i < 3; ++i) {
      const double delta = last[i] - mean[i];
      mean[i] += delta / (k + 1);
      m2[i] += delta * (last[i] - mean[i]);
    }
  }
  for (int i = 0; i < 3; ++i) {
    const double se = std::sqrt(m2[i] / (paths - 1) / paths);
    CHECK(std::abs(mean[i] - x0[i]) <= 3 * se + 1e-3);
  }
}

TEST_CASE("drifted K2 approaches the uniform stationary law") {
  // alpha = 1 on K2: Dirichlet(1,1), mean 1/2 and second moment 1/3
  const SdeConfig cfg{Graph::complete(2), 1.0, 5e-4, BoundaryPolicy::reflect_clip};
  const SimplexPoint x0({0.9, 0.1}, 1e-9);
  const int paths = 2000;
  double mean = 0, mean_sq = 0, m2 = 0, m2_sq = 0;
  for (int k = 0; k < paths; ++k) {
    Rng rng(55, k);
    const auto path = simulate_sde(cfg, x0, 8.0, 100000, rng);
    const double x = path.states.back()[0];
    const double delta = x - mean;
    mean += delta / (k + 1);
    m2 += delta * (x - mean);
    const double delta2 = x * x - mean_sq;
    mean_sq += delta2 / (k + 1);
    m2_sq += delta2 * (x * x - mean_sq);
  }
  const double se = std::sqrt(m2 / (paths - 1) / paths);
  const double se_sq = std::sqrt(m2_sq / (paths - 1) / paths);
  CHECK(std::abs(mean - 0.5) <= 3 * se + 2e-3);
  CHECK(std::abs(mean_sq - 1.0 / 3) <= 3 * se_sq + 2e-3);
}

TEST_CASE("empirical invariant stays flat along SDE paths") {
  // S2: E[x2 x3^2 - x2^2 x3] is constant in t
  const SdeConfig cfg{Graph::star(2), 0.0, 1e-3, BoundaryPolicy::absorb_at_zero};
  const SimplexPoint x0({0.4, 0.25, 0.35}, 1e-9);
  const int paths = 4000;
  double at0 = x0[1] * x0[2] * x0[2] - x0[1] * x0[1] * x0[2];
  double mean = 0, m2 = 0;
  for (int k = 0; k < paths; ++k) {
    Rng rng(91, k);
    const auto path = simulate_sde(cfg, x0, 1.0, 1000, rng);
    const auto& s = path.states.back();
    const double value = s[1] * s[2] * s[2] - s[1] * s[1] * s[2];
    const double delta = value - mean;
    mean += delta / (k + 1);
    m2 += delta * (value - mean);
  }
  const double se = std::sqrt(m2 / (paths - 1) / paths);
  CHECK(std::abs(mean - at0) <= 3 * se + 1e-3);
}

TEST_CASE("exit times from the K2 face match the series survival") {
  const SdeConfig cfg{Graph::complete(2), 0.0, 2e-4, BoundaryPolicy::absorb_at_zero};
  const SimplexPoint x0({0.5, 0.5});
  const auto times = empirical_exit_time(cfg, x0, {0, 1}, 4000, 321, 2);
  CHECK(times.size() == 4000);
  CHECK(empirical_survival(times, 0.0) == 1.0);
  for (double t : {0.3, 1.0}) {
    const double mc = empirical_survival(times, t);
    const double exact = complete_graph_exit_survival(2, 2, std::vector<double>{0.5, 0.5}, t).value;
    const double se = std::sqrt(exact * (1 - exact) / 4000);
    CHECK(std::abs(mc - exact) <= 3 * se + 0.01);
    // survival lower bound c_x e^{-t |E_U|} with c_x = (prod x_i) |U|^|U|
    CHECK(mc + 3 * se + 0.01 >= 1.0 * std::exp(-t));
  }
}

TEST_CASE("K3 face exit: large-t survival log-slope is s(s-1)/2") {
  const SdeConfig cfg{Graph::complete(3), 0.0, 5e-4, BoundaryPolicy::absorb_at_zero};
  const SimplexPoint x0 = SimplexPoint::uniform(3);
  const auto times = empirical_exit_time(cfg, x0, {0, 1, 2}, 20000, 888, 2);
  const double s1 = empirical_survival(times, 1.0);
  const double s2 = empirical_survival(times, 1.5);
  REQUIRE(s2 > 0.0);
  const double slope = std::log(s1 / s2) / 0.5;
  CHECK(slope == Catch::Approx(3.0).epsilon(0.15));
}

TEST_CASE("oversized steps trigger the clipping warning") {
  // small alpha keeps the path hugging the boundary, where a coarse dt
  // overshoots repeatedly before the drift pushes back
  const SdeConfig cfg{Graph::complete(2), 0.3, 0.05, BoundaryPolicy::reflect_clip};
  Rng rng(13);
  const auto path = simulate_sde(cfg, SimplexPoint({0.5, 0.5}), 40.0, 50, rng);
  CHECK(path.clip_events > 0);
  CHECK(path.clip_warning);
}

TEST_CASE("exit time validation") {
  const SdeConfig cfg{Graph::cycle(4), 0.0, 1e-3, BoundaryPolicy::absorb_at_zero};
  // independent face: exit never happens
  CHECK_THROWS_AS(
      empirical_exit_time(cfg, SimplexPoint({0.5, 0.0, 0.5, 0.0}), {0, 2}, 10, 1, 1),
      std::invalid_argument);
  // start not strictly inside the face
  CHECK_THROWS_AS(
      empirical_exit_time(cfg, SimplexPoint({0.5, 0.0, 0.5, 0.0}), {0, 1, 2}, 10, 1, 1),
      std::invalid_argument);
  // mass off the face
  CHECK_THROWS_AS(
      empirical_exit_time(cfg, SimplexPoint({0.4, 0.2, 0.4, 0.0}), {0, 2}, 10, 1, 1),
      std::invalid_argument);
}

TEST_CASE("support profile concentrates on independent sets") {
  // K3: absorption at singletons with frequencies near x0
  const SdeConfig cfg{Graph::complete(3), 0.0, 1e-3, BoundaryPolicy::absorb_at_zero};
  const SimplexPoint x0({0.5, 0.3, 0.2}, 1e-9);
  const auto profile = empirical_support_profile(cfg, x0, 12.0, 3000, 1e-6, 17, 2);
  double covered = 0;
  for (int i = 0; i < 3; ++i) {
    const auto it = profile.find({i});
    if (it == profile.end()) continue;
    covered += it->second;
    const double se = std::sqrt(x0[i] * (1 - x0[i]) / 3000);
    CHECK(std::abs(it->second - x0[i]) <= 3 * se + 0.02);
  }
  CHECK(covered > 0.97);

  // C4: surviving supports are contained in the independent sets
  const SdeConfig c4cfg{Graph::cycle(4), 0.0, 1e-3, BoundaryPolicy::absorb_at_zero};
  const auto c4profile = empirical_support_profile(c4cfg, SimplexPoint::uniform(4), 12.0,
                                                   1500, 1e-6, 23, 2);
  const Graph c4 = Graph::cycle(4);
  for (const auto& [support, freq] : c4profile) {
    if (freq < 0.002) continue;  // stragglers still en route to the boundary
    CHECK(is_independent_set(c4, support));
  }
}
