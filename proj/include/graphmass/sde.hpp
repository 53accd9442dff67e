#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "graphmass/graph.hpp"
#include "graphmass/parallel.hpp"
#include "graphmass/rng.hpp"
#include "graphmass/simplex.hpp"

namespace graphmass {

enum class BoundaryPolicy { absorb_at_zero, reflect_clip };

/// Euler-Maruyama discretization of the simplex diffusion: one Gaussian
/// increment per edge per step with coefficient sqrt(x_i x_j), applied
/// antisymmetrically (so the diffusion part conserves the total mass
/// exactly), plus the linear drift alpha (1 - r x_i) / 2 when alpha > 0.
/// The square-root coefficients are not Lipschitz at the boundary;
/// coordinates pushed below zero are clipped to exactly zero. Under
/// absorb_at_zero a zero coordinate receives no further noise (and there
/// is no drift to revive it in the undrifted case); under reflect_clip the
/// drift may push it back inside.
struct SdeConfig {
  Graph graph;
  double alpha = 0.0;
  double dt = 1e-4;
  BoundaryPolicy boundary = BoundaryPolicy::absorb_at_zero;

  void validate() const {
    if (!(dt > 0)) throw std::invalid_argument("SdeConfig: dt must be positive");
    if (alpha < 0) throw std::invalid_argument("SdeConfig: alpha must be non-negative");
  }
};

struct SdePath {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::int64_t steps = 0;
  std::int64_t clip_events = 0;
  double max_renorm_drift = 0.0;   // max |sum - 1| seen before renormalizing
  bool clip_warning = false;       // clipping in more than 1% of steps
};

namespace detail {

/// One Euler-Maruyama step in place. Returns the number of clipped
/// coordinates; accumulates |sum - 1| into drift.
inline int sde_step(const SdeConfig& cfg, std::vector<double>& x, double sqrt_dt, Rng& rng,
                    double& drift) {
  const int r = cfg.graph.vertex_count();
  for (auto [u, v] : cfg.graph.edges()) {
    if (x[u] > 0.0 && x[v] > 0.0) {
      const double dB = sqrt_dt * rng.normal();
      const double inc = std::sqrt(x[u] * x[v]) * dB;
      x[u] += inc;
      x[v] -= inc;
    }
  }
  if (cfg.alpha > 0.0) {
    for (int i = 0; i < r; ++i) {
      if (cfg.boundary == BoundaryPolicy::absorb_at_zero && x[i] == 0.0) continue;
      x[i] += 0.5 * cfg.alpha * (1.0 - r * x[i]) * cfg.dt;
    }
  }
  int clipped = 0;
  double sum = 0.0;
  for (int i = 0; i < r; ++i) {
    if (x[i] < 0.0) {
      x[i] = 0.0;
      ++clipped;
    }
    sum += x[i];
  }
  // drift tracks pure floating-point leakage; clipped mass is reported
  // through the clip counter instead
  if (clipped == 0) drift = std::max(drift, std::abs(sum - 1.0));
  if (sum != 1.0 && sum > 0.0) {
    for (int i = 0; i < r; ++i) x[i] /= sum;
  }
  return clipped;
}

}  // namespace detail

/// Simulates one path to t_end, recording every `record_every` steps
/// (and the final state).
inline SdePath simulate_sde(const SdeConfig& cfg, const SimplexPoint& x0, double t_end,
                            std::int64_t record_every, Rng& rng) {
  cfg.validate();
  if (x0.dimension() != cfg.graph.vertex_count())
    throw std::invalid_argument("simulate_sde: x0 dimension != vertex count");
  if (!(t_end > 0)) throw std::invalid_argument("simulate_sde: t_end must be positive");
  if (record_every < 1) throw std::invalid_argument("simulate_sde: record_every must be >= 1");
  const std::int64_t n_steps = static_cast<std::int64_t>(std::ceil(t_end / cfg.dt));
  const double sqrt_dt = std::sqrt(cfg.dt);
  std::vector<double> x = x0.coords();
  SdePath path;
  path.times.push_back(0.0);
  path.states.push_back(x);
  for (std::int64_t step = 1; step <= n_steps; ++step) {
    path.clip_events += detail::sde_step(cfg, x, sqrt_dt, rng, path.max_renorm_drift);
    if (step % record_every == 0 || step == n_steps) {
      path.times.push_back(step * cfg.dt);
      path.states.push_back(x);
    }
  }
  path.steps = n_steps;
  path.clip_warning = path.clip_events > n_steps / 100;
  return path;
}

/// Monte Carlo samples of the exit time from the face spanned by `face`:
/// the first time a face coordinate hits zero. The start must lie strictly
/// inside the face and the face must not be independent (otherwise the
/// start is a fixed point and the exit time is infinite).
inline std::vector<double> empirical_exit_time(const SdeConfig& cfg, const SimplexPoint& x0,
                                               const VertexSet& face, int n_paths,
                                               std::uint64_t seed, int threads = 1,
                                               std::int64_t max_steps = 100'000'000) {
  cfg.validate();
  if (cfg.alpha != 0.0)
    throw std::invalid_argument("empirical_exit_time: face exits are an undrifted quantity");
  validate_vertex_set(cfg.graph, face);
  if (x0.dimension() != cfg.graph.vertex_count())
    throw std::invalid_argument("empirical_exit_time: x0 dimension != vertex count");
  if (is_independent_set(cfg.graph, face))
    throw std::invalid_argument("empirical_exit_time: face is independent, exit time is infinite");
  std::vector<bool> on_face(cfg.graph.vertex_count(), false);
  for (int v : face) on_face[v] = true;
  for (int i = 0; i < cfg.graph.vertex_count(); ++i) {
    if (on_face[i] && !(x0[i] > 0.0))
      throw std::invalid_argument("empirical_exit_time: start must be strictly inside the face");
    if (!on_face[i] && x0[i] != 0.0)
      throw std::invalid_argument("empirical_exit_time: start has mass off the face");
  }
  const double sqrt_dt = std::sqrt(cfg.dt);
  std::vector<double> exit_times(n_paths);
  parallel_chunks(n_paths, threads, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t k = begin; k < end; ++k) {
      Rng rng(seed, static_cast<std::uint64_t>(k));
      std::vector<double> x = x0.coords();
      double drift = 0.0;
      std::int64_t step = 0;
      while (true) {
        ++step;
        if (step > max_steps)
          throw std::runtime_error("empirical_exit_time: step budget exceeded");
        detail::sde_step(cfg, x, sqrt_dt, rng, drift);
        bool exited = false;
        for (int v : face)
          if (x[v] <= 0.0) {
            exited = true;
            break;
          }
        if (exited) {
          exit_times[k] = step * cfg.dt;
          break;
        }
      }
    }
  });
  return exit_times;
}

/// Fraction of paths whose survival exceeds t: P(tau > t) from exit-time
/// samples.
inline double empirical_survival(const std::vector<double>& exit_times, double t) {
  std::int64_t alive = 0;
  for (double tau : exit_times)
    if (tau > t) ++alive;
  return static_cast<double>(alive) / static_cast<double>(exit_times.size());
}

/// Frequencies of the surviving support {i : x_i(t_end) > eps} over paths.
inline std::map<VertexSet, double> empirical_support_profile(const SdeConfig& cfg,
                                                             const SimplexPoint& x0, double t_end,
                                                             int n_paths, double eps,
                                                             std::uint64_t seed, int threads = 1) {
  cfg.validate();
  if (x0.dimension() != cfg.graph.vertex_count())
    throw std::invalid_argument("empirical_support_profile: x0 dimension != vertex count");
  const std::int64_t n_steps = static_cast<std::int64_t>(std::ceil(t_end / cfg.dt));
  const double sqrt_dt = std::sqrt(cfg.dt);
  std::vector<VertexSet> supports(n_paths);
  parallel_chunks(n_paths, threads, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t k = begin; k < end; ++k) {
      Rng rng(seed, static_cast<std::uint64_t>(k));
      std::vector<double> x = x0.coords();
      double drift = 0.0;
      for (std::int64_t step = 0; step < n_steps; ++step)
        detail::sde_step(cfg, x, sqrt_dt, rng, drift);
      VertexSet support;
      for (int i = 0; i < cfg.graph.vertex_count(); ++i)
        if (x[i] > eps) support.push_back(i);
      supports[k] = std::move(support);
    }
  });
  std::map<VertexSet, double> freq;
  for (const auto& s : supports) freq[s] += 1.0 / n_paths;
  return freq;
}

}  // namespace graphmass
