#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graphmass/graph.hpp"
#include "graphmass/rng.hpp"

namespace graphmass {

/// Occupation counts of the N-particle collision model.
using OccupationVector = std::vector<std::int64_t>;

inline std::int64_t occupation_total(const OccupationVector& n) {
  std::int64_t total = 0;
  for (auto v : n) {
    if (v < 0) throw std::invalid_argument("OccupationVector: negative count");
    total += v;
  }
  return total;
}

namespace detail {

/// Draws an unordered pair of distinct particles uniformly and returns the
/// vertices they occupy. The second draw excludes the first particle.
inline std::pair<int, int> draw_particle_pair(const OccupationVector& counts, std::int64_t total,
                                              Rng& rng) {
  const auto pick = [&](std::int64_t index, int skip) {
    for (int v = 0; v < static_cast<int>(counts.size()); ++v) {
      const std::int64_t c = counts[v] - (v == skip ? 1 : 0);
      if (index < c) return v;
      index -= c;
    }
    throw std::logic_error("draw_particle_pair: index out of range");
  };
  const int first = pick(static_cast<std::int64_t>(rng.uniform_below(total)), -1);
  const int second = pick(static_cast<std::int64_t>(rng.uniform_below(total - 1)), first);
  return {first, second};
}

inline bool has_adjacent_occupied_pair(const Graph& g, const OccupationVector& counts) {
  for (auto [u, v] : g.edges())
    if (counts[u] > 0 && counts[v] > 0) return true;
  return false;
}

}  // namespace detail

struct FinderConfig {
  std::int64_t particles = 0;   // N >= r
  std::int64_t threshold = 0;   // M; 0 selects the 50 N^2 default
};

struct FinderResult {
  VertexSet occupied;
  std::int64_t iterations = 0;  // pair draws performed
  bool converged = false;       // no adjacent occupied pair remained at stop
  OccupationVector counts;
  std::int64_t threshold = 0;   // M actually used
};

/// Independent-set finder: repeatedly draws two distinct particles
/// uniformly; particles on adjacent vertices are merged onto one of the
/// two endpoints (fair coin) and the miss counter resets; M consecutive
/// non-collisions stop the run. Initial assignment is round-robin over the
/// vertices for the first r particles, uniform for the rest.
inline FinderResult find_independent_set(const Graph& g, const FinderConfig& cfg, Rng& rng) {
  const int r = g.vertex_count();
  if (cfg.particles < r)
    throw std::invalid_argument("find_independent_set: need at least one particle per vertex");
  const std::int64_t m_stop =
      cfg.threshold > 0 ? cfg.threshold : 50 * cfg.particles * cfg.particles;
  OccupationVector counts(r, 0);
  for (int v = 0; v < r; ++v) counts[v] = 1;
  for (std::int64_t k = r; k < cfg.particles; ++k)
    ++counts[rng.uniform_below(static_cast<std::uint64_t>(r))];

  FinderResult result;
  result.threshold = m_stop;
  std::int64_t misses = 0;
  while (misses < m_stop) {
    auto [i, j] = detail::draw_particle_pair(counts, cfg.particles, rng);
    ++result.iterations;
    if (i != j && g.adjacent(i, j)) {
      // both particles to i or to j with equal probability
      if (rng.uniform01() < 0.5) {
        --counts[j];
        ++counts[i];
      } else {
        --counts[i];
        ++counts[j];
      }
      misses = 0;
    } else {
      ++misses;
    }
  }
  for (int v = 0; v < r; ++v)
    if (counts[v] > 0) result.occupied.push_back(v);
  result.converged = !detail::has_adjacent_occupied_pair(g, counts);
  result.counts = std::move(counts);
  return result;
}

struct CompromiseTrajectory {
  std::vector<double> times;                    // diffusion-time units
  std::vector<std::vector<double>> states;      // n(s)/N per record
  std::vector<int> occupied_counts;             // |{i : n_i > 0}| per record
  std::int64_t particles = 0;
};

/// Raw collision dynamics without a stop rule. One step is one pair draw;
/// N(N-1)/2 steps make one diffusion-time unit.
inline CompromiseTrajectory run_compromise_process(const Graph& g, const OccupationVector& n0,
                                                   std::int64_t steps, std::int64_t record_every,
                                                   Rng& rng) {
  if (static_cast<int>(n0.size()) != g.vertex_count())
    throw std::invalid_argument("run_compromise_process: state length != vertex count");
  if (record_every < 1) throw std::invalid_argument("run_compromise_process: record_every must be >= 1");
  const std::int64_t total = occupation_total(n0);
  if (total < 2) throw std::invalid_argument("run_compromise_process: need at least two particles");
  OccupationVector counts = n0;
  CompromiseTrajectory traj;
  traj.particles = total;
  const double steps_per_unit = 0.5 * static_cast<double>(total) * (total - 1);
  auto record = [&](std::int64_t step) {
    traj.times.push_back(step / steps_per_unit);
    std::vector<double> x(counts.size());
    int occ = 0;
    for (std::size_t v = 0; v < counts.size(); ++v) {
      x[v] = static_cast<double>(counts[v]) / total;
      if (counts[v] > 0) ++occ;
    }
    traj.states.push_back(std::move(x));
    traj.occupied_counts.push_back(occ);
  };
  record(0);
  for (std::int64_t step = 1; step <= steps; ++step) {
    auto [i, j] = detail::draw_particle_pair(counts, total, rng);
    if (i != j && g.adjacent(i, j)) {
      if (rng.uniform01() < 0.5) {
        --counts[j];
        ++counts[i];
      } else {
        --counts[i];
        ++counts[j];
      }
    }
    if (step % record_every == 0 || step == steps) record(step);
  }
  return traj;
}

}  // namespace graphmass
