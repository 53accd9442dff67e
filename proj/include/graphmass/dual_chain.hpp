#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "graphmass/graph.hpp"
#include "graphmass/partition.hpp"
#include "graphmass/rng.hpp"

namespace graphmass {

enum class ChainVariant { collision, collision_with_erasure };

/// Configuration of a dual chain: the collision chain on partitions of a
/// fixed order (alpha = 0), or the drifted chain on the integer lattice
/// whose erasure moves shrink |a| (alpha > 0).
struct ChainConfig {
  Graph graph;
  double alpha = 0.0;
  ChainVariant variant = ChainVariant::collision;

  static ChainConfig undrifted(Graph g) {
    return {std::move(g), 0.0, ChainVariant::collision};
  }
  static ChainConfig drifted(Graph g, double alpha) {
    if (!(alpha > 0))
      throw std::invalid_argument("ChainConfig::drifted: alpha must be positive");
    return {std::move(g), alpha, ChainVariant::collision_with_erasure};
  }

  bool drifted_variant() const { return variant == ChainVariant::collision_with_erasure; }

  void validate_state(const Partition& a) const {
    if (static_cast<int>(a.size()) != graph.vertex_count())
      throw std::invalid_argument("ChainConfig: state length != vertex count");
    validate_partition(a);
  }
};

struct Move {
  Partition target;
  double rate;
};

struct RateRow {
  std::vector<Move> moves;
  double total_rate = 0.0;
  double diagonal() const { return -total_rate; }
};

/// Out-moves from state a: collisions a -> a - e_i + e_j at rate
/// a_i(a_i-1)/2 for each i and j ~ i; with drift, also erasures
/// a -> a - e_i at rate alpha a_i / 2.
inline RateRow rate_row(const ChainConfig& cfg, const Partition& a) {
  cfg.validate_state(a);
  const int r = cfg.graph.vertex_count();
  RateRow row;
  for (int i = 0; i < r; ++i) {
    if (a[i] >= 2) {
      const double rate = 0.5 * a[i] * (a[i] - 1);
      for (int j : cfg.graph.neighbors(i)) {
        Partition b = a;
        --b[i];
        ++b[j];
        row.moves.push_back({std::move(b), rate});
        row.total_rate += rate;
      }
    }
  }
  if (cfg.drifted_variant()) {
    for (int i = 0; i < r; ++i) {
      if (a[i] >= 1) {
        Partition b = a;
        --b[i];
        row.moves.push_back({std::move(b), 0.5 * cfg.alpha * a[i]});
        row.total_rate += 0.5 * cfg.alpha * a[i];
      }
    }
  }
  return row;
}

/// Killing rate of the Feynman-Kac representation:
///   k(a) = sum_{i~j} a_i a_j / 2 - sum_i d_i a_i (a_i - 1) / 2,
/// plus alpha (r-1) |a| / 2 for the drifted variant. May be negative in
/// the undrifted case; non-positive whenever supp(a) is independent.
inline double killing_rate(const ChainConfig& cfg, const Partition& a) {
  cfg.validate_state(a);
  double k = 0.0;
  for (auto [u, v] : cfg.graph.edges()) k += static_cast<double>(a[u]) * a[v];
  for (int i = 0; i < cfg.graph.vertex_count(); ++i)
    k -= 0.5 * cfg.graph.degree(i) * a[i] * (a[i] - 1.0);
  if (cfg.drifted_variant())
    k += 0.5 * cfg.alpha * (cfg.graph.vertex_count() - 1) * partition_order(a);
  return k;
}

/// One Gillespie path. Segment i is (states[i], holding_times[i],
/// killing_increments[i]); final_state is the state at the end of the run
/// (absorbing state, or the state occupied at the horizon). The last
/// recorded segment of a horizon run is truncated at the horizon.
struct ChainPath {
  std::vector<Partition> states;
  std::vector<double> holding_times;
  std::vector<double> killing_increments;  // k(state) * holding time
  Partition final_state;
  double total_time = 0.0;
  bool absorbed = false;
  std::uint64_t events = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  double killing_integral() const {
    double s = 0.0;
    for (double v : killing_increments) s += v;
    return s;
  }
};

struct SimulateOptions {
  std::optional<double> horizon;           // absent: run to absorption
  std::uint64_t max_events = 10'000'000;   // guards non-absorbing runs
  bool record_segments = true;             // false: keep only summary fields
};

/// Exact event-driven simulation: exponential holding time at the total
/// exit rate, move chosen proportionally to rates. Throws when the event
/// budget is exhausted (e.g. absorption requested from a state the
/// undrifted chain can never absorb).
inline ChainPath simulate_path(const ChainConfig& cfg, const Partition& a0,
                               const SimulateOptions& opt, Rng& rng) {
  cfg.validate_state(a0);
  if (opt.horizon && !(*opt.horizon > 0))
    throw std::invalid_argument("simulate_path: horizon must be positive");
  ChainPath path;
  Partition a = a0;
  double t = 0.0;
  while (true) {
    RateRow row = rate_row(cfg, a);
    if (row.moves.empty()) {
      // absorbing state: in horizon mode it still contributes killing up
      // to the horizon
      if (opt.horizon && opt.record_segments && t < *opt.horizon) {
        const double partial = *opt.horizon - t;
        path.states.push_back(a);
        path.holding_times.push_back(partial);
        path.killing_increments.push_back(killing_rate(cfg, a) * partial);
      }
      if (opt.horizon) t = *opt.horizon;
      path.absorbed = true;
      break;
    }
    const double hold = rng.exponential(row.total_rate);
    if (opt.horizon && t + hold >= *opt.horizon) {
      const double partial = *opt.horizon - t;
      if (opt.record_segments) {
        path.states.push_back(a);
        path.holding_times.push_back(partial);
        path.killing_increments.push_back(killing_rate(cfg, a) * partial);
      }
      t = *opt.horizon;
      break;
    }
    if (opt.record_segments) {
      path.states.push_back(a);
      path.holding_times.push_back(hold);
      path.killing_increments.push_back(killing_rate(cfg, a) * hold);
    }
    t += hold;
    ++path.events;
    if (path.events > opt.max_events)
      throw std::runtime_error("simulate_path: event budget exceeded");
    double u = rng.uniform01() * row.total_rate;
    std::size_t pick = 0;
    for (; pick + 1 < row.moves.size(); ++pick) {
      u -= row.moves[pick].rate;
      if (u <= 0) break;
    }
    a = row.moves[pick].target;
  }
  path.final_state = a;
  path.total_time = opt.horizon ? std::min(t, *opt.horizon) : t;
  return path;
}

/// Closure of {a0} under chain moves, sorted lexicographically. Guarded.
inline std::vector<Partition> reachable_states(const ChainConfig& cfg, const Partition& a0,
                                               std::size_t guard = 100000) {
  cfg.validate_state(a0);
  std::map<Partition, int> seen;
  std::queue<Partition> frontier;
  seen.emplace(a0, 0);
  frontier.push(a0);
  while (!frontier.empty()) {
    Partition a = frontier.front();
    frontier.pop();
    for (auto& mv : rate_row(cfg, a).moves) {
      if (seen.emplace(mv.target, 0).second) {
        if (seen.size() > guard)
          throw std::invalid_argument("reachable_states: state-space guard exceeded");
        frontier.push(mv.target);
      }
    }
  }
  std::vector<Partition> states;
  states.reserve(seen.size());
  for (auto& [s, _] : seen) states.push_back(s);
  return states;
}

/// Dense rate matrix of the chain restricted to `states` (which must be
/// move-closed, as produced by reachable_states).
inline Eigen::MatrixXd rate_matrix(const ChainConfig& cfg, const std::vector<Partition>& states) {
  std::map<Partition, int> index;
  for (int i = 0; i < static_cast<int>(states.size()); ++i) index.emplace(states[i], i);
  Eigen::MatrixXd rates = Eigen::MatrixXd::Zero(states.size(), states.size());
  for (int i = 0; i < static_cast<int>(states.size()); ++i) {
    RateRow row = rate_row(cfg, states[i]);
    for (auto& mv : row.moves) {
      auto it = index.find(mv.target);
      if (it == index.end())
        throw std::invalid_argument("rate_matrix: state list is not move-closed");
      rates(i, it->second) += mv.rate;
    }
    rates(i, i) = row.diagonal();
  }
  return rates;
}

/// Transition probabilities P_a0(a(t) = .) by matrix exponentiation of the
/// rate matrix on the reachable set. Row must be stochastic to 1e-10.
inline std::map<Partition, double> transition_probabilities_exact(
    const ChainConfig& cfg, const Partition& a0, double t, std::size_t guard = 100000) {
  if (t < 0) throw std::invalid_argument("transition_probabilities_exact: t must be >= 0");
  const std::vector<Partition> states = reachable_states(cfg, a0, guard);
  std::map<Partition, int> index;
  for (int i = 0; i < static_cast<int>(states.size()); ++i) index.emplace(states[i], i);
  const Eigen::MatrixXd transition = (t * rate_matrix(cfg, states)).exp();
  const int row = index.at(a0);
  double sum = 0.0;
  std::map<Partition, double> out;
  for (int j = 0; j < static_cast<int>(states.size()); ++j) {
    out[states[j]] = transition(row, j);
    sum += transition(row, j);
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::runtime_error("transition_probabilities_exact: row sum drifted from 1");
  return out;
}

enum class LongRunBehavior { absorbs_into_01, uniform_on_positive_partitions };

/// Dichotomy for the undrifted chain: |a0| <= r ends in a 0/1 state;
/// |a0| > r converges to the uniform law on the positive partitions.
inline LongRunBehavior classify_long_run(const ChainConfig& cfg, const Partition& a0) {
  if (cfg.drifted_variant())
    throw std::invalid_argument("classify_long_run: drifted chains always absorb at 0");
  cfg.validate_state(a0);
  return partition_order(a0) <= cfg.graph.vertex_count()
             ? LongRunBehavior::absorbs_into_01
             : LongRunBehavior::uniform_on_positive_partitions;
}

}  // namespace graphmass
