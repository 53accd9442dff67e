#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphmass/graph.hpp"
#include "graphmass/moment_table.hpp"
#include "graphmass/partition.hpp"
#include "graphmass/simplex.hpp"

namespace graphmass {

/// Generator of the closed linear system satisfied by the moments
/// m_a(t) = E_x[(x(t))^a] of the undrifted diffusion, |a| = n fixed:
///   d/dt m_a = sum_{i, j~i} a_i(a_i-1)/2 m_{a-e_i+e_j}
///              - (sum_{i~j edges} a_i a_j) m_a.
inline Eigen::MatrixXd moment_generator(const Graph& g, const std::vector<Partition>& states) {
  std::map<Partition, int> index;
  for (int i = 0; i < static_cast<int>(states.size()); ++i) index.emplace(states[i], i);
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(states.size(), states.size());
  for (int row = 0; row < static_cast<int>(states.size()); ++row) {
    const Partition& a = states[row];
    for (int i = 0; i < g.vertex_count(); ++i) {
      if (a[i] < 2) continue;
      const double rate = 0.5 * a[i] * (a[i] - 1);
      for (int j : g.neighbors(i)) {
        Partition b = a;
        --b[i];
        ++b[j];
        gen(row, index.at(b)) += rate;
      }
    }
    double decay = 0.0;
    for (auto [u, v] : g.edges()) decay += static_cast<double>(a[u]) * a[v];
    gen(row, row) -= decay;
  }
  return gen;
}

/// Solves the order-n moment system by matrix exponentiation, starting
/// from m_a(0) = x0^a, and returns one table per requested time.
inline std::vector<MomentTable<double>> solve_moment_ode(const Graph& g, const SimplexPoint& x0,
                                                         int n, std::span<const double> t_grid,
                                                         std::size_t guard = 100000) {
  if (n < 1) throw std::invalid_argument("solve_moment_ode: order must be >= 1");
  if (x0.dimension() != g.vertex_count())
    throw std::invalid_argument("solve_moment_ode: x0 dimension != vertex count");
  if (binomial(n + g.vertex_count() - 1, g.vertex_count() - 1) > BigInt(guard))
    throw std::invalid_argument("solve_moment_ode: state-space guard exceeded");
  const std::vector<Partition> states = enumerate_partitions(n, g.vertex_count(), false);
  const Eigen::MatrixXd gen = moment_generator(g, states);
  Eigen::VectorXd m0(states.size());
  for (int i = 0; i < static_cast<int>(states.size()); ++i)
    m0(i) = evaluate_monomial(x0, states[i]);
  std::vector<MomentTable<double>> tables;
  tables.reserve(t_grid.size());
  for (double t : t_grid) {
    if (t < 0) throw std::invalid_argument("solve_moment_ode: negative time");
    Eigen::VectorXd m = t == 0 ? m0 : Eigen::VectorXd((t * gen).exp() * m0);
    MomentTable<double> table;
    table.order = n;
    table.time = t;
    for (int i = 0; i < static_cast<int>(states.size()); ++i) table.entries[states[i]] = m(i);
    tables.push_back(std::move(table));
  }
  return tables;
}

/// Evaluates the invariant combination sum_a f(n,a) m_a(t) over the time
/// grid and returns max_t |value(t) - value(0)|. Requires V_I to share an
/// adjacent vertex (some j with V_I a subset of N(j)).
inline double invariant_drift_check(const Graph& g, const InvariantSpec& spec,
                                    const SimplexPoint& x0, std::span<const double> t_grid) {
  spec.validate();
  bool shared = false;
  for (int j = 0; j < g.vertex_count() && !shared; ++j) {
    bool all = true;
    for (int v : spec.vertices)
      if (v == j || !g.adjacent(v, j)) {
        all = false;
        break;
      }
    shared = all;
  }
  if (!shared)
    throw std::invalid_argument("invariant_drift_check: V_I does not share an adjacent vertex");
  if (!is_independent_set(g, spec.vertices))
    throw std::invalid_argument("invariant_drift_check: V_I is not an independent set");

  const auto coeffs = invariant_coefficients(spec, g.vertex_count());
  std::vector<double> grid(t_grid.begin(), t_grid.end());
  if (grid.empty() || grid.front() != 0.0) grid.insert(grid.begin(), 0.0);
  const auto tables = solve_moment_ode(g, x0, spec.order, grid);
  double base = 0.0, max_dev = 0.0;
  for (std::size_t ti = 0; ti < tables.size(); ++ti) {
    double value = 0.0;
    for (const auto& [a, f] : coeffs) value += f * tables[ti].at(a);
    if (ti == 0)
      base = value;
    else
      max_dev = std::max(max_dev, std::abs(value - base));
  }
  return max_dev;
}

}  // namespace graphmass
