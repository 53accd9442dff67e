#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <type_traits>
#include <vector>

#include "graphmass/graph.hpp"
#include "graphmass/moment_table.hpp"
#include "graphmass/partition.hpp"
#include "graphmass/rational.hpp"

namespace graphmass {

namespace detail {

/// Solves the integer-augmented system M z = c exactly by Bareiss
/// fraction-free elimination (single exact division per update keeps all
/// intermediates integral), then back-substitutes in rationals.
inline std::vector<BigRat> solve_bareiss(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  BigInt prev = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::runtime_error("solve_bareiss: singular system");
    std::swap(m[piv], m[c]);
    for (int row = c + 1; row < n; ++row) {
      for (int col = c + 1; col <= n; ++col)
        m[row][col] = (m[row][col] * m[c][c] - m[row][c] * m[c][col]) / prev;
      m[row][c] = 0;
    }
    prev = m[c][c];
  }
  std::vector<BigRat> x(n);
  for (int i = n - 1; i >= 0; --i) {
    BigRat s(m[i][n]);
    for (int j = i + 1; j < n; ++j) s -= BigRat(m[i][j]) * x[j];
    x[i] = s / BigRat(m[i][i]);
  }
  return x;
}

inline std::vector<double> solve_dense(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  Eigen::VectorXd x = lu.solve(b);
  if (!x.allFinite()) throw std::runtime_error("solve_dense: singular system");
  return std::vector<double>(x.data(), x.data() + x.size());
}

}  // namespace detail

/// Stationary moments m_a(alpha) of the drifted diffusion for every a with
/// |a| <= max_order, solved order by order: within an order the moments
/// satisfy a coupled linear system whose right-hand side involves only
/// lower orders. Scalar = BigRat gives exact rational tables (alpha must
/// be rational); Scalar = double uses dense LU.
template <typename Scalar>
MomentTable<Scalar> solve_stationary_recurrence(const Graph& g, const Scalar& alpha,
                                                int max_order, std::size_t guard = 100000) {
  static_assert(std::is_same_v<Scalar, BigRat> || std::is_same_v<Scalar, double>);
  if (max_order < 0) throw std::invalid_argument("solve_stationary_recurrence: negative order");
  if (!(alpha > 0)) throw std::invalid_argument("solve_stationary_recurrence: alpha must be positive");
  const int r = g.vertex_count();
  // guard against the largest within-order system up front, before any solve
  if (binomial(max_order + r - 1, r - 1) > BigInt(guard))
    throw std::invalid_argument("solve_stationary_recurrence: state-space guard exceeded");
  MomentTable<Scalar> table;
  table.order = max_order;
  table.alpha = alpha;
  table.entries[Partition(r, 0)] = Scalar(1);  // m_0 = 1

  for (int n = 1; n <= max_order; ++n) {
    const std::vector<Partition> states = enumerate_partitions(n, r, false);
    if (states.size() > guard)
      throw std::invalid_argument("solve_stationary_recurrence: state-space guard exceeded");
    std::map<Partition, int> index;
    for (int i = 0; i < static_cast<int>(states.size()); ++i) index.emplace(states[i], i);
    const int size = static_cast<int>(states.size());

    if constexpr (std::is_same_v<Scalar, BigRat>) {
      // Equation scaled by 2q (alpha = p/q) so the system matrix is integral:
      //   [2q sum_edges a_i a_j + p r n] m_a - q sum a_i(a_i-1) m_{a-e_i+e_j}
      //     = p sum_i a_i m_{a-e_i}
      const BigInt p = numerator(alpha), q = denominator(alpha);
      std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size + 1, 0));
      std::vector<BigRat> rhs(size, BigRat(0));
      for (int row = 0; row < size; ++row) {
        const Partition& a = states[row];
        BigInt e2 = 0;
        for (auto [u, v] : g.edges()) e2 += BigInt(a[u]) * a[v];
        m[row][row] = 2 * q * e2 + p * r * n;
        for (int i = 0; i < r; ++i) {
          if (a[i] >= 2) {
            const BigInt w = q * a[i] * (a[i] - 1);
            for (int j : g.neighbors(i)) {
              Partition b = a;
              --b[i];
              ++b[j];
              m[row][index.at(b)] -= w;
            }
          }
          if (a[i] >= 1) {
            Partition b = a;
            --b[i];
            rhs[row] += BigRat(p * a[i]) * table.entries.at(b);
          }
        }
      }
      BigInt scale = 1;
      for (auto& v : rhs) scale = lcm(scale, denominator(v));
      for (int row = 0; row < size; ++row) {
        BigRat scaled = rhs[row] * BigRat(scale);
        m[row][size] = numerator(scaled);
      }
      std::vector<BigRat> z = detail::solve_bareiss(std::move(m));
      for (int i = 0; i < size; ++i) table.entries[states[i]] = z[i] / BigRat(scale);
    } else {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
      for (int row = 0; row < size; ++row) {
        const Partition& a = states[row];
        double e2 = 0;
        for (auto [u, v] : g.edges()) e2 += static_cast<double>(a[u]) * a[v];
        m(row, row) = e2 + 0.5 * alpha * r * n;
        for (int i = 0; i < r; ++i) {
          if (a[i] >= 2) {
            const double w = 0.5 * a[i] * (a[i] - 1);
            for (int j : g.neighbors(i)) {
              Partition b = a;
              --b[i];
              ++b[j];
              m(row, index.at(b)) -= w;
            }
          }
          if (a[i] >= 1) {
            Partition b = a;
            --b[i];
            rhs(row) += 0.5 * alpha * a[i] * table.entries.at(b);
          }
        }
      }
      std::vector<double> z = detail::solve_dense(m, rhs);
      for (int i = 0; i < size; ++i) table.entries[states[i]] = z[i];
    }
  }
  return table;
}

/// Moments of the symmetric Dirichlet(alpha) law on r cells:
/// prod_i (alpha)_{a_i} / (r alpha)_{|a|}. Coincides with the stationary
/// moments on the complete graph K_r.
template <typename Scalar>
Scalar dirichlet_moment(int r, const Scalar& alpha, const Partition& a) {
  if (r < 1) throw std::invalid_argument("dirichlet_moment: r must be positive");
  validate_partition(a);
  Scalar num(1);
  for (int ai : a) num *= rising_factorial(alpha, ai);
  return num / rising_factorial(Scalar(r * alpha), partition_order(a));
}

/// Ewens sampling formula theta^l / (theta)_n * prod (a_i - 1)! for a
/// partition with l occupied blocks (all block sizes >= 1).
inline double ewens_probability(double theta, const Partition& block_sizes) {
  if (!(theta > 0)) throw std::invalid_argument("ewens_probability: theta must be positive");
  for (int b : block_sizes)
    if (b < 1) throw std::invalid_argument("ewens_probability: block sizes must be >= 1");
  const int l = static_cast<int>(block_sizes.size());
  const int n = partition_order(block_sizes);
  double value = 1.0;
  for (int i = 0; i < l; ++i) value *= theta;
  value /= rising_factorial(theta, n);
  for (int b : block_sizes) value *= to_double(BigRat(factorial(b - 1)));
  return value;
}

}  // namespace graphmass
