#pragma once

#include <Eigen/Dense>

#include <vector>

#include "graphmass/graph.hpp"

namespace graphmass {

inline Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  const int r = g.vertex_count();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(r, r);
  for (int v = 0; v < r; ++v) lap(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    lap(u, v) = -1.0;
    lap(v, u) = -1.0;
  }
  return lap;
}

/// Eigenvalues of the graph Laplacian, ascending. Dense symmetric solve;
/// the smallest eigenvalue is 0 up to solver tolerance for connected input.
inline std::vector<double> laplacian_spectrum(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian_matrix(g));
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

/// Second-smallest Laplacian eigenvalue.
inline double algebraic_connectivity(const Graph& g) {
  return laplacian_spectrum(g).at(1);
}

}  // namespace graphmass
