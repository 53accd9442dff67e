#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphmass/graph.hpp"

namespace graphmass {

/// Probability vector on the simplex. Validated on construction:
/// non-negative coordinates summing to 1 within the tolerance (default
/// 1e-12). Coordinates are not renormalized.
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> coords, double tolerance = 1e-12)
      : x_(std::move(coords)) {
    if (x_.empty()) throw std::invalid_argument("SimplexPoint: empty coordinate vector");
    double sum = 0;
    for (double v : x_) {
      if (v < 0) throw std::invalid_argument("SimplexPoint: negative coordinate");
      sum += v;
    }
    if (std::abs(sum - 1.0) > tolerance)
      throw std::invalid_argument("SimplexPoint: coordinates must sum to 1");
  }

  static SimplexPoint uniform(int r) {
    return SimplexPoint(std::vector<double>(r, 1.0 / r), 1e-9);
  }

  static SimplexPoint vertex(int r, int i) {
    std::vector<double> x(r, 0.0);
    x.at(i) = 1.0;
    return SimplexPoint(std::move(x));
  }

  /// Point supported on a face: coordinates `weights` on `face`, zero
  /// elsewhere.
  static SimplexPoint on_face(int r, const VertexSet& face,
                              const std::vector<double>& weights) {
    if (face.size() != weights.size())
      throw std::invalid_argument("SimplexPoint::on_face: size mismatch");
    std::vector<double> x(r, 0.0);
    for (std::size_t k = 0; k < face.size(); ++k) x.at(face[k]) = weights[k];
    return SimplexPoint(std::move(x));
  }

  int dimension() const { return static_cast<int>(x_.size()); }
  double operator[](int i) const { return x_.at(i); }
  const std::vector<double>& coords() const { return x_; }
  operator std::span<const double>() const { return {x_.data(), x_.size()}; }

 private:
  std::vector<double> x_;
};

}  // namespace graphmass
