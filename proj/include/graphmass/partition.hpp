#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphmass/graph.hpp"
#include "graphmass/rational.hpp"

namespace graphmass {

/// Ordered non-negative integer vector a = (a_1, ..., a_r), a multi-index
/// over vertices. Plain value type: std::vector's operator< gives the
/// lexicographic order used everywhere (enumeration, table keys,
/// serialization).
using Partition = std::vector<int>;

inline int partition_order(const Partition& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

inline void validate_partition(const Partition& a) {
  for (int v : a)
    if (v < 0) throw std::invalid_argument("Partition: entries must be non-negative");
}

/// Support supp(a) = {i : a_i > 0} as a sorted VertexSet.
inline VertexSet partition_support(const Partition& a) {
  VertexSet s;
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (a[i] > 0) s.push_back(i);
  return s;
}

/// All a in N_0^r with |a| = n (or all-positive ones), in lexicographic
/// order. Cardinalities are C(n+r-1, r-1) and C(n-1, r-1) respectively.
inline std::vector<Partition> enumerate_partitions(int n, int r, bool positive_only) {
  if (n < 0 || r < 1) throw std::invalid_argument("enumerate_partitions: need n >= 0, r >= 1");
  if (positive_only && n < r)
    throw std::invalid_argument("enumerate_partitions: no positive partitions of n into r parts when n < r");
  std::vector<Partition> out;
  Partition cur(r, 0);
  const int lo = positive_only ? 1 : 0;
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == r - 1) {
      if (left >= lo) {
        cur[pos] = left;
        out.push_back(cur);
      }
      return;
    }
    for (int v = lo; v <= left - lo * (r - 1 - pos); ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

/// Exact multinomial coefficient n! / (a_1! ... a_r!), n = |a|.
inline BigInt multinomial(const Partition& a) {
  validate_partition(a);
  BigInt m = 1;
  int total = 0;
  for (int ai : a) {
    total += ai;
    m *= binomial(total, ai);
  }
  return m;
}

/// x^a = prod_i x_i^{a_i} with the convention 0^0 = 1 (needed on the
/// simplex boundary).
inline double evaluate_monomial(std::span<const double> x, const Partition& a) {
  if (x.size() != a.size())
    throw std::invalid_argument("evaluate_monomial: dimension mismatch");
  double p = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < a[i]; ++k) p *= x[i];
  return p;
}

/// Weights of a moment invariant: an independent set V_I, a zero-sum real
/// vector c over V_I, and a homogeneity order n >= |V_I| + 1.
struct InvariantSpec {
  VertexSet vertices;           // V_I, 0-based sorted
  std::vector<double> weights;  // c, aligned with vertices
  int order = 0;                // n

  void validate() const {
    if (vertices.empty()) throw std::invalid_argument("InvariantSpec: empty vertex set");
    if (weights.size() != vertices.size())
      throw std::invalid_argument("InvariantSpec: weights/vertices size mismatch");
    if (order < static_cast<int>(vertices.size()) + 1)
      throw std::invalid_argument("InvariantSpec: order must be at least |V_I| + 1");
    double sum = 0;
    for (double c : weights) sum += c;
    if (std::abs(sum) > 1e-12)
      throw std::invalid_argument("InvariantSpec: weights must sum to zero");
  }
};

/// Multinomial coefficient over a multi-index b with |b| = m.
inline BigInt multi_binomial(int m, const Partition& b) {
  int s = partition_order(b);
  if (s != m) throw std::invalid_argument("multi_binomial: index does not sum to m");
  return multinomial(b);
}

/// Coefficients f(n,a) = C(n-|V_I|, a-1) C(n, a) c^a over the positive
/// partitions of n supported on V_I, keyed by full-length r-vectors.
/// Defined up to a global scalar: rescaling c by s multiplies every
/// coefficient by s^n.
inline std::map<Partition, double> invariant_coefficients(const InvariantSpec& spec, int r) {
  spec.validate();
  const int s = static_cast<int>(spec.vertices.size());
  const int n = spec.order;
  std::map<Partition, double> out;
  for (const auto& b : enumerate_partitions(n, s, true)) {
    Partition b_minus(s);
    for (int i = 0; i < s; ++i) b_minus[i] = b[i] - 1;
    double f = to_double(BigRat(multi_binomial(n - s, b_minus) * multi_binomial(n, b)));
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < b[i]; ++k) f *= spec.weights[i];
    Partition full(r, 0);
    for (int i = 0; i < s; ++i) {
      if (spec.vertices[i] < 0 || spec.vertices[i] >= r)
        throw std::invalid_argument("invariant_coefficients: vertex out of range");
      full[spec.vertices[i]] = b[i];
    }
    out[full] = f;
  }
  return out;
}

}  // namespace graphmass
