#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphmass/rational.hpp"
#include "graphmass/simplex.hpp"

namespace graphmass {

/// Absorption masses of the undrifted diffusion on the star S_2
/// (hub 1, leaves 2 and 3; 1-based as in the closed form):
///   p_1 = x_1,
///   p_i = (x_1/2) { (2-x_1)/sqrt((2-x_1)^2 - 4 x_i) - 1 },  i in {2,3},
///   p_23 = 1 - p_1 - p_2 - p_3.
/// Requires x_1 in (0,1) (start off the vertices and off the {2,3} face).
struct S2Masses {
  double p1, p2, p3, p23;
};

inline S2Masses s2_absorption_masses(const SimplexPoint& x) {
  if (x.dimension() != 3) throw std::invalid_argument("s2_absorption_masses: need 3 coordinates");
  const double x1 = x[0];
  if (!(x1 > 0.0) || !(x1 < 1.0))
    throw std::invalid_argument("s2_absorption_masses: x_1 must lie strictly in (0,1)");
  auto leaf = [x1](double xi) {
    const double b = 2.0 - x1;
    return 0.5 * x1 * (b / std::sqrt(b * b - 4.0 * xi) - 1.0);
  };
  S2Masses m{x1, leaf(x[1]), leaf(x[2]), 0.0};
  m.p23 = std::max(0.0, 1.0 - m.p1 - m.p2 - m.p3);
  return m;
}

namespace detail {

/// Coefficient recurrence for the eigen-series terms
/// c_{i,l} = (2-i)_l (i+1)_l / (l! (l+1)!):
///   c_{i,0} = 1,  c_{i,l} = c_{i,l-1} (l+1-i)(i+l) / (l(l+1)).
/// The inner sums suffer massive cancellation in floating point for
/// moderate i, so they are accumulated in exact rationals (inputs
/// rationalized from their binary representation) and converted to double
/// only once per outer term.
inline BigRat series_coefficient_step(const BigRat& prev, int i, int l) {
  return prev * BigRat(BigInt(l + 1 - i) * BigInt(i + l), BigInt(l) * BigInt(l + 1));
}

}  // namespace detail

/// Total boundary mass on the vertex {1} of K_2 by time t when starting
/// from (x1, 1-x1): the classic two-type fixation series
///   p1(t) = x1 + sum_{i>=2} (2i-1)(-1)^i e^{-i(i-1)t/2}
///                 sum_{l=0}^{i-2} c_{i,l} (x1^{l+2} - x1^{l+1}).
inline double k2_boundary_mass(double x1, double t, double series_tol = 1e-10,
                               int index_cap = 400) {
  if (!(x1 > 0.0) || !(x1 < 1.0))
    throw std::invalid_argument("k2_boundary_mass: x1 must lie strictly in (0,1)");
  if (t <= 0) return 0.0;
  const BigRat xq(x1);
  double total = x1;
  // an inner polynomial can vanish exactly at a single index (odd degrees
  // at x = 1/2), so demand several consecutive negligible terms
  int small_streak = 0;
  for (int i = 2; i <= index_cap; ++i) {
    BigRat inner(0);
    BigRat coeff(1);
    BigRat power = xq * xq;  // x1^{l+2} at l = 0
    for (int l = 0; l <= i - 2; ++l) {
      if (l > 0) coeff = detail::series_coefficient_step(coeff, i, l);
      inner += coeff * (power - power / xq);
      power *= xq;
    }
    const double term =
        (2.0 * i - 1.0) * (i % 2 == 0 ? 1.0 : -1.0) * std::exp(-0.5 * i * (i - 1) * t) * to_double(inner);
    total += term;
    small_streak = std::abs(term) < series_tol * std::max(std::abs(total), 1e-12)
                       ? small_streak + 1
                       : 0;
    if (i >= 7 && small_streak >= 3) return total;
  }
  throw std::runtime_error("k2_boundary_mass: series did not converge within the index cap");
}

struct ExitSurvival {
  double value = 1.0;   // clamped to [0,1]
  double raw = 1.0;     // partial sum before clamping
  int terms_used = 0;
  bool flagged = false; // raw left [0,1] by more than 10 * series_tol
};

/// Survival P_x(tau_U > t) of the exit time from the interior of a face of
/// size s on the complete graph K_r, starting strictly inside the face
/// (face coordinates sum to 1). Alternating eigen-series
///   sum_{i>=s} (2i-1)(-1)^i e^{-i(i-1)t/2}
///     sum_{l=s-2}^{i-2} c_{i,l} (Q_{l+2}(x) - Q_{l+1}(x)),
/// where Q_l(x) = sum over all-positive partitions of l of the multinomial
/// monomials, evaluated by inclusion-exclusion over face subsets
/// (guarded to s <= 12). Truncation: term small relative to the partial
/// sum and index >= s+5.
inline ExitSurvival complete_graph_exit_survival(int r, int s, std::span<const double> face_coords,
                                                 double t, double series_tol = 1e-10,
                                                 int index_cap = 400) {
  if (s < 2 || s > r) throw std::invalid_argument("complete_graph_exit_survival: need 2 <= s <= r");
  if (s > 12) throw std::invalid_argument("complete_graph_exit_survival: face too large (s > 12)");
  if (static_cast<int>(face_coords.size()) != s)
    throw std::invalid_argument("complete_graph_exit_survival: coordinate count != s");
  double sum = 0.0;
  for (double v : face_coords) {
    if (!(v > 0.0)) throw std::invalid_argument("complete_graph_exit_survival: start must be strictly inside the face");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("complete_graph_exit_survival: face coordinates must sum to 1");
  if (t <= 0) return {};

  // subset sums of the face coordinates, exact
  const int masks = 1 << s;
  std::vector<BigRat> subset_sum(masks, BigRat(0));
  std::vector<int> sign(masks, 0);
  for (int mask = 1; mask < masks; ++mask) {
    int bits = 0;
    BigRat acc(0);
    for (int b = 0; b < s; ++b)
      if (mask & (1 << b)) {
        acc += BigRat(face_coords[b]);
        ++bits;
      }
    subset_sum[mask] = acc;
    sign[mask] = ((s - bits) % 2 == 0) ? 1 : -1;
  }
  // Q_l by inclusion-exclusion, with per-mask running powers
  std::vector<BigRat> power(masks, BigRat(1));
  std::vector<BigRat> q_cache;  // q_cache[l] = Q_l, built incrementally
  q_cache.emplace_back(s == 0 ? 1 : 0);  // Q_0 (unused for s >= 2)
  auto q_value = [&](int l) -> BigRat {  // by value: growing the cache moves it
    while (static_cast<int>(q_cache.size()) <= l) {
      BigRat q(0);
      for (int mask = 1; mask < masks; ++mask) {
        power[mask] *= subset_sum[mask];
        q += sign[mask] * power[mask];
      }
      q_cache.push_back(q);
    }
    return q_cache[l];
  };

  ExitSurvival result;
  double partial = 0.0;
  int small_streak = 0;  // see k2_boundary_mass: single terms can vanish exactly
  for (int i = s; i <= index_cap; ++i) {
    BigRat inner(0);
    BigRat coeff(1);
    for (int l = 1; l <= i - 2; ++l) {
      coeff = detail::series_coefficient_step(coeff, i, l);
      if (l >= s - 2) inner += coeff * (q_value(l + 2) - q_value(l + 1));
    }
    if (s - 2 == 0) inner += q_value(2) - q_value(1);  // l = 0 term, coeff 1
    const double term =
        (2.0 * i - 1.0) * (i % 2 == 0 ? 1.0 : -1.0) * std::exp(-0.5 * i * (i - 1) * t) * to_double(inner);
    partial += term;
    result.terms_used = i - s + 1;
    small_streak = std::abs(term) < series_tol * std::max(std::abs(partial), 1e-12)
                       ? small_streak + 1
                       : 0;
    if (i >= s + 5 && small_streak >= 3) {
      result.raw = partial;
      result.value = std::clamp(partial, 0.0, 1.0);
      result.flagged = partial < -10 * series_tol || partial > 1 + 10 * series_tol;
      return result;
    }
  }
  throw std::runtime_error("complete_graph_exit_survival: series did not converge within the index cap");
}

}  // namespace graphmass
