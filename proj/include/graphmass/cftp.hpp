#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphmass/graph.hpp"
#include "graphmass/parallel.hpp"
#include "graphmass/partition.hpp"
#include "graphmass/rational.hpp"
#include "graphmass/rng.hpp"
#include "graphmass/stationary.hpp"

namespace graphmass {

/// Backward-simulation sampler for the drifted dual chain: runs the chain
/// to total erasure and returns exp(-int_0^tau k(a(s)) ds), an unbiased
/// draw whose mean is the stationary moment m_a(alpha). The erasure time
/// certifies independence from the infinite past, which is the
/// coupling-from-the-past reading of the procedure.
///
/// The per-event interval layout is the literal one: one slot per
/// (vertex, neighbour) pair with weight a_i(a_i-1), then one erasure slot
/// per vertex with weight alpha a_i, rebuilt each event in O(|E| + r).
class CftpSampler {
 public:
  CftpSampler(const Graph& g, double alpha) : graph_(&g), alpha_(alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("CftpSampler: alpha must be positive");
    const int r = g.vertex_count();
    for (int i = 0; i < r; ++i)
      for (int j : g.neighbors(i)) slots_.emplace_back(i, j);
    for (int i = 0; i < r; ++i) slots_.emplace_back(i, -1);  // erasure slots
    cumulative_.resize(slots_.size());
    state_.resize(r);
  }

  /// One draw. The output is positive and can exceed 1 on paths whose
  /// accumulated killing is negative; only the mean is a moment.
  double sample(const Partition& a0, Rng& rng) {
    const Graph& g = *graph_;
    const int r = g.vertex_count();
    if (static_cast<int>(a0.size()) != r)
      throw std::invalid_argument("CftpSampler: sample length != vertex count");
    std::int64_t n = 0;
    for (int i = 0; i < r; ++i) {
      if (a0[i] < 0) throw std::invalid_argument("CftpSampler: negative entry");
      state_[i] = a0[i];
      n += a0[i];
    }
    if (n < 1) throw std::invalid_argument("CftpSampler: need at least one particle");
    double killing_accum = 0.0;
    last_events_ = 0;
    while (n > 0) {
      // interval weights and total event rate (rate = total weight / 2)
      double total = 0.0;
      for (std::size_t slot = 0; slot < slots_.size(); ++slot) {
        const auto [i, j] = slots_[slot];
        const double w = j >= 0 ? static_cast<double>(state_[i]) * (state_[i] - 1)
                                : alpha_ * state_[i];
        total += w;
        cumulative_[slot] = total;
      }
      const double rate = 0.5 * total;
      const double hold = rng.exponential(rate);
      killing_accum += killing(n) * hold;
      const double u = rng.uniform01() * total;
      std::size_t pick = 0;
      while (pick + 1 < cumulative_.size() && u > cumulative_[pick]) ++pick;
      const auto [i, j] = slots_[pick];
      if (j >= 0) {
        --state_[i];
        ++state_[j];
      } else {
        --state_[i];
        --n;
      }
      ++last_events_;
      if (last_events_ > max_events_)
        throw std::runtime_error("CftpSampler: event budget exceeded");
    }
    return std::exp(-killing_accum);
  }

  std::int64_t last_events() const { return last_events_; }

 private:
  double killing(std::int64_t n) const {
    const Graph& g = *graph_;
    double k = 0.5 * alpha_ * (g.vertex_count() - 1) * n;
    for (auto [u, v] : g.edges()) k += static_cast<double>(state_[u]) * state_[v];
    for (int i = 0; i < g.vertex_count(); ++i)
      k -= 0.5 * g.degree(i) * state_[i] * (state_[i] - 1.0);
    return k;
  }

  const Graph* graph_;
  double alpha_;
  std::vector<std::pair<int, int>> slots_;
  std::vector<double> cumulative_;
  std::vector<std::int64_t> state_;
  std::int64_t last_events_ = 0;
  std::int64_t max_events_ = 10'000'000;
};

inline double cftp_sample(const Graph& g, const Partition& a, double alpha, Rng& rng) {
  CftpSampler sampler(g, alpha);
  return sampler.sample(a, rng);
}

/// Monte Carlo mean with its standard error and full seed provenance.
struct EstimateResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::string graph;
  Partition target;
  double alpha = 0.0;
};

namespace detail {

/// Sequential Welford pass over per-replicate values; the replicate order
/// is fixed, so results are identical for every thread count.
inline std::pair<double, double> welford(const std::vector<double>& values) {
  double mean = 0.0, m2 = 0.0;
  std::int64_t count = 0;
  for (double v : values) {
    ++count;
    const double delta = v - mean;
    mean += delta / count;
    m2 += delta * (v - mean);
  }
  const double variance = count > 1 ? m2 / (count - 1) : 0.0;
  return {mean, std::sqrt(variance / count)};
}

}  // namespace detail

/// Mean of independent CftpSampler draws. Replicate k uses Rng(seed, k);
/// the reduction runs in replicate order, so the result is deterministic
/// given (inputs, seed) regardless of the thread count.
inline EstimateResult estimate_moment(const Graph& g, const Partition& a, double alpha,
                                      std::int64_t n_samples, std::uint64_t seed,
                                      int threads = 1) {
  if (n_samples < 2) throw std::invalid_argument("estimate_moment: need at least 2 samples");
  std::vector<double> values(n_samples);
  parallel_chunks(n_samples, threads, [&](std::int64_t begin, std::int64_t end) {
    CftpSampler sampler(g, alpha);
    for (std::int64_t k = begin; k < end; ++k) {
      Rng rng(seed, static_cast<std::uint64_t>(k));
      values[k] = sampler.sample(a, rng);
    }
  });
  auto [mean, se] = detail::welford(values);
  return {mean, se, n_samples, seed, g.name(), a, alpha};
}

/// Mean event count of the sampler, for cost profiling against the
/// n + n(n-1)/(2 alpha) step-count shape.
inline EstimateResult step_count_statistics(const Graph& g, const Partition& a, double alpha,
                                            std::int64_t n_samples, std::uint64_t seed,
                                            int threads = 1) {
  if (n_samples < 2) throw std::invalid_argument("step_count_statistics: need at least 2 samples");
  std::vector<double> values(n_samples);
  parallel_chunks(n_samples, threads, [&](std::int64_t begin, std::int64_t end) {
    CftpSampler sampler(g, alpha);
    for (std::int64_t k = begin; k < end; ++k) {
      Rng rng(seed, static_cast<std::uint64_t>(k));
      sampler.sample(a, rng);
      values[k] = static_cast<double>(sampler.last_events());
    }
  });
  auto [mean, se] = detail::welford(values);
  return {mean, se, n_samples, seed, g.name(), a, alpha};
}

/// Expected sample probability (marginal likelihood) of the sample a:
/// multinomial(a) * m_a(alpha), exact.
inline BigRat expected_sample_probability_exact(const Graph& g, const Partition& a,
                                                const BigRat& alpha) {
  const auto table = solve_stationary_recurrence<BigRat>(g, alpha, partition_order(a));
  return BigRat(multinomial(a)) * table.at(a);
}

/// Monte Carlo version: the CFTP estimate scaled by the multinomial
/// coefficient.
inline EstimateResult expected_sample_probability_mc(const Graph& g, const Partition& a,
                                                     double alpha, std::int64_t n_samples,
                                                     std::uint64_t seed, int threads = 1) {
  EstimateResult est = estimate_moment(g, a, alpha, n_samples, seed, threads);
  const double coeff = to_double(BigRat(multinomial(a)));
  est.mean *= coeff;
  est.std_error *= coeff;
  return est;
}

/// Candidate comparison: expected sample probabilities and the full
/// pairwise Bayes-factor matrix B_gh = p_g / p_h.
struct SelectionReport {
  Partition sample;
  bool exact = true;
  BigRat alpha_exact;
  double alpha = 0.0;
  std::vector<std::string> graphs;
  std::vector<BigRat> exact_probabilities;            // exact mode
  std::vector<EstimateResult> estimates;              // Monte Carlo mode
  std::vector<std::vector<BigRat>> bayes_exact;       // exact mode
  std::vector<std::vector<double>> bayes;             // both modes
  std::vector<std::vector<double>> bayes_std_error;   // Monte Carlo mode (delta method)
};

inline SelectionReport select_graph_exact(const std::vector<Graph>& candidates,
                                          const Partition& a, const BigRat& alpha) {
  if (candidates.empty()) throw std::invalid_argument("select_graph: no candidates");
  SelectionReport report;
  report.sample = a;
  report.exact = true;
  report.alpha_exact = alpha;
  report.alpha = to_double(alpha);
  for (const auto& g : candidates) {
    if (g.vertex_count() != static_cast<int>(a.size()))
      throw std::invalid_argument("select_graph: candidate vertex count != sample length");
    report.graphs.push_back(g.name());
    report.exact_probabilities.push_back(expected_sample_probability_exact(g, a, alpha));
  }
  const std::size_t m = candidates.size();
  report.bayes_exact.assign(m, std::vector<BigRat>(m));
  report.bayes.assign(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      report.bayes_exact[i][j] = report.exact_probabilities[i] / report.exact_probabilities[j];
      report.bayes[i][j] = to_double(report.bayes_exact[i][j]);
    }
  return report;
}

inline SelectionReport select_graph_mc(const std::vector<Graph>& candidates, const Partition& a,
                                       double alpha, std::int64_t n_samples, std::uint64_t seed,
                                       int threads = 1) {
  if (candidates.empty()) throw std::invalid_argument("select_graph: no candidates");
  SelectionReport report;
  report.sample = a;
  report.exact = false;
  report.alpha = alpha;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const auto& g = candidates[c];
    if (g.vertex_count() != static_cast<int>(a.size()))
      throw std::invalid_argument("select_graph: candidate vertex count != sample length");
    report.graphs.push_back(g.name());
    // distinct stream block per candidate so estimates are independent
    report.estimates.push_back(expected_sample_probability_mc(
        g, a, alpha, n_samples, seed + 0x51a7e5eedULL * (c + 1), threads));
  }
  const std::size_t m = candidates.size();
  report.bayes.assign(m, std::vector<double>(m));
  report.bayes_std_error.assign(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double pi = report.estimates[i].mean, pj = report.estimates[j].mean;
      report.bayes[i][j] = pi / pj;
      if (i == j) {
        report.bayes_std_error[i][j] = 0.0;
      } else {
        const double ri = report.estimates[i].std_error / pi;
        const double rj = report.estimates[j].std_error / pj;
        report.bayes_std_error[i][j] = std::abs(pi / pj) * std::sqrt(ri * ri + rj * rj);
      }
    }
  return report;
}

}  // namespace graphmass
