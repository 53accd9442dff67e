#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include <cmath>

#include "graphmass/dual_chain.hpp"
#include "graphmass/moment_ode.hpp"
#include "graphmass/rng.hpp"

using namespace graphmass;

namespace {

std::vector<double> random_simplex(int r, Rng& rng) {
  std::vector<double> x(r);
  double sum = 0;
  for (auto& v : x) {
    v = -std::log(1.0 - rng.uniform01());
    sum += v;
  }
  for (auto& v : x) v /= sum;
  return x;
}

}  // namespace

TEST_CASE("C4 worked closed form") {
  // m_{2e2+e4}(t) = x2^2 x4 + (x1+x3) x2 x4 (1 - e^{-2t}) / 2
  const Graph c4 = Graph::cycle(4);
  Rng rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    const SimplexPoint x0(random_simplex(4, rng), 1e-9);
    const std::vector<double> grid{0.1, 1.0, 10.0};
    const auto tables = solve_moment_ode(c4, x0, 3, grid);
    for (std::size_t ti = 0; ti < grid.size(); ++ti) {
      const double t = grid[ti];
      const double expected = x0[1] * x0[1] * x0[3] +
                              0.5 * (x0[0] + x0[2]) * x0[1] * x0[3] * (1.0 - std::exp(-2 * t));
      CHECK(tables[ti].at({0, 2, 0, 1}) == Catch::Approx(expected).margin(1e-8));
    }
  }
}

TEST_CASE("initial condition and bounds") {
  const Graph g = Graph::star(3);
  Rng rng(5);
  const SimplexPoint x0(random_simplex(4, rng), 1e-9);
  const std::vector<double> grid{0.0, 0.3, 2.0};
  const auto tables = solve_moment_ode(g, x0, 3, grid);
  for (const auto& [a, value] : tables[0].entries)
    CHECK(value == Catch::Approx(evaluate_monomial(x0, a)).margin(1e-12));
  for (const auto& table : tables)
    for (const auto& [a, value] : table.entries) {
      CHECK(value >= -1e-10);
      CHECK(value <= 1.0 + 1e-10);
    }
}

TEST_CASE("first order moments are constant (martingale)") {
  for (const Graph& g : {Graph::cycle(4), Graph::star(2), Graph::complete(3)}) {
    Rng rng(17);
    const SimplexPoint x0(random_simplex(g.vertex_count(), rng), 1e-9);
    const std::vector<double> grid{0.0, 0.7, 5.0, 20.0};
    const auto tables = solve_moment_ode(g, x0, 1, grid);
    for (const auto& table : tables)
      for (int i = 0; i < g.vertex_count(); ++i) {
        Partition a(g.vertex_count(), 0);
        a[i] = 1;
        CHECK(table.at(a) == Catch::Approx(x0[i]).margin(1e-10));
      }
  }
}

TEST_CASE("moment tables satisfy the multinomial identity in expectation") {
  const Graph g = Graph::cycle(5);
  Rng rng(23);
  const SimplexPoint x0(random_simplex(5, rng), 1e-9);
  const std::vector<double> grid{0.0, 1.0, 10.0};
  for (int n : {2, 3}) {
    const auto tables = solve_moment_ode(g, x0, n, grid);
    for (const auto& table : tables) {
      double sum = 0;
      for (const auto& [a, value] : table.entries)
        sum += to_double(BigRat(multinomial(a))) * value;
      CHECK(sum == Catch::Approx(1.0).margin(1e-10));
    }
  }
}

TEST_CASE("S2 fourth-order block: spectrum and duality cross-check") {
  // The closed 3-state block {2e1+e2+e3, e1+2e2+e3, e1+e2+2e3} evolves by
  //   m_a' = m_b + m_c - 4 m_a,   m_b' = m_a - 3 m_b,   m_c' = m_a - 3 m_c
  // (monomial decay = sum over adjacent pairs a_i a_j). Its spectrum is
  // {-5, -3, -2}: the diagonal killing on the block is the constant 2, so
  // the block solution is e^{-2t} times the chain transition kernel, whose
  // rates are the negated S2 Laplacian with eigenvalues {0, -1, -3}.
  const Graph s2 = Graph::star(2);
  const std::vector<Partition> block{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  const Eigen::MatrixXd gen = moment_generator(s2, enumerate_partitions(4, 3, false));

  // extract the block rows/cols
  const auto states = enumerate_partitions(4, 3, false);
  std::map<Partition, int> index;
  for (int i = 0; i < static_cast<int>(states.size()); ++i) index[states[i]] = i;
  Eigen::MatrixXd sub(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sub(i, j) = gen(index.at(block[i]), index.at(block[j]));

  // block closure: no coupling out of the block
  for (int i = 0; i < 3; ++i) {
    double off = 0;
    for (int j = 0; j < static_cast<int>(states.size()); ++j) {
      const bool inside = std::find(block.begin(), block.end(), states[j]) != block.end();
      if (!inside) off += std::abs(gen(index.at(block[i]), j));
    }
    CHECK(off == 0.0);
  }

  Eigen::EigenSolver<Eigen::MatrixXd> eigen(sub);
  std::vector<double> spectrum;
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(eigen.eigenvalues()(i).imag()) < 1e-12);
    spectrum.push_back(eigen.eigenvalues()(i).real());
  }
  std::sort(spectrum.begin(), spectrum.end());
  CHECK(spectrum[0] == Catch::Approx(-5.0).margin(1e-9));
  CHECK(spectrum[1] == Catch::Approx(-3.0).margin(1e-9));
  CHECK(spectrum[2] == Catch::Approx(-2.0).margin(1e-9));

  // duality route: m(t) = e^{-2t} P(t) m(0), with P(t) the exact chain
  // kernel started in the block
  Rng rng(6);
  const SimplexPoint x0(random_simplex(3, rng), 1e-9);
  const auto cfg = ChainConfig::undrifted(s2);
  for (double t : {0.2, 1.0, 4.0}) {
    const std::vector<double> grid{t};
    const auto table = solve_moment_ode(s2, x0, 4, grid)[0];
    for (const auto& from : block) {
      const auto kernel = transition_probabilities_exact(cfg, from, t);
      double dual = 0;
      for (const auto& [state, p] : kernel) dual += p * evaluate_monomial(x0, state);
      dual *= std::exp(-2 * t);
      CHECK(table.at(from) == Catch::Approx(dual).margin(1e-10));
    }
  }
}

TEST_CASE("exact feynman-kac evaluation matches the ODE solve") {
  // m(t) = exp(t (R - diag k)) applied to the start monomials, assembled
  // from the chain-side rate rows and killing rates; independent of the
  // moment_generator assembly
  const Graph c4 = Graph::cycle(4);
  const auto cfg = ChainConfig::undrifted(c4);
  const SimplexPoint x0({0.15, 0.35, 0.25, 0.25}, 1e-9);
  const Partition a{0, 2, 0, 1};
  const auto states = reachable_states(cfg, a);
  Eigen::MatrixXd m = rate_matrix(cfg, states);
  for (int i = 0; i < static_cast<int>(states.size()); ++i)
    m(i, i) -= killing_rate(cfg, states[i]);
  Eigen::VectorXd g0(states.size());
  for (int i = 0; i < static_cast<int>(states.size()); ++i)
    g0(i) = evaluate_monomial(x0, states[i]);
  const int row = static_cast<int>(std::find(states.begin(), states.end(), a) -
                                   states.begin());
  for (double t : {0.3, 1.0, 6.0}) {
    const Eigen::VectorXd g = (t * m).exp() * g0;
    const std::vector<double> grid{t};
    const double ode = solve_moment_ode(c4, x0, 3, grid)[0].at(a);
    CHECK(std::abs(g(row) - ode) < 1e-8);
  }
}

TEST_CASE("feynman-kac over simulated dual paths matches the ODE solve") {
  // Monte Carlo evaluation of E_a[x^{a(t)} exp(-int k)] on the C4 block
  const Graph c4 = Graph::cycle(4);
  const auto cfg = ChainConfig::undrifted(c4);
  const SimplexPoint x0({0.1, 0.4, 0.2, 0.3}, 1e-9);
  const Partition a{0, 2, 0, 1};
  const double t = 0.8;
  const int n_paths = 200000;
  double sum = 0, sum_sq = 0;
  for (int k = 0; k < n_paths; ++k) {
    Rng rng(909, k);
    SimulateOptions opt;
    opt.horizon = t;
    const auto path = simulate_path(cfg, a, opt, rng);
    const double value = evaluate_monomial(x0, path.final_state) *
                         std::exp(-path.killing_integral());
    sum += value;
    sum_sq += value * value;
  }
  const double mean = sum / n_paths;
  const double se = std::sqrt((sum_sq / n_paths - mean * mean) / n_paths);
  const std::vector<double> grid{t};
  const double exact = solve_moment_ode(c4, x0, 3, grid)[0].at(a);
  CHECK(std::abs(mean - exact) <= 4 * se);
}

TEST_CASE("long-run moments survive exactly on independent supports") {
  // from an interior start on C4, lim_t m_a(t) is positive iff supp(a) is
  // an independent set
  const Graph c4 = Graph::cycle(4);
  const SimplexPoint x0({0.3, 0.2, 0.25, 0.25}, 1e-9);
  const std::vector<double> grid{60.0};
  for (int n : {2, 3}) {
    const auto table = solve_moment_ode(c4, x0, n, grid)[0];
    for (const auto& [a, value] : table.entries) {
      if (is_independent_set(c4, partition_support(a)))
        CHECK(value > 1e-4);
      else
        CHECK(value < 1e-8);
    }
  }
}

TEST_CASE("invariant drift stays put") {
  // C4, V_I = {2,4}, n = 4: m_{(0,1,0,3)} - 3 m_{(0,2,0,2)} + m_{(0,3,0,1)}
  // equals x2 x4 (x4^2 - 3 x2 x4 + x2^2) for all t
  const Graph c4 = Graph::cycle(4);
  Rng rng(57);
  const SimplexPoint x0(random_simplex(4, rng), 1e-9);
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(k * 1.0);
  const InvariantSpec spec{{1, 3}, {1.0, -1.0}, 4};
  CHECK(invariant_drift_check(c4, spec, x0, grid) < 1e-8);

  // the invariant's t = 0 value has the displayed closed form
  const auto tables = solve_moment_ode(c4, x0, 4, std::vector<double>{0.0, 2.0});
  for (const auto& table : tables) {
    const double combo = table.at({0, 1, 0, 3}) - 3 * table.at({0, 2, 0, 2}) +
                         table.at({0, 3, 0, 1});
    const double x2 = x0[1], x4 = x0[3];
    CHECK(combo == Catch::Approx(x2 * x4 * (x4 * x4 - 3 * x2 * x4 + x2 * x2)).margin(1e-10));
  }

  // S2, V_I = {2,3}, n in {3,4,5}
  const Graph s2 = Graph::star(2);
  const SimplexPoint y0(random_simplex(3, rng), 1e-9);
  for (int n : {3, 4, 5}) {
    const InvariantSpec sspec{{1, 2}, {1.0, -1.0}, n};
    CHECK(invariant_drift_check(s2, sspec, y0, grid) < 1e-8);
  }

  // zero weights: identically zero drift
  const InvariantSpec zero{{1, 3}, {0.0, 0.0}, 4};
  CHECK(invariant_drift_check(c4, zero, x0, grid) == 0.0);

  // V_I must share an adjacent vertex
  const Graph c6 = Graph::cycle(6);
  const SimplexPoint z0(random_simplex(6, rng), 1e-9);
  const InvariantSpec bad{{0, 3}, {1.0, -1.0}, 3};  // opposite vertices of C6
  CHECK_THROWS_AS(invariant_drift_check(c6, bad, z0, grid), std::invalid_argument);
}

TEST_CASE("guards") {
  const Graph c4 = Graph::cycle(4);
  const SimplexPoint x0 = SimplexPoint::uniform(4);
  const std::vector<double> grid{1.0};
  CHECK_THROWS_AS(solve_moment_ode(c4, x0, 99, grid), std::invalid_argument);
  CHECK_THROWS_AS(solve_moment_ode(c4, x0, 0, grid), std::invalid_argument);
  CHECK_THROWS_AS(solve_moment_ode(c4, SimplexPoint::uniform(3), 2, grid),
                  std::invalid_argument);
}
