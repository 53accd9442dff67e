#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "graphmass/graph.hpp"
#include "graphmass/rng.hpp"
#include "graphmass/spectrum.hpp"

using namespace graphmass;

namespace {

/// Random connected graph: random spanning tree plus extra edges.
Graph random_connected_graph(int r, int extra_edges, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < r; ++v)
    edges.emplace_back(static_cast<int>(rng.uniform_below(v)), v);
  for (int k = 0; k < extra_edges; ++k) {
    int u = static_cast<int>(rng.uniform_below(r));
    int v = static_cast<int>(rng.uniform_below(r));
    if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph(r, edges);
}

}  // namespace

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(Graph(4, {{0, 1}, {2, 3}}), std::invalid_argument);   // disconnected
  CHECK_THROWS_AS(Graph(3, {{0, 0}, {0, 1}, {1, 2}}), std::invalid_argument);  // self-loop
  CHECK_THROWS_AS(Graph(3, {{0, 3}, {0, 1}, {1, 2}}), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(Graph(1, {}), std::invalid_argument);

  const Graph c4 = Graph::cycle(4);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  int degree_sum = 0;
  for (int v = 0; v < 4; ++v) degree_sum += c4.degree(v);
  CHECK(degree_sum == 2 * c4.edge_count());
}

TEST_CASE("builtin shapes") {
  const Graph s2 = Graph::star(2);
  CHECK(s2.vertex_count() == 3);
  CHECK(s2.degree(0) == 2);
  CHECK(s2.adjacent(0, 1));
  CHECK(s2.adjacent(0, 2));
  CHECK_FALSE(s2.adjacent(1, 2));

  const Graph k32 = Graph::complete_bipartite(3, 2);
  CHECK(k32.edge_count() == 6);
  CHECK_FALSE(k32.adjacent(0, 1));
  CHECK(k32.adjacent(0, 3));

  const Graph pet = Graph::petersen();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  CHECK(graph_diameter(pet) == 2);
}

TEST_CASE("independent sets") {
  const Graph c4 = Graph::cycle(4);
  CHECK(is_independent_set(c4, {0, 2}));      // C4 {1,3}
  CHECK_FALSE(is_independent_set(c4, {0, 1}));  // adjacent pair
  CHECK(is_independent_set(c4, {}));
  CHECK_FALSE(is_independent_set(Graph::complete(4), {1, 3}));  // K4 {2,4}

  for (const Graph& g : {Graph::cycle(4), Graph::star(3), Graph::complete(5)}) {
    CHECK(is_independent_set(g, {}));
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(is_independent_set(g, {v}));
  }
  CHECK_THROWS_AS(is_independent_set(c4, {0, 7}), std::invalid_argument);
}

TEST_CASE("graph reduction") {
  // S2: identifying the two leaves gives K2
  const Graph s2 = Graph::star(2);
  const Graph reduced = reduce_graph(s2, 1, 2);
  CHECK(reduced.vertex_count() == 2);
  CHECK(reduced.edge_count() == 1);
  CHECK(reduced.adjacent(0, 1));

  // C4: identifying opposite vertices 2 and 4 (0-based 1, 3) gives the path
  // 1 - (2+4) - 3, i.e. a star S2 with hub at the merged vertex
  const Graph c4 = Graph::cycle(4);
  const Graph path = reduce_graph(c4, 1, 3);
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);
  CHECK(path.degree(1) == 2);
  CHECK(path.adjacent(0, 1));
  CHECK(path.adjacent(1, 2));
  CHECK_FALSE(path.adjacent(0, 2));

  // neighbourhoods differ on K2
  CHECK_THROWS_AS(reduce_graph(Graph::complete(2), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(reduce_graph(c4, 0, 1), std::invalid_argument);

  // complete graphs reduce to complete graphs on any vertex pair... except
  // adjacent pairs have differing neighbourhoods, so K_r never reduces
  CHECK_THROWS_AS(reduce_graph(Graph::complete(4), 0, 2), std::invalid_argument);

  // reduction keeps the graph connected (bipartite examples)
  const Graph k33 = Graph::complete_bipartite(3, 3);
  const Graph k23 = reduce_graph(k33, 0, 1);
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
}

TEST_CASE("independent set enumeration") {
  const Graph c4 = Graph::cycle(4);
  const auto maximal = enumerate_independent_sets(c4, true);
  REQUIRE(maximal.size() == 2);
  CHECK(maximal[0] == VertexSet{0, 2});
  CHECK(maximal[1] == VertexSet{1, 3});

  const auto all = enumerate_independent_sets(c4, false);
  CHECK(all.size() == 6);  // 4 singletons + 2 pairs

  const Graph k32 = Graph::complete_bipartite(3, 2);
  const auto k32_maximal = enumerate_independent_sets(k32, true);
  REQUIRE(k32_maximal.size() == 2);
  CHECK(k32_maximal[0] == VertexSet{0, 1, 2});
  CHECK(k32_maximal[1] == VertexSet{3, 4});

  for (int r : {2, 3, 5}) {
    const auto sets = enumerate_independent_sets(Graph::complete(r), false);
    REQUIRE(static_cast<int>(sets.size()) == r);
    for (int v = 0; v < r; ++v) CHECK(sets[v] == VertexSet{v});
  }
}

TEST_CASE("laplacian spectrum on known graphs") {
  // S2: eigenvalues {0, 1, 3}
  const auto s2 = laplacian_spectrum(Graph::star(2));
  REQUIRE(s2.size() == 3);
  CHECK(std::abs(s2[0]) < 1e-10);
  CHECK(s2[1] == Catch::Approx(1.0).margin(1e-10));
  CHECK(s2[2] == Catch::Approx(3.0).margin(1e-10));

  // K2: {0, 2}
  const auto k2 = laplacian_spectrum(Graph::complete(2));
  CHECK(std::abs(k2[0]) < 1e-10);
  CHECK(k2[1] == Catch::Approx(2.0).margin(1e-10));

  // C4 oracle: circulant eigenvalues 2 - 2 cos(2 pi k / 4), sorted
  std::vector<double> expected;
  for (int k = 0; k < 4; ++k) expected.push_back(2.0 - 2.0 * std::cos(2.0 * M_PI * k / 4.0));
  std::sort(expected.begin(), expected.end());
  const auto c4 = laplacian_spectrum(Graph::cycle(4));
  for (int k = 0; k < 4; ++k) CHECK(c4[k] == Catch::Approx(expected[k]).margin(1e-10));
}

TEST_CASE("laplacian spectrum properties") {
  Rng rng(20240811);
  std::vector<Graph> graphs{Graph::cycle(4),  Graph::star(2),
                            Graph::complete(4), Graph::complete_bipartite(3, 2),
                            Graph::petersen()};
  for (int k = 0; k < 6; ++k) graphs.push_back(random_connected_graph(5 + k, 4, rng));
  for (const auto& g : graphs) {
    const auto spectrum = laplacian_spectrum(g);
    double sum = std::accumulate(spectrum.begin(), spectrum.end(), 0.0);
    int degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(sum == Catch::Approx(static_cast<double>(degree_sum)).margin(1e-8));
    CHECK(std::abs(spectrum[0]) < 1e-10);
    const double bound = 4.0 / (g.vertex_count() * graph_diameter(g));
    CHECK(algebraic_connectivity(g) >= bound - 1e-10);
    CHECK(algebraic_connectivity(g) > 0.0);
  }
}
