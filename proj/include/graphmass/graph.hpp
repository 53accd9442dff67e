#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphmass {

/// Vertices are 0-based everywhere inside the library; the I/O layer
/// (file formats, CLI, JSON reports) converts to the 1-based labels used
/// in graph files. A VertexSet is a sorted list of distinct vertices.
using VertexSet = std::vector<int>;

/// Immutable undirected connected simple graph.
///
/// Construction validates: no self-loops, endpoints in range, and
/// connectivity (breadth-first traversal); disconnected input is a hard
/// error because everything downstream assumes a single component.
/// Duplicate edges in the input are collapsed.
class Graph {
 public:
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
        std::string name = "")
      : r_(vertex_count), name_(std::move(name)) {
    if (r_ < 2) throw std::invalid_argument("Graph: need at least 2 vertices");
    std::set<std::pair<int, int>> uniq;
    for (auto [u, v] : edges) {
      if (u < 0 || u >= r_ || v < 0 || v >= r_)
        throw std::invalid_argument("Graph: vertex index out of range");
      if (u == v) throw std::invalid_argument("Graph: self-loops not allowed");
      uniq.insert({std::min(u, v), std::max(u, v)});
    }
    adj_.assign(static_cast<std::size_t>(r_) * r_, false);
    neighbors_.assign(r_, {});
    edges_.assign(uniq.begin(), uniq.end());
    for (auto [u, v] : edges_) {
      adj_[index(u, v)] = adj_[index(v, u)] = true;
      neighbors_[u].push_back(v);
      neighbors_[v].push_back(u);
    }
    for (auto& ns : neighbors_) std::sort(ns.begin(), ns.end());
    if (!connected()) throw std::invalid_argument("Graph: input is not connected");
  }

  static Graph complete(int r) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < r; ++u)
      for (int v = u + 1; v < r; ++v) e.emplace_back(u, v);
    return Graph(r, e, "K" + std::to_string(r));
  }

  static Graph cycle(int r) {
    if (r < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < r; ++u) e.emplace_back(u, (u + 1) % r);
    return Graph(r, e, "C" + std::to_string(r));
  }

  /// Star S_leaves = K_{1,leaves}; the hub is vertex 0.
  static Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star: need at least 1 leaf");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, e, "S" + std::to_string(leaves));
  }

  /// Complete bipartite K_{r,s} with parts {0..r-1} and {r..r+s-1}.
  static Graph complete_bipartite(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("complete_bipartite: empty part");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < r; ++u)
      for (int v = r; v < r + s; ++v) e.emplace_back(u, v);
    return Graph(r + s, e, "K" + std::to_string(r) + "," + std::to_string(s));
  }

  /// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
  static Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(5 + i, 5 + (i + 2) % 5);
      e.emplace_back(i, i + 5);
    }
    return Graph(10, e, "petersen");
  }

  int vertex_count() const { return r_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(neighbors_.at(v).size()); }
  const std::vector<int>& neighbors(int v) const { return neighbors_.at(v); }
  bool adjacent(int u, int v) const { return adj_.at(index(u, v)); }
  /// Edges as (u, v) pairs with u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * r_ + v;
  }

  bool connected() const {
    std::vector<bool> seen(r_, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int found = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : neighbors_[u])
        if (!seen[v]) {
          seen[v] = true;
          ++found;
          q.push(v);
        }
    }
    return found == r_;
  }

  int r_;
  std::string name_;
  std::vector<bool> adj_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::pair<int, int>> edges_;
};

inline void validate_vertex_set(const Graph& g, const VertexSet& s) {
  int prev = -1;
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("VertexSet: vertex index out of range");
    if (v <= prev)
      throw std::invalid_argument("VertexSet: members must be sorted and distinct");
    prev = v;
  }
}

/// True iff no pair of members is adjacent. The empty set and singletons
/// are independent.
inline bool is_independent_set(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

/// Identifies two vertices with identical neighbourhoods. The merged vertex
/// keeps the smaller label; vertices above the removed one shift down by
/// one. Requires N(i) == N(j) (which rules out adjacent pairs).
inline Graph reduce_graph(const Graph& g, int i, int j) {
  if (i == j) throw std::invalid_argument("reduce_graph: vertices must differ");
  if (i < 0 || j < 0 || i >= g.vertex_count() || j >= g.vertex_count())
    throw std::invalid_argument("reduce_graph: vertex index out of range");
  if (g.neighbors(i) != g.neighbors(j))
    throw std::invalid_argument("reduce_graph: neighbourhoods differ");
  const int drop = std::max(i, j);
  auto relabel = [drop](int v) { return v > drop ? v - 1 : v; };
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) {
    if (u == drop) u = std::min(i, j);
    if (v == drop) v = std::min(i, j);
    e.emplace_back(relabel(u), relabel(v));
  }
  return Graph(g.vertex_count() - 1, e);
}

/// All independent sets (non-empty), or only the maximal ones, in
/// lexicographic order of the member lists. Exhaustive backtracking;
/// guarded to 24 vertices.
inline std::vector<VertexSet> enumerate_independent_sets(const Graph& g,
                                                         bool maximal_only) {
  if (g.vertex_count() > 24)
    throw std::invalid_argument("enumerate_independent_sets: graph too large (> 24 vertices)");
  std::vector<VertexSet> out;
  VertexSet cur;
  auto is_maximal = [&](const VertexSet& s) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      bool ok = true;
      for (int u : s)
        if (g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (ok) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int from) -> void {
    if (!cur.empty() && (!maximal_only || is_maximal(cur))) out.push_back(cur);
    for (int v = from; v < g.vertex_count(); ++v) {
      bool ok = true;
      for (int u : cur)
        if (g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Maximum over vertex pairs of the shortest-path length.
inline int graph_diameter(const Graph& g) {
  int diam = 0;
  const int r = g.vertex_count();
  for (int s = 0; s < r; ++s) {
    std::vector<int> dist(r, -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }
    diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
  }
  return diam;
}

}  // namespace graphmass
