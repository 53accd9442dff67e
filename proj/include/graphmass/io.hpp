#pragma once

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphmass/cftp.hpp"
#include "graphmass/dual_chain.hpp"
#include "graphmass/graph.hpp"
#include "graphmass/moment_table.hpp"
#include "graphmass/partition.hpp"
#include "graphmass/rational.hpp"
#include "graphmass/version.hpp"

namespace graphmass {

using nlohmann::json;

// Everything in this header speaks the external convention: vertices are
// 1-based in files and reports, converted at this boundary.

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  json out{{"vertices", g.vertex_count()}, {"edges", edges}};
  if (!g.name().empty()) out["name"] = g.name();
  return out;
}

inline Graph graph_from_json(const json& j, const std::string& name = "") {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
  const int r = j.at("vertices").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph JSON edge must be a pair [i, j]");
    edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
  }
  return Graph(r, edges, name.empty() && j.contains("name") ? j.at("name").get<std::string>() : name);
}

/// Edge-list text: one "i j" pair per line (1-based), '#' starts a comment.
/// The vertex count is the largest label seen.
inline Graph graph_from_edge_list(const std::string& text, const std::string& name = "") {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int max_label = 0;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v)) throw std::invalid_argument("edge list: line with a single endpoint");
    std::string rest;
    if (ls >> rest) throw std::invalid_argument("edge list: trailing tokens on a line");
    edges.emplace_back(u - 1, v - 1);
    max_label = std::max({max_label, u, v});
  }
  if (edges.empty()) throw std::invalid_argument("edge list: no edges found");
  return Graph(max_label, edges, name);
}

/// Built-in graph names: K<r>, C<r>, S<leaves>, K<r>,<s>, petersen.
inline bool is_builtin_graph_name(const std::string& s) {
  static const std::regex pattern(R"(^(K\d+|C\d+|S\d+|K\d+,\d+|petersen)$)");
  return std::regex_match(s, pattern);
}

inline Graph graph_from_name(const std::string& s) {
  if (s == "petersen") return Graph::petersen();
  std::smatch m;
  static const std::regex bipartite(R"(^K(\d+),(\d+)$)");
  if (std::regex_match(s, m, bipartite))
    return Graph::complete_bipartite(std::stoi(m[1]), std::stoi(m[2]));
  static const std::regex single(R"(^([KCS])(\d+)$)");
  if (std::regex_match(s, m, single)) {
    const int k = std::stoi(m[2]);
    switch (m[1].str()[0]) {
      case 'K': return Graph::complete(k);
      case 'C': return Graph::cycle(k);
      case 'S': return Graph::star(k);
    }
  }
  throw std::invalid_argument("unknown built-in graph name '" + s + "'");
}

/// Resolves a graph argument: built-in names first, then a file path
/// (.json, or edge-list text otherwise).
inline Graph load_graph(const std::string& arg) {
  if (is_builtin_graph_name(arg)) return graph_from_name(arg);
  const std::filesystem::path path(arg);
  if (!std::filesystem::exists(path))
    throw std::invalid_argument("graph '" + arg + "' is neither a built-in name nor a file");
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string name = path.stem().string();
  if (path.extension() == ".json") {
    json j;
    try {
      j = json::parse(buffer.str());
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("graph file '" + arg + "': " + e.what());
    }
    return graph_from_json(j, name);
  }
  return graph_from_edge_list(buffer.str(), name);
}

/// Splits a comma-separated graph list, re-joining "K3,2"-style bipartite
/// names whose comma would otherwise split them: a purely numeric token is
/// glued back onto its predecessor.
inline std::vector<std::string> split_graph_list(const std::string& arg) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(arg);
  while (std::getline(in, token, ',')) {
    const bool numeric = !token.empty() &&
                         std::all_of(token.begin(), token.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
    if (numeric && !out.empty())
      out.back() += "," + token;
    else if (!token.empty())
      out.push_back(token);
  }
  if (out.empty()) throw std::invalid_argument("empty graph list");
  return out;
}

inline Partition parse_partition(const std::string& s) {
  Partition a;
  std::istringstream in(s);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      a.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw std::invalid_argument("partition '" + s + "': entries must be integers");
    }
  }
  if (a.empty()) throw std::invalid_argument("empty partition");
  validate_partition(a);
  return a;
}

inline std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream in(s);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      out.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw std::invalid_argument("list '" + s + "': entries must be numbers");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

inline json partition_to_json(const Partition& a) { return json(a); }

template <typename Scalar>
json moment_table_to_json(const MomentTable<Scalar>& table) {
  json rows = json::array();
  for (const auto& [a, value] : table.entries) {
    json row{{"a", a}};
    if constexpr (std::is_same_v<Scalar, BigRat>)
      row["value"] = format_rational(value);
    else
      row["value"] = value;
    rows.push_back(std::move(row));
  }
  json out{{"order", table.order}, {"rows", rows}};
  if (table.time) out["t"] = *table.time;
  if (table.alpha) {
    if constexpr (std::is_same_v<Scalar, BigRat>)
      out["alpha"] = format_rational(*table.alpha);
    else
      out["alpha"] = *table.alpha;
  }
  return out;
}

template <typename Scalar>
std::string moment_table_to_csv(const MomentTable<Scalar>& table) {
  std::ostringstream out;
  if (!table.entries.empty()) {
    const int r = static_cast<int>(table.entries.begin()->first.size());
    for (int i = 1; i <= r; ++i) out << "a" << i << ",";
    out << "value\n";
  }
  for (const auto& [a, value] : table.entries) {
    for (int ai : a) out << ai << ",";
    if constexpr (std::is_same_v<Scalar, BigRat>)
      out << format_rational(value);
    else
      out << value;
    out << "\n";
  }
  return out.str();
}

inline json estimate_to_json(const EstimateResult& est) {
  return json{{"mean", est.mean},         {"std_error", est.std_error},
              {"samples", est.samples},   {"seed", est.seed},
              {"graph", est.graph},       {"a", est.target},
              {"alpha", est.alpha},       {"version", std::string(kVersion)}};
}

inline json selection_report_to_json(const SelectionReport& report) {
  json out{{"sample", report.sample},
           {"mode", report.exact ? "exact" : "mc"},
           {"graphs", report.graphs},
           {"version", std::string(kVersion)}};
  if (report.exact) {
    out["alpha"] = format_rational(report.alpha_exact);
    json probs = json::array();
    for (const auto& p : report.exact_probabilities) probs.push_back(format_rational(p));
    out["expected_sample_probabilities"] = probs;
    json bf = json::array();
    for (const auto& row : report.bayes_exact) {
      json r = json::array();
      for (const auto& v : row) r.push_back(format_rational(v));
      bf.push_back(r);
    }
    out["bayes_factors_exact"] = bf;
    out["bayes_factors"] = report.bayes;
  } else {
    out["alpha"] = report.alpha;
    json probs = json::array();
    for (const auto& est : report.estimates) probs.push_back(estimate_to_json(est));
    out["expected_sample_probabilities"] = probs;
    out["bayes_factors"] = report.bayes;
    out["bayes_factor_std_errors"] = report.bayes_std_error;
  }
  return out;
}

/// JSON-lines audit record of one dual-chain path (state, holding time,
/// killing increment per segment, then the terminal state).
inline std::string chain_path_to_jsonl(const ChainPath& path) {
  std::ostringstream out;
  for (std::size_t i = 0; i < path.states.size(); ++i) {
    out << json{{"state", path.states[i]},
                {"hold", path.holding_times[i]},
                {"dk", path.killing_increments[i]}}
               .dump()
        << "\n";
  }
  out << json{{"final_state", path.final_state},
              {"t", path.total_time},
              {"absorbed", path.absorbed},
              {"events", path.events},
              {"seed", path.seed},
              {"stream", path.stream}}
             .dump()
      << "\n";
  return out.str();
}

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace graphmass
