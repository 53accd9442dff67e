// Command-line front end: every subcommand validates its inputs, runs the
// corresponding library call, writes JSON/CSV reports plus a run manifest
// into --output, and exits 0 on success, 2 on validation errors, 1 on
// runtime errors.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "graphmass/graphmass.hpp"

namespace gm = graphmass;
using gm::json;

namespace {

struct CommonOptions {
  std::string output_dir = ".";
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  int threads = 0;  // 0: pick a default
};

int default_threads() {
  if (const char* env = std::getenv("GRAPHMASS_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

/// Collects output files and writes <command>_manifest.json next to them.
class RunManifest {
 public:
  RunManifest(const std::string& command, const CommonOptions& common)
      : command_(command), dir_(common.output_dir),
        start_(std::chrono::steady_clock::now()) {
    std::filesystem::create_directories(dir_);
    manifest_["command"] = command;
    manifest_["version"] = std::string(gm::kVersion);
  }

  void set_parameters(json params) { manifest_["parameters"] = std::move(params); }
  void set_seed(std::uint64_t seed) { manifest_["seed"] = seed; }

  std::filesystem::path write_file(const std::string& name, const std::string& bytes) {
    const auto path = std::filesystem::path(dir_) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file " + path.string());
    out << bytes;
    out.close();
    char digest[32];
    std::snprintf(digest, sizeof digest, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(gm::fnv1a64(bytes)));
    manifest_["outputs"][name] = digest;
    return path;
  }

  void finish() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    manifest_["wall_time_s"] = std::chrono::duration<double>(elapsed).count();
    const auto path = std::filesystem::path(dir_) / (command_ + "_manifest.json");
    std::ofstream out(path);
    out << manifest_.dump(2) << "\n";
  }

 private:
  std::string command_;
  std::string dir_;
  json manifest_;
  std::chrono::steady_clock::time_point start_;
};

void add_common(CLI::App* cmd, CommonOptions& common, bool with_seed_threads = true) {
  cmd->add_option("--output", common.output_dir, "Output directory")->capture_default_str();
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  if (with_seed_threads) {
    cmd->add_option("--seed", common.seed, "RNG seed (drawn from entropy when omitted)");
    cmd->add_option("--threads", common.threads,
                    "Worker threads (default: GRAPHMASS_THREADS or hardware)");
  }
}

gm::Partition parse_sample(const std::string& arg, const gm::Graph& g) {
  gm::Partition a = gm::parse_partition(arg);
  if (static_cast<int>(a.size()) != g.vertex_count())
    throw std::invalid_argument("sample length " + std::to_string(a.size()) +
                                " does not match the graph (" +
                                std::to_string(g.vertex_count()) + " vertices)");
  return a;
}

// ---------------------------------------------------------------- moments

struct MomentsArgs {
  std::string graph;
  std::string alpha;
  int order = 2;
  bool exact = false;
  std::vector<double> times;
  std::string x0;
  CommonOptions common;
};

int run_moments(const MomentsArgs& args) {
  RunManifest manifest("moments", args.common);
  const gm::Graph g = gm::load_graph(args.graph);
  json params{{"graph", args.graph}, {"order", args.order}, {"exact", args.exact}};

  if (!args.times.empty()) {
    if (!args.alpha.empty())
      throw std::invalid_argument(
          "moments: --t selects the undrifted time-dependent system; drop --alpha");
    // time-dependent tables of the undrifted diffusion
    const gm::SimplexPoint x0 = args.x0.empty()
                                    ? gm::SimplexPoint::uniform(g.vertex_count())
                                    : gm::SimplexPoint(gm::parse_double_list(args.x0), 1e-9);
    params["t"] = args.times;
    params["x0"] = x0.coords();
    manifest.set_parameters(params);
    const auto tables = gm::solve_moment_ode(g, x0, args.order, args.times);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const std::string stem = "moments_t" + std::to_string(i);
      if (args.common.format == "csv")
        manifest.write_file(stem + ".csv", gm::moment_table_to_csv(tables[i]));
      else
        manifest.write_file(stem + ".json", gm::moment_table_to_json(tables[i]).dump(2) + "\n");
    }
    std::cout << "moments: wrote " << tables.size() << " time-dependent tables (order "
              << args.order << ") to " << args.common.output_dir << "\n";
    manifest.finish();
    return 0;
  }

  if (args.alpha.empty())
    throw std::invalid_argument("moments: need --alpha (stationary) or --t (time-dependent)");
  params["alpha"] = args.alpha;
  manifest.set_parameters(params);
  if (args.exact) {
    const gm::BigRat alpha = gm::parse_rational(args.alpha);
    const auto table = gm::solve_stationary_recurrence<gm::BigRat>(g, alpha, args.order);
    if (args.common.format == "csv")
      manifest.write_file("moments.csv", gm::moment_table_to_csv(table));
    else
      manifest.write_file("moments.json", gm::moment_table_to_json(table).dump(2) + "\n");
  } else {
    const double alpha = gm::to_double(gm::parse_rational(args.alpha));
    const auto table = gm::solve_stationary_recurrence<double>(g, alpha, args.order);
    if (args.common.format == "csv")
      manifest.write_file("moments.csv", gm::moment_table_to_csv(table));
    else
      manifest.write_file("moments.json", gm::moment_table_to_json(table).dump(2) + "\n");
  }
  std::cout << "moments: wrote stationary table up to order " << args.order << " to "
            << args.common.output_dir << "\n";
  manifest.finish();
  return 0;
}

// --------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string graph;
  std::string sample;
  double alpha = 1.0;
  std::int64_t samples = 100000;
  CommonOptions common;
};

int run_estimate(const EstimateArgs& args) {
  RunManifest manifest("estimate", args.common);
  const gm::Graph g = gm::load_graph(args.graph);
  const gm::Partition a = parse_sample(args.sample, g);
  const std::uint64_t seed = resolve_seed(args.common.seed);
  const int threads = args.common.threads > 0 ? args.common.threads : default_threads();
  manifest.set_parameters(json{{"graph", args.graph},
                               {"a", a},
                               {"alpha", args.alpha},
                               {"samples", args.samples},
                               {"threads", threads}});
  manifest.set_seed(seed);
  const auto est = gm::estimate_moment(g, a, args.alpha, args.samples, seed, threads);
  json report = gm::estimate_to_json(est);
  const double coeff = gm::to_double(gm::BigRat(gm::multinomial(a)));
  report["expected_sample_probability"] = est.mean * coeff;
  report["expected_sample_probability_std_error"] = est.std_error * coeff;
  if (est.mean < 0.0 || est.mean > 1.0)
    report["note"] = "mean outside [0,1]: statistically under-sampled, not clamped";
  manifest.write_file("estimate.json", report.dump(2) + "\n");
  std::cout << "estimate: mean " << est.mean << " +/- " << est.std_error << " ("
            << args.samples << " samples, seed " << seed << ")\n";
  manifest.finish();
  return 0;
}

// ----------------------------------------------------------- select-graph

struct SelectArgs {
  std::string graphs;
  std::string sample;
  std::string alpha = "1";
  std::string mode = "exact";
  std::int64_t samples = 100000;
  CommonOptions common;
};

int run_select(const SelectArgs& args) {
  RunManifest manifest("select-graph", args.common);
  std::vector<gm::Graph> candidates;
  for (const auto& name : gm::split_graph_list(args.graphs))
    candidates.push_back(gm::load_graph(name));
  const gm::Partition a = parse_sample(args.sample, candidates.front());
  json params{{"graphs", args.graphs}, {"a", a}, {"alpha", args.alpha}, {"mode", args.mode}};
  gm::SelectionReport report;
  if (args.mode == "exact") {
    manifest.set_parameters(params);
    report = gm::select_graph_exact(candidates, a, gm::parse_rational(args.alpha));
  } else {
    const std::uint64_t seed = resolve_seed(args.common.seed);
    const int threads = args.common.threads > 0 ? args.common.threads : default_threads();
    params["samples"] = args.samples;
    params["threads"] = threads;
    manifest.set_parameters(params);
    manifest.set_seed(seed);
    report = gm::select_graph_mc(candidates, a, gm::to_double(gm::parse_rational(args.alpha)),
                                 args.samples, seed, threads);
  }
  manifest.write_file("selection.json", gm::selection_report_to_json(report).dump(2) + "\n");
  std::cout << "select-graph:";
  for (std::size_t i = 0; i < report.graphs.size(); ++i) {
    std::cout << " " << report.graphs[i] << "=";
    if (report.exact)
      std::cout << gm::format_rational(report.exact_probabilities[i]);
    else
      std::cout << report.estimates[i].mean;
  }
  std::cout << "\n";
  manifest.finish();
  return 0;
}

// ---------------------------------------------------------------- find-is

struct FindIsArgs {
  std::string graph;
  std::int64_t particles = 0;
  std::int64_t threshold = 0;
  int runs = 1;
  CommonOptions common;
};

int run_find_is(const FindIsArgs& args) {
  RunManifest manifest("find-is", args.common);
  const gm::Graph g = gm::load_graph(args.graph);
  const std::int64_t particles =
      args.particles > 0 ? args.particles : 4 * g.vertex_count();
  const std::uint64_t seed = resolve_seed(args.common.seed);
  manifest.set_parameters(json{{"graph", args.graph},
                               {"particles", particles},
                               {"threshold", args.threshold},
                               {"runs", args.runs}});
  manifest.set_seed(seed);
  json runs = json::array();
  int converged = 0;
  for (int k = 0; k < args.runs; ++k) {
    gm::Rng rng(seed, static_cast<std::uint64_t>(k));
    const auto result = gm::find_independent_set(g, {particles, args.threshold}, rng);
    json set = json::array();
    for (int v : result.occupied) set.push_back(v + 1);
    runs.push_back(json{{"set", set},
                        {"iterations", result.iterations},
                        {"converged", result.converged},
                        {"threshold", result.threshold}});
    if (result.converged) ++converged;
  }
  json report{{"graph", args.graph},
              {"particles", particles},
              {"runs", runs},
              {"converged_fraction", static_cast<double>(converged) / args.runs},
              {"version", std::string(gm::kVersion)}};
  manifest.write_file("find_is.json", report.dump(2) + "\n");
  std::cout << "find-is: " << converged << "/" << args.runs << " runs converged\n";
  manifest.finish();
  return 0;
}

// ----------------------------------------------------------- simulate-dual

struct SimulateDualArgs {
  std::string graph;
  std::string start;
  double alpha = 0.0;
  std::optional<double> horizon;
  int paths = 1;
  CommonOptions common;
};

int run_simulate_dual(const SimulateDualArgs& args) {
  RunManifest manifest("simulate-dual", args.common);
  const gm::Graph g = gm::load_graph(args.graph);
  const gm::Partition a0 = parse_sample(args.start, g);
  const auto cfg = args.alpha > 0 ? gm::ChainConfig::drifted(g, args.alpha)
                                  : gm::ChainConfig::undrifted(g);
  if (!args.horizon && !cfg.drifted_variant() &&
      gm::partition_order(a0) > g.vertex_count())
    throw std::invalid_argument(
        "simulate-dual: the undrifted chain cannot absorb from |a| > r; pass --t");
  const std::uint64_t seed = resolve_seed(args.common.seed);
  json params{{"graph", args.graph}, {"start", a0}, {"alpha", args.alpha},
              {"paths", args.paths}};
  if (args.horizon) params["t"] = *args.horizon;
  manifest.set_parameters(params);
  manifest.set_seed(seed);
  std::string jsonl;
  double mean_events = 0;
  for (int k = 0; k < args.paths; ++k) {
    gm::Rng rng(seed, static_cast<std::uint64_t>(k));
    gm::SimulateOptions opt;
    opt.horizon = args.horizon;
    auto path = gm::simulate_path(cfg, a0, opt, rng);
    path.seed = seed;
    path.stream = static_cast<std::uint64_t>(k);
    jsonl += gm::chain_path_to_jsonl(path);
    mean_events += static_cast<double>(path.events) / args.paths;
  }
  manifest.write_file("dual_paths.jsonl", jsonl);
  std::cout << "simulate-dual: " << args.paths << " paths, mean events " << mean_events
            << "\n";
  manifest.finish();
  return 0;
}

// ------------------------------------------------------------ simulate-sde

struct SimulateSdeArgs {
  std::string graph;
  std::string x0;
  double alpha = 0.0;
  double dt = 1e-4;
  double t_end = 1.0;
  int paths = 1;
  std::int64_t record_every = 100;
  double support_eps = 1e-6;
  CommonOptions common;
};

int run_simulate_sde(const SimulateSdeArgs& args) {
  RunManifest manifest("simulate-sde", args.common);
  const gm::Graph g = gm::load_graph(args.graph);
  const gm::SimplexPoint x0 = args.x0.empty()
                                  ? gm::SimplexPoint::uniform(g.vertex_count())
                                  : gm::SimplexPoint(gm::parse_double_list(args.x0), 1e-9);
  const gm::SdeConfig cfg{g, args.alpha, args.dt,
                          args.alpha > 0 ? gm::BoundaryPolicy::reflect_clip
                                         : gm::BoundaryPolicy::absorb_at_zero};
  const std::uint64_t seed = resolve_seed(args.common.seed);
  const int threads = args.common.threads > 0 ? args.common.threads : default_threads();
  manifest.set_parameters(json{{"graph", args.graph}, {"x0", x0.coords()},
                               {"alpha", args.alpha}, {"dt", args.dt}, {"t", args.t_end},
                               {"paths", args.paths}, {"record_every", args.record_every}});
  manifest.set_seed(seed);

  if (args.paths == 1) {
    gm::Rng rng(seed, 0);
    const auto path = gm::simulate_sde(cfg, x0, args.t_end, args.record_every, rng);
    std::ostringstream csv;
    csv << "t";
    for (int i = 1; i <= g.vertex_count(); ++i) csv << ",x" << i;
    csv << "\n";
    for (std::size_t k = 0; k < path.times.size(); ++k) {
      csv << path.times[k];
      for (double v : path.states[k]) csv << "," << v;
      csv << "\n";
    }
    manifest.write_file("sde_path.csv", csv.str());
    if (path.clip_warning)
      std::cout << "simulate-sde: warning: clipping in more than 1% of steps; reduce --dt\n";
    std::cout << "simulate-sde: 1 path, " << path.steps << " steps, max renorm drift "
              << path.max_renorm_drift << "\n";
  } else {
    const auto profile = gm::empirical_support_profile(cfg, x0, args.t_end, args.paths,
                                                       args.support_eps, seed, threads);
    json rows = json::array();
    for (const auto& [support, freq] : profile) {
      json set = json::array();
      for (int v : support) set.push_back(v + 1);
      rows.push_back(json{{"support", set}, {"frequency", freq}});
    }
    json report{{"graph", args.graph}, {"t", args.t_end}, {"paths", args.paths},
                {"eps", args.support_eps}, {"profile", rows},
                {"version", std::string(gm::kVersion)}};
    manifest.write_file("support_profile.json", report.dump(2) + "\n");
    std::cout << "simulate-sde: support profile over " << args.paths << " paths ("
              << profile.size() << " distinct supports)\n";
  }
  manifest.finish();
  return 0;
}

// ------------------------------------------------------- simulate-discrete

struct SimulateDiscreteArgs {
  std::string graph;
  std::int64_t particles = 0;
  std::int64_t steps = 10000;
  std::int64_t record_every = 100;
  CommonOptions common;
};

int run_simulate_discrete(const SimulateDiscreteArgs& args) {
  RunManifest manifest("simulate-discrete", args.common);
  const gm::Graph g = gm::load_graph(args.graph);
  const std::int64_t particles =
      args.particles > 0 ? args.particles : 10 * g.vertex_count();
  if (particles < g.vertex_count())
    throw std::invalid_argument("simulate-discrete: need at least one particle per vertex");
  const std::uint64_t seed = resolve_seed(args.common.seed);
  manifest.set_parameters(json{{"graph", args.graph}, {"particles", particles},
                               {"steps", args.steps}, {"record_every", args.record_every}});
  manifest.set_seed(seed);
  gm::OccupationVector n0(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) n0[v] = particles / g.vertex_count();
  for (int v = 0; v < particles % g.vertex_count(); ++v) ++n0[v];
  gm::Rng rng(seed, 0);
  const auto traj = gm::run_compromise_process(g, n0, args.steps, args.record_every, rng);
  std::ostringstream csv;
  csv << "t";
  for (int i = 1; i <= g.vertex_count(); ++i) csv << ",x" << i;
  csv << ",occupied\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    csv << traj.times[k];
    for (double v : traj.states[k]) csv << "," << v;
    csv << "," << traj.occupied_counts[k] << "\n";
  }
  manifest.write_file("discrete_trajectory.csv", csv.str());
  std::cout << "simulate-discrete: " << args.steps << " steps, final occupied count "
            << traj.occupied_counts.back() << "\n";
  manifest.finish();
  return 0;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string graph;
  CommonOptions common;
};

int run_spectrum(const SpectrumArgs& args) {
  RunManifest manifest("spectrum", args.common);
  const gm::Graph g = gm::load_graph(args.graph);
  manifest.set_parameters(json{{"graph", args.graph}});
  const auto spectrum = gm::laplacian_spectrum(g);
  if (args.common.format == "csv") {
    std::ostringstream csv;
    csv << "index,eigenvalue\n";
    for (std::size_t i = 0; i < spectrum.size(); ++i) csv << i << "," << spectrum[i] << "\n";
    manifest.write_file("spectrum.csv", csv.str());
  } else {
    json report{{"graph", args.graph},
                {"eigenvalues", spectrum},
                {"algebraic_connectivity", spectrum.at(1)},
                {"diameter", gm::graph_diameter(g)},
                {"version", std::string(gm::kVersion)}};
    manifest.write_file("spectrum.json", report.dump(2) + "\n");
  }
  std::cout << "spectrum: algebraic connectivity " << spectrum.at(1) << "\n";
  manifest.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collision particle systems on graphs and their dual diffusions"};
  app.require_subcommand(1);

  MomentsArgs moments;
  auto* moments_cmd = app.add_subcommand(
      "moments", "Stationary moment tables (--alpha) or time-dependent ones (--t)");
  moments_cmd->add_option("--graph", moments.graph, "Graph name or file")->required();
  moments_cmd->add_option("--alpha", moments.alpha, "Drift parameter, rational like 1/4");
  moments_cmd->add_option("--order", moments.order, "Highest moment order")->required();
  moments_cmd->add_flag("--exact", moments.exact, "Exact rational arithmetic");
  moments_cmd->add_option("--t", moments.times, "Time grid for the undrifted moment system");
  moments_cmd->add_option("--x0", moments.x0, "Start point (time-dependent mode)");
  add_common(moments_cmd, moments.common, false);

  EstimateArgs estimate;
  auto* estimate_cmd =
      app.add_subcommand("estimate", "Monte Carlo stationary-moment estimate (CFTP sampler)");
  estimate_cmd->add_option("--graph", estimate.graph)->required();
  estimate_cmd->add_option("--a", estimate.sample, "Sample multi-index, e.g. 1,0,1,0")->required();
  estimate_cmd->add_option("--alpha", estimate.alpha)->required();
  estimate_cmd->add_option("--samples", estimate.samples)->capture_default_str();
  add_common(estimate_cmd, estimate.common);

  SelectArgs select;
  auto* select_cmd = app.add_subcommand("select-graph", "Bayes-factor graph selection");
  select_cmd->add_option("--graphs", select.graphs, "Comma-separated candidates")->required();
  select_cmd->add_option("--a", select.sample)->required();
  select_cmd->add_option("--alpha", select.alpha)->capture_default_str();
  select_cmd->add_option("--mode", select.mode)
      ->check(CLI::IsMember({"exact", "mc"}))
      ->capture_default_str();
  select_cmd->add_option("--samples", select.samples)->capture_default_str();
  add_common(select_cmd, select.common);

  FindIsArgs find_is;
  auto* find_cmd = app.add_subcommand("find-is", "Particle-collision independent-set finder");
  find_cmd->add_option("--graph", find_is.graph)->required();
  find_cmd->add_option("--particles", find_is.particles, "N (default 4r)");
  find_cmd->add_option("--threshold", find_is.threshold, "M (default 50 N^2)");
  find_cmd->add_option("--runs", find_is.runs)->capture_default_str();
  add_common(find_cmd, find_is.common);

  SimulateDualArgs dual;
  auto* dual_cmd = app.add_subcommand("simulate-dual", "Gillespie paths of the dual chain");
  dual_cmd->add_option("--graph", dual.graph)->required();
  dual_cmd->add_option("--start", dual.start, "Initial multi-index")->required();
  dual_cmd->add_option("--alpha", dual.alpha, "Drift (0: collision chain)")
      ->capture_default_str();
  dual_cmd->add_option("--t", dual.horizon, "Horizon (absent: run to absorption)");
  dual_cmd->add_option("--paths", dual.paths)->capture_default_str();
  add_common(dual_cmd, dual.common);

  SimulateSdeArgs sde;
  auto* sde_cmd = app.add_subcommand(
      "simulate-sde", "Euler-Maruyama paths (1 path: CSV; many: support profile)");
  sde_cmd->add_option("--graph", sde.graph)->required();
  sde_cmd->add_option("--x0", sde.x0, "Start point (default barycentre)");
  sde_cmd->add_option("--alpha", sde.alpha)->capture_default_str();
  sde_cmd->add_option("--dt", sde.dt)->capture_default_str();
  sde_cmd->add_option("--t", sde.t_end)->capture_default_str();
  sde_cmd->add_option("--paths", sde.paths)->capture_default_str();
  sde_cmd->add_option("--record-every", sde.record_every)->capture_default_str();
  sde_cmd->add_option("--support-eps", sde.support_eps)->capture_default_str();
  add_common(sde_cmd, sde.common);

  SimulateDiscreteArgs discrete;
  auto* discrete_cmd =
      app.add_subcommand("simulate-discrete", "Raw N-particle collision trajectory");
  discrete_cmd->add_option("--graph", discrete.graph)->required();
  discrete_cmd->add_option("--particles", discrete.particles, "N (default 10r)");
  discrete_cmd->add_option("--steps", discrete.steps)->capture_default_str();
  discrete_cmd->add_option("--record-every", discrete.record_every)->capture_default_str();
  add_common(discrete_cmd, discrete.common);

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Graph Laplacian spectrum");
  spectrum_cmd->add_option("--graph", spectrum.graph)->required();
  add_common(spectrum_cmd, spectrum.common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // parse problems are validation errors
  }

  try {
    if (moments_cmd->parsed()) return run_moments(moments);
    if (estimate_cmd->parsed()) return run_estimate(estimate);
    if (select_cmd->parsed()) return run_select(select);
    if (find_cmd->parsed()) return run_find_is(find_is);
    if (dual_cmd->parsed()) return run_simulate_dual(dual);
    if (sde_cmd->parsed()) return run_simulate_sde(sde);
    if (discrete_cmd->parsed()) return run_simulate_discrete(discrete);
    if (spectrum_cmd->parsed()) return run_spectrum(spectrum);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
