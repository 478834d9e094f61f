// Command-line front end: detect superbubbles in edge-list DAGs, check the
// detector against the brute-force oracle, generate seeded random test
// graphs, benchmark scaling, and export Graphviz views.
//
// Exit codes: 0 ok, 2 parse error, 3 cyclic input, 4 oracle cap exceeded,
// 5 detector/oracle mismatch.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <superbubble/bench.hpp>
#include <superbubble/detector.hpp>
#include <superbubble/dot.hpp>
#include <superbubble/generator.hpp>
#include <superbubble/graph.hpp>
#include <superbubble/json_io.hpp>
#include <superbubble/oracle.hpp>
#include <superbubble/rmq.hpp>
#include <superbubble/topo_order.hpp>

namespace {

using namespace superbubble;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitCycle = 3;
constexpr int kExitOracleCap = 4;
constexpr int kExitMismatch = 5;

Graph load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  LoadResult result = load_edge_list(in);
  if (result.duplicate_edges > 0)
    std::cerr << "warning: collapsed " << result.duplicate_edges
              << " duplicate edge line(s)\n";
  return std::move(result.graph);
}

std::vector<std::pair<std::string, std::string>> sorted_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Json array = Json::array();
  for (const auto& [s, t] : pairs)
    array.push_back({{"entrance", s}, {"exit", t}});
  return array;
}

int cmd_detect(const std::string& input, bool dot) {
  Graph g = load_input(input);
  AugmentedGraph ag = augment(g);
  TopoOrder topo = topological_sort(ag);
  RangeArrays arrays = build_range_arrays(ag, topo);
  RmqIndex parent_min(std::move(arrays.min_parent_rank), RmqMode::kMin);
  RmqIndex child_max(std::move(arrays.max_child_rank), RmqMode::kMax);
  SuperbubbleReport report = run_scan(ag, topo, parent_min, child_max).report;
  if (dot)
    std::cout << export_dot(ag.graph, report, topo);
  else
    std::cout << report_to_json(report, ag.graph).dump(2) << "\n";
  return kExitOk;
}

int cmd_trace(const std::string& input) {
  Graph g = load_input(input);
  AugmentedGraph ag = augment(g);
  TraceResult trace = trace_detect(ag);
  Json j = trace_to_json(trace, ag.graph);
  j["orderingCheck"] =
      diagnostic_to_json(check_ordering_properties(ag, topological_sort(ag)), ag.graph);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_generate(const GenSpec& spec) {
  Graph g = generate(spec);
  std::cout << "# generated graph: n=" << spec.n << " extra-edges=" << spec.extra_edges
            << " planted=" << spec.planted_bubbles << " max-outdeg=" << spec.max_outdeg
            << " seed=" << spec.seed << " rng=" << kRngAlgorithm << "\n";
  std::cout << export_edge_list(g);
  return kExitOk;
}

int cmd_verify(const std::optional<std::string>& input, const GenSpec& spec,
               int oracle_cap) {
  Graph g;
  std::optional<std::uint64_t> seed;
  if (input) {
    g = load_input(*input);
  } else {
    g = generate(spec);
    seed = spec.seed;
  }
  OracleResult oracle = oracle_enumerate(g, oracle_cap);
  AugmentedGraph ag = augment(g);
  TopoOrder topo = topological_sort(ag);
  RangeArrays arrays = build_range_arrays(ag, topo);
  RmqIndex parent_min(std::move(arrays.min_parent_rank), RmqMode::kMin);
  RmqIndex child_max(std::move(arrays.max_child_rank), RmqMode::kMax);
  ScanResult scan = run_scan(ag, topo, parent_min, child_max);

  auto detected = sorted_pairs([&] {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const Superbubble& b : scan.report.items)
      pairs.emplace_back(ag.graph.label(b.entrance), ag.graph.label(b.exit));
    return pairs;
  }());
  auto expected = sorted_pairs([&] {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const OracleBubble& b : oracle.bubbles)
      pairs.emplace_back(g.label(b.entrance), g.label(b.exit));
    return pairs;
  }());

  const long long budget = 4LL * (ag.graph.n() + ag.graph.m());
  const bool pairs_ok = detected == expected;
  const bool work_ok = scan.validate_calls <= budget;

  Json j{{"status", pairs_ok && work_ok ? "ok" : "mismatch"},
         {"n", g.n()},
         {"m", g.m()},
         {"superbubbles", static_cast<int>(oracle.bubbles.size())},
         {"validateCalls", scan.validate_calls},
         {"validateBudget", budget},
         {"seed", seed ? Json(*seed) : Json(nullptr)},
         {"rng", std::string(kRngAlgorithm)}};
  if (!pairs_ok || !work_ok) {
    j["detected"] = pairs_to_json(detected);
    j["oracle"] = pairs_to_json(expected);
    std::cout << j.dump(2) << "\n";
    std::cerr << (pairs_ok ? "validate-call budget exceeded"
                           : "detector and oracle disagree")
              << (seed ? " (seed " + std::to_string(*seed) + ")" : "") << "\n";
    return kExitMismatch;
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_bench(const std::vector<int>& sizes, std::uint64_t seed, int max_outdeg) {
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw std::invalid_argument("bench sizes must be strictly increasing");
  std::cout << "# rng=" << kRngAlgorithm << " seed=" << seed << "\n";
  std::cout << "n,m,sort_ms,index_ms,scan_ms,total_ms,superbubbles,validate_calls,ratio\n";
  double previous_total = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    GenSpec spec;
    spec.n = sizes[i];
    spec.extra_edges = sizes[i];  // m is roughly 2n
    spec.seed = seed + i;
    spec.max_outdeg = max_outdeg;
    Graph g = generate(spec);
    AugmentedGraph ag = augment(g);
    BenchRecord rec = bench_detect(ag);
    std::cout << rec.n << ',' << rec.m << ',' << rec.sort_ms << ',' << rec.index_ms
              << ',' << rec.scan_ms << ',' << rec.total_ms << ',' << rec.superbubbles
              << ',' << rec.validate_calls << ',';
    if (previous_total > 0.0) std::cout << rec.total_ms / previous_total;
    std::cout << "\n";
    previous_total = rec.total_ms;
  }
  return kExitOk;
}

int cmd_dot(const std::string& input) { return cmd_detect(input, /*dot=*/true); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superbubble detection for directed acyclic graphs"};
  app.require_subcommand(1);

  std::string input;
  bool flag_dot = false;
  bool flag_json = false;
  GenSpec spec;
  spec.extra_edges = -1;  // resolved per command below
  int oracle_cap = kDefaultOracleCap;
  std::vector<int> bench_sizes;

  auto add_gen_flags = [&](CLI::App* cmd, bool require_n) {
    auto* n = cmd->add_option("--n", spec.n, "vertex count for generated graphs");
    if (require_n) n->required();
    cmd->add_option("--extra-edges", spec.extra_edges, "edges beyond the spanning structure");
    cmd->add_option("--planted", spec.planted_bubbles, "planted diamond superbubbles");
    cmd->add_option("--seed", spec.seed, "64-bit generator seed");
    cmd->add_option("--max-outdeg", spec.max_outdeg, "out-degree cap (0 = unbounded)");
  };

  CLI::App* detect = app.add_subcommand("detect", "report all superbubbles of a DAG");
  detect->add_option("--input", input, "edge-list file")->required();
  detect->add_flag("--dot", flag_dot, "emit annotated Graphviz instead of JSON");
  detect->add_flag("--json", flag_json, "emit JSON (default)");

  CLI::App* trace = app.add_subcommand("trace", "detect with a full event log");
  trace->add_option("--input", input, "edge-list file")->required();

  CLI::App* dot = app.add_subcommand("dot", "emit annotated Graphviz for a DAG");
  dot->add_option("--input", input, "edge-list file")->required();

  CLI::App* generate_cmd = app.add_subcommand("generate", "emit a seeded random DAG");
  add_gen_flags(generate_cmd, /*require_n=*/true);

  CLI::App* verify = app.add_subcommand(
      "verify", "compare the detector against the brute-force oracle");
  verify->add_option("--input", input, "edge-list file (otherwise a graph is generated)");
  add_gen_flags(verify, /*require_n=*/false);
  verify->add_option("--oracle-cap", oracle_cap, "largest n the oracle will accept");

  CLI::App* bench = app.add_subcommand("bench", "time detection phases on generated graphs");
  bench->add_option("--n", bench_sizes, "graph sizes, strictly increasing")->required();
  bench->add_option("--seed", spec.seed, "64-bit generator seed");
  bench->add_option("--max-outdeg", spec.max_outdeg, "out-degree cap (0 = unbounded)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (detect->parsed()) return cmd_detect(input, flag_dot);
    if (trace->parsed()) return cmd_trace(input);
    if (dot->parsed()) return cmd_dot(input);
    if (generate_cmd->parsed()) {
      if (spec.extra_edges < 0) spec.extra_edges = 0;
      return cmd_generate(spec);
    }
    if (verify->parsed()) {
      std::optional<std::string> path;
      if (!input.empty()) path = input;
      if (spec.extra_edges < 0) spec.extra_edges = 0;
      if (!path && spec.n == 0)
        throw CLI::ValidationError("verify", "needs --input or --n");
      return cmd_verify(path, spec, oracle_cap);
    }
    if (bench->parsed()) return cmd_bench(bench_sizes, spec.seed, spec.max_outdeg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SelfLoopError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCycle;
  } catch (const CycleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCycle;
  } catch (const NotDagError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCycle;
  } catch (const OracleCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracleCap;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
