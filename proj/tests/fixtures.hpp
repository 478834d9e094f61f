#pragma once

// Shared test fixtures. The centrepiece is a 15-vertex worked example whose
// five superbubbles (two of them nested) exercise every code path: candidate
// extraction, alternative-entrance walks, nested recursion, and filtering.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <superbubble/detector.hpp>
#include <superbubble/generator.hpp>
#include <superbubble/graph.hpp>
#include <superbubble/oracle.hpp>
#include <superbubble/topo_order.hpp>

namespace fixtures {

using namespace superbubble;

// Edge order matters: the DFS visits children in adjacency order, and all
// golden ranks/arrays below assume exactly this order.
inline constexpr const char* kSampleEdgeList =
    "v1 v2\n"
    "v1 v3\n"
    "v2 v3\n"
    "v3 v4\n"
    "v3 v5\n"
    "v3 v11\n"
    "v4 v8\n"
    "v5 v6\n"
    "v5 v9\n"
    "v6 v7\n"
    "v6 v10\n"
    "v7 v8\n"
    "v8 v13\n"
    "v8 v14\n"
    "v9 v10\n"
    "v10 v7\n"
    "v11 v12\n"
    "v12 v8\n"
    "v13 v14\n"
    "v13 v15\n"
    "v15 v14\n";

// rank of v1..v15 under the adjacency order above
inline constexpr int kSampleRanks[15] = {1, 2, 3, 11, 6, 8, 10, 12, 7, 9, 4, 5, 13, 15, 14};

// rank-indexed extremal-neighbour arrays ([0] unused, sentinels at 1 and 15)
inline constexpr int kSampleMinParentRank[16] = {0, 16, 1, 1, 3, 4, 3, 6, 6, 7, 8, 3, 5, 12, 13, 12};
inline constexpr int kSampleMaxChildRank[16] = {0, 3, 3, 11, 5, 12, 8, 9, 10, 10, 12, 12, 15, 15, 15, 0};

inline const std::vector<std::pair<std::string, Role>>& sample_candidates() {
  static const std::vector<std::pair<std::string, Role>> kList = {
      {"v1", Role::kEntrance}, {"v3", Role::kExit},  {"v3", Role::kEntrance},
      {"v11", Role::kEntrance}, {"v12", Role::kExit}, {"v5", Role::kEntrance},
      {"v10", Role::kExit},    {"v7", Role::kExit},  {"v8", Role::kExit},
      {"v8", Role::kEntrance}, {"v13", Role::kEntrance}, {"v14", Role::kExit}};
  return kList;
}

inline const std::vector<std::pair<std::string, std::string>>& sample_bubbles() {
  static const std::vector<std::pair<std::string, std::string>> kBubbles = {
      {"v8", "v14"}, {"v3", "v8"}, {"v5", "v7"}, {"v11", "v12"}, {"v1", "v3"}};
  return kBubbles;
}

inline Graph sample_graph() { return load_edge_list(std::string(kSampleEdgeList)).graph; }

inline Graph make_graph(std::initializer_list<std::pair<const char*, const char*>> edges) {
  GraphBuilder builder;
  for (const auto& [a, b] : edges) builder.add_edge(builder.intern(a), builder.intern(b));
  return builder.build();
}

inline VertexId id_of(const Graph& g, const std::string& label) {
  return g.find(label).value();
}

inline std::vector<std::pair<std::string, std::string>> report_pairs(
    const SuperbubbleReport& report, const Graph& g) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Superbubble& b : report.items)
    pairs.emplace_back(g.label(b.entrance), g.label(b.exit));
  return pairs;
}

inline std::vector<std::pair<std::string, std::string>> oracle_pairs(
    const OracleResult& result, const Graph& g) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const OracleBubble& b : result.bubbles)
    pairs.emplace_back(g.label(b.entrance), g.label(b.exit));
  return pairs;
}

// Plain BFS reachability, independent of every module under test.
inline bool reaches(const Graph& g, VertexId from, VertexId to) {
  std::vector<char> seen(g.n(), 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (VertexId w : g.out(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

// One differential-testing pass over a graph: run the detector with a trace,
// run the oracle on the untouched input, and evaluate every property the
// detector is supposed to guarantee. Used by the unit fuzz tests and by the
// acceptance campaign, which aggregates the flags per criterion.
struct CaseCheck {
  bool pairs_equal = true;        // detected pair set == oracle pair set
  bool uniqueness = true;         // no repeated entrance, no repeated exit
  bool exit_order = true;         // items in strictly decreasing exit rank
  bool degree_forced = true;      // 1-out/1-in edges always reported
  bool interval_membership = true;  // oracle member set == rank interval
  bool nesting = true;            // intervals nest or touch in one rank
  bool alternative_monotone = true;  // per-entrance alternatives never rank down
  bool work_bound = true;         // validate calls <= 4 (n + m)
  long long validate_calls = 0;
  long long validate_budget = 0;

  bool all() const {
    return pairs_equal && uniqueness && exit_order && degree_forced &&
           interval_membership && nesting && alternative_monotone && work_bound;
  }
};

inline CaseCheck check_case(const Graph& g) {
  CaseCheck c;
  AugmentedGraph ag = augment(g);
  TopoOrder topo = topological_sort(ag);
  RangeArrays arrays = build_range_arrays(ag, topo);
  RmqIndex parent_min(std::move(arrays.min_parent_rank), RmqMode::kMin);
  RmqIndex child_max(std::move(arrays.max_child_rank), RmqMode::kMax);
  std::vector<TraceEvent> events;
  ScanResult scan = run_scan(ag, topo, parent_min, child_max, {}, &events);
  OracleResult oracle = oracle_enumerate(g);

  auto detected = report_pairs(scan.report, ag.graph);
  auto expected = oracle_pairs(oracle, g);
  std::sort(detected.begin(), detected.end());
  std::sort(expected.begin(), expected.end());
  c.pairs_equal = detected == expected;

  {
    std::vector<char> seen_entrance(ag.graph.n(), 0), seen_exit(ag.graph.n(), 0);
    int previous_exit_rank = ag.graph.n() + 1;
    for (const Superbubble& b : scan.report.items) {
      if (seen_entrance[b.entrance] || seen_exit[b.exit]) c.uniqueness = false;
      seen_entrance[b.entrance] = seen_exit[b.exit] = 1;
      if (topo.rank[b.exit] >= previous_exit_rank) c.exit_order = false;
      previous_exit_rank = topo.rank[b.exit];
    }
  }

  for (VertexId p = 0; p < g.n() && c.degree_forced; ++p) {
    if (g.out_degree(p) != 1) continue;
    VertexId child = g.out(p)[0];
    if (g.in_degree(child) != 1) continue;
    std::pair<std::string, std::string> forced{g.label(p), g.label(child)};
    if (!std::binary_search(detected.begin(), detected.end(), forced))
      c.degree_forced = false;
  }

  for (const Superbubble& b : scan.report.items) {
    auto match = std::find_if(
        oracle.bubbles.begin(), oracle.bubbles.end(), [&](const OracleBubble& o) {
          return g.label(o.entrance) == ag.graph.label(b.entrance) &&
                 g.label(o.exit) == ag.graph.label(b.exit);
        });
    if (match == oracle.bubbles.end()) continue;  // counted under pairs_equal
    std::vector<std::string> member_labels{g.label(match->entrance), g.label(match->exit)};
    for (VertexId v : match->interior) member_labels.push_back(g.label(v));
    std::vector<std::string> interval_labels;
    for (int r = topo.rank[b.entrance]; r <= topo.rank[b.exit]; ++r)
      interval_labels.push_back(ag.graph.label(topo.vertex_at[r]));
    std::sort(member_labels.begin(), member_labels.end());
    std::sort(interval_labels.begin(), interval_labels.end());
    if (member_labels != interval_labels) c.interval_membership = false;
  }

  for (std::size_t i = 0; i < scan.report.items.size() && c.nesting; ++i)
    for (std::size_t j = i + 1; j < scan.report.items.size(); ++j) {
      const Superbubble& x = scan.report.items[i];
      const Superbubble& y = scan.report.items[j];
      int lo = std::max(topo.rank[x.entrance], topo.rank[y.entrance]);
      int hi = std::min(topo.rank[x.exit], topo.rank[y.exit]);
      if (hi < lo || hi == lo) continue;  // disjoint or single shared rank
      bool x_holds_y = topo.rank[x.entrance] <= topo.rank[y.entrance] &&
                       topo.rank[y.exit] <= topo.rank[x.exit];
      bool y_holds_x = topo.rank[y.entrance] <= topo.rank[x.entrance] &&
                       topo.rank[x.exit] <= topo.rank[y.exit];
      if (!x_holds_y && !y_holds_x) {
        c.nesting = false;
        break;
      }
    }

  {
    std::vector<int> last_alternative_rank(ag.graph.n(), 0);
    for (const TraceEvent& e : events) {
      if (e.kind != TraceEvent::Kind::kValidate) continue;
      if (e.outcome != ValidationResult::Kind::kAlternative) continue;
      if (e.alternative == kNoVertex) {
        c.alternative_monotone = false;  // never expected on augmented graphs
        continue;
      }
      int r = topo.rank[e.alternative];
      if (r < last_alternative_rank[e.a]) c.alternative_monotone = false;
      last_alternative_rank[e.a] = r;
    }
  }

  c.validate_calls = scan.validate_calls;
  c.validate_budget = 4LL * (ag.graph.n() + ag.graph.m());
  c.work_bound = c.validate_calls <= c.validate_budget;
  return c;
}

// Deterministic fuzz-campaign spec: n <= 60 and m <= 180 so the oracle stays
// fast, with planted diamonds and an occasional out-degree cap mixed in.
inline GenSpec fuzz_spec(std::uint64_t seed) {
  SeededRng rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  GenSpec spec;
  spec.seed = seed;
  spec.n = 2 + rng.below_int(59);
  spec.planted_bubbles = spec.n >= 8 ? rng.below_int(3) : 0;
  const long long pair_cap = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
  spec.extra_edges = static_cast<int>(std::min<long long>(
      rng.below_int(std::min(2 * spec.n, 100) + 1), pair_cap));
  spec.max_outdeg = rng.below(5) == 0 ? 4 : 0;
  return spec;
}

}  // namespace fixtures
