#pragma once

// DFS-based topological ordering. Ranks are assigned backwards from n at
// vertex finish time, which makes the discovery edges a spanning tree rooted
// at the source with the interval property the detector relies on: for any
// tree path v..u, every vertex ranked strictly between v and u is reachable
// from v. A queue-based sort does not have that property, so the DFS scheme
// here is not interchangeable with one.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superbubble/graph.hpp"

namespace superbubble {

class CycleError : public std::runtime_error {
 public:
  CycleError(const std::string& from, const std::string& to)
      : std::runtime_error("graph is cyclic: back edge '" + from + "' -> '" +
                           to + "'") {}
};

struct TopoOrder {
  std::vector<int> rank;           // vertex id -> rank in 1..n
  std::vector<VertexId> vertex_at;  // rank -> vertex id; index 0 unused
  std::vector<VertexId> tree_parent;  // DFS discovery parent; source -> kNoVertex

  int rank_of(VertexId v) const { return rank[v]; }
  VertexId at(int r) const { return vertex_at[r]; }
};

// Children are visited in adjacency-list order, so the ordering is a pure
// function of the graph's construction order. The sort is iterative: path
// graphs of 10^6 vertices must not exhaust the call stack.
inline TopoOrder topological_sort(const AugmentedGraph& ag) {
  const Graph& g = ag.graph;
  const int n = g.n();
  TopoOrder t;
  t.rank.assign(n, 0);
  t.vertex_at.assign(n + 1, kNoVertex);
  t.tree_parent.assign(n, kNoVertex);

  enum : std::uint8_t { kUnvisited, kActive, kFinished };
  std::vector<std::uint8_t> state(n, kUnvisited);
  std::vector<std::pair<VertexId, std::uint32_t>> stack;
  int next_rank = n;

  auto run_from = [&](VertexId root) {
    state[root] = kActive;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      VertexId v = stack.back().first;
      std::span<const VertexId> children = g.out(v);
      if (stack.back().second < children.size()) {
        VertexId w = children[stack.back().second++];
        if (state[w] == kUnvisited) {
          state[w] = kActive;
          t.tree_parent[w] = v;
          stack.emplace_back(w, 0);
        } else if (state[w] == kActive) {
          throw CycleError(g.label(v), g.label(w));
        }
      } else {
        state[v] = kFinished;
        t.rank[v] = next_rank;
        t.vertex_at[next_rank] = v;
        --next_rank;
        stack.pop_back();
      }
    }
  };

  run_from(ag.source);
  // Everything is reachable from the unique source of an acyclic graph, so a
  // leftover unvisited vertex implies a cycle; keep searching only to name a
  // back edge for the error.
  for (VertexId v = 0; v < n; ++v)
    if (state[v] == kUnvisited) run_from(v);
  return t;
}

struct OrderingDiagnostic {
  bool ok = true;
  std::string detail;  // empty when ok
  std::optional<std::pair<VertexId, VertexId>> bad_edge;
};

namespace detail {

inline std::vector<char> forward_closure(const Graph& g, VertexId from) {
  std::vector<char> seen(g.n(), 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.out(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace detail

// Checks that every edge goes rank-forward, that ranks are a bijection onto
// 1..n, and (on a sample of ancestor/descendant tree pairs) that every vertex
// ranked inside the pair's span is reachable from the ancestor. Reachability
// uses a plain BFS/DFS closure, independent of the sort itself.
inline OrderingDiagnostic check_ordering_properties(const AugmentedGraph& ag,
                                                    const TopoOrder& t,
                                                    int reachability_samples = 32) {
  const Graph& g = ag.graph;
  const int n = g.n();
  OrderingDiagnostic diag;
  auto fail = [&](std::string detail) {
    diag.ok = false;
    diag.detail = std::move(detail);
    return diag;
  };

  std::vector<char> seen_rank(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (t.rank[v] < 1 || t.rank[v] > n || seen_rank[t.rank[v]] ||
        t.vertex_at[t.rank[v]] != v)
      return fail("rank assignment is not a bijection onto 1..n at vertex '" +
                  g.label(v) + "'");
    seen_rank[t.rank[v]] = 1;
  }

  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out(u))
      if (t.rank[u] >= t.rank[v]) {
        diag.bad_edge = {u, v};
        return fail("edge '" + g.label(u) + "' -> '" + g.label(v) +
                    "' does not go rank-forward");
      }

  if (reachability_samples > 0 && n > 2) {
    int stride = std::max(1, n / reachability_samples);
    int hops = 1;
    for (int r = 2; r <= n; r += stride) {
      VertexId u = t.vertex_at[r];
      VertexId v = u;
      for (int k = 0; k < hops && t.tree_parent[v] != kNoVertex; ++k)
        v = t.tree_parent[v];
      hops = hops >= 8 ? 1 : hops * 2;
      if (v == u) continue;
      std::vector<char> reach = detail::forward_closure(g, v);
      for (int w_rank = t.rank[v] + 1; w_rank < t.rank[u]; ++w_rank)
        if (!reach[t.vertex_at[w_rank]])
          return fail("vertex '" + g.label(t.vertex_at[w_rank]) +
                      "' lies between tree pair '" + g.label(v) + "'..'" +
                      g.label(u) + "' but is not reachable");
    }
  }
  return diag;
}

}  // namespace superbubble
