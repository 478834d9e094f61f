#pragma once

// Brute-force superbubble enumeration straight from the definition, used as
// ground truth when differential-testing the linear-time detector. It shares
// no traversal code with the detector: reachability is a plain closure here
// and acyclicity is checked by repeated source removal, not by DFS ranks.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "superbubble/graph.hpp"

namespace superbubble {

inline constexpr int kDefaultOracleCap = 500;

class OracleCapError : public std::runtime_error {
 public:
  explicit OracleCapError(int n, int cap)
      : std::runtime_error("oracle cap exceeded: " + std::to_string(n) +
                           " vertices > cap " + std::to_string(cap)) {}
};

struct OracleBubble {
  VertexId entrance = kNoVertex;
  VertexId exit = kNoVertex;
  std::vector<VertexId> interior;  // ascending ids
};

struct OracleResult {
  std::vector<OracleBubble> bubbles;  // ascending (entrance, exit)
};

namespace oracle_detail {

// Closure from `from` that records but never expands `avoid`;
// avoid == kNoVertex disables the avoidance.
inline void closure_avoiding(const Graph& g, VertexId from, VertexId avoid,
                             bool forward, std::vector<char>& member) {
  std::fill(member.begin(), member.end(), 0);
  std::vector<VertexId> stack{from};
  member[from] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : forward ? g.out(v) : g.in(v))
      if (!member[w]) {
        member[w] = 1;
        if (w != avoid) stack.push_back(w);
      }
  }
}

inline bool induced_subgraph_acyclic(const Graph& g, const std::vector<char>& member) {
  const int n = g.n();
  std::vector<int> indeg(n, 0);
  std::vector<VertexId> ready;
  int inside = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!member[v]) continue;
    ++inside;
    for (VertexId p : g.in(v))
      if (member[p]) ++indeg[v];
    if (indeg[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (VertexId w : g.out(v))
      if (member[w] && --indeg[w] == 0) ready.push_back(w);
  }
  return removed == inside;
}

inline bool graph_acyclic(const Graph& g) {
  std::vector<char> all(g.n(), 1);
  return induced_subgraph_acyclic(g, all);
}

}  // namespace oracle_detail

// Forward closure from `from` that never expands `avoid`; includes `from`,
// and includes `avoid` when an edge reaches it.
inline std::vector<VertexId> reachable_avoiding(const Graph& g, VertexId from,
                                                VertexId avoid) {
  std::vector<char> member(g.n(), 0);
  oracle_detail::closure_avoiding(g, from, avoid, /*forward=*/true, member);
  std::vector<VertexId> result;
  for (VertexId v = 0; v < g.n(); ++v)
    if (member[v]) result.push_back(v);
  return result;
}

// Tests every ordered vertex pair against the four defining criteria:
// reachability, matching of the forward and backward avoidance closures,
// acyclicity of the induced subgraph, and minimality (no closer exit for the
// same entrance passes the first three). Quadratic in n times graph size,
// hence the cap.
inline OracleResult oracle_enumerate(const Graph& g, int cap = kDefaultOracleCap,
                                     bool override_cap = false) {
  const int n = g.n();
  if (!override_cap && n > cap) throw OracleCapError(n, cap);
  if (!oracle_detail::graph_acyclic(g))
    throw NotDagError("oracle requires an acyclic graph");

  OracleResult result;
  std::vector<char> full(n), forward(n), backward(n);
  struct PassingExit {
    VertexId exit;
    std::vector<char> members;
  };
  std::vector<PassingExit> passing;
  for (VertexId s = 0; s < n; ++s) {
    oracle_detail::closure_avoiding(g, s, kNoVertex, true, full);
    passing.clear();
    for (VertexId t = 0; t < n; ++t) {
      if (t == s || !full[t]) continue;
      oracle_detail::closure_avoiding(g, s, t, true, forward);
      if (!forward[t]) continue;  // reachability
      oracle_detail::closure_avoiding(g, t, s, false, backward);
      if (forward != backward) continue;  // matching
      if (!oracle_detail::induced_subgraph_acyclic(g, forward)) continue;
      passing.push_back({t, forward});
    }
    for (const PassingExit& p : passing) {
      bool minimal = std::none_of(passing.begin(), passing.end(),
                                  [&](const PassingExit& other) {
                                    return other.exit != p.exit && p.members[other.exit];
                                  });
      if (!minimal) continue;
      OracleBubble bubble{s, p.exit, {}};
      for (VertexId v = 0; v < n; ++v)
        if (p.members[v] && v != s && v != p.exit) bubble.interior.push_back(v);
      result.bubbles.push_back(std::move(bubble));
    }
  }
  return result;
}

}  // namespace superbubble
