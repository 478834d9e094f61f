#pragma once

// Seeded random DAG generation for differential testing and benchmarks.
// Vertices are laid out along a topological line: a spanning in-edge from a
// random earlier vertex keeps the graph connected-ish, extra forward edges
// add density, and planted diamonds guarantee a known superbubble each.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "superbubble/graph.hpp"

namespace superbubble {

// mt19937_64 is bit-identical everywhere; std::uniform_int_distribution is
// not, so values are reduced by hand. Recorded in generated output so that
// fuzz failures reproduce across machines.
inline constexpr std::string_view kRngAlgorithm = "mt19937-64/mod";

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Value in [0, bound), bound > 0. Modulo bias is immaterial at these sizes.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

 private:
  std::mt19937_64 engine_;
};

struct GenSpec {
  int n = 0;                // vertex count
  int extra_edges = 0;      // edges beyond the spanning structure
  int planted_bubbles = 0;  // 4-vertex diamond motifs with isolated interiors
  std::uint64_t seed = 0;
  int max_outdeg = 0;  // 0 = unbounded; assembly graphs are alphabet-bounded
};

// A planted diamond s -> {b, c} -> t keeps b and c untouched by any other
// edge, s emits nothing else and t receives nothing else; that pins <s, t>
// as a superbubble no matter what the rest of the graph does.
inline Graph generate(const GenSpec& spec,
                      std::vector<std::pair<std::string, std::string>>* planted_pairs = nullptr) {
  if (spec.n < 2) throw std::invalid_argument("generate: n must be at least 2");
  const long long max_extra = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
  if (spec.extra_edges < 0 || spec.extra_edges > max_extra)
    throw std::invalid_argument("generate: extra_edges exceeds n(n-1)/2");
  if (spec.planted_bubbles < 0 || 4LL * spec.planted_bubbles > spec.n)
    throw std::invalid_argument("generate: planted bubbles need 4 vertices each");
  if (spec.max_outdeg < 0 ||
      (spec.max_outdeg > 0 && spec.max_outdeg < 2 && spec.planted_bubbles > 0))
    throw std::invalid_argument("generate: planted bubbles need out-degree 2");

  SeededRng rng(spec.seed);
  const int n = spec.n;

  enum class Slot : std::uint8_t { kCore, kDiamondEntry, kDiamondMid, kDiamondExit };
  std::vector<Slot> slot(n, Slot::kCore);

  // Non-overlapping diamond blocks placed by random gaps; 4 * planted <= n
  // means placement never fails.
  std::vector<int> diamond_at;
  {
    int cursor = 0;
    int slack = n - 4 * spec.planted_bubbles;
    for (int b = 0; b < spec.planted_bubbles; ++b) {
      int gap = slack > 0 ? rng.below_int(slack + 1) : 0;
      slack -= gap;
      int start = cursor + gap;
      slot[start] = Slot::kDiamondEntry;
      slot[start + 1] = Slot::kDiamondMid;
      slot[start + 2] = Slot::kDiamondMid;
      slot[start + 3] = Slot::kDiamondExit;
      diamond_at.push_back(start);
      cursor = start + 4;
    }
  }

  std::vector<int> outdeg(n, 0);
  std::unordered_set<std::uint64_t> present;
  std::vector<std::pair<int, int>> edges;
  auto add_edge = [&](int u, int v) {
    std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    if (!present.insert(key).second) return false;
    edges.emplace_back(u, v);
    ++outdeg[u];
    return true;
  };
  auto can_emit = [&](int q) {
    return (slot[q] == Slot::kCore || slot[q] == Slot::kDiamondExit) &&
           (spec.max_outdeg == 0 || outdeg[q] < spec.max_outdeg);
  };
  auto can_receive = [&](int p) {
    return slot[p] == Slot::kCore || slot[p] == Slot::kDiamondEntry;
  };

  for (int start : diamond_at) {
    add_edge(start, start + 1);
    add_edge(start, start + 2);
    add_edge(start + 1, start + 3);
    add_edge(start + 2, start + 3);
  }

  // Spanning structure: every receivable vertex gets one in-edge from some
  // earlier emitter when one exists.
  for (int p = 1; p < n; ++p) {
    if (!can_receive(p)) continue;
    int q = -1;
    for (int attempt = 0; attempt < 32 && q < 0; ++attempt) {
      int candidate = rng.below_int(p);
      if (can_emit(candidate)) q = candidate;
    }
    for (int candidate = p - 1; q < 0 && candidate >= 0; --candidate)
      if (can_emit(candidate)) q = candidate;
    if (q >= 0) add_edge(q, p);
  }

  // Extra density, best effort under the degree cap and class constraints.
  {
    long long attempts = 0;
    const long long attempt_budget = 40LL * spec.extra_edges + 400;
    int added = 0;
    while (added < spec.extra_edges && attempts < attempt_budget) {
      ++attempts;
      int p = 1 + rng.below_int(n - 1);
      int q = rng.below_int(p);
      if (!can_receive(p) || !can_emit(q)) continue;
      if (add_edge(q, p)) ++added;
    }
  }

  GraphBuilder builder;
  for (int v = 0; v < n; ++v) builder.intern("n" + std::to_string(v));
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) builder.add_edge(u, v);

  if (planted_pairs) {
    planted_pairs->clear();
    for (int start : diamond_at)
      planted_pairs->emplace_back("n" + std::to_string(start),
                                  "n" + std::to_string(start + 3));
  }
  return builder.build();
}

}  // namespace superbubble
