#pragma once

// Rank-indexed extremal-neighbour arrays and the constant-time range min/max
// index used to validate superbubble candidates. The index is a two-level
// structure: 64-wide blocks answer in-block ranges through monotone-stack
// bitmasks, and a small sparse table over per-block extrema covers the
// middle. Preprocessing is O(n); queries are a handful of word operations
// and never loop over the range.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superbubble/graph.hpp"
#include "superbubble/topo_order.hpp"

namespace superbubble {

// min_parent_rank[r]: smallest rank among parents of the vertex at rank r;
// max_child_rank[r]: largest rank among its children. Edges go rank-forward,
// so min_parent_rank[r] < r and max_child_rank[r] > r everywhere except the
// sentinels: rank 1 has no parents (value n+1) and rank n has no children
// (value 0). Queries are required to stay clear of both.
struct RangeArrays {
  std::vector<int> min_parent_rank;
  std::vector<int> max_child_rank;
};

inline RangeArrays build_range_arrays(const AugmentedGraph& ag, const TopoOrder& t) {
  const Graph& g = ag.graph;
  const int n = g.n();
  RangeArrays a;
  a.min_parent_rank.assign(n + 1, n + 1);
  a.max_child_rank.assign(n + 1, 0);
  for (int r = 1; r <= n; ++r) {
    VertexId v = t.vertex_at[r];
    for (VertexId p : g.in(v))
      a.min_parent_rank[r] = std::min(a.min_parent_rank[r], t.rank[p]);
    for (VertexId c : g.out(v))
      a.max_child_rank[r] = std::max(a.max_child_rank[r], t.rank[c]);
  }
  return a;
}

enum class RmqMode { kMin, kMax };

class RmqIndex {
 public:
  // base is 1-indexed: base[1..size], base[0] ignored.
  RmqIndex(std::vector<int> base, RmqMode mode)
      : base_(std::move(base)), mode_(mode) {
    const int n = size();
    mask_.assign(n + 1, 0);
    const int blocks = (n + kBlock - 1) / kBlock;

    std::vector<int> extreme(std::max(blocks, 1), 0);
    for (int b = 0; b < blocks; ++b) {
      const int begin = 1 + b * kBlock;
      const int end = std::min(n, begin + kBlock - 1);
      std::uint64_t stack = 0;  // offsets of candidate extrema, ascending values
      for (int i = begin; i <= end; ++i) {
        while (stack != 0) {
          int top = kBlock - 1 - std::countl_zero(stack);
          if (!prefer(base_[i], base_[begin + top])) break;
          stack &= ~(1ULL << top);
        }
        stack |= 1ULL << (i - begin);
        mask_[i] = stack;
      }
      extreme[b] = base_[in_block(begin, end)];
    }

    const int levels = blocks > 0 ? std::bit_width(static_cast<unsigned>(blocks)) : 1;
    table_.assign(levels, {});
    table_[0] = std::move(extreme);
    for (int k = 1; k < levels; ++k) {
      const int span = 1 << k;
      table_[k].assign(blocks - span + 1, 0);
      for (int b = 0; b + span <= blocks; ++b)
        table_[k][b] = pick(table_[k - 1][b], table_[k - 1][b + span / 2]);
    }
  }

  int size() const { return static_cast<int>(base_.size()) - 1; }
  RmqMode mode() const { return mode_; }

  int query(int i, int j) const {
    if (i < 1 || j > size() || i > j)
      throw std::out_of_range("RmqIndex::query(" + std::to_string(i) + ", " +
                              std::to_string(j) + ") outside 1.." +
                              std::to_string(size()));
    const int bi = (i - 1) / kBlock;
    const int bj = (j - 1) / kBlock;
    if (bi == bj) return base_[in_block(i, j)];
    int result = pick(base_[in_block(i, bi * kBlock + kBlock)],
                      base_[in_block(bj * kBlock + 1, j)]);
    if (bi + 1 <= bj - 1) {
      const int k = std::bit_width(static_cast<unsigned>(bj - bi - 1)) - 1;
      result = pick(result, pick(table_[k][bi + 1], table_[k][bj - (1 << k)]));
    }
    return result;
  }

 private:
  static constexpr int kBlock = 64;

  bool prefer(int a, int b) const { return mode_ == RmqMode::kMin ? a <= b : a >= b; }
  int pick(int a, int b) const { return prefer(a, b) ? a : b; }

  // Position of the extreme value of base[i..j] within one block: the lowest
  // surviving stack candidate at j that is at or after i.
  int in_block(int i, int j) const {
    const int begin = 1 + (j - 1) / kBlock * kBlock;
    const std::uint64_t live = mask_[j] & (~0ULL << (i - begin));
    return begin + std::countr_zero(live);
  }

  std::vector<int> base_;
  std::vector<std::uint64_t> mask_;     // per-position candidate offsets
  std::vector<std::vector<int>> table_;  // sparse table over block extrema
  RmqMode mode_;
};

inline int range_min(const RmqIndex& idx, int i, int j) {
  if (idx.mode() != RmqMode::kMin)
    throw std::logic_error("range_min called on a max index");
  return idx.query(i, j);
}

inline int range_max(const RmqIndex& idx, int i, int j) {
  if (idx.mode() != RmqMode::kMax)
    throw std::logic_error("range_max called on a min index");
  return idx.query(i, j);
}

}  // namespace superbubble
