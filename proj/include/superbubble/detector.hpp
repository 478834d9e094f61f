#pragma once

// Superbubble detection on a single-source, single-sink DAG. A rank-ordered
// candidate list is processed backwards; each exit candidate triggers a walk
// over possible entrances that is cut short by constant-time range min/max
// validation and a memo of already-refuted fallback entrances.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superbubble/graph.hpp"
#include "superbubble/rmq.hpp"
#include "superbubble/topo_order.hpp"

namespace superbubble {

// A vertex can open a superbubble only if some child has in-degree 1, and
// close one only if some parent has out-degree 1.
inline bool is_entrance(const Graph& g, VertexId v) {
  for (VertexId c : g.out(v))
    if (g.in_degree(c) == 1) return true;
  return false;
}

inline bool is_exit(const Graph& g, VertexId v) {
  for (VertexId p : g.in(v))
    if (g.out_degree(p) == 1) return true;
  return false;
}

enum class Role : std::uint8_t { kEntrance, kExit };

// Doubly-linked candidate list backed by an arena. A vertex that is both an
// exit and an entrance candidate holds two entries, exit first. Deletion only
// ever happens at the tail; per-vertex entry ids survive deletion and double
// as the static candidacy flags the validator needs in O(1).
class CandidateList {
 public:
  static constexpr int kNull = -1;

  explicit CandidateList(int vertex_count)
      : entrance_entry_(vertex_count, kNull), exit_entry_(vertex_count, kNull) {}

  int push_back(VertexId v, Role role) {
    int id = static_cast<int>(entries_.size());
    entries_.push_back({v, role, tail_, kNull});
    if (tail_ != kNull) entries_[tail_].next = id;
    if (head_ == kNull) head_ = id;
    tail_ = id;
    (role == Role::kEntrance ? entrance_entry_ : exit_entry_)[v] = id;
    ++size_;
    return id;
  }

  void delete_tail() {
    assert(tail_ != kNull);
    int prev = entries_[tail_].prev;
    if (prev != kNull)
      entries_[prev].next = kNull;
    else
      head_ = kNull;
    tail_ = prev;
    --size_;
  }

  bool empty() const { return size_ == 0; }
  int size() const { return size_; }
  int head() const { return head_; }
  int tail() const { return tail_; }
  int next(int entry) const { return entries_[entry].next; }
  VertexId vertex(int entry) const { return entries_[entry].vertex; }
  Role role(int entry) const { return entries_[entry].role; }

  bool is_entrance_candidate(VertexId v) const { return entrance_entry_[v] != kNull; }
  bool is_exit_candidate(VertexId v) const { return exit_entry_[v] != kNull; }
  int entrance_entry(VertexId v) const { return entrance_entry_[v]; }

 private:
  struct Entry {
    VertexId vertex;
    Role role;
    int prev;
    int next;
  };

  std::vector<Entry> entries_;
  std::vector<int> entrance_entry_;
  std::vector<int> exit_entry_;
  int head_ = kNull;
  int tail_ = kNull;
  int size_ = 0;
};

struct DetectorState {
  // Nearest entrance candidate strictly earlier in rank, kNoVertex if none.
  std::vector<VertexId> previous_entrance;
  // Last refuted fallback entrance recorded for an entrance, kNoVertex until
  // first written. Lets later walks skip entrance chains already refuted.
  std::vector<VertexId> alternative_entrance;
};

struct Candidates {
  CandidateList list;
  DetectorState state;
};

inline Candidates build_candidates(const AugmentedGraph& ag, const TopoOrder& t) {
  const Graph& g = ag.graph;
  const int n = g.n();
  Candidates c{CandidateList(n), {}};
  c.state.previous_entrance.assign(n, kNoVertex);
  c.state.alternative_entrance.assign(n, kNoVertex);
  VertexId prev_entrance = kNoVertex;
  for (int r = 1; r <= n; ++r) {
    VertexId v = t.vertex_at[r];
    c.state.previous_entrance[v] = prev_entrance;
    if (is_exit(g, v)) c.list.push_back(v, Role::kExit);
    if (is_entrance(g, v)) {
      c.list.push_back(v, Role::kEntrance);
      prev_entrance = v;
    }
  }
  return c;
}

struct ValidationResult {
  enum class Kind { kValid, kAlternative, kNoBubble };
  Kind kind = Kind::kNoBubble;
  VertexId alternative = kNoVertex;  // set for kAlternative
};

// Constant-time candidate check: <start, end> spans a superbubble iff no
// vertex strictly inside the rank interval has a child past `end` and none
// has a parent before `start`. When the parent side fails, the offending
// furthest parent suggests the next entrance worth trying.
inline ValidationResult validate_superbubble(const TopoOrder& t,
                                             const RmqIndex& parent_min,
                                             const RmqIndex& child_max,
                                             const CandidateList& cands,
                                             const DetectorState& state,
                                             VertexId start, VertexId end) {
  const int lo = t.rank[start];
  const int hi = t.rank[end];
  if (lo >= hi)
    throw std::invalid_argument("validate_superbubble: start must precede end");
  if (range_max(child_max, lo, hi - 1) != hi)
    return {ValidationResult::Kind::kNoBubble, kNoVertex};
  const int furthest_parent = range_min(parent_min, lo + 1, hi);
  if (furthest_parent == lo) return {ValidationResult::Kind::kValid, kNoVertex};
  VertexId w = t.vertex_at[furthest_parent];
  VertexId alt = cands.is_entrance_candidate(w) ? w : state.previous_entrance[w];
  return {ValidationResult::Kind::kAlternative, alt};
}

struct Superbubble {
  VertexId entrance = kNoVertex;
  VertexId exit = kNoVertex;
};

struct SuperbubbleReport {
  std::vector<Superbubble> items;  // strictly decreasing exit rank
  int filtered_count = 0;  // bubbles dropped for touching an artificial vertex
};

struct TraceEvent {
  enum class Kind { kProcessExit, kValidate, kAlternativeWrite, kReport };
  Kind kind;
  VertexId a = kNoVertex;  // process: start; validate/write: entrance; report: entrance
  VertexId b = kNoVertex;  // process/validate/report: exit; write: stored value
  int depth = 0;           // kProcessExit only; 0 = called from the outer scan
  ValidationResult::Kind outcome = ValidationResult::Kind::kNoBubble;  // kValidate
  VertexId alternative = kNoVertex;                                    // kValidate
};

struct ScanOptions {
  // Disabling the memo never changes the reported set; it voids the linear
  // work bound. The verification harness flips this to prove that a build
  // with the memo broken is caught by the validate-call budget.
  bool use_alternative_memo = true;
};

struct ScanResult {
  SuperbubbleReport report;
  long long validate_calls = 0;
};

namespace detail {

class ScanEngine {
 public:
  ScanEngine(const AugmentedGraph& ag, const TopoOrder& t,
             const RmqIndex& parent_min, const RmqIndex& child_max,
             ScanOptions options, std::vector<TraceEvent>* trace)
      : ag_(ag),
        topo_(t),
        parent_min_(parent_min),
        child_max_(child_max),
        options_(options),
        trace_(trace),
        cands_(build_candidates(ag, t)) {}

  ScanResult run() {
    CandidateList& list = cands_.list;
    while (!list.empty()) {
      if (list.role(list.tail()) == Role::kEntrance)
        list.delete_tail();
      else
        process_exit(list.vertex(list.head()), list.vertex(list.tail()), 0);
    }
    return {std::move(report_), validate_calls_};
  }

 private:
  // Encoded no-bubble outcome of a validation, alongside plain vertex ids
  // >= 0 and kNoVertex for a missing alternative.
  static constexpr VertexId kNoBubbleMark = -2;

  int rank_or_zero(VertexId v) const { return v == kNoVertex ? 0 : topo_.rank[v]; }

  VertexId validate(VertexId s, VertexId exit) {
    ++validate_calls_;
    ValidationResult r = validate_superbubble(topo_, parent_min_, child_max_,
                                              cands_.list, cands_.state, s, exit);
    if (trace_)
      trace_->push_back({TraceEvent::Kind::kValidate, s, exit, 0, r.kind, r.alternative});
    switch (r.kind) {
      case ValidationResult::Kind::kValid:
        return s;
      case ValidationResult::Kind::kAlternative:
        return r.alternative;
      case ValidationResult::Kind::kNoBubble:
        break;
    }
    return kNoBubbleMark;
  }

  // Reports the superbubble ending at `exit` (if any), then recurses on exit
  // candidates nested between its entrance and `exit`. Consumes the tail of
  // the candidate list down to the reported entrance.
  void process_exit(VertexId start, VertexId exit, int depth) {
    if (trace_) trace_->push_back({TraceEvent::Kind::kProcessExit, start, exit, depth});
    CandidateList& list = cands_.list;
    if (start == kNoVertex || exit == kNoVertex ||
        topo_.rank[start] >= topo_.rank[exit]) {
      list.delete_tail();
      return;
    }
    std::vector<VertexId>& alt_memo = cands_.state.alternative_entrance;
    VertexId s = cands_.state.previous_entrance[exit];
    bool found = false;
    while (rank_or_zero(s) >= topo_.rank[start]) {
      VertexId valid = validate(s, exit);
      if (valid == s) {  // validation succeeded for s itself
        found = true;
        break;
      }
      // A repeated alternative restarts an entrance chain already refuted for
      // a later exit; no-bubble ends the walk outright. An alternative that
      // drops below `start` leaves the window the entrance is confined to, so
      // falling out of the loop guard is also a non-report.
      if (valid == alt_memo[s] || valid == kNoBubbleMark) break;
      if (options_.use_alternative_memo) {
        alt_memo[s] = valid;
        if (trace_)
          trace_->push_back({TraceEvent::Kind::kAlternativeWrite, s, valid, 0});
      }
      s = valid;
    }
    list.delete_tail();
    if (!found) return;

    report(s, exit);
    // s is an entrance candidate whose entry is still live: the walk above
    // only deleted the processed exit's tail entry.
    const int s_entry = list.entrance_entry(s);
    while (list.tail() != s_entry) {
      int tail = list.tail();
      if (list.role(tail) == Role::kExit)
        process_exit(list.vertex(list.next(s_entry)), list.vertex(tail), depth + 1);
      else
        list.delete_tail();
    }
  }

  void report(VertexId entrance, VertexId exit) {
    if (trace_) trace_->push_back({TraceEvent::Kind::kReport, entrance, exit, 0});
    if (ag_.is_artificial(entrance) || ag_.is_artificial(exit))
      ++report_.filtered_count;
    else
      report_.items.push_back({entrance, exit});
  }

  const AugmentedGraph& ag_;
  const TopoOrder& topo_;
  const RmqIndex& parent_min_;
  const RmqIndex& child_max_;
  ScanOptions options_;
  std::vector<TraceEvent>* trace_;
  Candidates cands_;
  SuperbubbleReport report_;
  long long validate_calls_ = 0;
};

}  // namespace detail

inline ScanResult run_scan(const AugmentedGraph& ag, const TopoOrder& t,
                           const RmqIndex& parent_min, const RmqIndex& child_max,
                           ScanOptions options = {},
                           std::vector<TraceEvent>* trace = nullptr) {
  return detail::ScanEngine(ag, t, parent_min, child_max, options, trace).run();
}

inline SuperbubbleReport detect(const AugmentedGraph& ag) {
  TopoOrder t = topological_sort(ag);
  RangeArrays arrays = build_range_arrays(ag, t);
  RmqIndex parent_min(std::move(arrays.min_parent_rank), RmqMode::kMin);
  RmqIndex child_max(std::move(arrays.max_child_rank), RmqMode::kMax);
  return run_scan(ag, t, parent_min, child_max).report;
}

struct TraceResult {
  SuperbubbleReport report;
  std::vector<TraceEvent> events;
  long long validate_calls = 0;
};

inline TraceResult trace_detect(const AugmentedGraph& ag) {
  TopoOrder t = topological_sort(ag);
  RangeArrays arrays = build_range_arrays(ag, t);
  RmqIndex parent_min(std::move(arrays.min_parent_rank), RmqMode::kMin);
  RmqIndex child_max(std::move(arrays.max_child_rank), RmqMode::kMax);
  TraceResult result;
  ScanResult scan = run_scan(ag, t, parent_min, child_max, {}, &result.events);
  result.report = std::move(scan.report);
  result.validate_calls = scan.validate_calls;
  return result;
}

// Interior of a reported bubble as the open rank interval between entrance
// and exit. Diagnostics only; detection itself never materialises interiors.
inline std::vector<VertexId> rank_interval_interior(const TopoOrder& t, Superbubble b) {
  std::vector<VertexId> interior;
  for (int r = t.rank[b.entrance] + 1; r < t.rank[b.exit]; ++r)
    interior.push_back(t.vertex_at[r]);
  return interior;
}

}  // namespace superbubble
