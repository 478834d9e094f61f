#pragma once

// Phase-separated timing of one detection run, so a regression in sorting,
// index construction, or the scan itself is attributable.

#include <chrono>

#include "superbubble/detector.hpp"
#include "superbubble/graph.hpp"
#include "superbubble/rmq.hpp"
#include "superbubble/topo_order.hpp"

namespace superbubble {

struct BenchRecord {
  int n = 0;
  int m = 0;
  double sort_ms = 0.0;
  double index_ms = 0.0;
  double scan_ms = 0.0;
  double total_ms = 0.0;
  int superbubbles = 0;
  long long validate_calls = 0;
};

inline BenchRecord bench_detect(const AugmentedGraph& ag) {
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };
  BenchRecord rec;
  rec.n = ag.graph.n();
  rec.m = ag.graph.m();
  const auto t0 = Clock::now();
  TopoOrder topo = topological_sort(ag);
  const auto t1 = Clock::now();
  RangeArrays arrays = build_range_arrays(ag, topo);
  RmqIndex parent_min(std::move(arrays.min_parent_rank), RmqMode::kMin);
  RmqIndex child_max(std::move(arrays.max_child_rank), RmqMode::kMax);
  const auto t2 = Clock::now();
  ScanResult scan = run_scan(ag, topo, parent_min, child_max);
  const auto t3 = Clock::now();
  rec.sort_ms = ms(t1 - t0);
  rec.index_ms = ms(t2 - t1);
  rec.scan_ms = ms(t3 - t2);
  rec.total_ms = ms(t3 - t0);
  rec.superbubbles = static_cast<int>(scan.report.items.size());
  rec.validate_calls = scan.validate_calls;
  return rec;
}

}  // namespace superbubble
