#pragma once

// JSON shapes for reports, traces, and diagnostics. Field order is stable
// (insertion order), which golden tests rely on.

#include <string>

#include <json.hpp>

#include "superbubble/detector.hpp"
#include "superbubble/graph.hpp"
#include "superbubble/oracle.hpp"
#include "superbubble/topo_order.hpp"

namespace superbubble {

using Json = nlohmann::ordered_json;

inline Json report_to_json(const SuperbubbleReport& report, const Graph& g) {
  Json items = Json::array();
  for (const Superbubble& b : report.items)
    items.push_back({{"entrance", g.label(b.entrance)}, {"exit", g.label(b.exit)}});
  return Json{{"items", items}, {"filteredCount", report.filtered_count}};
}

inline Json oracle_to_json(const OracleResult& result, const Graph& g) {
  Json items = Json::array();
  for (const OracleBubble& b : result.bubbles) {
    Json interior = Json::array();
    for (VertexId v : b.interior) interior.push_back(g.label(v));
    items.push_back({{"entrance", g.label(b.entrance)},
                     {"exit", g.label(b.exit)},
                     {"interior", interior}});
  }
  return Json{{"items", items}, {"filteredCount", 0}};
}

inline Json diagnostic_to_json(const OrderingDiagnostic& diag, const Graph& g) {
  Json j{{"ok", diag.ok}, {"detail", diag.detail}};
  if (diag.bad_edge)
    j["badEdge"] = {g.label(diag.bad_edge->first), g.label(diag.bad_edge->second)};
  return j;
}

inline Json trace_to_json(const TraceResult& trace, const Graph& g) {
  auto label_or_null = [&](VertexId v) {
    return v == kNoVertex ? Json(nullptr) : Json(g.label(v));
  };
  Json events = Json::array();
  for (const TraceEvent& e : trace.events) {
    switch (e.kind) {
      case TraceEvent::Kind::kProcessExit:
        events.push_back({{"kind", "processExit"},
                          {"start", label_or_null(e.a)},
                          {"exit", label_or_null(e.b)},
                          {"depth", e.depth}});
        break;
      case TraceEvent::Kind::kValidate: {
        const char* outcome = e.outcome == ValidationResult::Kind::kValid ? "valid"
                              : e.outcome == ValidationResult::Kind::kNoBubble
                                  ? "noBubble"
                                  : "alternative";
        Json j{{"kind", "validate"},
               {"entrance", label_or_null(e.a)},
               {"exit", label_or_null(e.b)},
               {"outcome", outcome}};
        if (e.outcome == ValidationResult::Kind::kAlternative)
          j["alternative"] = label_or_null(e.alternative);
        events.push_back(std::move(j));
        break;
      }
      case TraceEvent::Kind::kAlternativeWrite:
        events.push_back({{"kind", "alternativeWrite"},
                          {"entrance", label_or_null(e.a)},
                          {"value", label_or_null(e.b)}});
        break;
      case TraceEvent::Kind::kReport:
        events.push_back({{"kind", "report"},
                          {"entrance", label_or_null(e.a)},
                          {"exit", label_or_null(e.b)}});
        break;
    }
  }
  return Json{{"report", report_to_json(trace.report, g)},
              {"validateCalls", trace.validate_calls},
              {"events", std::move(events)}};
}

}  // namespace superbubble
