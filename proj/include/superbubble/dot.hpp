#pragma once

// Graphviz export. Plain form emits the digraph as-is; the annotated form
// marks entrances/exits and groups each detected superbubble's span into a
// cluster for visual inspection.

#include <cctype>
#include <string>
#include <vector>

#include "superbubble/detector.hpp"
#include "superbubble/graph.hpp"
#include "superbubble/topo_order.hpp"

namespace superbubble {
namespace detail {

inline bool dot_plain_id(const std::string& s) {
  if (s.empty() || (std::isdigit(static_cast<unsigned char>(s.front())) != 0))
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline std::string dot_id(const std::string& s) {
  if (dot_plain_id(s)) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace detail

inline std::string export_dot(const Graph& g) {
  std::string text = "digraph G {\n";
  for (VertexId u = 0; u < g.n(); ++u)
    for (VertexId v : g.out(u))
      text += "  " + detail::dot_id(g.label(u)) + " -> " + detail::dot_id(g.label(v)) + ";\n";
  text += "}\n";
  return text;
}

inline std::string export_dot(const Graph& g, const SuperbubbleReport& report,
                              const TopoOrder& topo) {
  std::vector<char> entrance(g.n(), 0), exit_mark(g.n(), 0);
  for (const Superbubble& b : report.items) {
    entrance[b.entrance] = 1;
    exit_mark[b.exit] = 1;
  }
  std::string text = "digraph G {\n";
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!entrance[v] && !exit_mark[v]) continue;
    const char* color = entrance[v] && exit_mark[v] ? "goldenrod"
                        : entrance[v]               ? "forestgreen"
                                                    : "firebrick";
    text += "  " + detail::dot_id(g.label(v)) + " [color=" + color +
            ", peripheries=2];\n";
  }
  int cluster = 0;
  for (const Superbubble& b : report.items) {
    text += "  subgraph cluster_" + std::to_string(cluster++) + " {\n";
    text += "    label=" +
            detail::dot_id(g.label(b.entrance) + ".." + g.label(b.exit)) +
            ";\n    color=gray;\n    ";
    text += detail::dot_id(g.label(b.entrance)) + ";";
    for (VertexId v : rank_interval_interior(topo, b))
      text += " " + detail::dot_id(g.label(v)) + ";";
    text += " " + detail::dot_id(g.label(b.exit)) + ";\n  }\n";
  }
  for (VertexId u = 0; u < g.n(); ++u)
    for (VertexId v : g.out(u))
      text += "  " + detail::dot_id(g.label(u)) + " -> " + detail::dot_id(g.label(v)) + ";\n";
  text += "}\n";
  return text;
}

}  // namespace superbubble
