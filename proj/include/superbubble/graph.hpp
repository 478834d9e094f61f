#pragma once

// Directed graph with dense integer ids and external string labels.
// Graphs are immutable once built; construction goes through GraphBuilder
// or load_edge_list. Augmentation adds a global source/sink so that the
// detection pipeline always sees a single-source, single-sink graph.

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace superbubble {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

inline constexpr std::size_t kMaxLabelBytes = 255;
inline constexpr std::string_view kArtificialSourceLabel = "__source__";
inline constexpr std::string_view kArtificialSinkLabel = "__sink__";

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class SelfLoopError : public std::runtime_error {
 public:
  explicit SelfLoopError(const std::string& label)
      : std::runtime_error("self-loop edge on vertex '" + label + "'"),
        label_(label) {}

  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class NotDagError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adjacency lives in two CSR-style arrays so that the traversal-heavy
// pipeline stays compact and sequential; per-direction neighbour order is the
// edge insertion order.
class Graph {
 public:
  Graph() = default;

  int n() const { return static_cast<int>(labels_.size()); }
  int m() const { return static_cast<int>(out_targets_.size()); }

  std::span<const VertexId> out(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in(VertexId v) const {
    return {in_targets_.data() + in_offsets_[v],
            in_targets_.data() + in_offsets_[v + 1]};
  }
  int out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  int in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  const std::string& label(VertexId v) const { return labels_[v]; }

  std::optional<VertexId> find(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    return it == ids_.end() ? std::nullopt : std::optional<VertexId>(it->second);
  }

  std::vector<VertexId> sources() const {
    std::vector<VertexId> result;
    for (VertexId v = 0; v < n(); ++v)
      if (in_degree(v) == 0) result.push_back(v);
    return result;
  }

  std::vector<VertexId> sinks() const {
    std::vector<VertexId> result;
    for (VertexId v = 0; v < n(); ++v)
      if (out_degree(v) == 0) result.push_back(v);
    return result;
  }

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<int> out_offsets_;  // n + 1 entries
  std::vector<int> in_offsets_;
  std::vector<VertexId> out_targets_;
  std::vector<VertexId> in_targets_;
};

class GraphBuilder {
 public:
  // Returns the id for `label`, creating the vertex on first sight.
  VertexId intern(std::string_view label) {
    auto [it, inserted] =
        g_.ids_.try_emplace(std::string(label), static_cast<VertexId>(g_.labels_.size()));
    if (inserted) g_.labels_.emplace_back(label);
    return it->second;
  }

  // Returns false when (u,v) is already present; parallel edges are never stored.
  bool add_edge(VertexId u, VertexId v) {
    if (u == v) throw SelfLoopError(g_.labels_[u]);
    std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) |
                        static_cast<std::uint32_t>(v);
    if (!seen_.insert(key).second) return false;
    edges_.emplace_back(u, v);
    return true;
  }

  Graph build() {
    const int n = static_cast<int>(g_.labels_.size());
    const int m = static_cast<int>(edges_.size());
    g_.out_offsets_.assign(n + 1, 0);
    g_.in_offsets_.assign(n + 1, 0);
    for (auto [u, v] : edges_) {
      ++g_.out_offsets_[u + 1];
      ++g_.in_offsets_[v + 1];
    }
    for (int i = 0; i < n; ++i) {
      g_.out_offsets_[i + 1] += g_.out_offsets_[i];
      g_.in_offsets_[i + 1] += g_.in_offsets_[i];
    }
    g_.out_targets_.resize(m);
    g_.in_targets_.resize(m);
    std::vector<int> out_at(g_.out_offsets_.begin(), g_.out_offsets_.end() - 1);
    std::vector<int> in_at(g_.in_offsets_.begin(), g_.in_offsets_.end() - 1);
    for (auto [u, v] : edges_) {
      g_.out_targets_[out_at[u]++] = v;
      g_.in_targets_[in_at[v]++] = u;
    }
    edges_.clear();
    seen_.clear();
    return std::move(g_);
  }

 private:
  Graph g_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::unordered_set<std::uint64_t> seen_;
};

struct LoadResult {
  Graph graph;
  int duplicate_edges = 0;  // edge lines collapsed onto an existing edge
};

// Edge-list text: one "<label> <label>" pair per line, '#' starts a comment,
// blank lines are ignored. Labels are arbitrary non-whitespace byte strings
// of at most 255 bytes; the artificial-vertex labels are reserved.
inline LoadResult load_edge_list(std::istream& in) {
  GraphBuilder builder;
  LoadResult result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a) || a.front() == '#') continue;
    if (!(tokens >> b) || (tokens >> extra))
      throw ParseError(line_no, "expected exactly two labels");
    for (const std::string& label : {a, b}) {
      if (label.size() > kMaxLabelBytes)
        throw ParseError(line_no, "label exceeds " +
                                      std::to_string(kMaxLabelBytes) + " bytes");
      if (label == kArtificialSourceLabel || label == kArtificialSinkLabel)
        throw ParseError(line_no, "label '" + label + "' is reserved");
    }
    VertexId u = builder.intern(a);
    VertexId v = builder.intern(b);
    if (!builder.add_edge(u, v)) ++result.duplicate_edges;
  }
  result.graph = builder.build();
  if (result.graph.m() == 0) throw ParseError(0, "edge list contains no edges");
  return result;
}

inline LoadResult load_edge_list(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

inline std::string export_edge_list(const Graph& g) {
  std::string text;
  for (VertexId u = 0; u < g.n(); ++u)
    for (VertexId v : g.out(u)) {
      text += g.label(u);
      text += ' ';
      text += g.label(v);
      text += '\n';
    }
  return text;
}

struct AugmentedGraph {
  Graph graph;
  std::optional<VertexId> artificial_source;
  std::optional<VertexId> artificial_sink;
  VertexId source = kNoVertex;  // the unique in-degree-0 vertex
  VertexId sink = kNoVertex;    // the unique out-degree-0 vertex

  bool is_artificial(VertexId v) const {
    return (artificial_source && v == *artificial_source) ||
           (artificial_sink && v == *artificial_sink);
  }
};

// Adds an artificial source (sink) exactly when the input has more than one
// in-degree-0 (out-degree-0) vertex. Original ids are preserved; artificial
// vertices are appended with reserved labels.
inline AugmentedGraph augment(const Graph& g) {
  std::vector<VertexId> sources = g.sources();
  std::vector<VertexId> sinks = g.sinks();
  if (sources.empty() || sinks.empty())
    throw NotDagError(g.n() == 0 ? "empty graph"
                                 : "not a DAG-shaped input: graph has no " +
                                       std::string(sources.empty() ? "source" : "sink"));

  AugmentedGraph result;
  if (sources.size() == 1 && sinks.size() == 1) {
    result.graph = g;  // already single-source, single-sink
    result.source = sources.front();
    result.sink = sinks.front();
    return result;
  }

  GraphBuilder builder;
  for (VertexId v = 0; v < g.n(); ++v) builder.intern(g.label(v));
  for (VertexId u = 0; u < g.n(); ++u)
    for (VertexId v : g.out(u)) builder.add_edge(u, v);
  if (sources.size() > 1) {
    VertexId root = builder.intern(kArtificialSourceLabel);
    for (VertexId s : sources) builder.add_edge(root, s);
    result.artificial_source = root;
    result.source = root;
  } else {
    result.source = sources.front();
  }
  if (sinks.size() > 1) {
    VertexId drain = builder.intern(kArtificialSinkLabel);
    for (VertexId t : sinks) builder.add_edge(t, drain);
    result.artificial_sink = drain;
    result.sink = drain;
  } else {
    result.sink = sinks.front();
  }
  result.graph = builder.build();
  return result;
}

}  // namespace superbubble
