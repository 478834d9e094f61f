#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <superbubble/generator.hpp>
#include <superbubble/graph.hpp>
#include <superbubble/topo_order.hpp>

#include "fixtures.hpp"

using namespace superbubble;

TEST_CASE("sample graph sorts to the expected ranks") {
  AugmentedGraph ag = augment(fixtures::sample_graph());
  TopoOrder t = topological_sort(ag);
  for (int i = 0; i < 15; ++i) {
    VertexId v = fixtures::id_of(ag.graph, "v" + std::to_string(i + 1));
    CHECK(t.rank[v] == fixtures::kSampleRanks[i]);
    CHECK(t.vertex_at[t.rank[v]] == v);
  }
}

TEST_CASE("sample graph discovery tree matches the hand trace") {
  AugmentedGraph ag = augment(fixtures::sample_graph());
  TopoOrder t = topological_sort(ag);
  auto parent_label = [&](const char* child) {
    VertexId p = t.tree_parent[fixtures::id_of(ag.graph, child)];
    return p == kNoVertex ? std::string("-") : ag.graph.label(p);
  };
  CHECK(parent_label("v1") == "-");
  CHECK(parent_label("v2") == "v1");
  CHECK(parent_label("v3") == "v2");
  CHECK(parent_label("v4") == "v3");
  CHECK(parent_label("v8") == "v4");
  CHECK(parent_label("v13") == "v8");
  CHECK(parent_label("v14") == "v13");
  CHECK(parent_label("v15") == "v13");
  CHECK(parent_label("v5") == "v3");
  CHECK(parent_label("v6") == "v5");
  CHECK(parent_label("v7") == "v6");
  CHECK(parent_label("v10") == "v6");
  CHECK(parent_label("v9") == "v5");
  CHECK(parent_label("v11") == "v3");
  CHECK(parent_label("v12") == "v11");
}

TEST_CASE("chain has the unique topological order") {
  AugmentedGraph ag = augment(fixtures::make_graph({{"a", "b"}, {"b", "c"}}));
  TopoOrder t = topological_sort(ag);
  CHECK(t.rank[fixtures::id_of(ag.graph, "a")] == 1);
  CHECK(t.rank[fixtures::id_of(ag.graph, "b")] == 2);
  CHECK(t.rank[fixtures::id_of(ag.graph, "c")] == 3);
}

TEST_CASE("a cycle raises CycleError naming a back edge") {
  // single source s and sink t around a 2-cycle
  Graph g = fixtures::make_graph({{"s", "a"}, {"a", "b"}, {"b", "a"}, {"b", "t"}});
  AugmentedGraph ag = augment(g);
  REQUIRE_THROWS_MATCHES(topological_sort(ag), CycleError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("'a'") &&
                             Catch::Matchers::ContainsSubstring("'b'")));
}

TEST_CASE("a cycle unreachable from the source is still detected") {
  Graph g = fixtures::make_graph(
      {{"s", "t"}, {"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "t"}});
  AugmentedGraph ag = augment(g);
  CHECK_THROWS_AS(topological_sort(ag), CycleError);
}

TEST_CASE("every edge goes rank-forward on random DAGs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    AugmentedGraph ag = augment(generate(fixtures::fuzz_spec(seed)));
    TopoOrder t = topological_sort(ag);
    const Graph& g = ag.graph;
    std::vector<char> seen(g.n() + 1, 0);
    for (VertexId v = 0; v < g.n(); ++v) {
      REQUIRE(t.rank[v] >= 1);
      REQUIRE(t.rank[v] <= g.n());
      REQUIRE(!seen[t.rank[v]]);
      seen[t.rank[v]] = 1;
      for (VertexId w : g.out(v)) REQUIRE(t.rank[v] < t.rank[w]);
    }
    OrderingDiagnostic diag = check_ordering_properties(ag, t);
    REQUIRE(diag.ok);
  }
}

TEST_CASE("tree span interval property holds against BFS reachability") {
  // every vertex ranked inside a tree ancestor/descendant span is reachable
  // from the ancestor
  for (std::uint64_t seed = 1000; seed < 1040; ++seed) {
    GenSpec spec = fixtures::fuzz_spec(seed);
    AugmentedGraph ag = augment(generate(spec));
    TopoOrder t = topological_sort(ag);
    const Graph& g = ag.graph;
    for (VertexId u = 0; u < g.n(); ++u) {
      VertexId v = t.tree_parent[u];
      if (v == kNoVertex) continue;
      if (t.tree_parent[v] != kNoVertex) v = t.tree_parent[v];
      for (int r = t.rank[v] + 1; r < t.rank[u]; ++r)
        REQUIRE(fixtures::reaches(g, v, t.vertex_at[r]));
    }
  }
}

TEST_CASE("sorting is deterministic") {
  AugmentedGraph ag = augment(generate(fixtures::fuzz_spec(42)));
  TopoOrder a = topological_sort(ag);
  TopoOrder b = topological_sort(ag);
  CHECK(a.rank == b.rank);
  CHECK(a.tree_parent == b.tree_parent);
}

TEST_CASE("diagnostic flags a rank swap with the offending edge") {
  AugmentedGraph ag = augment(fixtures::sample_graph());
  TopoOrder t = topological_sort(ag);
  CHECK(check_ordering_properties(ag, t).ok);

  VertexId v3 = fixtures::id_of(ag.graph, "v3");
  VertexId v5 = fixtures::id_of(ag.graph, "v5");
  std::swap(t.rank[v3], t.rank[v5]);
  std::swap(t.vertex_at[t.rank[v3]], t.vertex_at[t.rank[v5]]);
  OrderingDiagnostic diag = check_ordering_properties(ag, t);
  REQUIRE(!diag.ok);
  REQUIRE(diag.bad_edge.has_value());
  CHECK(ag.graph.label(diag.bad_edge->first) == "v3");
  CHECK(ag.graph.label(diag.bad_edge->second) == "v5");
}

TEST_CASE("a path graph of a million vertices does not overflow the stack") {
  GraphBuilder builder;
  VertexId prev = builder.intern("p0");
  for (int i = 1; i < 1000000; ++i) {
    VertexId next = builder.intern("p" + std::to_string(i));
    builder.add_edge(prev, next);
    prev = next;
  }
  AugmentedGraph ag = augment(builder.build());
  TopoOrder t = topological_sort(ag);
  CHECK(t.rank[0] == 1);
  CHECK(t.rank[999999] == 1000000);
}
