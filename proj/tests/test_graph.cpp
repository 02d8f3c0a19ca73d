#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "radialnet/error.hpp"
#include "radialnet/graph.hpp"
#include "test_support.hpp"

using namespace radialnet;
using radialnet::testing::MakeGraph;

TEST_CASE("build_graph drops loops and collapses duplicates") {
  EdgeSet es;
  es.Add(1, 2);
  es.Add(2, 1);
  es.Add(2, 2);
  es.Add(1, 3);
  BuildStats stats;
  const Graph g = BuildGraph(es, &stats);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(stats.dropped_loops == 1);
  CHECK(stats.dropped_duplicates == 1);
  CHECK(g.Validate());
}

TEST_CASE("build_graph indexes labels in ascending order") {
  const Graph g = MakeGraph({{7, 5}});
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.label(0) == 5);
  CHECK(g.label(1) == 7);
  CHECK(g.IndexOf(5) == 0u);
  CHECK(g.IndexOf(7) == 1u);
  CHECK_FALSE(g.IndexOf(6).has_value());
}

TEST_CASE("triangle has all degrees two") {
  const Graph g = MakeGraph({{1, 2}, {2, 3}, {1, 3}});
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  for (VertexId v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("empty edge set is rejected") {
  try {
    BuildGraph(EdgeSet{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyInput);
  }
}

TEST_CASE("loop-only labels stay as isolated vertices") {
  const Graph g = MakeGraph({{4, 4}, {1, 2}});
  CHECK(g.num_vertices() == 3);
  CHECK(g.degree(*g.IndexOf(4)) == 0);
}

TEST_CASE("largest_component tie-break and fractions") {
  SUBCASE("two triangles: smallest label wins") {
    const Graph g = MakeGraph({{4, 5}, {5, 6}, {4, 6}, {1, 2}, {2, 3}, {1, 3}});
    const auto r = LargestComponent(g);
    CHECK(r.retained_fraction == doctest::Approx(0.5));
    REQUIRE(r.graph.num_vertices() == 3);
    CHECK(r.graph.label(0) == 1);
    CHECK(r.graph.label(2) == 3);
    CHECK(r.graph.Validate());
  }
  SUBCASE("connected graph is returned unchanged") {
    const Graph g = testing::Cycle(5);
    const auto r = LargestComponent(g);
    CHECK(r.retained_fraction == 1.0);
    CHECK(testing::SameEdges(r.graph, g));
  }
  SUBCASE("P3 plus an isolated pair") {
    const Graph g = MakeGraph({{1, 2}, {2, 3}, {8, 9}});
    const auto r = LargestComponent(g);
    CHECK(r.retained_fraction == doctest::Approx(0.6));
    CHECK(r.graph.num_vertices() == 3);
    CHECK(r.graph.num_edges() == 2);
  }
  SUBCASE("tie-break does not depend on which component has lower indices first") {
    // Component {2,9} and {3,4}: both size 2, smallest label 2 wins.
    const Graph g = MakeGraph({{3, 4}, {2, 9}});
    const auto r = LargestComponent(g);
    CHECK(r.graph.label(0) == 2);
    CHECK(r.graph.label(1) == 9);
  }
}

TEST_CASE("degree_sequence") {
  using V = std::vector<std::uint32_t>;
  CHECK(DegreeSequence(testing::Star(3)) == V{3, 1, 1, 1});
  CHECK(DegreeSequence(MakeGraph({{1, 2}, {2, 3}, {1, 3}})) == V{2, 2, 2});
  CHECK(DegreeSequence(testing::Path(3)) == V{2, 1, 1});
}

TEST_CASE("property: random multigraph inputs build valid, idempotent graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    EdgeSet es;
    std::uniform_int_distribution<Label> label(1, 40);
    const int count = 1 + static_cast<int>(rng() % 120);
    for (int i = 0; i < count; ++i) es.Add(label(rng), label(rng));
    const Graph g = BuildGraph(es);
    REQUIRE(g.Validate());
    std::uint64_t degree_sum = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.num_edges());

    // Rebuilding from the clean edge set gives the same graph.
    if (g.num_edges() > 0) {
      const Graph again = BuildGraph(g.ToEdgeSet());
      CHECK(again.ToEdgeSet() == g.ToEdgeSet());
    }

    const auto lc = LargestComponent(g);
    CHECK(IsConnected(lc.graph));
    CHECK(lc.graph.Validate());
  }
}
