#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "radialnet/error.hpp"
#include "radialnet/ingest.hpp"

using namespace radialnet;

namespace {

std::vector<LabelEdge> Edges(std::initializer_list<std::pair<Label, Label>> pairs) {
  std::vector<LabelEdge> out;
  for (auto [a, b] : pairs) out.push_back(LabelEdge::Canonical(a, b));
  return out;
}

EdgeSet SetOf(std::initializer_list<std::pair<Label, Label>> pairs) {
  EdgeSet es;
  es.edges = Edges(pairs);
  return es;
}

}  // namespace

TEST_CASE("edge list parsing") {
  CHECK(ParseEdgeList("1 2\n# c\n2 3\n").edges == Edges({{1, 2}, {2, 3}}));
  CHECK(ParseEdgeList("7 7\n").edges == Edges({{7, 7}}));
  CHECK(ParseEdgeList("3 1\r\n\r\n  \n").edges == Edges({{1, 3}}));
  CHECK(ParseEdgeList("4294967295 0\n").edges == Edges({{0, 4294967295u}}));
}

TEST_CASE("edge list errors carry the line") {
  try {
    ParseEdgeList("1 x\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(e.line() == 1);
    CHECK(e.content() == "1 x");
  }
  try {
    ParseEdgeList("1 2\n# ok\n1 4294967296\n");
    FAIL("expected range error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::kRange);
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(ParseEdgeList("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(ParseEdgeList("-1 2\n"), ParseError);
  CHECK_THROWS_AS(ParseEdgeList("1\n"), ParseError);
}

TEST_CASE("AS path parsing") {
  CHECK(ParseAsPaths("701 1239 3356\n").edges == Edges({{701, 1239}, {1239, 3356}}));
  CHECK(ParseAsPaths("701 701 1239\n").edges == Edges({{701, 1239}}));
  CHECK(ParseAsPaths("10 {20,30} 40\n").edges.empty());
  CHECK(ParseAsPaths("1 2 {3,4} 5 6\n").edges == Edges({{1, 2}, {5, 6}}));
  CHECK(ParseAsPaths("1 2 {3, 4}\n").edges == Edges({{1, 2}}));
  CHECK(ParseAsPaths("# comment\n\n5\n").edges.empty());
  CHECK(ParseAsPaths("1 1 1\n").edges.empty());
}

TEST_CASE("AS path errors") {
  try {
    ParseAsPaths("1 2\n3 x4 5\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(ParseAsPaths("1 {2,3\n"), ParseError);
}

TEST_CASE("property: a path of L distinct ASs yields L-1 edges") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t length = 1 + rng() % 12;
    std::vector<Label> path;
    while (path.size() < length) {
      const Label a = static_cast<Label>(rng() % 100000);
      if (std::find(path.begin(), path.end(), a) == path.end()) path.push_back(a);
    }
    std::string line;
    for (Label a : path) line += std::to_string(a) + ' ';
    CHECK(ParseAsPaths(line + "\n").size() == length - 1);
  }
}

TEST_CASE("merge_sources") {
  SUBCASE("extra source doubles the baseline") {
    const auto r = MergeSources({{"rib", SetOf({{1, 2}})}, {"extra", SetOf({{1, 2}, {2, 3}})}}, "rib");
    CHECK(r.merged.edges == Edges({{1, 2}, {2, 3}}));
    CHECK(r.report.union_edges == 2);
    CHECK(r.report.gain == 1.0);
    CHECK(r.report.sources[0].edges == 1);
    CHECK(r.report.sources[0].exclusive == 0);
    CHECK(r.report.sources[1].edges == 2);
    CHECK(r.report.sources[1].exclusive == 1);
    CHECK(r.merged.source_masks == std::vector<std::uint64_t>{3, 2});
  }
  SUBCASE("single source against itself") {
    const auto r = MergeSources({{"only", SetOf({{1, 2}, {3, 4}})}}, "only");
    CHECK(r.report.gain == 0.0);
  }
  SUBCASE("gain arithmetic at AS scale") {
    // Baseline of 46343 edges inside a union of 62637 edges.
    EdgeSet rib, extended;
    for (Label i = 0; i < 62637; ++i) {
      extended.Add(i, i + 1);
      if (i < 46343) rib.Add(i, i + 1);
    }
    const auto r = MergeSources({{"rib06", rib}, {"as06", extended}}, "rib06");
    CHECK(r.report.union_edges == 62637);
    CHECK(r.report.gain == doctest::Approx(16294.0 / 46343.0).epsilon(1e-12));
    CHECK(r.report.gain == doctest::Approx(0.3516).epsilon(1e-4));
  }
  SUBCASE("unknown baseline") {
    try {
      MergeSources({{"a", SetOf({{1, 2}})}}, "b");
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotFound);
    }
  }
  SUBCASE("duplicates inside one source are counted once") {
    const auto r = MergeSources({{"a", SetOf({{1, 2}, {2, 1}, {1, 2}})}}, "a");
    CHECK(r.report.sources[0].edges == 1);
  }
}

TEST_CASE("property: merge is order independent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<NamedEdgeSet> sources;
    for (int s = 0; s < 4; ++s) {
      EdgeSet es;
      for (int i = 0; i < 30; ++i) es.Add(static_cast<Label>(rng() % 20), static_cast<Label>(rng() % 20));
      es.Add(0, 1);  // keep every source non-empty
      sources.push_back({"s" + std::to_string(s), es});
    }
    const auto a = MergeSources(sources, "s0");
    std::shuffle(sources.begin(), sources.end(), rng);
    const auto b = MergeSources(sources, "s0");
    CHECK(a.merged.edges == b.merged.edges);
    CHECK(a.report.gain == b.report.gain);
    CHECK(a.report.union_edges <= 4 * 31u);
    std::size_t exclusive = 0;
    for (const auto& s : a.report.sources) exclusive += s.exclusive;
    CHECK(exclusive <= a.report.union_edges);
  }
}

TEST_CASE("property: edge list write/parse round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    EdgeSet es;
    for (int i = 0; i < 40; ++i) es.Add(static_cast<Label>(rng()), static_cast<Label>(rng()));
    std::sort(es.edges.begin(), es.edges.end());
    es.edges.erase(std::unique(es.edges.begin(), es.edges.end()), es.edges.end());
    std::ostringstream out;
    WriteEdgeList(out, es);
    CHECK(ParseEdgeList(out.str()).edges == es.edges);
  }
}

TEST_CASE("source report CSV") {
  const auto r = MergeSources({{"rib", SetOf({{1, 2}})}, {"extra", SetOf({{1, 2}, {2, 3}})}}, "rib");
  std::ostringstream out;
  WriteSourceReport(out, r.report);
  CHECK(out.str() ==
        "source,edges,exclusive,gain\n"
        "rib,1,0,0\n"
        "extra,2,1,1\n"
        "union,2,,1\n");
}
