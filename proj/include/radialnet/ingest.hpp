#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radialnet/graph.hpp"

namespace radialnet {

// "<u> <v>" per line; '#' comment lines and blank lines skipped; LF or CRLF.
// Self-loops are kept (BuildGraph drops them).
EdgeSet ParseEdgeList(std::istream& in);
EdgeSet ParseEdgeList(std::string_view text);

// One AS path per line. Adjacent ASs become edges, consecutive repeats
// (prepending) are collapsed, and any adjacency touching a "{a,b}" AS-set
// is skipped.
EdgeSet ParseAsPaths(std::istream& in);
EdgeSet ParseAsPaths(std::string_view text);

// Sorted, deduplicated "<u> <v>\n" lines.
void WriteEdgeList(std::ostream& out, const EdgeSet& edges);

struct SourceStats {
  std::string name;
  std::size_t edges = 0;     // distinct edges in this source
  std::size_t exclusive = 0; // edges seen in no other source
  double gain = 0.0;         // (|baseline ∪ source| - |baseline|) / |baseline|
};

struct SourceReport {
  std::vector<SourceStats> sources;
  std::string baseline;
  std::size_t union_edges = 0;
  double gain = 0.0;  // (|union| - |baseline|) / |baseline|
};

struct NamedEdgeSet {
  std::string name;
  EdgeSet edges;
};

struct MergeResult {
  EdgeSet merged;  // sorted, distinct, tagged with source masks
  SourceReport report;
};

// Union of up to 64 sources. Throws kNotFound for an unknown baseline and
// kDomain when the baseline holds no edges.
MergeResult MergeSources(const std::vector<NamedEdgeSet>& sources, std::string_view baseline);

// CSV "source,edges,exclusive,gain" with a trailing "union" row.
void WriteSourceReport(std::ostream& out, const SourceReport& report);

}  // namespace radialnet
