#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "radialnet/graph.hpp"

namespace radialnet {

// Marker for per-vertex values that are undefined (clustering at k < 2).
inline constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();
inline bool IsDefined(double x) { return !std::isnan(x); }

struct DistanceSummary {
  std::vector<std::uint64_t> distance_sums;  // sum of hop counts to all others
  std::vector<double> dbar;                  // distance_sums / (n - 1)
  std::vector<std::uint32_t> ecc;
};

// One BFS per source vertex, spread over `threads` workers (0 = hardware
// concurrency). Results do not depend on the worker count. Throws
// kDisconnected for disconnected input and kDomain when n < 2.
DistanceSummary ComputeDistances(const Graph& g, unsigned threads = 0);
std::vector<double> AverageDistances(const Graph& g, unsigned threads = 0);
std::vector<std::uint32_t> Eccentricities(const Graph& g, unsigned threads = 0);

// Mean degree of each vertex's neighbors; undefined for isolated vertices.
std::vector<double> NeighborDegree(const Graph& g);

// Calls fn(a, b, c) once per triangle.
template <typename Fn>
void ForEachTriangle(const Graph& g, Fn&& fn);

// Number of triangles through each vertex.
std::vector<std::uint64_t> TrianglesPerVertex(const Graph& g);

// Edges among neighbors over k(k-1)/2; kUndefined for k < 2.
std::vector<double> Clustering(const Graph& g);

// Normalized shrinkage of the largest component when a vertex is removed,
// (n - 1 - S) / (n - 2), from a single articulation-point DFS with subtree
// sizes. Requires a connected graph with n >= 3.
std::vector<double> DeletionImpact(const Graph& g);

// Fraction of neighbors with strictly smaller average distance.
std::vector<double> DistanceBalance(const Graph& g, std::span<const double> dbar);

struct TriangleCensus {
  double threshold = 0.0;
  std::uint64_t total = 0;
  std::uint64_t any_above = 0;  // at least one vertex with dbar > threshold
  std::uint64_t all_above = 0;  // all three vertices with dbar > threshold
};

TriangleCensus CountTriangles(const Graph& g, std::span<const double> dbar, double threshold);

struct VertexMetrics {
  std::vector<double> dbar;
  std::vector<std::uint32_t> ecc;
  std::vector<std::uint32_t> k;
  std::vector<double> K;
  std::vector<double> C;
  std::vector<double> phi;
  std::vector<double> b;

  std::size_t size() const { return dbar.size(); }
};

// All per-vertex metrics of a connected graph with at least three vertices.
VertexMetrics ComputeMetrics(const Graph& g, unsigned threads = 0);

// CSV "as_number,dbar,ecc,k,K,C,phi,b"; undefined C left empty.
void WriteMetricsCsv(std::ostream& out, const Graph& g, const VertexMetrics& m);

// Mean average distance of a labelled vertex group (e.g. Tier-1 ASs).
struct GroupSummary {
  std::vector<Label> found;
  std::vector<Label> missing;
  double mean = kUndefined;
  double stddev = kUndefined;  // sample standard deviation
  double stderr_ = kUndefined; // stddev / sqrt(count)
};

GroupSummary SummarizeGroup(const Graph& g, std::span<const double> dbar,
                            std::span<const Label> labels);

// --- implementation ---------------------------------------------------------

namespace detail {
// Forward lists ordered by (degree, index): every triangle is reached from its
// lowest-ranked vertex only.
struct OrientedAdjacency {
  std::vector<std::uint64_t> offsets;
  std::vector<VertexId> targets;
};
OrientedAdjacency OrientByDegree(const Graph& g);
}  // namespace detail

template <typename Fn>
void ForEachTriangle(const Graph& g, Fn&& fn) {
  const detail::OrientedAdjacency out = detail::OrientByDegree(g);
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> mark(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    const auto begin = out.offsets[u];
    const auto end = out.offsets[u + 1];
    for (auto i = begin; i < end; ++i) mark[out.targets[i]] = 1;
    for (auto i = begin; i < end; ++i) {
      const VertexId v = out.targets[i];
      for (auto j = out.offsets[v]; j < out.offsets[v + 1]; ++j) {
        const VertexId w = out.targets[j];
        if (mark[w]) fn(u, v, w);
      }
    }
    for (auto i = begin; i < end; ++i) mark[out.targets[i]] = 0;
  }
}

}  // namespace radialnet
