#include "radialnet/radial.hpp"

#include <algorithm>
#include <ostream>

#include "radialnet/error.hpp"
#include "radialnet/format.hpp"
#include "radialnet/parallel.hpp"

namespace radialnet {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

struct BfsScratch {
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
};

void RequireDistanceDomain(const Graph& g) {
  if (g.num_vertices() < 2) {
    throw Error(ErrorCode::kDomain, "average distance needs at least two vertices");
  }
}

}  // namespace

DistanceSummary ComputeDistances(const Graph& g, unsigned threads) {
  RequireDistanceDomain(g);
  const std::size_t n = g.num_vertices();
  DistanceSummary out;
  out.distance_sums.assign(n, 0);
  out.dbar.assign(n, 0.0);
  out.ecc.assign(n, 0);

  const unsigned workers = ResolveThreads(threads);
  std::vector<BfsScratch> scratch(workers);
  std::atomic<bool> disconnected{false};

  ParallelFor(n, workers, [&](unsigned worker, std::size_t source) {
    BfsScratch& s = scratch[worker];
    if (s.dist.size() != n) {
      s.dist.assign(n, kUnreached);
      s.queue.resize(n);
    } else {
      std::fill(s.dist.begin(), s.dist.end(), kUnreached);
    }
    std::size_t head = 0;
    std::size_t tail = 0;
    s.queue[tail++] = static_cast<VertexId>(source);
    s.dist[source] = 0;
    std::uint64_t sum = 0;
    std::uint32_t last = 0;
    while (head < tail) {
      const VertexId v = s.queue[head++];
      const std::uint32_t next = s.dist[v] + 1;
      for (VertexId w : g.neighbors(v)) {
        if (s.dist[w] == kUnreached) {
          s.dist[w] = next;
          s.queue[tail++] = w;
          sum += next;
          last = next;
        }
      }
    }
    if (tail != n) {
      disconnected.store(true, std::memory_order_relaxed);
      return;
    }
    out.distance_sums[source] = sum;
    out.ecc[source] = last;
    out.dbar[source] = static_cast<double>(sum) / static_cast<double>(n - 1);
  });

  if (disconnected.load()) {
    throw Error(ErrorCode::kDisconnected,
                "graph is disconnected; restrict it to its largest component first");
  }
  return out;
}

std::vector<double> AverageDistances(const Graph& g, unsigned threads) {
  return ComputeDistances(g, threads).dbar;
}

std::vector<std::uint32_t> Eccentricities(const Graph& g, unsigned threads) {
  return ComputeDistances(g, threads).ecc;
}

std::vector<double> NeighborDegree(const Graph& g) {
  std::vector<double> out(g.num_vertices(), kUndefined);
  for (VertexId v = 0; v < out.size(); ++v) {
    if (g.degree(v) == 0) continue;
    std::uint64_t sum = 0;
    for (VertexId w : g.neighbors(v)) sum += g.degree(w);
    out[v] = static_cast<double>(sum) / g.degree(v);
  }
  return out;
}

namespace detail {

OrientedAdjacency OrientByDegree(const Graph& g) {
  const std::size_t n = g.num_vertices();
  auto before = [&](VertexId a, VertexId b) {
    const auto da = g.degree(a);
    const auto db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  OrientedAdjacency out;
  out.offsets.assign(n + 1, 0);
  out.targets.reserve(g.num_edges());
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (before(v, w)) out.targets.push_back(w);
    }
    out.offsets[v + 1] = out.targets.size();
  }
  return out;
}

}  // namespace detail

std::vector<std::uint64_t> TrianglesPerVertex(const Graph& g) {
  std::vector<std::uint64_t> count(g.num_vertices(), 0);
  ForEachTriangle(g, [&](VertexId a, VertexId b, VertexId c) {
    ++count[a];
    ++count[b];
    ++count[c];
  });
  return count;
}

std::vector<double> Clustering(const Graph& g) {
  const auto triangles = TrianglesPerVertex(g);
  std::vector<double> out(g.num_vertices(), kUndefined);
  for (VertexId v = 0; v < out.size(); ++v) {
    const std::uint64_t k = g.degree(v);
    if (k < 2) continue;
    out[v] = static_cast<double>(triangles[v]) / static_cast<double>(k * (k - 1) / 2);
  }
  return out;
}

std::vector<double> DeletionImpact(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 3) throw Error(ErrorCode::kDomain, "deletion impact needs at least three vertices");

  constexpr std::uint32_t kUnvisited = 0;
  std::vector<std::uint32_t> disc(n, kUnvisited);  // 1-based discovery time
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> subtree(n, 1);
  std::vector<VertexId> parent(n, 0);
  // Per vertex: total size and largest size of the child subtrees that get
  // cut off from the rest of the graph when the vertex is removed.
  std::vector<std::uint64_t> separated(n, 0);
  std::vector<std::uint64_t> largest_piece(n, 0);

  struct Frame {
    VertexId v;
    std::uint32_t next;  // position in the neighbor list
  };
  std::vector<Frame> stack;
  stack.reserve(n);
  std::uint32_t clock = 0;
  const VertexId root = 0;
  disc[root] = low[root] = ++clock;
  stack.push_back({root, 0});

  while (!stack.empty()) {
    Frame& top = stack.back();
    const VertexId v = top.v;
    const auto nb = g.neighbors(v);
    if (top.next < nb.size()) {
      const VertexId w = nb[top.next++];
      if (disc[w] == kUnvisited) {
        parent[w] = v;
        disc[w] = low[w] = ++clock;
        stack.push_back({w, 0});
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (stack.empty()) break;
    const VertexId p = parent[v];
    subtree[p] += subtree[v];
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      separated[p] += subtree[v];
      largest_piece[p] = std::max<std::uint64_t>(largest_piece[p], subtree[v]);
    }
  }
  if (clock != n) {
    throw Error(ErrorCode::kDisconnected,
                "graph is disconnected; restrict it to its largest component first");
  }

  std::vector<double> phi(n, 0.0);
  const std::uint64_t rest_total = n - 1;
  const auto denom = static_cast<double>(n - 2);
  for (VertexId v = 0; v < n; ++v) {
    // For the root every child is separated and the remainder is empty.
    const std::uint64_t remainder = rest_total - separated[v];
    const std::uint64_t largest = std::max(largest_piece[v], remainder);
    phi[v] = static_cast<double>(rest_total - largest) / denom;
  }
  return phi;
}

std::vector<double> DistanceBalance(const Graph& g, std::span<const double> dbar) {
  if (dbar.size() != g.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "dbar length does not match vertex count");
  }
  std::vector<double> out(g.num_vertices(), kUndefined);
  for (VertexId v = 0; v < out.size(); ++v) {
    if (g.degree(v) == 0) continue;
    std::uint32_t closer = 0;
    for (VertexId w : g.neighbors(v)) {
      if (dbar[w] < dbar[v]) ++closer;
    }
    out[v] = static_cast<double>(closer) / g.degree(v);
  }
  return out;
}

TriangleCensus CountTriangles(const Graph& g, std::span<const double> dbar, double threshold) {
  if (dbar.size() != g.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "dbar length does not match vertex count");
  }
  TriangleCensus census;
  census.threshold = threshold;
  ForEachTriangle(g, [&](VertexId a, VertexId b, VertexId c) {
    const int above = (dbar[a] > threshold) + (dbar[b] > threshold) + (dbar[c] > threshold);
    ++census.total;
    if (above > 0) ++census.any_above;
    if (above == 3) ++census.all_above;
  });
  return census;
}

VertexMetrics ComputeMetrics(const Graph& g, unsigned threads) {
  if (g.num_vertices() < 3) throw Error(ErrorCode::kDomain, "metrics need at least three vertices");
  VertexMetrics m;
  DistanceSummary d = ComputeDistances(g, threads);
  m.dbar = std::move(d.dbar);
  m.ecc = std::move(d.ecc);
  m.k.resize(g.num_vertices());
  for (VertexId v = 0; v < m.k.size(); ++v) m.k[v] = g.degree(v);
  m.K = NeighborDegree(g);
  m.C = Clustering(g);
  m.phi = DeletionImpact(g);
  m.b = DistanceBalance(g, m.dbar);
  return m;
}

void WriteMetricsCsv(std::ostream& out, const Graph& g, const VertexMetrics& m) {
  out << "as_number,dbar,ecc,k,K,C,phi,b\n";
  for (VertexId v = 0; v < m.size(); ++v) {
    out << g.label(v) << ',' << FormatDouble(m.dbar[v]) << ',' << m.ecc[v] << ',' << m.k[v] << ','
        << FormatDouble(m.K[v]) << ',' << FormatDouble(m.C[v]) << ',' << FormatDouble(m.phi[v])
        << ',' << FormatDouble(m.b[v]) << '\n';
  }
}

GroupSummary SummarizeGroup(const Graph& g, std::span<const double> dbar,
                            std::span<const Label> labels) {
  GroupSummary s;
  std::vector<double> values;
  for (Label l : labels) {
    if (auto v = g.IndexOf(l)) {
      s.found.push_back(l);
      values.push_back(dbar[*v]);
    } else {
      s.missing.push_back(l);
    }
  }
  if (values.empty()) return s;
  double sum = 0.0;
  for (double x : values) sum += x;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double x : values) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    s.stderr_ = s.stddev / std::sqrt(static_cast<double>(values.size()));
  }
  return s;
}

}  // namespace radialnet
