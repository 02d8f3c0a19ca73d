#include "radialnet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "radialnet/error.hpp"
#include "radialnet/format.hpp"
#include "radialnet/random.hpp"

namespace radialnet {

Graph GenerateBarabasiAlbert(const BaSpec& spec) {
  if (spec.m < 1 || spec.n <= spec.m) {
    throw Error(ErrorCode::kInvalidArgument, "BA model needs n > m >= 1");
  }
  const std::uint32_t n = spec.n;
  const std::uint32_t m = spec.m;
  Rng rng = MakeRng(spec.seed);

  // A vertex of degree d appears d times, so a uniform draw from this array
  // is a degree-proportional draw.
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * static_cast<std::size_t>(m) * (n - m));
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(m) * (n - m));
  std::vector<VertexId> targets;
  targets.reserve(m);

  for (VertexId t = m; t < n; ++t) {
    targets.clear();
    if (endpoints.empty()) {
      // All existing degrees are zero: uniform without replacement over the m
      // initial vertices, i.e. all of them.
      for (VertexId v = 0; v < m; ++v) targets.push_back(v);
    } else {
      while (targets.size() < m) {
        const VertexId v = endpoints[UniformBelow(rng, endpoints.size())];
        if (std::find(targets.begin(), targets.end(), v) == targets.end()) targets.push_back(v);
      }
    }
    for (VertexId v : targets) {
      edges.emplace_back(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }

  std::vector<Label> labels(n);
  for (VertexId v = 0; v < n; ++v) labels[v] = v;
  return Graph::FromDenseEdges(std::move(labels), edges);
}

DegreeHistogram ComputeDegreeHistogram(const Graph& g, std::uint32_t k_min, std::uint32_t k_max) {
  if (k_min >= k_max) throw Error(ErrorCode::kInvalidArgument, "k_min must be below k_max");
  DegreeHistogram h;
  h.k_min = k_min;
  h.k_max = k_max;
  for (VertexId v = 0; v < g.num_vertices(); ++v) ++h.counts[g.degree(v)];

  // CCDF(k) = fraction of vertices with degree >= k, at each observed k.
  const auto n = static_cast<double>(g.num_vertices());
  std::vector<double> xs;
  std::vector<double> ys;
  std::uint64_t at_least = g.num_vertices();
  for (const auto& [k, c] : h.counts) {
    if (k >= k_min && k <= k_max && k > 0) {
      xs.push_back(std::log10(static_cast<double>(k)));
      ys.push_back(std::log10(static_cast<double>(at_least) / n));
    }
    at_least -= c;
  }
  if (xs.size() < 3) {
    h.fit_error = "need at least 3 distinct degrees in [" + std::to_string(k_min) + ", " +
                  std::to_string(k_max) + "], found " + std::to_string(xs.size());
    return h;
  }
  const auto count = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = xs.size();
  h.fit = fit;
  return h;
}

void WriteDegreeHistogram(std::ostream& out, const DegreeHistogram& h) {
  out << "degree,count\n";
  for (const auto& [k, c] : h.counts) out << k << ',' << c << '\n';
}

std::string FitSummary(const DegreeHistogram& h) {
  if (!h.fit) return "fit_error=" + h.fit_error;
  return "ccdf_slope=" + FormatDouble(h.fit->slope) + " k_min=" + std::to_string(h.k_min) +
         " k_max=" + std::to_string(h.k_max) + " points=" + std::to_string(h.fit->points);
}

}  // namespace radialnet
