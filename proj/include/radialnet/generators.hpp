#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "radialnet/graph.hpp"

namespace radialnet {

struct BaSpec {
  std::uint32_t n = 0;  // final vertex count
  std::uint32_t m = 3;  // edges per added vertex
  std::uint64_t seed = 1;
};

// Barabási-Albert growth from m isolated vertices. Each added vertex links to
// m distinct existing vertices chosen with probability proportional to degree;
// the first arrival, facing all-zero degrees, links to all m initial vertices.
// Vertex labels are 0..n-1 in arrival order. Throws kInvalidArgument unless
// n > m >= 1.
Graph GenerateBarabasiAlbert(const BaSpec& spec);

struct PowerLawFit {
  double slope = 0.0;      // least-squares slope of log10 CCDF vs log10 k
  double intercept = 0.0;
  std::size_t points = 0;  // distinct degrees used
};

struct DegreeHistogram {
  std::map<std::uint32_t, std::uint64_t> counts;
  std::uint32_t k_min = 0;
  std::uint32_t k_max = 0;
  std::optional<PowerLawFit> fit;
  std::string fit_error;  // set when fit is empty
};

// Exact degree counts plus a CCDF tail fit over observed degrees in
// [k_min, k_max]. Fewer than three distinct degrees in range leaves `fit`
// empty and explains why in fit_error. Throws kInvalidArgument unless
// k_min < k_max.
DegreeHistogram ComputeDegreeHistogram(const Graph& g, std::uint32_t k_min, std::uint32_t k_max);

// CSV "degree,count".
void WriteDegreeHistogram(std::ostream& out, const DegreeHistogram& h);
// One line: "ccdf_slope=<s> k_min=<a> k_max=<b> points=<p>" or the fit error.
std::string FitSummary(const DegreeHistogram& h);

}  // namespace radialnet
