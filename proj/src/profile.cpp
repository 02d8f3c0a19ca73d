#include "radialnet/profile.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>

#include "radialnet/error.hpp"
#include "radialnet/format.hpp"

namespace radialnet {
namespace {

void RequireWidth(double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw Error(ErrorCode::kInvalidArgument, "bin width must be positive");
  }
}

struct Moments {
  double mean = 0.0;
  std::optional<double> standard_error;
};

// Values are sorted first so the result is independent of input order.
Moments MeanAndStandardError(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  const auto c = static_cast<double>(values.size());
  Moments out;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / c;
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.standard_error = std::sqrt(ss / (c - 1.0)) / std::sqrt(c);
  }
  return out;
}

std::vector<double> Ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(x.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && x[order[j]] == x[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j - 1) + 1.0;
    for (std::size_t t = i; t < j; ++t) rank[order[t]] = avg;
    i = j;
  }
  return rank;
}

}  // namespace

std::int64_t BinIndex(double x, double bin_width) {
  const double q = x / bin_width;
  const double nearest = std::round(q);
  if (std::abs(q - nearest) <= 1e-9 * std::max(1.0, std::abs(q))) {
    return static_cast<std::int64_t>(nearest);
  }
  return static_cast<std::int64_t>(std::floor(q));
}

double BinCenter(std::int64_t index, double bin_width) {
  const double mid = static_cast<double>(index) + 0.5;
  // Widths like 0.1 print cleanly when divided by their integer reciprocal.
  const double per_unit = std::round(1.0 / bin_width);
  if (per_unit >= 1.0 && std::abs(1.0 / bin_width - per_unit) <= 1e-9 * per_unit) return mid / per_unit;
  return mid * bin_width;
}

RadialHistogram ComputeRadialHistogram(std::span<const double> dbar, double bin_width) {
  RequireWidth(bin_width);
  RadialHistogram h;
  h.bin_width = bin_width;
  if (dbar.empty()) return h;
  std::map<std::int64_t, std::size_t> counts;
  for (double x : dbar) ++counts[BinIndex(x, bin_width)];
  const std::int64_t lo = counts.begin()->first;
  const std::int64_t hi = counts.rbegin()->first;
  const auto n = static_cast<double>(dbar.size());
  for (std::int64_t i = lo; i <= hi; ++i) {
    auto it = counts.find(i);
    const double fraction = it == counts.end() ? 0.0 : static_cast<double>(it->second) / n;
    h.bins.push_back({i, BinCenter(i, bin_width), fraction, std::nullopt});
  }
  return h;
}

RadialHistogram AggregateHistograms(std::span<const RadialHistogram> histograms) {
  if (histograms.empty()) throw Error(ErrorCode::kInvalidArgument, "no histograms to aggregate");
  const double width = histograms.front().bin_width;
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const RadialHistogram& h : histograms) {
    if (h.bin_width != width) throw Error(ErrorCode::kInvalidArgument, "histogram bin widths differ");
    if (h.bins.empty()) continue;
    lo = std::min(lo, h.bins.front().index);
    hi = std::max(hi, h.bins.back().index);
  }
  RadialHistogram out;
  out.bin_width = width;
  out.realizations = histograms.size();
  if (lo > hi) return out;
  std::vector<double> samples;
  for (std::int64_t i = lo; i <= hi; ++i) {
    samples.clear();
    for (const RadialHistogram& h : histograms) {
      double f = 0.0;
      if (!h.bins.empty() && i >= h.bins.front().index && i <= h.bins.back().index) {
        f = h.bins[static_cast<std::size_t>(i - h.bins.front().index)].fraction;
      }
      samples.push_back(f);
    }
    // Realization order is fixed, so plain summation is already deterministic.
    const auto c = static_cast<double>(samples.size());
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / c;
    std::optional<double> se;
    if (samples.size() >= 2) {
      double ss = 0.0;
      for (double v : samples) ss += (v - mean) * (v - mean);
      se = std::sqrt(ss / (c - 1.0)) / std::sqrt(c);
    }
    out.bins.push_back({i, BinCenter(i, width), mean, se});
  }
  return out;
}

RadialProfile ComputeRadialProfile(std::span<const double> dbar, std::span<const double> values,
                                   double bin_width, std::string quantity) {
  RequireWidth(bin_width);
  if (dbar.size() != values.size()) {
    throw Error(ErrorCode::kInvalidArgument, "dbar and values differ in length");
  }
  std::map<std::int64_t, std::vector<double>> groups;
  for (std::size_t i = 0; i < dbar.size(); ++i) {
    if (std::isnan(values[i])) continue;
    groups[BinIndex(dbar[i], bin_width)].push_back(values[i]);
  }
  RadialProfile p;
  p.quantity = std::move(quantity);
  p.bin_width = bin_width;
  for (auto& [index, group] : groups) {
    const Moments m = MeanAndStandardError(group);
    p.bins.push_back({index, BinCenter(index, bin_width), m.mean, m.standard_error, group.size()});
  }
  return p;
}

RadialProfile AggregateProfiles(std::span<const RadialProfile> profiles) {
  if (profiles.empty()) throw Error(ErrorCode::kInvalidArgument, "no profiles to aggregate");
  const RadialProfile& first = profiles.front();
  std::map<std::int64_t, std::vector<double>> groups;
  for (const RadialProfile& p : profiles) {
    if (p.bin_width != first.bin_width) {
      throw Error(ErrorCode::kInvalidArgument, "profile bin widths differ");
    }
    if (p.quantity != first.quantity) {
      throw Error(ErrorCode::kInvalidArgument, "profile quantities differ");
    }
    for (const ProfileBin& b : p.bins) groups[b.index].push_back(b.mean);
  }
  RadialProfile out;
  out.quantity = first.quantity;
  out.bin_width = first.bin_width;
  for (auto& [index, means] : groups) {
    const Moments m = MeanAndStandardError(means);
    out.bins.push_back({index, BinCenter(index, first.bin_width), m.mean, m.standard_error, means.size()});
  }
  return out;
}

void WriteProfileCsv(std::ostream& out, const RadialProfile& p) {
  out << "bin_center,mean,stderr,count\n";
  for (const ProfileBin& b : p.bins) {
    out << FormatDouble(b.center) << ',' << FormatDouble(b.mean) << ','
        << (b.standard_error ? FormatDouble(*b.standard_error) : std::string()) << ',' << b.count
        << '\n';
  }
}

void WriteHistogramCsv(std::ostream& out, const RadialHistogram& h) {
  const bool aggregated = h.realizations > 1;
  out << (aggregated ? "bin_center,fraction,stderr\n" : "bin_center,fraction\n");
  for (const HistogramBin& b : h.bins) {
    out << FormatDouble(b.center) << ',' << FormatDouble(b.fraction);
    if (aggregated) out << ',' << (b.standard_error ? FormatDouble(*b.standard_error) : std::string());
    out << '\n';
  }
}

double SpearmanCorrelation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "Spearman correlation needs two equal-length samples");
  }
  const auto rx = Ranks(x);
  const auto ry = Ranks(y);
  const double mean = 0.5 * static_cast<double>(x.size() + 1);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  return sxy / std::sqrt(sxx * syy);
}

double Median(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "median of empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace radialnet
