#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace radialnet {

// Bins are half-open [i*w, (i+1)*w) with center (i + 0.5) * w. A value that
// sits within floating-point noise of a bin edge is assigned to the bin that
// starts there.
std::int64_t BinIndex(double x, double bin_width);
double BinCenter(std::int64_t index, double bin_width);

struct HistogramBin {
  std::int64_t index = 0;
  double center = 0.0;
  double fraction = 0.0;
  std::optional<double> standard_error;  // only for aggregated histograms
};

struct RadialHistogram {
  double bin_width = 0.0;
  std::vector<HistogramBin> bins;  // contiguous from the lowest to the highest occupied bin
  std::size_t realizations = 1;
};

// Fraction of vertices per d̄ bin; empty bins inside the range are kept at 0.
RadialHistogram ComputeRadialHistogram(std::span<const double> dbar, double bin_width);

// Per-bin mean fraction and standard error across realizations; a bin absent
// from a realization counts as fraction 0 there.
RadialHistogram AggregateHistograms(std::span<const RadialHistogram> histograms);

struct ProfileBin {
  std::int64_t index = 0;
  double center = 0.0;
  double mean = 0.0;
  std::optional<double> standard_error;  // absent when count < 2
  std::size_t count = 0;
};

struct RadialProfile {
  std::string quantity;
  double bin_width = 0.0;
  std::vector<ProfileBin> bins;  // occupied bins only, increasing center
};

// Binned mean and standard error s/sqrt(c) of `values` over d̄. NaN values
// (undefined metrics) are skipped. The result does not depend on vertex order.
RadialProfile ComputeRadialProfile(std::span<const double> dbar, std::span<const double> values,
                                   double bin_width, std::string quantity);

// Treats each profile's bin mean as one sample: per bin, the mean over the
// profiles that occupy it, its standard error, and count = number of such
// profiles. Throws kInvalidArgument on mismatched bin width or quantity.
RadialProfile AggregateProfiles(std::span<const RadialProfile> profiles);

// CSV "bin_center,mean,stderr,count" / "bin_center,fraction[,stderr]".
void WriteProfileCsv(std::ostream& out, const RadialProfile& p);
void WriteHistogramCsv(std::ostream& out, const RadialHistogram& h);

// Spearman rank correlation with average ranks for ties.
double SpearmanCorrelation(std::span<const double> x, std::span<const double> y);

// Sample median (mean of the two middle values for even sizes).
double Median(std::span<const double> values);

}  // namespace radialnet
