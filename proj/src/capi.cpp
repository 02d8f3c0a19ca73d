#include "radialnet/radialnet.h"

#include <cmath>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "radialnet/error.hpp"
#include "radialnet/generators.hpp"
#include "radialnet/ingest.hpp"
#include "radialnet/nullmodel.hpp"
#include "radialnet/profile.hpp"
#include "radialnet/radial.hpp"

#ifndef RADIALNET_VERSION
#define RADIALNET_VERSION "0.0.0"
#endif

namespace rn = radialnet;

struct rn_edgeset {
  rn::EdgeSet set;
};
struct rn_source_report {
  rn::SourceReport report;
};
struct rn_graph {
  rn::Graph graph;
};
struct rn_metrics {
  rn::VertexMetrics metrics;
};
struct rn_degree_histogram {
  rn::DegreeHistogram histogram;
  std::string summary;
};
struct rn_histogram {
  rn::RadialHistogram histogram;
};
struct rn_profile {
  rn::RadialProfile profile;
};

namespace {

thread_local std::string g_last_error;

struct CallbackStopped {};

rn_status FromCode(rn::ErrorCode code) {
  switch (code) {
    case rn::ErrorCode::kInvalidArgument: return RN_ERR_INVALID_ARGUMENT;
    case rn::ErrorCode::kEmptyInput: return RN_ERR_EMPTY_INPUT;
    case rn::ErrorCode::kParse: return RN_ERR_PARSE;
    case rn::ErrorCode::kRange: return RN_ERR_RANGE;
    case rn::ErrorCode::kDisconnected: return RN_ERR_DISCONNECTED;
    case rn::ErrorCode::kDomain: return RN_ERR_DOMAIN;
    case rn::ErrorCode::kNotFound: return RN_ERR_NOT_FOUND;
    case rn::ErrorCode::kIo: return RN_ERR_IO;
    case rn::ErrorCode::kFit: return RN_ERR_FIT;
  }
  return RN_ERR_INTERNAL;
}

rn_status Fail(rn_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
rn_status Guard(Fn&& fn) {
  try {
    fn();
    return RN_OK;
  } catch (const rn::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const CallbackStopped&) {
    return Fail(RN_ERR_CALLBACK, "stopped by realization callback");
  } catch (const std::bad_alloc&) {
    return Fail(RN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(RN_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(RN_ERR_INTERNAL, "unknown failure");
  }
}

void RequireArg(bool ok, const char* what) {
  if (!ok) throw rn::Error(rn::ErrorCode::kInvalidArgument, what);
}

template <typename Writer>
void WriteFile(const char* path, Writer&& writer) {
  RequireArg(path != nullptr, "path is null");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw rn::Error(rn::ErrorCode::kIo, std::string("cannot open '") + path + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw rn::Error(rn::ErrorCode::kIo, std::string("failed writing '") + path + "'");
}

rn::EdgeSet ParseAs(std::istream& in, rn_format format) {
  switch (format) {
    case RN_FORMAT_EDGE_LIST: return rn::ParseEdgeList(in);
    case RN_FORMAT_AS_PATHS: return rn::ParseAsPaths(in);
  }
  throw rn::Error(rn::ErrorCode::kInvalidArgument, "unknown input format");
}

rn::RewireConfig ToConfig(const rn_rewire_config* cfg) {
  rn::RewireConfig out;
  if (cfg != nullptr) {
    out.seed = cfg->seed;
    out.sweeps = cfg->sweeps;
    out.max_retries = cfg->max_retries;
    out.rotation_probability = cfg->rotation_probability;
  }
  return out;
}

void FillInfo(const rn::RewireResult& r, rn_rewire_info* info) {
  if (info == nullptr) return;
  info->accepted_swaps = r.accepted_swaps;
  info->accepted_rotations = r.accepted_rotations;
  info->no_accepted_moves = r.no_accepted_moves ? 1 : 0;
}

double OrNan(const std::optional<double>& x) { return x ? *x : std::nan(""); }

}  // namespace

extern "C" {

const char* rn_version(void) { return RADIALNET_VERSION; }

const char* rn_last_error(void) { return g_last_error.c_str(); }

const char* rn_status_name(rn_status status) {
  switch (status) {
    case RN_OK: return "ok";
    case RN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RN_ERR_EMPTY_INPUT: return "empty input";
    case RN_ERR_PARSE: return "parse error";
    case RN_ERR_RANGE: return "range error";
    case RN_ERR_DISCONNECTED: return "disconnected graph";
    case RN_ERR_DOMAIN: return "domain error";
    case RN_ERR_NOT_FOUND: return "not found";
    case RN_ERR_IO: return "i/o error";
    case RN_ERR_FIT: return "fit error";
    case RN_ERR_CALLBACK: return "stopped by callback";
    case RN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rn_quantity_name(rn_quantity q) {
  switch (q) {
    case RN_Q_DBAR: return "dbar";
    case RN_Q_ECC: return "ecc";
    case RN_Q_DEGREE: return "k";
    case RN_Q_NEIGHBOR_DEGREE: return "K";
    case RN_Q_CLUSTERING: return "C";
    case RN_Q_DELETION_IMPACT: return "phi";
    case RN_Q_DISTANCE_BALANCE: return "b";
  }
  return "";
}

// ---- edge sets --------------------------------------------------------------

rn_status rn_edgeset_read_file(const char* path, rn_format format, rn_edgeset** out) {
  return Guard([&] {
    RequireArg(path != nullptr && out != nullptr, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rn::Error(rn::ErrorCode::kIo, std::string("cannot open '") + path + "'");
    try {
      *out = new rn_edgeset{ParseAs(in, format)};
    } catch (const rn::ParseError& e) {
      throw rn::Error(e.code(), std::string(path) + ":" + e.what());
    }
  });
}

rn_status rn_edgeset_parse(const char* text, size_t length, rn_format format, rn_edgeset** out) {
  return Guard([&] {
    RequireArg((text != nullptr || length == 0) && out != nullptr, "null argument");
    std::istringstream in{std::string(text == nullptr ? "" : text, length)};
    *out = new rn_edgeset{ParseAs(in, format)};
  });
}

size_t rn_edgeset_size(const rn_edgeset* set) { return set == nullptr ? 0 : set->set.size(); }

rn_status rn_edgeset_get(const rn_edgeset* set, size_t index, uint32_t* u, uint32_t* v) {
  return Guard([&] {
    RequireArg(set != nullptr && u != nullptr && v != nullptr, "null argument");
    if (index >= set->set.size()) throw rn::Error(rn::ErrorCode::kRange, "edge index out of range");
    *u = set->set.edges[index].u;
    *v = set->set.edges[index].v;
  });
}

rn_status rn_edgeset_write_file(const rn_edgeset* set, const char* path) {
  return Guard([&] {
    RequireArg(set != nullptr, "null edge set");
    WriteFile(path, [&](std::ostream& out) { rn::WriteEdgeList(out, set->set); });
  });
}

void rn_edgeset_free(rn_edgeset* set) { delete set; }

rn_status rn_merge_sources(const char* const* names, const rn_edgeset* const* sets, size_t count,
                           const char* baseline, rn_edgeset** merged, rn_source_report** report) {
  return Guard([&] {
    RequireArg(names != nullptr && sets != nullptr && baseline != nullptr && merged != nullptr &&
                   report != nullptr,
               "null argument");
    std::vector<rn::NamedEdgeSet> sources;
    sources.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      RequireArg(names[i] != nullptr && sets[i] != nullptr, "null source");
      sources.push_back({names[i], sets[i]->set});
    }
    rn::MergeResult result = rn::MergeSources(sources, baseline);
    auto* m = new rn_edgeset{std::move(result.merged)};
    try {
      *report = new rn_source_report{std::move(result.report)};
    } catch (...) {
      delete m;
      throw;
    }
    *merged = m;
  });
}

size_t rn_source_report_union_edges(const rn_source_report* report) {
  return report == nullptr ? 0 : report->report.union_edges;
}

double rn_source_report_gain(const rn_source_report* report) {
  return report == nullptr ? std::nan("") : report->report.gain;
}

rn_status rn_source_report_write_csv(const rn_source_report* report, const char* path) {
  return Guard([&] {
    RequireArg(report != nullptr, "null report");
    WriteFile(path, [&](std::ostream& out) { rn::WriteSourceReport(out, report->report); });
  });
}

void rn_source_report_free(rn_source_report* report) { delete report; }

// ---- graphs -----------------------------------------------------------------

rn_status rn_graph_build(const rn_edgeset* edges, rn_graph** out, rn_build_stats* stats) {
  return Guard([&] {
    RequireArg(edges != nullptr && out != nullptr, "null argument");
    rn::BuildStats s;
    *out = new rn_graph{rn::BuildGraph(edges->set, &s)};
    if (stats != nullptr) {
      stats->dropped_loops = s.dropped_loops;
      stats->dropped_duplicates = s.dropped_duplicates;
    }
  });
}

rn_status rn_graph_largest_component(const rn_graph* g, rn_graph** out, double* retained_fraction) {
  return Guard([&] {
    RequireArg(g != nullptr && out != nullptr, "null argument");
    rn::ComponentResult r = rn::LargestComponent(g->graph);
    *out = new rn_graph{std::move(r.graph)};
    if (retained_fraction != nullptr) *retained_fraction = r.retained_fraction;
  });
}

size_t rn_graph_vertex_count(const rn_graph* g) { return g == nullptr ? 0 : g->graph.num_vertices(); }

size_t rn_graph_edge_count(const rn_graph* g) { return g == nullptr ? 0 : g->graph.num_edges(); }

int rn_graph_is_connected(const rn_graph* g) {
  return g != nullptr && rn::IsConnected(g->graph) ? 1 : 0;
}

rn_status rn_graph_label(const rn_graph* g, uint32_t index, uint32_t* label) {
  return Guard([&] {
    RequireArg(g != nullptr && label != nullptr, "null argument");
    if (index >= g->graph.num_vertices()) throw rn::Error(rn::ErrorCode::kRange, "vertex index out of range");
    *label = g->graph.label(index);
  });
}

rn_status rn_graph_degree_sequence(const rn_graph* g, uint32_t* out, size_t capacity) {
  return Guard([&] {
    RequireArg(g != nullptr && out != nullptr, "null argument");
    if (capacity < g->graph.num_vertices()) {
      throw rn::Error(rn::ErrorCode::kInvalidArgument, "output buffer too small");
    }
    const auto seq = rn::DegreeSequence(g->graph);
    std::copy(seq.begin(), seq.end(), out);
  });
}

rn_status rn_graph_write_edge_list(const rn_graph* g, const char* path) {
  return Guard([&] {
    RequireArg(g != nullptr, "null graph");
    WriteFile(path, [&](std::ostream& out) { rn::WriteEdgeList(out, g->graph.ToEdgeSet()); });
  });
}

void rn_graph_free(rn_graph* g) { delete g; }

// ---- metrics ----------------------------------------------------------------

rn_status rn_metrics_compute(const rn_graph* g, unsigned threads, rn_metrics** out) {
  return Guard([&] {
    RequireArg(g != nullptr && out != nullptr, "null argument");
    *out = new rn_metrics{rn::ComputeMetrics(g->graph, threads)};
  });
}

size_t rn_metrics_size(const rn_metrics* m) { return m == nullptr ? 0 : m->metrics.size(); }

rn_status rn_metrics_copy(const rn_metrics* m, rn_quantity q, double* out, size_t capacity) {
  return Guard([&] {
    RequireArg(m != nullptr && out != nullptr, "null argument");
    const rn::VertexMetrics& vm = m->metrics;
    if (capacity < vm.size()) throw rn::Error(rn::ErrorCode::kInvalidArgument, "output buffer too small");
    auto copy = [&](const auto& src) {
      for (size_t i = 0; i < src.size(); ++i) out[i] = static_cast<double>(src[i]);
    };
    switch (q) {
      case RN_Q_DBAR: copy(vm.dbar); return;
      case RN_Q_ECC: copy(vm.ecc); return;
      case RN_Q_DEGREE: copy(vm.k); return;
      case RN_Q_NEIGHBOR_DEGREE: copy(vm.K); return;
      case RN_Q_CLUSTERING: copy(vm.C); return;
      case RN_Q_DELETION_IMPACT: copy(vm.phi); return;
      case RN_Q_DISTANCE_BALANCE: copy(vm.b); return;
    }
    throw rn::Error(rn::ErrorCode::kInvalidArgument, "unknown quantity");
  });
}

rn_status rn_metrics_write_csv(const rn_metrics* m, const rn_graph* g, const char* path) {
  return Guard([&] {
    RequireArg(m != nullptr && g != nullptr, "null argument");
    RequireArg(m->metrics.size() == g->graph.num_vertices(), "metrics do not belong to this graph");
    WriteFile(path, [&](std::ostream& out) { rn::WriteMetricsCsv(out, g->graph, m->metrics); });
  });
}

void rn_metrics_free(rn_metrics* m) { delete m; }

rn_status rn_triangle_census_compute(const rn_graph* g, const rn_metrics* m, double threshold,
                                     rn_triangle_census* out) {
  return Guard([&] {
    RequireArg(g != nullptr && m != nullptr && out != nullptr, "null argument");
    const rn::TriangleCensus c = rn::CountTriangles(g->graph, m->metrics.dbar, threshold);
    *out = {c.threshold, c.total, c.any_above, c.all_above};
  });
}

rn_status rn_group_summary_compute(const rn_graph* g, const rn_metrics* m, const uint32_t* labels,
                                   size_t count, rn_group_summary* out) {
  return Guard([&] {
    RequireArg(g != nullptr && m != nullptr && out != nullptr && (labels != nullptr || count == 0),
               "null argument");
    const rn::GroupSummary s =
        rn::SummarizeGroup(g->graph, m->metrics.dbar, std::span<const uint32_t>(labels, count));
    *out = {s.found.size(), s.missing.size(), s.mean, s.stddev, s.stderr_};
  });
}

rn_status rn_median(const double* values, size_t count, double* out) {
  return Guard([&] {
    RequireArg(values != nullptr && out != nullptr, "null argument");
    *out = rn::Median(std::span<const double>(values, count));
  });
}

rn_status rn_spearman(const double* x, const double* y, size_t count, double* out) {
  return Guard([&] {
    RequireArg(x != nullptr && y != nullptr && out != nullptr, "null argument");
    *out = rn::SpearmanCorrelation(std::span<const double>(x, count), std::span<const double>(y, count));
  });
}

// ---- null model -------------------------------------------------------------

void rn_rewire_config_default(rn_rewire_config* cfg) {
  if (cfg == nullptr) return;
  const rn::RewireConfig d;
  *cfg = {d.seed, d.sweeps, d.max_retries, d.rotation_probability};
}

rn_status rn_rewire(const rn_graph* g, const rn_rewire_config* cfg, rn_graph** out,
                    rn_rewire_info* info) {
  return Guard([&] {
    RequireArg(g != nullptr && out != nullptr, "null argument");
    rn::RewireResult r = rn::Rewire(g->graph, ToConfig(cfg));
    FillInfo(r, info);
    *out = new rn_graph{std::move(r.graph)};
  });
}

rn_status rn_sample_ensemble(const rn_graph* g, size_t count, const rn_rewire_config* cfg,
                             unsigned threads, rn_realization_fn fn, void* user) {
  return Guard([&] {
    RequireArg(g != nullptr && fn != nullptr, "null argument");
    rn::SampleEnsemble(g->graph, count, ToConfig(cfg), threads,
                       [&](std::size_t r, rn::RewireResult&& result) {
                         rn_rewire_info info{};
                         FillInfo(result, &info);
                         rn_graph handle{std::move(result.graph)};
                         if (fn(user, r, &handle, &info) != 0) throw CallbackStopped{};
                       });
  });
}

// ---- generators -------------------------------------------------------------

rn_status rn_generate_ba(uint32_t n, uint32_t m, uint64_t seed, rn_graph** out) {
  return Guard([&] {
    RequireArg(out != nullptr, "null argument");
    *out = new rn_graph{rn::GenerateBarabasiAlbert({n, m, seed})};
  });
}

rn_status rn_degree_histogram_compute(const rn_graph* g, uint32_t k_min, uint32_t k_max,
                                      rn_degree_histogram** out) {
  return Guard([&] {
    RequireArg(g != nullptr && out != nullptr, "null argument");
    rn::DegreeHistogram h = rn::ComputeDegreeHistogram(g->graph, k_min, k_max);
    std::string summary = rn::FitSummary(h);
    *out = new rn_degree_histogram{std::move(h), std::move(summary)};
  });
}

int rn_degree_histogram_has_fit(const rn_degree_histogram* h) {
  return h != nullptr && h->histogram.fit ? 1 : 0;
}

double rn_degree_histogram_slope(const rn_degree_histogram* h) {
  return h != nullptr && h->histogram.fit ? h->histogram.fit->slope : std::nan("");
}

uint64_t rn_degree_histogram_count(const rn_degree_histogram* h, uint32_t degree) {
  if (h == nullptr) return 0;
  auto it = h->histogram.counts.find(degree);
  return it == h->histogram.counts.end() ? 0 : it->second;
}

const char* rn_degree_histogram_summary(const rn_degree_histogram* h) {
  return h == nullptr ? "" : h->summary.c_str();
}

rn_status rn_degree_histogram_write_csv(const rn_degree_histogram* h, const char* path) {
  return Guard([&] {
    RequireArg(h != nullptr, "null histogram");
    WriteFile(path, [&](std::ostream& out) { rn::WriteDegreeHistogram(out, h->histogram); });
  });
}

void rn_degree_histogram_free(rn_degree_histogram* h) { delete h; }

// ---- histograms and profiles ------------------------------------------------

rn_status rn_histogram_compute(const double* dbar, size_t count, double bin_width, rn_histogram** out) {
  return Guard([&] {
    RequireArg((dbar != nullptr || count == 0) && out != nullptr, "null argument");
    *out = new rn_histogram{rn::ComputeRadialHistogram(std::span<const double>(dbar, count), bin_width)};
  });
}

rn_status rn_histogram_aggregate(const rn_histogram* const* histograms, size_t count, rn_histogram** out) {
  return Guard([&] {
    RequireArg(histograms != nullptr && out != nullptr, "null argument");
    std::vector<rn::RadialHistogram> hs;
    hs.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      RequireArg(histograms[i] != nullptr, "null histogram");
      hs.push_back(histograms[i]->histogram);
    }
    *out = new rn_histogram{rn::AggregateHistograms(hs)};
  });
}

size_t rn_histogram_bin_count(const rn_histogram* h) { return h == nullptr ? 0 : h->histogram.bins.size(); }

rn_status rn_histogram_bin(const rn_histogram* h, size_t index, double* center, double* fraction,
                           double* stderr_) {
  return Guard([&] {
    RequireArg(h != nullptr, "null histogram");
    if (index >= h->histogram.bins.size()) throw rn::Error(rn::ErrorCode::kRange, "bin index out of range");
    const rn::HistogramBin& b = h->histogram.bins[index];
    if (center != nullptr) *center = b.center;
    if (fraction != nullptr) *fraction = b.fraction;
    if (stderr_ != nullptr) *stderr_ = OrNan(b.standard_error);
  });
}

rn_status rn_histogram_write_csv(const rn_histogram* h, const char* path) {
  return Guard([&] {
    RequireArg(h != nullptr, "null histogram");
    WriteFile(path, [&](std::ostream& out) { rn::WriteHistogramCsv(out, h->histogram); });
  });
}

void rn_histogram_free(rn_histogram* h) { delete h; }

rn_status rn_profile_compute(const double* dbar, const double* values, size_t count, double bin_width,
                             const char* quantity, rn_profile** out) {
  return Guard([&] {
    RequireArg(((dbar != nullptr && values != nullptr) || count == 0) && quantity != nullptr &&
                   out != nullptr,
               "null argument");
    *out = new rn_profile{rn::ComputeRadialProfile(std::span<const double>(dbar, count),
                                                   std::span<const double>(values, count),
                                                   bin_width, quantity)};
  });
}

rn_status rn_profile_aggregate(const rn_profile* const* profiles, size_t count, rn_profile** out) {
  return Guard([&] {
    RequireArg(profiles != nullptr && out != nullptr, "null argument");
    std::vector<rn::RadialProfile> ps;
    ps.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      RequireArg(profiles[i] != nullptr, "null profile");
      ps.push_back(profiles[i]->profile);
    }
    *out = new rn_profile{rn::AggregateProfiles(ps)};
  });
}

size_t rn_profile_bin_count(const rn_profile* p) { return p == nullptr ? 0 : p->profile.bins.size(); }

rn_status rn_profile_bin(const rn_profile* p, size_t index, double* center, double* mean,
                         double* stderr_, size_t* count) {
  return Guard([&] {
    RequireArg(p != nullptr, "null profile");
    if (index >= p->profile.bins.size()) throw rn::Error(rn::ErrorCode::kRange, "bin index out of range");
    const rn::ProfileBin& b = p->profile.bins[index];
    if (center != nullptr) *center = b.center;
    if (mean != nullptr) *mean = b.mean;
    if (stderr_ != nullptr) *stderr_ = OrNan(b.standard_error);
    if (count != nullptr) *count = b.count;
  });
}

rn_status rn_profile_write_csv(const rn_profile* p, const char* path) {
  return Guard([&] {
    RequireArg(p != nullptr, "null profile");
    WriteFile(path, [&](std::ostream& out) { rn::WriteProfileCsv(out, p->profile); });
  });
}

void rn_profile_free(rn_profile* p) { delete p; }

}  // extern "C"
