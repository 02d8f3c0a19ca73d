// radialnet command-line front end. Talks to the library only through the C API.

#include <openssl/evp.h>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "radialnet/radialnet.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <class T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using EdgeSetH = Handle<rn_edgeset, rn_edgeset_free>;
using ReportH = Handle<rn_source_report, rn_source_report_free>;
using GraphH = Handle<rn_graph, rn_graph_free>;
using MetricsH = Handle<rn_metrics, rn_metrics_free>;
using DegreeHistH = Handle<rn_degree_histogram, rn_degree_histogram_free>;
using HistogramH = Handle<rn_histogram, rn_histogram_free>;
using ProfileH = Handle<rn_profile, rn_profile_free>;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Check(rn_status status) {
  if (status != RN_OK) throw Failure(rn_last_error());
}

// Quantities written as profile_<name>.csv, in this order.
constexpr rn_quantity kProfiled[] = {RN_Q_DEGREE,           RN_Q_NEIGHBOR_DEGREE,  RN_Q_CLUSTERING,
                                     RN_Q_DELETION_IMPACT,  RN_Q_DISTANCE_BALANCE, RN_Q_ECC};

std::string Sha256(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(path + ": cannot open for reading");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

std::string Num(double x) {
  if (std::isnan(x)) return "";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

// One output directory, its manifest and stage timings.
class Run {
 public:
  Run(std::string command, const std::string& out_dir, const std::vector<std::string>& argv)
      : dir_(out_dir) {
    manifest_["tool"] = "radialnet";
    manifest_["version"] = rn_version();
    manifest_["command"] = std::move(command);
    manifest_["argv"] = argv;
    manifest_["inputs"] = ordered_json::array();
    manifest_["parameters"] = ordered_json::object();
    manifest_["outputs"] = ordered_json::array();
    manifest_["timings_seconds"] = ordered_json::object();
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Failure(dir_.string() + ": " + ec.message());
  }

  void Input(const std::string& path) {
    if (!fs::exists(path)) throw Failure(path + ": no such file");
    manifest_["inputs"].push_back({{"path", path}, {"sha256", Sha256(path)}});
  }

  template <class T>
  void Param(const std::string& key, const T& value) {
    manifest_["parameters"][key] = value;
  }

  void Note(const std::string& key, const ordered_json& value) { manifest_["results"][key] = value; }

  std::string Output(const std::string& name) {
    manifest_["outputs"].push_back(name);
    return (dir_ / name).string();
  }

  template <class F>
  auto Stage(const std::string& name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      Run* run;
      std::string name;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        run->manifest_["timings_seconds"][name] = dt.count();
      }
    } record{this, name, start};
    return body();
  }

  void Finish() {
    const std::string path = (dir_ / "manifest.json").string();
    std::ofstream out(path, std::ios::binary);
    out << manifest_.dump(2) << '\n';
    out.close();
    if (!out) throw Failure(path + ": write failed");
  }

 private:
  fs::path dir_;
  ordered_json manifest_;
};

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw Failure(path + ": write failed");
}

GraphH LoadGraph(const std::string& path, rn_build_stats* stats) {
  rn_edgeset* raw = nullptr;
  Check(rn_edgeset_read_file(path.c_str(), RN_FORMAT_EDGE_LIST, &raw));
  EdgeSetH set(raw);
  rn_graph* g = nullptr;
  Check(rn_graph_build(set.get(), &g, stats));
  return GraphH(g);
}

std::vector<double> Quantity(const rn_metrics* m, rn_quantity q) {
  std::vector<double> out(rn_metrics_size(m));
  Check(rn_metrics_copy(m, q, out.data(), out.size()));
  return out;
}

HistogramH Histogram(const std::vector<double>& dbar, double width) {
  rn_histogram* h = nullptr;
  Check(rn_histogram_compute(dbar.data(), dbar.size(), width, &h));
  return HistogramH(h);
}

ProfileH Profile(const std::vector<double>& dbar, const std::vector<double>& values, double width,
                 rn_quantity q) {
  rn_profile* p = nullptr;
  Check(rn_profile_compute(dbar.data(), values.data(), dbar.size(), width, rn_quantity_name(q), &p));
  return ProfileH(p);
}

double Median(const std::vector<double>& values) {
  double m = 0;
  Check(rn_median(values.data(), values.size(), &m));
  return m;
}

rn_triangle_census Census(const rn_graph* g, const rn_metrics* m, double threshold) {
  rn_triangle_census c{};
  Check(rn_triangle_census_compute(g, m, threshold, &c));
  return c;
}

std::string CensusRow(const rn_triangle_census& c) {
  return Num(c.threshold) + "," + std::to_string(c.total) + "," + std::to_string(c.any_above) + "," +
         std::to_string(c.all_above);
}

// Largest connected component and the fraction of vertices it keeps.
GraphH Connected(const rn_graph* g, double* retained) {
  rn_graph* lc = nullptr;
  Check(rn_graph_largest_component(g, &lc, retained));
  return GraphH(lc);
}

MetricsH Metrics(const rn_graph* g, unsigned threads) {
  rn_metrics* m = nullptr;
  Check(rn_metrics_compute(g, threads, &m));
  return MetricsH(m);
}

// ---- ingest -----------------------------------------------------------------

struct IngestOptions {
  std::vector<std::string> paths;
  std::vector<std::string> edges;
  std::string baseline;
  std::string out_dir;
};

void Ingest(const IngestOptions& o, const std::vector<std::string>& argv) {
  if (o.paths.empty() && o.edges.empty()) throw Failure("ingest: give at least one --paths or --edges file");
  Run run("ingest", o.out_dir, argv);

  std::vector<std::string> names;
  std::vector<EdgeSetH> sets;
  run.Stage("parse", [&] {
    auto load = [&](const std::string& path, rn_format format) {
      run.Input(path);
      rn_edgeset* raw = nullptr;
      Check(rn_edgeset_read_file(path.c_str(), format, &raw));
      sets.emplace_back(raw);
      names.push_back(fs::path(path).filename().string());
    };
    for (const auto& p : o.paths) load(p, RN_FORMAT_AS_PATHS);
    for (const auto& p : o.edges) load(p, RN_FORMAT_EDGE_LIST);
  });
  const std::string baseline = o.baseline.empty() ? names.front() : o.baseline;
  run.Param("paths", o.paths);
  run.Param("edges", o.edges);
  run.Param("baseline", baseline);

  rn_edgeset* merged_raw = nullptr;
  rn_source_report* report_raw = nullptr;
  run.Stage("merge", [&] {
    std::vector<const char*> cnames;
    std::vector<const rn_edgeset*> csets;
    for (std::size_t i = 0; i < names.size(); ++i) {
      cnames.push_back(names[i].c_str());
      csets.push_back(sets[i].get());
    }
    Check(rn_merge_sources(cnames.data(), csets.data(), names.size(), baseline.c_str(), &merged_raw,
                           &report_raw));
  });
  EdgeSetH merged(merged_raw);
  ReportH report(report_raw);

  run.Stage("write", [&] {
    Check(rn_edgeset_write_file(merged.get(), run.Output("graph.edges").c_str()));
    Check(rn_source_report_write_csv(report.get(), run.Output("sources.csv").c_str()));
  });
  run.Note("union_edges", rn_source_report_union_edges(report.get()));
  run.Note("gain", rn_source_report_gain(report.get()));
  std::cerr << "ingest: " << rn_source_report_union_edges(report.get()) << " edges, gain over " << baseline
            << " = " << Num(rn_source_report_gain(report.get())) << '\n';
  run.Finish();
}

// ---- analyze ----------------------------------------------------------------

struct AnalyzeOptions {
  std::string graph;
  std::string out_dir;
  double bin_width = 0.1;
  unsigned threads = 0;
  std::vector<std::uint32_t> tier1{209, 701, 1239, 1668, 2914, 3356, 3549, 3561, 6461, 7018};
  double triangle_threshold = 3.8;
};

void Analyze(const AnalyzeOptions& o, const std::vector<std::string>& argv) {
  Run run("analyze", o.out_dir, argv);
  run.Input(o.graph);
  run.Param("bin_width", o.bin_width);
  run.Param("threads", o.threads);
  run.Param("tier1", o.tier1);
  run.Param("triangle_threshold", o.triangle_threshold);

  rn_build_stats stats{};
  double retained = 1.0;
  GraphH g = run.Stage("load", [&] {
    GraphH full = LoadGraph(o.graph, &stats);
    return Connected(full.get(), &retained);
  });
  if (retained < 1.0)
    std::cerr << "analyze: input is disconnected; keeping the largest component (" << Num(retained)
              << " of vertices)\n";
  MetricsH m = run.Stage("metrics", [&] { return Metrics(g.get(), o.threads); });

  run.Stage("write", [&] {
    const std::size_t n = rn_graph_vertex_count(g.get());
    const std::size_t edges = rn_graph_edge_count(g.get());
    WriteText(run.Output("summary.csv"),
              "vertices,edges,retained_fraction,dropped_loops,dropped_duplicates\n" + std::to_string(n) + "," +
                  std::to_string(edges) + "," + Num(retained) + "," + std::to_string(stats.dropped_loops) + "," +
                  std::to_string(stats.dropped_duplicates) + "\n");
    Check(rn_metrics_write_csv(m.get(), g.get(), run.Output("metrics.csv").c_str()));

    const auto dbar = Quantity(m.get(), RN_Q_DBAR);
    Check(rn_histogram_write_csv(Histogram(dbar, o.bin_width).get(), run.Output("histogram.csv").c_str()));
    for (rn_quantity q : kProfiled) {
      const auto p = Profile(dbar, Quantity(m.get(), q), o.bin_width, q);
      Check(rn_profile_write_csv(p.get(), run.Output(std::string("profile_") + rn_quantity_name(q) + ".csv").c_str()));
    }

    const double median = Median(dbar);
    WriteText(run.Output("triangles.csv"), "kind,threshold,total,any_above,all_above\nfixed," +
                                               CensusRow(Census(g.get(), m.get(), o.triangle_threshold)) +
                                               "\nmedian," + CensusRow(Census(g.get(), m.get(), median)) + "\n");

    std::map<std::uint32_t, double> by_label;
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t label = 0;
      Check(rn_graph_label(g.get(), i, &label));
      by_label[label] = dbar[i];
    }
    rn_group_summary s{};
    Check(rn_group_summary_compute(g.get(), m.get(), o.tier1.data(), o.tier1.size(), &s));
    std::string tier1 = "as_number,dbar\n";
    for (std::uint32_t label : o.tier1) tier1 += std::to_string(label) + "," + (by_label.contains(label) ? Num(by_label[label]) : "") + "\n";
    WriteText(run.Output("tier1.csv"), tier1);
    WriteText(run.Output("tier1_summary.csv"), "found,missing,mean,sd,se\n" + std::to_string(s.found) + "," +
                                                   std::to_string(s.missing) + "," + Num(s.mean) + "," +
                                                   Num(s.stddev) + "," + Num(s.stderr_) + "\n");
    run.Note("vertices", n);
    run.Note("edges", edges);
    run.Note("retained_fraction", retained);
    run.Note("tier1_mean_dbar", s.mean);
  });
  run.Finish();
}

// ---- nullmodel --------------------------------------------------------------

struct NullOptions {
  std::string graph;
  std::string out_dir;
  std::size_t realizations = 100;
  std::uint64_t seed = 1;
  std::uint32_t sweeps = 10;
  std::uint32_t max_retries = 100;
  double rotation_probability = 0.1;
  double bin_width = 0.1;
  unsigned threads = 0;
  double triangle_threshold = 3.8;
  bool dump = false;
};

struct NullState {
  const NullOptions* options;
  Run* run;
  std::vector<HistogramH> histograms;
  std::map<rn_quantity, std::vector<ProfileH>> profiles;
  std::string triangles = "realization,kind,threshold,total,any_above,all_above\n";
  std::string realizations = "realization,accepted_swaps,accepted_rotations,vertices,retained_fraction\n";
  std::size_t without_moves = 0;
  std::string error;
};

int OnRealization(void* user, std::size_t r, const rn_graph* g, const rn_rewire_info* info) {
  auto* st = static_cast<NullState*>(user);
  try {
    const NullOptions& o = *st->options;
    if (info->no_accepted_moves) ++st->without_moves;
    if (o.dump) Check(rn_graph_write_edge_list(g, st->run->Output("realization_" + std::to_string(r) + ".edges").c_str()));
    double retained = 1.0;
    GraphH lc = Connected(g, &retained);
    MetricsH m = Metrics(lc.get(), o.threads);
    const auto dbar = Quantity(m.get(), RN_Q_DBAR);
    st->histograms.push_back(Histogram(dbar, o.bin_width));
    for (rn_quantity q : kProfiled) st->profiles[q].push_back(Profile(dbar, Quantity(m.get(), q), o.bin_width, q));
    const std::string idx = std::to_string(r);
    st->triangles += idx + ",fixed," + CensusRow(Census(lc.get(), m.get(), o.triangle_threshold)) + "\n";
    st->triangles += idx + ",median," + CensusRow(Census(lc.get(), m.get(), Median(dbar))) + "\n";
    st->realizations += idx + "," + std::to_string(info->accepted_swaps) + "," +
                        std::to_string(info->accepted_rotations) + "," +
                        std::to_string(rn_graph_vertex_count(lc.get())) + "," + Num(retained) + "\n";
    return 0;
  } catch (const std::exception& e) {
    st->error = "realization " + std::to_string(r) + ": " + e.what();
    return 1;
  }
}

void NullModel(const NullOptions& o, const std::vector<std::string>& argv) {
  Run run("nullmodel", o.out_dir, argv);
  run.Input(o.graph);
  run.Param("realizations", o.realizations);
  run.Param("seed", o.seed);
  run.Param("sweeps", o.sweeps);
  run.Param("max_retries", o.max_retries);
  run.Param("rotation_probability", o.rotation_probability);
  run.Param("bin_width", o.bin_width);
  run.Param("threads", o.threads);
  run.Param("triangle_threshold", o.triangle_threshold);
  run.Param("dump", o.dump);

  double retained = 1.0;
  GraphH g = run.Stage("load", [&] {
    GraphH full = LoadGraph(o.graph, nullptr);
    return Connected(full.get(), &retained);
  });
  if (retained < 1.0)
    std::cerr << "nullmodel: input is disconnected; rewiring the largest component (" << Num(retained)
              << " of vertices)\n";

  rn_rewire_config cfg{o.seed, o.sweeps, o.max_retries, o.rotation_probability};
  NullState st;
  st.options = &o;
  st.run = &run;
  run.Stage("ensemble", [&] {
    const rn_status status = rn_sample_ensemble(g.get(), o.realizations, &cfg, o.threads, OnRealization, &st);
    if (status == RN_ERR_CALLBACK && !st.error.empty()) throw Failure(st.error);
    Check(status);
  });
  if (st.without_moves > 0)
    std::cerr << "warning: no rewiring move was accepted in " << st.without_moves << " of " << o.realizations
              << " realizations; those equal the input graph\n";

  run.Stage("aggregate", [&] {
    std::vector<const rn_histogram*> hs;
    for (const auto& h : st.histograms) hs.push_back(h.get());
    rn_histogram* agg = nullptr;
    Check(rn_histogram_aggregate(hs.data(), hs.size(), &agg));
    HistogramH hist(agg);
    Check(rn_histogram_write_csv(hist.get(), run.Output("histogram.csv").c_str()));
    for (rn_quantity q : kProfiled) {
      std::vector<const rn_profile*> ps;
      for (const auto& p : st.profiles[q]) ps.push_back(p.get());
      rn_profile* out = nullptr;
      Check(rn_profile_aggregate(ps.data(), ps.size(), &out));
      ProfileH prof(out);
      Check(rn_profile_write_csv(prof.get(), run.Output(std::string("profile_") + rn_quantity_name(q) + ".csv").c_str()));
    }
    WriteText(run.Output("triangles.csv"), st.triangles);
    WriteText(run.Output("realizations.csv"), st.realizations);
  });
  run.Note("realizations_without_moves", st.without_moves);
  run.Finish();
}

// ---- generate ---------------------------------------------------------------

struct GenerateOptions {
  std::uint32_t n = 0;
  std::uint32_t m = 3;
  std::uint64_t seed = 1;
  std::uint32_t k_min = 6;
  std::uint32_t k_max = 200;
  std::string out_dir;
};

void GenerateBa(const GenerateOptions& o, const std::vector<std::string>& argv) {
  Run run("generate ba", o.out_dir, argv);
  run.Param("n", o.n);
  run.Param("m", o.m);
  run.Param("seed", o.seed);
  run.Param("k_min", o.k_min);
  run.Param("k_max", o.k_max);

  GraphH g = run.Stage("generate", [&] {
    rn_graph* raw = nullptr;
    Check(rn_generate_ba(o.n, o.m, o.seed, &raw));
    return GraphH(raw);
  });
  DegreeHistH h = run.Stage("histogram", [&] {
    rn_degree_histogram* raw = nullptr;
    Check(rn_degree_histogram_compute(g.get(), o.k_min, o.k_max, &raw));
    return DegreeHistH(raw);
  });
  run.Stage("write", [&] {
    Check(rn_graph_write_edge_list(g.get(), run.Output("graph.edges").c_str()));
    Check(rn_degree_histogram_write_csv(h.get(), run.Output("degree_histogram.csv").c_str()));
  });
  const std::string summary = rn_degree_histogram_summary(h.get());
  run.Note("fit", summary);
  std::cout << summary << '\n';
  run.Finish();
}

unsigned ThreadsFromEnv() {
  const char* env = std::getenv("RADIALNET_THREADS");
  if (!env || !*env) return 0;
  try {
    return static_cast<unsigned>(std::stoul(env));
  } catch (const std::exception&) {
    throw Failure(std::string("RADIALNET_THREADS: not a number: ") + env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Radial (core-periphery) analysis of AS-level graphs"};
  app.set_version_flag("--version", std::string(rn_version()));
  app.require_subcommand(1);

  IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Merge AS-path and edge-list sources into one graph");
  ingest_cmd->add_option("--paths", ingest.paths, "AS-path file (one path per line); repeatable")->check(CLI::ExistingFile);
  ingest_cmd->add_option("--edges", ingest.edges, "Edge-list file; repeatable")->check(CLI::ExistingFile);
  ingest_cmd->add_option("--baseline", ingest.baseline, "Source (file name) that gains are measured against");
  ingest_cmd->add_option("-o,--out", ingest.out_dir, "Output directory")->required();

  unsigned threads = 0;
  bool threads_given = false;
  auto threads_option = [&](CLI::App* cmd) {
    cmd->add_option_function<unsigned>("--threads", [&](unsigned t) { threads = t, threads_given = true; },
                                       "Worker threads (0 = all cores; default $RADIALNET_THREADS)");
  };

  AnalyzeOptions analyze;
  std::string analyze_tier1;
  auto* analyze_cmd = app.add_subcommand("analyze", "Per-vertex metrics and radial profiles of one graph");
  analyze_cmd->add_option("graph", analyze.graph, "Edge-list file")->required();
  analyze_cmd->add_option("-o,--out", analyze.out_dir, "Output directory")->required();
  analyze_cmd->add_option("--bin-width", analyze.bin_width, "Average-distance bin width")->capture_default_str()->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--tier1", analyze.tier1, "AS numbers summarized as a group")->delimiter(',');
  analyze_cmd->add_option("--triangle-threshold", analyze.triangle_threshold, "Average-distance threshold for the triangle census")->capture_default_str();
  threads_option(analyze_cmd);

  NullOptions null;
  auto* null_cmd = app.add_subcommand("nullmodel", "Degree-preserving rewired ensemble, aggregated profiles");
  null_cmd->add_option("graph", null.graph, "Edge-list file")->required();
  null_cmd->add_option("-o,--out", null.out_dir, "Output directory")->required();
  null_cmd->add_option("--realizations", null.realizations)->capture_default_str()->check(CLI::PositiveNumber);
  null_cmd->add_option("--seed", null.seed)->capture_default_str();
  null_cmd->add_option("--sweeps", null.sweeps)->capture_default_str();
  null_cmd->add_option("--max-retries", null.max_retries)->capture_default_str();
  null_cmd->add_option("--rotation-prob", null.rotation_probability)->capture_default_str();
  null_cmd->add_option("--bin-width", null.bin_width)->capture_default_str()->check(CLI::PositiveNumber);
  null_cmd->add_option("--triangle-threshold", null.triangle_threshold)->capture_default_str();
  null_cmd->add_flag("--dump", null.dump, "Also write every rewired graph as realization_<r>.edges");
  threads_option(null_cmd);

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "Synthetic graphs");
  gen_cmd->require_subcommand(1);
  auto* ba_cmd = gen_cmd->add_subcommand("ba", "Barabási-Albert preferential attachment");
  ba_cmd->add_option("--n", gen.n, "Vertex count")->required();
  ba_cmd->add_option("--m", gen.m, "Edges per new vertex")->capture_default_str();
  ba_cmd->add_option("--seed", gen.seed)->capture_default_str();
  ba_cmd->add_option("--k-min", gen.k_min, "Lower end of the tail fit")->capture_default_str();
  ba_cmd->add_option("--k-max", gen.k_max, "Upper end of the tail fit")->capture_default_str();
  ba_cmd->add_option("-o,--out", gen.out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (!threads_given) threads = ThreadsFromEnv();
    if (*ingest_cmd) {
      Ingest(ingest, args);
    } else if (*analyze_cmd) {
      analyze.threads = threads;
      Analyze(analyze, args);
    } else if (*null_cmd) {
      null.threads = threads;
      NullModel(null, args);
    } else if (*ba_cmd) {
      GenerateBa(gen, args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
