/*
 * radialnet C API.
 *
 * Objects are opaque handles created by rn_*_compute / rn_*_build style
 * functions and released with the matching rn_*_free. Every fallible call
 * returns an rn_status; on failure rn_last_error() describes the problem
 * (thread-local, valid until the next failing call on the same thread).
 * Handles are immutable once created and may be shared between threads.
 */
#ifndef RADIALNET_RADIALNET_H
#define RADIALNET_RADIALNET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RADIALNET_BUILDING)
#    define RN_API __declspec(dllexport)
#  else
#    define RN_API __declspec(dllimport)
#  endif
#else
#  define RN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rn_status {
  RN_OK = 0,
  RN_ERR_INVALID_ARGUMENT = 1,
  RN_ERR_EMPTY_INPUT = 2,
  RN_ERR_PARSE = 3,
  RN_ERR_RANGE = 4,
  RN_ERR_DISCONNECTED = 5,
  RN_ERR_DOMAIN = 6,
  RN_ERR_NOT_FOUND = 7,
  RN_ERR_IO = 8,
  RN_ERR_FIT = 9,
  RN_ERR_CALLBACK = 10,
  RN_ERR_INTERNAL = 100
} rn_status;

typedef enum rn_format {
  RN_FORMAT_EDGE_LIST = 0,
  RN_FORMAT_AS_PATHS = 1
} rn_format;

typedef enum rn_quantity {
  RN_Q_DBAR = 0,
  RN_Q_ECC = 1,
  RN_Q_DEGREE = 2,
  RN_Q_NEIGHBOR_DEGREE = 3,
  RN_Q_CLUSTERING = 4,
  RN_Q_DELETION_IMPACT = 5,
  RN_Q_DISTANCE_BALANCE = 6
} rn_quantity;

typedef struct rn_edgeset rn_edgeset;
typedef struct rn_source_report rn_source_report;
typedef struct rn_graph rn_graph;
typedef struct rn_metrics rn_metrics;
typedef struct rn_degree_histogram rn_degree_histogram;
typedef struct rn_histogram rn_histogram;
typedef struct rn_profile rn_profile;

RN_API const char* rn_version(void);
RN_API const char* rn_last_error(void);
RN_API const char* rn_status_name(rn_status status);
/* Canonical short name of a quantity ("dbar", "ecc", "k", "K", "C", "phi", "b"). */
RN_API const char* rn_quantity_name(rn_quantity q);

/* ---- edge sets ---------------------------------------------------------- */

RN_API rn_status rn_edgeset_read_file(const char* path, rn_format format, rn_edgeset** out);
RN_API rn_status rn_edgeset_parse(const char* text, size_t length, rn_format format,
                                  rn_edgeset** out);
RN_API size_t rn_edgeset_size(const rn_edgeset* set);
RN_API rn_status rn_edgeset_get(const rn_edgeset* set, size_t index, uint32_t* u, uint32_t* v);
/* Writes sorted, distinct "<u> <v>" lines. */
RN_API rn_status rn_edgeset_write_file(const rn_edgeset* set, const char* path);
RN_API void rn_edgeset_free(rn_edgeset* set);

/* Union of `count` named sources; gain is measured against `baseline`. */
RN_API rn_status rn_merge_sources(const char* const* names, const rn_edgeset* const* sets,
                                  size_t count, const char* baseline, rn_edgeset** merged,
                                  rn_source_report** report);
RN_API size_t rn_source_report_union_edges(const rn_source_report* report);
RN_API double rn_source_report_gain(const rn_source_report* report);
/* CSV: source,edges,exclusive,gain plus a final "union" row. */
RN_API rn_status rn_source_report_write_csv(const rn_source_report* report, const char* path);
RN_API void rn_source_report_free(rn_source_report* report);

/* ---- graphs ------------------------------------------------------------- */

typedef struct rn_build_stats {
  size_t dropped_loops;
  size_t dropped_duplicates;
} rn_build_stats;

/* stats may be NULL. */
RN_API rn_status rn_graph_build(const rn_edgeset* edges, rn_graph** out, rn_build_stats* stats);
RN_API rn_status rn_graph_largest_component(const rn_graph* g, rn_graph** out,
                                            double* retained_fraction);
RN_API size_t rn_graph_vertex_count(const rn_graph* g);
RN_API size_t rn_graph_edge_count(const rn_graph* g);
RN_API int rn_graph_is_connected(const rn_graph* g);
RN_API rn_status rn_graph_label(const rn_graph* g, uint32_t index, uint32_t* label);
/* Non-increasing degrees; capacity must be at least the vertex count. */
RN_API rn_status rn_graph_degree_sequence(const rn_graph* g, uint32_t* out, size_t capacity);
RN_API rn_status rn_graph_write_edge_list(const rn_graph* g, const char* path);
RN_API void rn_graph_free(rn_graph* g);

/* ---- per-vertex metrics ------------------------------------------------- */

/* Requires a connected graph with at least three vertices. threads = 0 uses
 * all hardware threads; results never depend on it. */
RN_API rn_status rn_metrics_compute(const rn_graph* g, unsigned threads, rn_metrics** out);
RN_API size_t rn_metrics_size(const rn_metrics* m);
/* Copies one quantity into out[0..n); undefined entries are NaN. */
RN_API rn_status rn_metrics_copy(const rn_metrics* m, rn_quantity q, double* out, size_t capacity);
/* CSV: as_number,dbar,ecc,k,K,C,phi,b (empty C when undefined). */
RN_API rn_status rn_metrics_write_csv(const rn_metrics* m, const rn_graph* g, const char* path);
RN_API void rn_metrics_free(rn_metrics* m);

typedef struct rn_triangle_census {
  double threshold;
  uint64_t total;
  uint64_t any_above;
  uint64_t all_above;
} rn_triangle_census;

RN_API rn_status rn_triangle_census_compute(const rn_graph* g, const rn_metrics* m,
                                            double threshold, rn_triangle_census* out);

typedef struct rn_group_summary {
  size_t found;
  size_t missing;
  double mean;     /* NaN when nothing found */
  double stddev;   /* sample standard deviation, NaN when found < 2 */
  double stderr_;  /* stddev / sqrt(found) */
} rn_group_summary;

RN_API rn_status rn_group_summary_compute(const rn_graph* g, const rn_metrics* m,
                                          const uint32_t* labels, size_t count,
                                          rn_group_summary* out);

RN_API rn_status rn_median(const double* values, size_t count, double* out);
RN_API rn_status rn_spearman(const double* x, const double* y, size_t count, double* out);

/* ---- null model --------------------------------------------------------- */

typedef struct rn_rewire_config {
  uint64_t seed;
  uint32_t sweeps;
  uint32_t max_retries;
  double rotation_probability;
} rn_rewire_config;

typedef struct rn_rewire_info {
  uint64_t accepted_swaps;
  uint64_t accepted_rotations;
  int no_accepted_moves;
} rn_rewire_info;

/* seed 1, sweeps 10, max_retries 100, rotation_probability 0.1 */
RN_API void rn_rewire_config_default(rn_rewire_config* cfg);
RN_API rn_status rn_rewire(const rn_graph* g, const rn_rewire_config* cfg, rn_graph** out,
                           rn_rewire_info* info);

/* Called once per realization in index order from the calling thread. The
 * graph handle is only valid during the call. Return nonzero to stop. */
typedef int (*rn_realization_fn)(void* user, size_t index, const rn_graph* g,
                                 const rn_rewire_info* info);

RN_API rn_status rn_sample_ensemble(const rn_graph* g, size_t count, const rn_rewire_config* cfg,
                                    unsigned threads, rn_realization_fn fn, void* user);

/* ---- generators --------------------------------------------------------- */

RN_API rn_status rn_generate_ba(uint32_t n, uint32_t m, uint64_t seed, rn_graph** out);

/* Succeeds even when the tail fit fails; check rn_degree_histogram_has_fit. */
RN_API rn_status rn_degree_histogram_compute(const rn_graph* g, uint32_t k_min, uint32_t k_max,
                                             rn_degree_histogram** out);
RN_API int rn_degree_histogram_has_fit(const rn_degree_histogram* h);
RN_API double rn_degree_histogram_slope(const rn_degree_histogram* h);
RN_API uint64_t rn_degree_histogram_count(const rn_degree_histogram* h, uint32_t degree);
/* One-line summary owned by the handle. */
RN_API const char* rn_degree_histogram_summary(const rn_degree_histogram* h);
/* CSV: degree,count */
RN_API rn_status rn_degree_histogram_write_csv(const rn_degree_histogram* h, const char* path);
RN_API void rn_degree_histogram_free(rn_degree_histogram* h);

/* ---- radial histograms and profiles ------------------------------------- */

RN_API rn_status rn_histogram_compute(const double* dbar, size_t count, double bin_width,
                                      rn_histogram** out);
RN_API rn_status rn_histogram_aggregate(const rn_histogram* const* histograms, size_t count,
                                        rn_histogram** out);
RN_API size_t rn_histogram_bin_count(const rn_histogram* h);
/* stderr_ is NaN for single-realization histograms. */
RN_API rn_status rn_histogram_bin(const rn_histogram* h, size_t index, double* center,
                                  double* fraction, double* stderr_);
RN_API rn_status rn_histogram_write_csv(const rn_histogram* h, const char* path);
RN_API void rn_histogram_free(rn_histogram* h);

/* NaN values are skipped. */
RN_API rn_status rn_profile_compute(const double* dbar, const double* values, size_t count,
                                    double bin_width, const char* quantity, rn_profile** out);
RN_API rn_status rn_profile_aggregate(const rn_profile* const* profiles, size_t count,
                                      rn_profile** out);
RN_API size_t rn_profile_bin_count(const rn_profile* p);
/* stderr_ is NaN when fewer than two samples fell in the bin. */
RN_API rn_status rn_profile_bin(const rn_profile* p, size_t index, double* center, double* mean,
                                double* stderr_, size_t* count);
/* CSV: bin_center,mean,stderr,count */
RN_API rn_status rn_profile_write_csv(const rn_profile* p, const char* path);
RN_API void rn_profile_free(rn_profile* p);

#ifdef __cplusplus
}
#endif

#endif /* RADIALNET_RADIALNET_H */
