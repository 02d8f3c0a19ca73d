#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "radialnet/graph.hpp"

namespace radialnet {

struct RewireConfig {
  std::uint64_t seed = 1;
  std::uint32_t sweeps = 10;        // full passes over the edge list
  std::uint32_t max_retries = 100;  // swap attempts per edge and sweep
  double rotation_probability = 0.1;

  // Throws kInvalidArgument when a field is out of range.
  void Validate() const;
};

struct RewireResult {
  Graph graph;
  std::uint64_t accepted_swaps = 0;
  std::uint64_t accepted_rotations = 0;
  // Set when not a single move was accepted; the input is returned as is.
  bool no_accepted_moves = false;
};

// Degree-preserving randomization. For every edge (i, j), in edge-list order,
// a partner edge (i', j') is drawn and the pair is replaced by (i, j') and
// (i', j); swaps that would create a self- or multi-edge are undone and a new
// partner is tried, up to max_retries times. After each edge, with
// probability rotation_probability, the edge now in that slot and two random
// edges (a, b), (c, d), (e, f) are rotated to (a, d), (c, f), (e, b), again
// only if the result stays simple. The vertex set and labels are kept, so the
// output may be disconnected. Requires m >= 2.
RewireResult Rewire(const Graph& g, const RewireConfig& cfg);

// Receives realization r (in increasing order of r).
using RealizationSink = std::function<void(std::size_t r, RewireResult&& result)>;

// `count` independent rewirings; realization r uses seed DeriveSeed(cfg.seed, r).
// Realizations are computed on up to `threads` workers but delivered to the
// sink in index order from the calling thread.
void SampleEnsemble(const Graph& g, std::size_t count, const RewireConfig& cfg, unsigned threads,
                    const RealizationSink& sink);

}  // namespace radialnet
