#include "radialnet/nullmodel.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "radialnet/error.hpp"
#include "radialnet/parallel.hpp"
#include "radialnet/random.hpp"

namespace radialnet {
namespace {

using DenseEdge = std::pair<VertexId, VertexId>;

std::uint64_t Key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

class Rewirer {
 public:
  Rewirer(const Graph& g, const RewireConfig& cfg)
      : cfg_(cfg), rng_(MakeRng(cfg.seed)), edges_(g.DenseEdges()) {
    present_.reserve(2 * edges_.size());
    for (const auto& [a, b] : edges_) present_.insert(Key(a, b));
  }

  void Run() {
    const std::size_t m = edges_.size();
    for (std::uint32_t sweep = 0; sweep < cfg_.sweeps; ++sweep) {
      for (std::size_t e = 0; e < m; ++e) {
        for (std::uint32_t attempt = 0; attempt < cfg_.max_retries; ++attempt) {
          if (TrySwap(e)) {
            ++swaps_;
            break;
          }
        }
        if (m >= 3 && cfg_.rotation_probability > 0.0 &&
            UniformUnit(rng_) < cfg_.rotation_probability && TryRotate(e)) {
          ++rotations_;
        }
      }
    }
  }

  std::vector<DenseEdge>& edges() { return edges_; }
  std::uint64_t swaps() const { return swaps_; }
  std::uint64_t rotations() const { return rotations_; }

 private:
  // Picks an edge index different from each of `exclude`.
  std::size_t PickOther(std::initializer_list<std::size_t> exclude) {
    const std::size_t m = edges_.size();
    for (;;) {
      const auto f = static_cast<std::size_t>(UniformBelow(rng_, m));
      if (std::find(exclude.begin(), exclude.end(), f) == exclude.end()) return f;
    }
  }

  DenseEdge Oriented(std::size_t e) {
    DenseEdge edge = edges_[e];
    if (rng_() & 1) std::swap(edge.first, edge.second);
    return edge;
  }

  bool Free(VertexId a, VertexId b) const { return a != b && !present_.contains(Key(a, b)); }

  bool TrySwap(std::size_t e) {
    const std::size_t f = PickOther({e});
    const auto [i, j] = Oriented(e);
    const auto [i2, j2] = Oriented(f);
    if (!Free(i, j2) || !Free(i2, j) || Key(i, j2) == Key(i2, j)) return false;
    Replace(e, {i, j2});
    Replace(f, {i2, j});
    return true;
  }

  bool TryRotate(std::size_t e) {
    const std::size_t f1 = PickOther({e});
    const std::size_t f2 = PickOther({e, f1});
    const auto [a, b] = Oriented(e);
    const auto [c, d] = Oriented(f1);
    const auto [x, y] = Oriented(f2);
    if (!Free(a, d) || !Free(c, y) || !Free(x, b)) return false;
    const std::uint64_t k1 = Key(a, d);
    const std::uint64_t k2 = Key(c, y);
    const std::uint64_t k3 = Key(x, b);
    if (k1 == k2 || k1 == k3 || k2 == k3) return false;
    Replace(e, {a, d});
    Replace(f1, {c, y});
    Replace(f2, {x, b});
    return true;
  }

  void Replace(std::size_t slot, DenseEdge edge) {
    present_.erase(Key(edges_[slot].first, edges_[slot].second));
    present_.insert(Key(edge.first, edge.second));
    edges_[slot] = edge;
  }

  RewireConfig cfg_;
  Rng rng_;
  std::vector<DenseEdge> edges_;
  std::unordered_set<std::uint64_t> present_;
  std::uint64_t swaps_ = 0;
  std::uint64_t rotations_ = 0;
};

}  // namespace

void RewireConfig::Validate() const {
  if (sweeps < 1) throw Error(ErrorCode::kInvalidArgument, "sweeps must be at least 1");
  if (max_retries < 1) throw Error(ErrorCode::kInvalidArgument, "max_retries must be at least 1");
  if (!(rotation_probability >= 0.0 && rotation_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rotation_probability must lie in [0, 1]");
  }
}

RewireResult Rewire(const Graph& g, const RewireConfig& cfg) {
  cfg.Validate();
  if (g.num_edges() < 2) throw Error(ErrorCode::kDomain, "rewiring needs at least two edges");

  Rewirer rewirer(g, cfg);
  rewirer.Run();

  RewireResult result;
  result.accepted_swaps = rewirer.swaps();
  result.accepted_rotations = rewirer.rotations();
  if (result.accepted_swaps + result.accepted_rotations == 0) {
    result.no_accepted_moves = true;
    result.graph = g;
    return result;
  }
  auto& edges = rewirer.edges();
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  result.graph = Graph::FromDenseEdges({g.labels().begin(), g.labels().end()}, edges);
  return result;
}

void SampleEnsemble(const Graph& g, std::size_t count, const RewireConfig& cfg, unsigned threads,
                    const RealizationSink& sink) {
  cfg.Validate();
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "realization count must be at least 1");
  const std::size_t batch = ResolveThreads(threads);
  std::vector<std::optional<RewireResult>> slots(batch);
  for (std::size_t start = 0; start < count; start += batch) {
    const std::size_t size = std::min(batch, count - start);
    ParallelFor(size, threads, [&](unsigned, std::size_t i) {
      RewireConfig local = cfg;
      local.seed = DeriveSeed(cfg.seed, start + i);
      slots[i] = Rewire(g, local);
    });
    for (std::size_t i = 0; i < size; ++i) {
      sink(start + i, std::move(*slots[i]));
      slots[i].reset();
    }
  }
}

}  // namespace radialnet
