#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace radialnet {

// External vertex label, e.g. a (possibly 32-bit) AS number.
using Label = std::uint32_t;
// Dense vertex index in [0, n).
using VertexId = std::uint32_t;

// Unordered pair of external labels, stored with the smaller label first.
struct LabelEdge {
  Label u = 0;
  Label v = 0;

  static LabelEdge Canonical(Label a, Label b) {
    return a <= b ? LabelEdge{a, b} : LabelEdge{b, a};
  }
  bool is_loop() const { return u == v; }

  friend auto operator<=>(const LabelEdge&, const LabelEdge&) = default;
};

// Multiset of canonical label pairs, optionally tagged with the sources each
// edge was seen in (bit s of source_masks[e] set means source s).
struct EdgeSet {
  std::vector<LabelEdge> edges;
  std::vector<std::uint64_t> source_masks;

  void Add(Label a, Label b) { edges.push_back(LabelEdge::Canonical(a, b)); }
  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
  bool has_source_tags() const { return !source_masks.empty(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

struct BuildStats {
  std::size_t dropped_loops = 0;
  std::size_t dropped_duplicates = 0;
};

// Immutable simple undirected graph in compressed adjacency form.
//
// Neighbor lists are strictly increasing, symmetric and loop-free. Dense
// indices follow ascending label order, so labels() is sorted.
class Graph {
 public:
  Graph() = default;

  // Builds from dense-index edges over the given label table. Edges must
  // already be simple (no loops, no duplicates in either orientation).
  static Graph FromDenseEdges(std::vector<Label> labels,
                              std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool HasEdge(VertexId a, VertexId b) const;

  Label label(VertexId v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }
  std::optional<VertexId> IndexOf(Label label) const;

  // Each undirected edge once, as (smaller index, larger index), sorted.
  std::vector<std::pair<VertexId, VertexId>> DenseEdges() const;
  // Each undirected edge once, in external labels, sorted.
  EdgeSet ToEdgeSet() const;

  // Checks every structural invariant; used by tests and debug assertions.
  bool Validate() const;

 private:
  std::vector<std::uint64_t> offsets_{0};
  std::vector<VertexId> neighbors_;
  std::vector<Label> labels_;
};

// Drops self-loops, collapses duplicates and densely re-indexes labels.
// Vertices that only carry self-loops are kept as isolated vertices.
// Throws Error(kEmptyInput) on an empty edge set.
Graph BuildGraph(const EdgeSet& edges, BuildStats* stats = nullptr);

struct ComponentResult {
  Graph graph;
  double retained_fraction = 1.0;
};

// Induced subgraph on the largest connected component. Ties go to the
// component holding the smallest external label.
ComponentResult LargestComponent(const Graph& g);

bool IsConnected(const Graph& g);

// Component id per vertex (ids ordered by first vertex index) and count.
std::pair<std::vector<std::uint32_t>, std::uint32_t> ConnectedComponents(const Graph& g);

// Degrees sorted non-increasing.
std::vector<std::uint32_t> DegreeSequence(const Graph& g);

}  // namespace radialnet
