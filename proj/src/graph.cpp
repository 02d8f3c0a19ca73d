#include "radialnet/graph.hpp"

#include <algorithm>
#include <numeric>

#include "radialnet/error.hpp"

namespace radialnet {

Graph Graph::FromDenseEdges(std::vector<Label> labels,
                            std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g;
  const std::size_t n = labels.size();
  g.labels_ = std::move(labels);
  g.offsets_.assign(n + 1, 0);
  for (const auto& [a, b] : edges) {
    ++g.offsets_[a + 1];
    ++g.offsets_[b + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.neighbors_.resize(2 * edges.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    g.neighbors_[cursor[a]++] = b;
    g.neighbors_[cursor[b]++] = a;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

bool Graph::HasEdge(VertexId a, VertexId b) const {
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<VertexId> Graph::IndexOf(Label label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::vector<std::pair<VertexId, VertexId>> Graph::DenseEdges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(num_edges());
  for (VertexId v = 0; v < num_vertices(); ++v) {
    for (VertexId w : neighbors(v)) {
      if (w > v) out.emplace_back(v, w);
    }
  }
  return out;
}

EdgeSet Graph::ToEdgeSet() const {
  EdgeSet out;
  out.edges.reserve(num_edges());
  for (const auto& [a, b] : DenseEdges()) out.Add(labels_[a], labels_[b]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool Graph::Validate() const {
  const std::size_t n = num_vertices();
  if (offsets_.size() != n + 1 || offsets_.back() != neighbors_.size()) return false;
  if (neighbors_.size() % 2 != 0) return false;
  if (!std::is_sorted(labels_.begin(), labels_.end())) return false;
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) return false;
  for (VertexId v = 0; v < n; ++v) {
    auto nb = neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n || nb[i] == v) return false;
      if (i > 0 && nb[i - 1] >= nb[i]) return false;
      auto back = neighbors(nb[i]);
      if (!std::binary_search(back.begin(), back.end(), v)) return false;
    }
  }
  return true;
}

Graph BuildGraph(const EdgeSet& edges, BuildStats* stats) {
  if (edges.empty()) throw Error(ErrorCode::kEmptyInput, "edge set is empty");

  std::vector<Label> labels;
  labels.reserve(2 * edges.size());
  std::vector<LabelEdge> clean;
  clean.reserve(edges.size());
  std::size_t loops = 0;
  for (const LabelEdge& e : edges.edges) {
    const LabelEdge c = LabelEdge::Canonical(e.u, e.v);
    labels.push_back(c.u);
    labels.push_back(c.v);
    if (c.is_loop()) {
      ++loops;
    } else {
      clean.push_back(c);
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::sort(clean.begin(), clean.end());
  const std::size_t before = clean.size();
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());

  if (stats != nullptr) {
    stats->dropped_loops = loops;
    stats->dropped_duplicates = before - clean.size();
  }

  auto index = [&](Label l) {
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), l) -
                                 labels.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> dense;
  dense.reserve(clean.size());
  for (const LabelEdge& e : clean) dense.emplace_back(index(e.u), index(e.v));
  return Graph::FromDenseEdges(std::move(labels), dense);
}

std::pair<std::vector<std::uint32_t>, std::uint32_t> ConnectedComponents(const Graph& g) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> comp(n, kUnset);
  std::vector<VertexId> queue;
  queue.reserve(n);
  std::uint32_t count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    queue.clear();
    queue.push_back(s);
    comp[s] = count;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (comp[w] == kUnset) {
          comp[w] = count;
          queue.push_back(w);
        }
      }
    }
    ++count;
  }
  return {std::move(comp), count};
}

bool IsConnected(const Graph& g) {
  return g.num_vertices() > 0 && ConnectedComponents(g).second == 1;
}

ComponentResult LargestComponent(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return {g, 1.0};
  auto [comp, count] = ConnectedComponents(g);
  if (count == 1) return {g, 1.0};

  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  // Components are numbered by their first vertex index, and indices follow
  // label order, so the lowest id among equal sizes holds the smallest label.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  std::vector<VertexId> remap(n, 0);
  std::vector<Label> labels;
  labels.reserve(sizes[best]);
  for (VertexId v = 0; v < n; ++v) {
    if (comp[v] == best) {
      remap[v] = static_cast<VertexId>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [a, b] : g.DenseEdges()) {
    if (comp[a] == best) edges.emplace_back(remap[a], remap[b]);
  }
  const double fraction = static_cast<double>(labels.size()) / static_cast<double>(n);
  return {Graph::FromDenseEdges(std::move(labels), edges), fraction};
}

std::vector<std::uint32_t> DegreeSequence(const Graph& g) {
  std::vector<std::uint32_t> out(g.num_vertices());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace radialnet
