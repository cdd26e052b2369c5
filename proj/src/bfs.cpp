#include "cycram/bfs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cycram/errors.hpp"
#include "cycram/extremal.hpp"

namespace cycram {

double log_base(double x, double gamma) { return std::log2(x) / std::log2(gamma); }

int ceil_log(double x, double gamma) {
  if (x <= 1.0) return 0;
  return static_cast<int>(std::ceil(log_base(x, gamma) - 1e-9));
}

std::vector<Vertex> BfsLayers::path_to_root(Vertex v) const {
  if (!reached(v)) throw std::invalid_argument("vertex not in the BFS tree");
  std::vector<Vertex> out{v};
  while (parent[static_cast<std::size_t>(out.back())] != -1) out.push_back(parent[static_cast<std::size_t>(out.back())]);
  return out;
}

std::vector<Vertex> BfsLayers::tree_path(Vertex x, Vertex y) const {
  auto px = path_to_root(x);
  auto py = path_to_root(y);
  // Strip the common tail (shared ancestors) but keep the lowest common one.
  while (px.size() >= 2 && py.size() >= 2 && px[px.size() - 2] == py[py.size() - 2]) {
    px.pop_back();
    py.pop_back();
  }
  py.pop_back();
  std::reverse(py.begin(), py.end());
  px.insert(px.end(), py.begin(), py.end());
  return px;
}

int BfsLayers::cumulative(int m) const {
  int total = 0;
  for (int i = 0; i <= m && i < static_cast<int>(layers.size()); ++i) total += static_cast<int>(layers[static_cast<std::size_t>(i)].size());
  return total;
}

BfsLayers bfs_layers(const Graph& g, Vertex root, const VertexSet& within) {
  if (root < 0 || root >= g.order() || !within.contains(root)) throw std::invalid_argument("BFS root out of range");
  BfsLayers out;
  out.root = root;
  out.parent.assign(static_cast<std::size_t>(g.order()), -1);
  out.depth.assign(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen(g.order());
  seen.insert(root);
  out.depth[static_cast<std::size_t>(root)] = 0;
  out.layers.push_back({root});
  while (true) {
    VertexSet next(g.order());
    for (Vertex v : out.layers.back()) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    if (next.empty()) break;
    seen |= next;
    const int d = static_cast<int>(out.layers.size());
    VertexSet prev = VertexSet::of(g.order(), out.layers.back());
    next.for_each([&](Vertex v) {
      out.parent[static_cast<std::size_t>(v)] = (g.neighbors(v) & prev).first();
      out.depth[static_cast<std::size_t>(v)] = d;
    });
    out.layers.push_back(next.to_vector());
  }
  return out;
}

BfsLayers bfs_layers(const Graph& g, Vertex root) { return bfs_layers(g, root, g.all_vertices()); }

int growth_cutoff(const BfsLayers& layers, double gamma) {
  if (!(gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
  for (int m = 0;; ++m)
    if (layers.cumulative(m + 1) <= gamma * layers.cumulative(m)) return m;
}

CycleRange cycle_length_window(int order, int d1, double gamma) {
  return {d1, d1 + static_cast<int>(std::ceil(2.0 * log_base(std::max(order, 1), gamma) - 1e-9))};
}

Cycle cycle_in_range(const Graph& g, int d1, double gamma) {
  if (!(gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
  if (d1 < 2) throw std::invalid_argument("d1 must be at least 2");
  if (g.average_degree() < 16.0 * gamma * d1)
    throw GuaranteeUnavailable("d(G) >= 16 gamma d1", "average degree " + std::to_string(g.average_degree()) +
                                                         " is below 16 gamma d1 = " + std::to_string(16.0 * gamma * d1));
  BipartiteHalf half = bipartite_half(g);
  const int k = static_cast<int>(std::ceil(half.crossing.average_degree() / 2.0 - 1e-9));
  auto core = min_degree_subgraph(half.crossing, k);
  if (!core) throw GuaranteeViolated("empty half-degree core of the bipartite half");
  const Graph& h = core->graph;
  // Even window length p in [d1 - 2, d1], at least 2; the tree adds >= 2.
  const int p = std::max(2, d1 % 2 == 0 ? d1 : d1 - 1);

  for (const auto& comp : connected_components(h)) {
    BfsLayers tree = bfs_layers(h, comp.front());
    const int m = growth_cutoff(tree, gamma);
    for (int i = 0; i <= m && i + 1 < static_cast<int>(tree.layers.size()); ++i) {
      std::vector<Vertex> pair = tree.layers[static_cast<std::size_t>(i)];
      pair.insert(pair.end(), tree.layers[static_cast<std::size_t>(i) + 1].begin(), tree.layers[static_cast<std::size_t>(i) + 1].end());
      Subgraph layer_pair = induced_subgraph(h, pair);
      std::optional<Path> path;
      try {
        path = long_path(layer_pair.graph, p + 1);
      } catch (const GuaranteeViolated&) {
      }
      if (!path) continue;
      std::vector<Vertex> pv = layer_pair.lift(path->vertices);
      std::size_t s = tree.depth[static_cast<std::size_t>(pv[0])] == i ? 0 : 1;
      std::vector<Vertex> window(pv.begin() + static_cast<std::ptrdiff_t>(s), pv.begin() + static_cast<std::ptrdiff_t>(s) + p + 1);
      // Tree path y -> x through the common ancestor, minus the endpoints.
      std::vector<Vertex> back = tree.tree_path(window.back(), window.front());
      Cycle c;
      for (Vertex v : window) c.vertices.push_back(core->to_parent[static_cast<std::size_t>(v)]);
      for (std::size_t j = 1; j + 1 < back.size(); ++j) c.vertices.push_back(core->to_parent[static_cast<std::size_t>(back[j])]);
      return c;
    }
  }
  throw GuaranteeViolated("no layer pair yielded a path of length " + std::to_string(p + 1));
}

std::vector<DecompTriple> triple_decomposition(const Graph& g, double gamma, const VertexSet& within) {
  if (!(gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
  std::vector<DecompTriple> out;
  VertexSet w = within;
  while (!w.empty()) {
    auto tree = std::make_shared<const BfsLayers>(bfs_layers(g, w.first(), w));
    const int m = growth_cutoff(*tree, gamma);
    const int last = std::min(m, static_cast<int>(tree->layers.size()) - 1);
    int even = 0, odd = 0;
    for (int j = 0; j <= last; ++j) (j % 2 == 0 ? even : odd) += static_cast<int>(tree->layers[static_cast<std::size_t>(j)].size());
    const int parity = odd > even ? 1 : 0;
    VertexSet x(g.order());
    for (int j = parity; j <= last; j += 2) {
      const auto& layer = tree->layers[static_cast<std::size_t>(j)];
      out.push_back({tree->root, layer, tree, j});
      for (Vertex v : layer) x.insert(v);
    }
    VertexSet closed = x;
    x.for_each([&](Vertex v) { closed |= g.neighbors(v); });
    w -= closed;
  }
  return out;
}

std::vector<DecompTriple> triple_decomposition(const Graph& g, double gamma) {
  return triple_decomposition(g, gamma, g.all_vertices());
}

}  // namespace cycram
