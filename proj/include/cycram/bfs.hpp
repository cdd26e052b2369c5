#pragma once

#include <memory>
#include <vector>

#include "cycram/graph.hpp"

namespace cycram {

/// ceil(log_γ x) - 1e-9 guarded; the single rounding rule for every log_γ bound.
int ceil_log(double x, double gamma);
/// log_γ x as a real.
double log_base(double x, double gamma);

/// Breadth-first layers V_0 = {root}, V_{i+1} = N(V_i) minus earlier layers. Each
/// vertex's parent is its lowest-index neighbour in the previous layer.
struct BfsLayers {
  Vertex root = -1;
  std::vector<std::vector<Vertex>> layers;
  std::vector<Vertex> parent;  // -1 for the root and unreached vertices
  std::vector<int> depth;      // -1 for unreached vertices

  bool reached(Vertex v) const { return depth[static_cast<std::size_t>(v)] >= 0; }
  /// v, parent(v), ..., root.
  std::vector<Vertex> path_to_root(Vertex v) const;
  /// The unique x-y path in the tree.
  std::vector<Vertex> tree_path(Vertex x, Vertex y) const;
  /// |V_0 ∪ ... ∪ V_m| (0 for m < 0; the whole tree for m beyond the last layer).
  int cumulative(int m) const;
};

/// BFS in g (or in g[within]) from root. Throws std::invalid_argument when the
/// root is out of range or outside `within`.
BfsLayers bfs_layers(const Graph& g, Vertex root);
BfsLayers bfs_layers(const Graph& g, Vertex root, const VertexSet& within);

/// Minimal m >= 0 with |V_0..V_{m+1}| <= γ |V_0..V_m|; always m <= log_γ(order).
int growth_cutoff(const BfsLayers& layers, double gamma);

struct CycleRange {
  int lo = 0;
  int hi = 0;
};
/// [d1, d1 + ceil(2 log_γ order)]
CycleRange cycle_length_window(int order, int d1, double gamma);

/// A cycle with length in cycle_length_window(order, d1, γ). Requires
/// d(g) >= 16 γ d1 and d1 >= 2 (GuaranteeUnavailable otherwise); throws
/// GuaranteeViolated if every layer pair fails.
Cycle cycle_in_range(const Graph& g, int d1, double gamma);

struct DecompTriple {
  Vertex root = -1;
  std::vector<Vertex> members;  // X_i
  std::shared_ptr<const BfsLayers> tree;
  int depth = 0;  // d_i
};

/// Recursive parity-layer decomposition: disjoint, mutually non-adjacent X_i,
/// each at a fixed tree distance d_i <= log_γ(order) from its root, covering at
/// least order / 2γ vertices.
std::vector<DecompTriple> triple_decomposition(const Graph& g, double gamma);
std::vector<DecompTriple> triple_decomposition(const Graph& g, double gamma, const VertexSet& within);

}  // namespace cycram
