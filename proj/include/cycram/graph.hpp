#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cycram/vertex_set.hpp"

namespace cycram {

using Edge = std::pair<Vertex, Vertex>;
using Rng = std::mt19937_64;

/// Simple undirected graph on [0, order). Immutable once built; adjacency rows are
/// bitsets so degree and neighbourhood-intersection queries run in O(order / 64).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
  static Graph from_edges(int order, const std::vector<Edge>& edges);

  int order() const { return order_; }
  std::int64_t edge_count() const { return edges_; }
  int degree(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)).count(); }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }

  int min_degree() const;
  int max_degree() const;
  /// 2e/v, and 0 for the empty vertex set.
  double average_degree() const;
  int common_neighbor_count(Vertex a, Vertex b) const {
    return adj_[static_cast<std::size_t>(a)].intersection_count(adj_[static_cast<std::size_t>(b)]);
  }
  /// |N(v) ∩ s|
  int degree_into(Vertex v, const VertexSet& s) const { return neighbors(v).intersection_count(s); }
  /// Number of edges with both ends in s.
  std::int64_t edges_within(const VertexSet& s) const;

  /// Sorted (u < v, lexicographic).
  std::vector<Edge> edges() const;
  Graph complement() const;
  VertexSet all_vertices() const { return VertexSet::full(order_); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  int order_ = 0;
  std::int64_t edges_ = 0;
  std::vector<VertexSet> adj_;
};

/// Mutable accumulator that freezes into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order) : g_(order) {}
  /// Returns false (and does nothing) if the edge is already present.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  int order() const { return g_.order(); }
  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  Graph g_;
};

/// Complete graph K_N whose red edges are `red`; blue is the complement.
struct EdgeColoring {
  Graph red;
  int order() const { return red.order(); }
  Graph blue() const { return red.complement(); }
};

struct Path {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const Path&) const = default;
};

struct Cycle {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const Cycle&) const = default;
};

bool is_path(const Graph& g, const Path& p);
bool is_cycle(const Graph& g, const Cycle& c);
bool is_independent(const Graph& g, const VertexSet& s);

/// Induced subgraph plus the relabelling in both directions.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // child vertex -> parent vertex
  std::vector<Vertex> to_child;   // parent vertex -> child vertex or -1

  VertexSet lift(const VertexSet& child_set, int parent_order) const;
  std::vector<Vertex> lift(const std::vector<Vertex>& child) const;
};

/// G[a]. Child vertices are numbered in increasing parent order.
Subgraph induced_subgraph(const Graph& g, const VertexSet& a);
Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& a);

/// k-core by repeated deletion of the lowest-index vertex of degree < k.
/// Returns std::nullopt when the core is empty.
std::optional<Subgraph> min_degree_subgraph(const Graph& g, int k);

struct BipartiteHalf {
  VertexSet left;
  VertexSet right;
  Graph crossing;  // same vertex set as the input, only crossing edges kept
  std::int64_t cut() const { return crossing.edge_count(); }
};

/// Local-move max-cut: a vertex with more neighbours on its own side than across
/// switches sides, lowest index first, until a fixpoint. Keeps >= e(g)/2 edges.
BipartiteHalf bipartite_half(const Graph& g);

/// e(g) <= C(k,2) + (order - k)(k - 1)
bool edge_bound_check(const Graph& g, int k);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g, const VertexSet& within);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Uniform double in [0,1) from a 64-bit engine, identical across standard libraries.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
/// Uniform integer in [0, n), n > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) { return static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(n)) % n; }

namespace gen {
Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);  // centre 0
Graph complete_bipartite(int a, int b);  // left side [0,a)
Graph petersen();  // outer rim 0..4, spokes i -- i+5, inner pentagram
Graph perfect_matching(int n);
Graph gnp(int n, double p, std::uint64_t seed);
Graph disjoint_union(const std::vector<Graph>& parts);
}  // namespace gen

}  // namespace cycram
