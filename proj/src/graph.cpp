#include "cycram/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycram {

Graph::Graph(int order) : order_(order), adj_(static_cast<std::size_t>(order), VertexSet(order)) {
  if (order < 0) throw std::invalid_argument("negative graph order");
}

Graph Graph::from_edges(int order, const std::vector<Edge>& edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (!b.add_edge(u, v)) throw std::invalid_argument("duplicate edge");
  }
  return std::move(b).build();
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (g_.adj_.at(static_cast<std::size_t>(u)).contains(v)) return false;
  g_.adj_[static_cast<std::size_t>(u)].insert(v);
  g_.adj_.at(static_cast<std::size_t>(v)).insert(u);
  ++g_.edges_;
  return true;
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < order_; ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

double Graph::average_degree() const {
  return order_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_) / order_;
}

std::int64_t Graph::edges_within(const VertexSet& s) const {
  std::int64_t twice = 0;
  s.for_each([&](Vertex v) { twice += adj_[static_cast<std::size_t>(v)].intersection_count(s); });
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (Vertex u = 0; u < order_; ++u)
    adj_[static_cast<std::size_t>(u)].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::complement() const {
  Graph c(order_);
  for (Vertex v = 0; v < order_; ++v) {
    VertexSet row = adj_[static_cast<std::size_t>(v)].complement();
    row.erase(v);
    c.adj_[static_cast<std::size_t>(v)] = std::move(row);
  }
  c.edges_ = static_cast<std::int64_t>(order_) * (order_ - 1) / 2 - edges_;
  return c;
}

bool is_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_cycle(const Graph& g, const Cycle& c) {
  if (c.vertices.size() < 3) return false;
  if (!is_path(g, Path{c.vertices})) return false;
  return g.adjacent(c.vertices.back(), c.vertices.front());
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

VertexSet Subgraph::lift(const VertexSet& child_set, int parent_order) const {
  VertexSet out(parent_order);
  child_set.for_each([&](Vertex v) { out.insert(to_parent[static_cast<std::size_t>(v)]); });
  return out;
}

std::vector<Vertex> Subgraph::lift(const std::vector<Vertex>& child) const {
  std::vector<Vertex> out;
  out.reserve(child.size());
  for (Vertex v : child) out.push_back(to_parent.at(static_cast<std::size_t>(v)));
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& a) {
  if (a.universe() != g.order()) throw std::invalid_argument("vertex set universe does not match graph order");
  Subgraph s;
  s.to_parent = a.to_vector();
  s.to_child.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < s.to_parent.size(); ++i) s.to_child[static_cast<std::size_t>(s.to_parent[i])] = static_cast<Vertex>(i);
  GraphBuilder b(static_cast<int>(s.to_parent.size()));
  for (std::size_t i = 0; i < s.to_parent.size(); ++i) {
    (g.neighbors(s.to_parent[i]) & a).for_each([&](Vertex w) {
      Vertex j = s.to_child[static_cast<std::size_t>(w)];
      if (static_cast<Vertex>(i) < j) b.add_edge(static_cast<Vertex>(i), j);
    });
  }
  s.graph = std::move(b).build();
  return s;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& a) {
  VertexSet s(g.order());
  for (Vertex v : a) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    s.insert(v);
  }
  return induced_subgraph(g, s);
}

std::optional<Subgraph> min_degree_subgraph(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  VertexSet alive = g.all_vertices();
  std::vector<int> deg(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  // Always delete the lowest-index qualifying vertex; rescan from the lowest
  // neighbour whose degree dropped.
  Vertex scan = 0;
  while (true) {
    Vertex victim = -1;
    for (Vertex v = alive.next(scan); v != -1; v = alive.next(v + 1))
      if (deg[static_cast<std::size_t>(v)] < k) {
        victim = v;
        break;
      }
    if (victim == -1) break;
    alive.erase(victim);
    scan = victim;
    (g.neighbors(victim) & alive).for_each([&](Vertex w) {
      if (--deg[static_cast<std::size_t>(w)] < k) scan = std::min(scan, w);
    });
  }
  if (alive.empty()) return std::nullopt;
  return induced_subgraph(g, alive);
}

BipartiteHalf bipartite_half(const Graph& g) {
  VertexSet left(g.order());
  // Start from the parity split, then improve by local moves.
  for (Vertex v = 0; v < g.order(); v += 2) left.insert(v);
  bool moved = true;
  while (moved) {
    moved = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      bool on_left = left.contains(v);
      int same = on_left ? g.degree_into(v, left) : g.degree(v) - g.degree_into(v, left);
      int across = g.degree(v) - same;
      if (same > across) {
        if (on_left) left.erase(v);
        else left.insert(v);
        moved = true;
        break;
      }
    }
  }
  BipartiteHalf out{left, left.complement(), Graph(g.order())};
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges())
    if (left.contains(u) != left.contains(v)) b.add_edge(u, v);
  out.crossing = std::move(b).build();
  return out;
}

bool edge_bound_check(const Graph& g, int k) {
  if (k < 0 || k > g.order()) throw std::invalid_argument("k must lie in [0, order]");
  std::int64_t kk = k;
  std::int64_t bound = kk * (kk - 1) / 2 + (static_cast<std::int64_t>(g.order()) - kk) * (kk - 1);
  return g.edge_count() <= bound;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<std::vector<Vertex>> out;
  VertexSet left = within;
  while (!left.empty()) {
    Vertex root = left.first();
    VertexSet comp(g.order());
    comp.insert(root);
    VertexSet frontier = comp;
    left.erase(root);
    while (!frontier.empty()) {
      VertexSet next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next &= left;
      left -= next;
      comp |= next;
      frontier = std::move(next);
    }
    out.push_back(comp.to_vector());
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  return connected_components(g, g.all_vertices());
}

namespace gen {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph star(int leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph complete_bipartite(int a, int c) {
  GraphBuilder b(a + c);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + c; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

Graph perfect_matching(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; v += 2) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph gnp(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) b.add_edge(u, v);
  return std::move(b).build();
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  int total = 0;
  for (const auto& p : parts) total += p.order();
  GraphBuilder b(total);
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) b.add_edge(u + offset, v + offset);
    offset += p.order();
  }
  return std::move(b).build();
}

}  // namespace gen
}  // namespace cycram
