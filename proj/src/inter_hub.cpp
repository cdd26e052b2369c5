#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "cycram/extremal.hpp"
#include "cycram/stability.hpp"

namespace cycram {

namespace {

bool augment(const Graph& g, Vertex x, const VertexSet& right, std::vector<Vertex>& mate, VertexSet& seen) {
  bool found = false;
  (g.neighbors(x) & right).for_each([&](Vertex y) {
    if (found || seen.contains(y)) return;
    seen.insert(y);
    Vertex other = mate[static_cast<std::size_t>(y)];
    if (other == -1 || augment(g, other, right, mate, seen)) {
      mate[static_cast<std::size_t>(y)] = x;
      found = true;
    }
  });
  return found;
}

Edge ordered(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

std::vector<Edge> max_bipartite_matching(const Graph& g, const VertexSet& left, const VertexSet& right) {
  if (left.intersects(right)) throw std::invalid_argument("matching sides must be disjoint");
  std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
  left.for_each([&](Vertex x) {
    VertexSet seen(g.order());
    augment(g, x, right, mate, seen);
  });
  std::vector<Edge> out;
  right.for_each([&](Vertex y) {
    if (mate[static_cast<std::size_t>(y)] != -1) out.emplace_back(mate[static_cast<std::size_t>(y)], y);
  });
  std::sort(out.begin(), out.end());
  return out;
}

ParityBreak parity_break_all(const Graph& g, std::vector<Hub> hubs) {
  ParityBreak out;
  for (auto& hub : hubs) {
    if (find_parity_matching(g, hub)) out.broken.push_back(std::move(hub));
    else out.exceptions.push_back(std::move(hub));
  }
  return out;
}

std::optional<IndependentSetChain> matching_across_independent_sets(const Graph& g, const std::vector<VertexSet>& sets, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (sets.empty()) throw std::invalid_argument("need at least one set");
  const int s = static_cast<int>(sets.size());
  const int m = sets[0].count();
  VertexSet seen(g.order());
  for (const auto& set : sets) {
    if (set.universe() != g.order()) throw std::invalid_argument("set has the wrong universe");
    if (set.count() != m) throw std::invalid_argument("sets must have equal size");
    if (set.intersects(seen)) throw std::invalid_argument("sets must be disjoint");
    if (!is_independent(g, set)) throw std::invalid_argument("sets must be independent");
    seen |= set;
  }
  if (m < 3 * d) throw std::invalid_argument("set size must be at least 3d");

  VertexSet used(g.order());
  std::map<Edge, Edge> chosen;
  GraphBuilder aux(s);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      Edge pick{-1, -1};
      (sets[static_cast<std::size_t>(i)] - used).for_each([&](Vertex x) {
        if (pick.first != -1) return;
        Vertex y = (g.neighbors(x) & (sets[static_cast<std::size_t>(j)] - used)).first();
        if (y != -1) pick = {x, y};
      });
      if (pick.first == -1) continue;
      used.insert(pick.first);
      used.insert(pick.second);
      chosen[{i, j}] = pick;
      aux.add_edge(i, j);
    }
  std::optional<Path> p = long_path(std::move(aux).build(), d);
  if (!p || p->length() < d) return std::nullopt;
  IndependentSetChain out;
  out.blocks.assign(p->vertices.begin(), p->vertices.begin() + d + 1);
  for (int k = 0; k < d; ++k) {
    int a = out.blocks[static_cast<std::size_t>(k)], b = out.blocks[static_cast<std::size_t>(k + 1)];
    Edge e = chosen.at(ordered(a, b));
    if (a > b) std::swap(e.first, e.second);
    out.matching.push_back(e);
  }
  return out;
}

InterHubGraphs inter_hub_graphs(const Graph& g, const std::vector<Hub>& hubs, int ell, double eps) {
  const int L = static_cast<int>(hubs.size());
  std::vector<int> hub_of(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> verts;
  for (int i = 0; i < L; ++i) {
    verts.push_back(hubs[static_cast<std::size_t>(i)].vertices());
    verts.back().for_each([&](Vertex v) {
      if (hub_of[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("hubs must be disjoint");
      hub_of[static_cast<std::size_t>(v)] = i;
    });
  }
  auto hub = [&](Vertex v) { return hub_of[static_cast<std::size_t>(v)]; };

  std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
  std::set<Edge> pairs_used;
  for (const auto& [x, y] : g.edges()) {
    if (hub(x) == -1 || hub(y) == -1 || hub(x) == hub(y)) continue;
    if (mate[static_cast<std::size_t>(x)] != -1 || mate[static_cast<std::size_t>(y)] != -1) continue;
    if (!pairs_used.insert(ordered(hub(x), hub(y))).second) continue;
    mate[static_cast<std::size_t>(x)] = y;
    mate[static_cast<std::size_t>(y)] = x;
  }
  auto free_partner = [&](Vertex x, Vertex avoid, const std::set<Edge>& taken) -> Vertex {
    Vertex best = -1;
    g.neighbors(x).for_each([&](Vertex z) {
      if (best != -1 || z == avoid || hub(z) == -1 || hub(z) == hub(x) || mate[static_cast<std::size_t>(z)] != -1) return;
      if (!taken.count(ordered(hub(x), hub(z)))) best = z;
    });
    return best;
  };
  for (bool improved = true; improved;) {
    improved = false;
    for (Vertex x = 0; x < g.order() && !improved; ++x) {
      Vertex y = mate[static_cast<std::size_t>(x)];
      if (y == -1 || y < x) continue;
      std::set<Edge> taken = pairs_used;
      taken.erase(ordered(hub(x), hub(y)));
      Vertex x2 = free_partner(x, y, taken);
      if (x2 == -1) continue;
      taken.insert(ordered(hub(x), hub(x2)));
      Vertex y2 = free_partner(y, x2, taken);
      if (y2 == -1) continue;
      taken.insert(ordered(hub(y), hub(y2)));
      pairs_used = std::move(taken);
      mate[static_cast<std::size_t>(x)] = x2;
      mate[static_cast<std::size_t>(x2)] = x;
      mate[static_cast<std::size_t>(y)] = y2;
      mate[static_cast<std::size_t>(y2)] = y;
      improved = true;
    }
  }

  InterHubGraphs out;
  out.degree_cap = std::pow(static_cast<double>(ell), 1.0 - 3.0 * eps) / eps;
  out.matching_need = 2.0 * std::pow(static_cast<double>(ell), eps);
  GraphBuilder h1(L);
  for (Vertex x = 0; x < g.order(); ++x) {
    Vertex y = mate[static_cast<std::size_t>(x)];
    if (y > x) {
      out.cross_matching.emplace_back(x, y);
      h1.add_edge(hub(x), hub(y));
    }
  }
  out.h1 = std::move(h1).build();
  out.high_degree.assign(static_cast<std::size_t>(L), false);
  for (int i = 0; i < L; ++i) out.high_degree[static_cast<std::size_t>(i)] = out.h1.degree(i) > out.degree_cap;
  GraphBuilder h2(L), h3(L);
  for (const auto& [i, j] : out.h1.edges()) {
    if (out.high_degree[static_cast<std::size_t>(i)] || out.high_degree[static_cast<std::size_t>(j)]) continue;
    h2.add_edge(i, j);
    auto m = max_bipartite_matching(g, verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]);
    if (static_cast<double>(m.size()) >= out.matching_need) h3.add_edge(i, j);
    out.pair_matchings[{i, j}] = std::move(m);
  }
  out.h2 = std::move(h2).build();
  out.h3 = std::move(h3).build();
  return out;
}

}  // namespace cycram
