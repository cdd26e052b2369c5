#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

#include "cycram/errors.hpp"
#include "cycram/hubs.hpp"

namespace cycram {

namespace hub_bounds {
int floor_required(int u, double eps) { return static_cast<int>(std::ceil(std::pow(u, 1.0 - eps / 2.0) - 1e-9)); }
int d_cap(int u, double eps) { return static_cast<int>(std::ceil(eps * u - 1e-9)); }
int max_pairs(int u, double eps) { return static_cast<int>(std::floor(std::pow(u, 1.0 - eps) + 1e-9)); }
int length_budget(int u, double eps) { return static_cast<int>(std::floor(2.0 * (1.0 - eps) * u + 1e-9)); }
int parity_matching(int u, double eps) { return static_cast<int>(std::ceil(2.0 * std::pow(u, 1.0 - eps) - 1e-9)); }
}  // namespace hub_bounds

namespace {

int same_side_floor(const Graph& g, const VertexSet& side, const VertexSet& d) {
  auto members = side.to_vector();
  int floor = INT_MAX;
  for (std::size_t i = 0; i < members.size(); ++i) {
    VertexSet ni = g.neighbors(members[i]) & d;
    for (std::size_t j = i + 1; j < members.size(); ++j) floor = std::min(floor, ni.intersection_count(g.neighbors(members[j])));
  }
  return floor;
}

// a_1 .. a_u from `side` in shuffled order; b_i the lowest unused common
// neighbour of a_i and a_{i+1} in `other`.
std::optional<Cycle> greedy_backbone(const Graph& g, const VertexSet& side, const VertexSet& other, int u, Rng& rng) {
  auto pool = side.to_vector();
  if (static_cast<int>(pool.size()) < u || other.count() < u) return std::nullopt;
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[uniform_below(rng, i)]);
  pool.resize(static_cast<std::size_t>(u));
  VertexSet free = other;
  Cycle c;
  for (int i = 0; i < u; ++i) {
    Vertex a = pool[static_cast<std::size_t>(i)];
    Vertex next = pool[static_cast<std::size_t>((i + 1) % u)];
    Vertex b = (g.neighbors(a) & g.neighbors(next) & free).first();
    if (b == -1) return std::nullopt;
    free.erase(b);
    c.vertices.push_back(a);
    c.vertices.push_back(b);
  }
  return c;
}

// Adds the vertex covering the most deficient same-side pairs until every pair
// meets `need` or the cap is reached.
void repair_d(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b, const VertexSet& universe,
              VertexSet& d, int need, int cap) {
  std::vector<Edge> pairs;
  for (const auto* side : {&a, &b})
    for (std::size_t i = 0; i < side->size(); ++i)
      for (std::size_t j = i + 1; j < side->size(); ++j) pairs.emplace_back((*side)[i], (*side)[j]);
  std::vector<int> have(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k)
    have[k] = (g.neighbors(pairs[k].first) & d).intersection_count(g.neighbors(pairs[k].second));
  while (d.count() < cap) {
    Vertex best = -1;
    int best_cover = 0;
    (universe - d).for_each([&](Vertex c) {
      int cover = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        cover += have[k] < need && g.adjacent(c, pairs[k].first) && g.adjacent(c, pairs[k].second);
      if (cover > best_cover) {
        best = c;
        best_cover = cover;
      }
    });
    if (best == -1) return;
    d.insert(best);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      have[k] += g.adjacent(best, pairs[k].first) && g.adjacent(best, pairs[k].second);
  }
}

ConnectionRequest smoke_request(const Hub& hub, Rng& rng) {
  ConnectionRequest req;
  auto ends = (hub.a | hub.b).to_vector();
  for (std::size_t i = ends.size(); i > 1; --i) std::swap(ends[i - 1], ends[uniform_below(rng, i)]);
  int budget = hub_bounds::length_budget(hub.u, hub.eps);
  const int m = std::min(hub_bounds::max_pairs(hub.u, hub.eps), static_cast<int>(ends.size()) / 2);
  for (int i = 0; i < m; ++i) {
    Vertex s = ends[static_cast<std::size_t>(2 * i)], t = ends[static_cast<std::size_t>(2 * i + 1)];
    int len = hub.a.contains(s) == hub.a.contains(t) ? 2 : 3;
    if (len + 1 > budget) break;
    req.pairs.emplace_back(s, t);
    req.lengths.push_back(len);
    budget -= len + 1;
  }
  for (auto& len : req.lengths) {
    int extra = 2 * static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(budget / 2 + 1)));
    len += extra;
    budget -= extra;
  }
  return req;
}

}  // namespace

Hub make_hub(const Graph& g, const Cycle& backbone, const VertexSet& d, int u, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  if (u < 2) throw std::invalid_argument("hub size u must be at least 2");
  if (backbone.length() != 2 * u) throw std::invalid_argument("backbone must have length 2u");
  if (!is_cycle(g, backbone)) throw std::invalid_argument("backbone is not a cycle of the graph");
  if (d.universe() != g.order()) throw std::invalid_argument("D has the wrong universe");
  Hub h;
  h.a = VertexSet(g.order());
  h.b = VertexSet(g.order());
  for (int i = 0; i < 2 * u; ++i) (i % 2 == 0 ? h.a : h.b).insert(backbone.vertices[static_cast<std::size_t>(i)]);
  if (d.intersects(h.a) || d.intersects(h.b)) throw std::invalid_argument("D meets A or B");
  if (d.count() > hub_bounds::d_cap(u, eps))
    throw std::invalid_argument("|D| = " + std::to_string(d.count()) + " exceeds ceil(eps u) = " + std::to_string(hub_bounds::d_cap(u, eps)));
  h.d = d;
  h.u = u;
  h.eps = eps;
  h.backbone = backbone;
  h.common_neighbor_floor = std::min(same_side_floor(g, h.a, d), same_side_floor(g, h.b, d));
  if (h.common_neighbor_floor < hub_bounds::floor_required(u, eps))
    throw std::invalid_argument("same-side common neighbourhood floor " + std::to_string(h.common_neighbor_floor) +
                                " is below ceil(u^(1-eps/2)) = " + std::to_string(hub_bounds::floor_required(u, eps)));
  return h;
}

HubOutcome build_hub(const Graph& g, int u, double eps, std::uint64_t seed, const HubParams& params) {
  return build_hub(g, u, eps, seed, params, g.all_vertices());
}

HubOutcome build_hub(const Graph& g, int u, double eps, std::uint64_t seed, const HubParams& params, const VertexSet& within) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  if (u < 2) throw std::invalid_argument("hub size u must be at least 2");
  const int need = hub_bounds::floor_required(u, eps);
  const int cap = hub_bounds::d_cap(u, eps);
  HubFailure fail{0, -1, need, ""};
  if (need > cap) {
    fail.reason = "ceil(u^(1-eps/2)) = " + std::to_string(need) + " exceeds the |D| cap ceil(eps u) = " + std::to_string(cap);
    return fail;
  }
  Subgraph amb = induced_subgraph(g, within);
  const Graph& h = amb.graph;
  if (h.order() < 2 * u) {
    fail.reason = "ambient block has fewer than 2u vertices";
    return fail;
  }
  BipartiteHalf half = bipartite_half(h);
  const double drc_eps = params.drc_eps > 0.0 ? params.drc_eps : eps / 2.0;
  const double p = eps * u / (2.0 * h.order());
  Rng rng(seed);
  for (int attempt = 1; attempt <= params.retries; ++attempt) {
    fail.attempts = attempt;
    DrcOutcome drc;
    try {
      drc = dependent_random_choice(half.crossing, drc_eps, rng(), params.drc);
    } catch (const GuaranteeUnavailable& e) {
      fail.reason = std::string("dependent random choice unavailable: ") + e.what();
      return fail;
    }
    if (auto* f = std::get_if<DrcFailure>(&drc)) {
      fail.reason = "dependent random choice failed: " + f->reason;
      return fail;
    }
    const auto& r = std::get<DrcResult>(drc);
    std::optional<Cycle> bb = greedy_backbone(half.crossing, r.u1, r.u2, u, rng);
    if (!bb) bb = greedy_backbone(half.crossing, r.u2, r.u1, u, rng);
    if (!bb) {
      fail.reason = "no alternating backbone of length 2u in U_1, U_2";
      continue;
    }
    std::vector<Vertex> a, b;
    for (std::size_t i = 0; i < bb->vertices.size(); ++i) (i % 2 == 0 ? a : b).push_back(bb->vertices[i]);
    VertexSet universe = (r.u1 | r.u2) - VertexSet::of(h.order(), bb->vertices);
    VertexSet d(h.order());
    universe.for_each([&](Vertex v) {
      if (uniform01(rng) < p) d.insert(v);
    });
    if (d.count() > cap) {
      fail.reason = "sampled D exceeds the cap";
      continue;
    }
    repair_d(h, a, b, universe, d, need, cap);
    const int floor = std::min(same_side_floor(h, VertexSet::of(h.order(), a), d), same_side_floor(h, VertexSet::of(h.order(), b), d));
    fail.best_floor = std::max(fail.best_floor, floor);
    if (floor < need) {
      fail.reason = "D could not be repaired to the common neighbourhood floor";
      continue;
    }
    Hub hub = make_hub(g, Cycle{amb.lift(bb->vertices)}, amb.lift(d, g.order()), u, eps);
    bool smoke_ok = true;
    for (int s = 0; s < params.smoke_requests && smoke_ok; ++s) {
      ConnectionRequest req = smoke_request(hub, rng);
      try {
        hub_connect(g, hub, req);
      } catch (const GuaranteeViolated&) {
        smoke_ok = false;
      }
    }
    if (!smoke_ok) {
      fail.reason = "a smoke connection request failed";
      continue;
    }
    return hub;
  }
  return fail;
}

}  // namespace cycram
