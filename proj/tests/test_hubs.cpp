#include <doctest.h>

#include <algorithm>
#include <climits>
#include <cmath>

#include "brute.hpp"
#include "cycram/errors.hpp"
#include "cycram/hubs.hpp"

using namespace cycram;

namespace {

Graph with_edges(const Graph& g, const std::vector<Edge>& extra) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : extra) b.add_edge(u, v);
  return std::move(b).build();
}

// Hub invariants recomputed from scratch.
void check_hub(const Graph& g, const Hub& h) {
  CHECK(h.a.count() == h.u);
  CHECK(h.b.count() == h.u);
  CHECK(h.d.count() <= static_cast<int>(std::ceil(h.eps * h.u - 1e-9)));
  CHECK_FALSE(h.a.intersects(h.b));
  CHECK_FALSE(h.a.intersects(h.d));
  CHECK_FALSE(h.b.intersects(h.d));
  REQUIRE(h.backbone.length() == 2 * h.u);
  CHECK(is_cycle(g, h.backbone));
  for (int i = 0; i < 2 * h.u; ++i) CHECK((i % 2 == 0 ? h.a : h.b).contains(h.backbone.vertices[static_cast<std::size_t>(i)]));
  int floor = INT_MAX;
  for (const auto* side : {&h.a, &h.b}) {
    auto vs = side->to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        int c = 0;
        h.d.for_each([&](Vertex x) { c += brute::adjacent(g, x, vs[i]) && brute::adjacent(g, x, vs[j]); });
        floor = std::min(floor, c);
      }
  }
  CHECK(floor == h.common_neighbor_floor);
  CHECK(floor >= static_cast<int>(std::ceil(std::pow(h.u, 1.0 - h.eps / 2.0) - 1e-9)));
}

void check_paths(const Graph& g, const Hub& h, const ConnectionRequest& req, const std::vector<Path>& paths) {
  REQUIRE(paths.size() == req.pairs.size());
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    CHECK(p.vertices.front() == req.pairs[i].first);
    CHECK(p.vertices.back() == req.pairs[i].second);
    CHECK(p.length() == req.lengths[i]);
    for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) CHECK(brute::adjacent(g, p.vertices[j], p.vertices[j + 1]));
    for (Vertex v : p.vertices) {
      CHECK((h.a.contains(v) || h.b.contains(v) || h.d.contains(v)));
      CHECK_FALSE(seen.contains(v));
      seen.insert(v);
    }
  }
}

const Graph& kbip() {
  static const Graph g = gen::complete_bipartite(240, 240);
  return g;
}

const Hub& kbip_hub() {
  static const Hub h = std::get<Hub>(build_hub(kbip(), 60, 0.7, 5));
  return h;
}

// Hand-made hub on K_{24,24}: A = 0..15, B = 24..39, D = 16..21 and 40..45.
Hub small_hub(const Graph& g) {
  Cycle c;
  for (int i = 0; i < 16; ++i) {
    c.vertices.push_back(i);
    c.vertices.push_back(24 + i);
  }
  VertexSet d(g.order());
  for (int i = 0; i < 6; ++i) {
    d.insert(16 + i);
    d.insert(40 + i);
  }
  return make_hub(g, c, d, 16, 0.8);
}

}  // namespace

TEST_CASE("hub bounds") {
  CHECK(hub_bounds::floor_required(60, 0.7) == 15);
  CHECK(hub_bounds::d_cap(60, 0.7) == 42);
  CHECK(hub_bounds::max_pairs(60, 0.7) == 3);
  CHECK(hub_bounds::length_budget(60, 0.7) == 36);
  CHECK(hub_bounds::parity_matching(60, 0.7) == 7);
  CHECK(hub_bounds::floor_required(20, 0.4) == 11);
  CHECK(hub_bounds::d_cap(20, 0.4) == 8);
}

TEST_CASE("make_hub and bipartite_length_ok") {
  Graph g = gen::complete_bipartite(24, 24);
  Hub h = small_hub(g);
  check_hub(g, h);
  CHECK(bipartite_length_ok(h, 0, 1, 4));
  CHECK_FALSE(bipartite_length_ok(h, 0, 24, 4));
  CHECK(bipartite_length_ok(h, 0, 24, 7));
  CHECK_THROWS_AS(bipartite_length_ok(h, 0, 16, 4), std::invalid_argument);

  Cycle bad = h.backbone;
  std::swap(bad.vertices[0], bad.vertices[1]);
  CHECK_THROWS_AS(make_hub(g, bad, h.d, 16, 0.8), std::invalid_argument);
  VertexSet thin = h.d;
  thin.erase(40);
  CHECK_THROWS_AS(make_hub(g, h.backbone, thin, 16, 0.8), std::invalid_argument);
}

TEST_CASE("build_hub") {
  const Hub& h = kbip_hub();
  check_hub(kbip(), h);
  CHECK(h.common_neighbor_floor >= 15);

  auto again = build_hub(kbip(), 60, 0.7, 5);
  REQUIRE(std::holds_alternative<Hub>(again));
  CHECK(std::get<Hub>(again) == h);

  auto sparse = build_hub(gen::cycle(200), 10, 0.7, 1);
  REQUIRE(std::holds_alternative<HubFailure>(sparse));
  CHECK_FALSE(std::get<HubFailure>(sparse).reason.empty());

  // 11 common neighbours per pair cannot come from at most 8 vertices of D.
  auto tight = build_hub(gen::gnp(400, 0.6, 8), 20, 0.4, 2);
  REQUIRE(std::holds_alternative<HubFailure>(tight));
  CHECK(std::get<HubFailure>(tight).required_floor == 11);

  Graph dense = gen::gnp(400, 0.9, 8);
  auto ok = build_hub(dense, 20, 0.8, 2);
  REQUIRE(std::holds_alternative<Hub>(ok));
  check_hub(dense, std::get<Hub>(ok));
}

TEST_CASE("hub_connect") {
  const Graph& g = kbip();
  const Hub& h = kbip_hub();
  auto a = h.a.to_vector(), b = h.b.to_vector();

  ConnectionRequest two{{{a[0], a[1]}}, {2}};
  auto p2 = hub_connect(g, h, two);
  check_paths(g, h, two, p2);
  CHECK(h.d.contains(p2[0].vertices[1]));

  ConnectionRequest three{{{a[0], b[0]}}, {3}};
  auto p3 = hub_connect(g, h, three);
  check_paths(g, h, three, p3);
  CHECK(h.d.contains(p3[0].vertices[1]));
  CHECK(h.d.contains(p3[0].vertices[2]));

  ConnectionRequest mixed{{{a[0], a[1]}, {a[2], a[3]}, {a[4], b[0]}}, {4, 6, 5}};
  check_paths(g, h, mixed, hub_connect(g, h, mixed));

  ConnectionRequest full{{{b[5], b[6]}}, {34}};
  check_paths(g, h, full, hub_connect(g, h, full));

  CHECK_THROWS_AS(hub_connect(g, h, {{{a[0], b[0]}}, {4}}), std::invalid_argument);
  CHECK_THROWS_AS(hub_connect(g, h, {{{a[0], a[1]}}, {36}}), std::invalid_argument);
  CHECK_THROWS_AS(hub_connect(g, h, {{{a[0], a[1]}, {a[2], a[3]}, {a[4], a[5]}, {a[6], a[7]}}, {2, 2, 2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(hub_connect(g, h, {{{a[0], a[1]}, {a[1], a[2]}}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("hub_connect satisfies random valid requests") {
  const Graph& g = kbip();
  const Hub& h = kbip_hub();
  brute::GraphGen gen(501);
  auto ends = (h.a | h.b).to_vector();
  for (int t = 0; t < 300; ++t) {
    auto perm = gen.permutation(static_cast<int>(ends.size()));
    int m = gen.uniform(1, 3);
    ConnectionRequest req;
    int budget = 36;
    for (int i = 0; i < m; ++i) {
      Vertex s = ends[static_cast<std::size_t>(perm[static_cast<std::size_t>(2 * i)])];
      Vertex e = ends[static_cast<std::size_t>(perm[static_cast<std::size_t>(2 * i + 1)])];
      int len = h.a.contains(s) == h.a.contains(e) ? 2 : 3;
      req.pairs.push_back({s, e});
      req.lengths.push_back(len);
      budget -= len + 1;
    }
    for (auto& len : req.lengths) {
      int extra = 2 * gen.uniform(0, std::max(0, budget / 2));
      len += extra;
      budget -= extra;
    }
    check_paths(g, h, req, hub_connect(g, h, req));
  }
}

TEST_CASE("find_parity_matching") {
  Graph base = gen::complete_bipartite(24, 24);
  Hub indep = small_hub(base);
  CHECK_FALSE(find_parity_matching(base, indep));
  CHECK_FALSE(indep.parity_broken());

  Graph four = with_edges(base, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  Hub exact = small_hub(four);
  auto m = find_parity_matching(four, exact);
  REQUIRE(m);
  CHECK(m->size() == 4);
  CHECK(hub_bounds::parity_matching(16, 0.8) == 4);
  CHECK(exact.parity_broken());

  Graph three = with_edges(base, {{0, 1}, {2, 3}, {4, 5}});
  Hub short_hub = small_hub(three);
  CHECK_FALSE(find_parity_matching(three, short_hub));

  std::vector<Edge> clique;
  for (int i = 0; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j) clique.push_back({i, j});
  Graph full = with_edges(base, clique);
  Hub ch = small_hub(full);
  auto big = find_parity_matching(full, ch);
  REQUIRE(big);
  CHECK(big->size() == 8);
}

TEST_CASE("hub_connect_parity_broken") {
  const Hub& h0 = kbip_hub();
  auto a = h0.a.to_vector(), b = h0.b.to_vector();
  std::vector<Edge> matching;
  for (std::size_t i = 10; i < 26; i += 2) matching.push_back({a[i], a[i + 1]});
  Graph g = with_edges(kbip(), matching);
  Hub h = make_hub(g, h0.backbone, h0.d, 60, 0.7);
  CHECK_THROWS_AS(hub_connect_parity_broken(g, h, {{{a[0], a[1]}}, {7}}), std::invalid_argument);
  REQUIRE(find_parity_matching(g, h));

  ConnectionRequest odd{{{a[0], a[1]}}, {7}};
  auto p = hub_connect_parity_broken(g, h, odd);
  check_paths(g, h, odd, p);

  ConnectionRequest even{{{a[0], b[0]}}, {8}};
  check_paths(g, h, even, hub_connect_parity_broken(g, h, even));

  ConnectionRequest mixed{{{a[0], a[1]}, {a[2], b[0]}, {b[1], b[2]}}, {9, 10, 6}};
  check_paths(g, h, mixed, hub_connect_parity_broken(g, h, mixed));

  CHECK_THROWS_AS(hub_connect_parity_broken(g, h, {{{a[0], a[1]}}, {5}}), std::invalid_argument);
}

TEST_CASE("cycle_from_handles") {
  const Hub& h0 = kbip_hub();
  auto a = h0.a.to_vector();
  Graph g1 = with_edges(kbip(), {{a[0], a[1]}});
  Hub h1 = make_hub(g1, h0.backbone, h0.d, 60, 0.7);
  HandleSystem one{{&h1}, {Path{{a[0], a[1]}}}};
  Cycle tri = cycle_from_handles(g1, one, 3);
  CHECK(tri.length() == 3);
  CHECK(is_cycle(g1, tri));
  Cycle longest = cycle_from_handles(g1, one, 35);
  CHECK(longest.length() == 35);
  CHECK(is_cycle(g1, longest));
  CHECK_THROWS_AS(cycle_from_handles(g1, one, 37), std::invalid_argument);
  CHECK_THROWS_AS(cycle_from_handles(g1, one, 4), std::invalid_argument);

  Graph two_blocks = gen::disjoint_union({kbip(), kbip()});
  VertexSet left(960), right(960);
  for (int v = 0; v < 480; ++v) {
    left.insert(v);
    right.insert(480 + v);
  }
  Hub p = std::get<Hub>(build_hub(two_blocks, 60, 0.7, 11, {}, left));
  Hub q = std::get<Hub>(build_hub(two_blocks, 60, 0.7, 12, {}, right));
  auto pa = p.a.to_vector(), qa = q.a.to_vector();
  Graph g = with_edges(two_blocks, {{pa[0], qa[0]}, {qa[1], pa[1]}});
  Hub hp = make_hub(g, p.backbone, p.d, 60, 0.7);
  Hub hq = make_hub(g, q.backbone, q.d, 60, 0.7);
  HandleSystem hs{{&hp, &hq}, {Path{{pa[0], qa[0]}}, Path{{qa[1], pa[1]}}}};
  for (int ell : {6, 40, 70}) {
    Cycle c = cycle_from_handles(g, hs, ell);
    CHECK(c.length() == ell);
    CHECK(is_cycle(g, c));
  }
  CHECK_THROWS_AS(cycle_from_handles(g, hs, 72), std::invalid_argument);
  CHECK_THROWS_AS(cycle_from_handles(g, hs, 41), std::invalid_argument);
  CHECK_THROWS_AS(cycle_from_handles(g, hs, 4), std::invalid_argument);
}

TEST_CASE("hub_partition") {
  HubPartition empty = hub_partition(gen::empty(30), 100, 0.7, 1);
  CHECK(empty.hubs.empty());
  CHECK(empty.leftover.size() == 30);

  // u = floor(850000^0.3) = 60.
  Graph blocks = gen::disjoint_union({kbip(), kbip()});
  HubPartition hp = hub_partition(blocks, 850000, 0.7, 3);
  CHECK(hp.u == 60);
  REQUIRE(hp.hubs.size() >= 2);
  VertexSet seen(960);
  for (const auto& h : hp.hubs) {
    check_hub(blocks, h);
    auto vs = h.vertices().to_vector();
    CHECK(vs.front() / 480 == vs.back() / 480);
    CHECK_FALSE(seen.intersects(h.vertices()));
    seen |= h.vertices();
  }
  for (Vertex v : hp.leftover) {
    CHECK_FALSE(seen.contains(v));
    seen.insert(v);
  }
  CHECK(seen.count() == 960);
  CHECK(hp.guarantee_met);

  Graph ch = gen::disjoint_union({gen::complete(99), gen::complete(99), gen::complete(99)});
  HubPartition cp = hub_partition(ch, 100, 0.7, 4);
  CHECK(cp.u == 3);
  REQUIRE_FALSE(cp.hubs.empty());
  for (const auto& h : cp.hubs) {
    check_hub(ch, h);
    auto vs = h.vertices().to_vector();
    CHECK(vs.front() / 99 == vs.back() / 99);
  }
  CHECK(cp.guarantee_met);
}
