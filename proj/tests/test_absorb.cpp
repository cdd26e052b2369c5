#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "cycram/absorb.hpp"
#include "cycram/errors.hpp"
#include "cycram/search.hpp"

using namespace cycram;

namespace {

Graph with_edges(const Graph& g, const std::vector<Edge>& extra) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : extra) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<Vertex> range(int lo, int hi) {
  std::vector<Vertex> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

// K_9 on 0..8 plus the path 9-10-11 attached to 0 (at 9) and 1 (at 11).
struct Absorbed {
  Graph g;
  BlockState b;
  Absorbed() {
    GraphBuilder gb(12);
    for (auto [u, v] : gen::complete(9).edges()) gb.add_edge(u, v);
    gb.add_edge(9, 10);
    gb.add_edge(10, 11);
    gb.add_edge(9, 0);
    gb.add_edge(11, 1);
    g = std::move(gb).build();
    b = make_block(g, range(0, 9));
    b.paths.push_back({Path{{9, 10, 11}}, 0, 1});
    b.available.erase(0);
    b.available.erase(1);
  }
};

bool path_ok(const Graph& g, const Path& p, Vertex x, Vertex y, int len, const VertexSet& w) {
  if (!is_path(g, p) || p.length() != len || p.vertices.front() != x || p.vertices.back() != y) return false;
  for (Vertex v : p.vertices)
    if (!w.contains(v)) return false;
  return true;
}

EdgeColoring random_coloring(int order, std::uint64_t seed) {
  brute::GraphGen gen(seed);
  GraphBuilder b(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (gen.unit() < 0.5) b.add_edge(u, v);
  return {std::move(b).build()};
}

}  // namespace

TEST_CASE("block_path") {
  SUBCASE("complete block") {
    Graph g = gen::complete(10);
    BlockState b = make_block(g, range(0, 10));
    Path p = block_path(g, b, 0, 9, 6);
    CHECK(path_ok(g, p, 0, 9, 6, b.whole()));
    Path q = block_path(g, b, 3, 4, 2);
    CHECK(path_ok(g, q, 3, 4, 2, b.whole()));
    CHECK_THROWS_AS(block_path(g, b, 3, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(block_path(g, b, 3, 4, 7), std::invalid_argument);
    CHECK_THROWS_AS(block_path(g, b, 3, 3, 4), std::invalid_argument);
  }
  SUBCASE("endpoints on an absorbed path") {
    Absorbed a;
    const VertexSet w = a.b.whole();
    for (Vertex x : {9, 10, 11})
      for (Vertex y = 0; y < 12; ++y) {
        if (x == y) continue;
        for (int len = 6; len <= 8; ++len) {
          Path p = block_path(a.g, a.b, x, y, len);
          CHECK(path_ok(a.g, p, x, y, len, w));
        }
      }
    CHECK_THROWS_AS(block_path(a.g, a.b, 10, 5, 5), std::invalid_argument);
  }
  SUBCASE("random dense blocks") {
    brute::GraphGen gen(3);
    for (int iter = 0; iter < 300; ++iter) {
      const int m = gen.uniform(10, 30);
      GraphBuilder gb(m + 6);
      for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
          if (gen.unit() < 0.95) gb.add_edge(u, v);
      gb.add_edge(m, 0);
      gb.add_edge(m, 1);
      gb.add_edge(m + 1, m + 2);
      gb.add_edge(m + 1, 2);
      gb.add_edge(m + 2, 3);
      Graph g = std::move(gb).build();
      BlockState b = make_block(g, range(0, m));
      b.paths.push_back({Path{{m}}, 0, 1});
      b.paths.push_back({Path{{m + 1, m + 2}}, 2, 3});
      for (Vertex v : {0, 1, 2, 3}) b.available.erase(v);
      const VertexSet w = b.whole();
      Vertex x = gen.uniform(0, m + 2), y = gen.uniform(0, m + 2);
      if (x == y) continue;
      const bool outer = x >= m || y >= m;
      const int len = gen.uniform(outer ? 6 : 2, 2 * w.count() / 3);
      try {
        Path p = block_path(g, b, x, y, len);
        CHECK(path_ok(g, p, x, y, len, w));
      } catch (const GuaranteeUnavailable&) {
        CHECK_FALSE(block_hypotheses(g, b));
      }
    }
  }
}

TEST_CASE("block_cycle") {
  SUBCASE("complete block, every length") {
    Graph g = gen::complete(10);
    BlockState b = make_block(g, range(0, 10));
    for (int len = 3; len <= 10; ++len) {
      Cycle c = block_cycle(g, b, len);
      CHECK(c.length() == len);
      CHECK(is_cycle(g, c));
    }
    CHECK_THROWS_AS(block_cycle(g, b, 11), std::invalid_argument);
    CHECK_THROWS_AS(block_cycle(g, b, 2), std::invalid_argument);
  }
  SUBCASE("expanded Hamilton cycle through an absorbed path") {
    Absorbed a;
    Cycle c = block_cycle(a.g, a.b, 12);
    CHECK(c.length() == 12);
    CHECK(is_cycle(a.g, c));
    for (int len = 3; len <= 12; ++len) CHECK(is_cycle(a.g, block_cycle(a.g, a.b, len)));
    CHECK_THROWS_AS(block_cycle(a.g, a.b, 13), std::invalid_argument);
  }
  SUBCASE("lengths cross-checked against the exact oracle") {
    brute::GraphGen gen(9);
    for (int iter = 0; iter < 100; ++iter) {
      const int m = gen.uniform(6, 11);
      Graph g = gen.graph(m, m, 0.8);
      BlockState b = make_block(g, range(0, m));
      const int len = gen.uniform(3, m);
      try {
        Cycle c = block_cycle(g, b, len);
        CHECK(c.length() == len);
        CHECK(is_cycle(g, c));
      } catch (const GuaranteeUnavailable&) {
        CHECK_FALSE(block_hypotheses(g, b));
        CHECK_FALSE(brute::has_cycle(g, len));
      }
    }
  }
  CHECK(block_hypotheses(gen::complete(10), make_block(gen::complete(10), range(0, 10))));
  Absorbed a;
  CHECK(is_absorbable(a.g, a.b));
  CHECK_FALSE(block_hypotheses(a.g, a.b));
}

TEST_CASE("absorb_remainder") {
  SUBCASE("empty remainder") {
    Graph g = gen::disjoint_union({gen::complete(7), gen::complete(7)});
    CliqueDecomposition d{{range(0, 7), range(7, 14)}, {}, 0.5, true};
    AbsorbOutcome out = absorb_remainder(g, d, 8);
    CHECK_FALSE(out.cycle);
    CHECK(out.rounds == 0);
    CHECK(out.state.remainder.empty());
    CHECK(out.state.blocks[0].available.count() == 7);
  }
  SUBCASE("one remainder vertex seeing two block vertices") {
    Graph g = with_edges(gen::complete(9), {});
    g = with_edges(gen::disjoint_union({gen::complete(9), gen::empty(1)}), {{9, 2}, {9, 5}});
    CliqueDecomposition d{{range(0, 9)}, {9}, 0.5, true};
    AbsorbOutcome out = absorb_remainder(g, d, 12);
    CHECK_FALSE(out.cycle);
    CHECK(out.rounds == 1);
    const BlockState& b = out.state.blocks[0];
    REQUIRE(b.paths.size() == 1);
    CHECK(b.paths[0].path.vertices == std::vector<Vertex>{9});
    CHECK(b.paths[0].a == 2);
    CHECK(b.paths[0].b == 5);
    CHECK(b.available.count() == 7);
    CHECK(is_absorbable(g, b));
  }
  SUBCASE("a block reaching ℓ gives an ℓ-cycle") {
    Graph g = with_edges(gen::disjoint_union({gen::complete(7), gen::empty(1)}), {{7, 0}, {7, 3}});
    CliqueDecomposition d{{range(0, 7)}, {7}, 0.5, true};
    AbsorbOutcome out = absorb_remainder(g, d, 8);
    REQUIRE(out.cycle);
    CHECK(out.cycle->length() == 8);
    CHECK(is_cycle(g, *out.cycle));
  }
  SUBCASE("terminal state on random remainders") {
    brute::GraphGen gen(21);
    for (int iter = 0; iter < 100; ++iter) {
      const int ell = gen.uniform(8, 14), k = ell - 2, r = gen.uniform(1, 8);
      GraphBuilder gb(2 * k + r);
      for (int base : {0, k})
        for (int u = 0; u < k; ++u)
          for (int v = u + 1; v < k; ++v) gb.add_edge(base + u, base + v);
      for (int x = 2 * k; x < 2 * k + r; ++x)
        for (int y = 0; y < 2 * k + r; ++y)
          if (x != y && gen.unit() < 0.08) gb.add_edge(x, y);
      Graph g = std::move(gb).build();
      CliqueDecomposition d{{range(0, k), range(k, 2 * k)}, range(2 * k, 2 * k + r), 0.5, true};
      AbsorbOutcome out = absorb_remainder(g, d, ell);
      if (out.cycle) {
        CHECK(out.cycle->length() == ell);
        CHECK(is_cycle(g, *out.cycle));
        continue;
      }
      for (const auto& b : out.state.blocks) {
        CHECK(is_absorbable(g, b));
        CHECK(b.whole().count() <= ell - 1);
        for (const auto& ap : b.paths) CHECK(ap.path.length() <= 2);
      }
    }
  }
}

TEST_CASE("separate_remainder") {
  SUBCASE("empty remainder") {
    Graph g = gen::disjoint_union({gen::complete(7), gen::complete(7)});
    AbsorptionState st{{make_block(g, range(0, 7)), make_block(g, range(7, 14))}, VertexSet(14)};
    Separation sep = separate_remainder(g, st, 8);
    CHECK(sep.t == std::vector<int>{0, 1});
    CHECK(sep.s.empty());
    for (const auto& a : sep.touching) CHECK(a.empty());
    CHECK(sep.clean[0].count() == 7);
    CHECK_FALSE(sep.cycle);
  }
  SUBCASE("two remainder vertices bridging two blocks") {
    const int ell = 20;
    Graph g = with_edges(gen::disjoint_union({gen::complete(19), gen::complete(19), gen::empty(2)}),
                         {{38, 0}, {38, 19}, {39, 1}, {39, 20}});
    AbsorptionState st{{make_block(g, range(0, 19)), make_block(g, range(19, 38))}, VertexSet(40, {38, 39})};
    Separation sep = separate_remainder(g, st, ell);
    CHECK(sep.parts == 2);
    REQUIRE(sep.cycle);
    CHECK(sep.cycle->length() == ell);
    CHECK(is_cycle(g, *sep.cycle));
  }
}

TEST_CASE("absorb_neighbours") {
  SUBCASE("isolated blocks") {
    Graph g = gen::disjoint_union({gen::complete(7), gen::complete(7)});
    AbsorptionState st{{make_block(g, range(0, 7)), make_block(g, range(7, 14))}, VertexSet(14)};
    Separation sep = separate_remainder(g, st, 8);
    NeighbourAbsorption na = absorb_neighbours(g, st, sep, 8, 1);
    CHECK(na.block == 0);
    CHECK(na.matching_sizes == std::vector<int>{0, 0});
    CHECK(na.whittled == range(0, 7));
    CHECK(na.v == 0);
    CHECK_FALSE(na.cycle);
  }
  SUBCASE("single block") {
    Graph g = gen::complete(7);
    AbsorptionState st{{make_block(g, range(0, 7))}, VertexSet(7)};
    NeighbourAbsorption na = absorb_neighbours(g, st, separate_remainder(g, st, 8), 8, 1);
    CHECK(na.block == 0);
  }
  SUBCASE("empty T") {
    Graph g = gen::complete(7);
    AbsorptionState st{{make_block(g, range(0, 7))}, VertexSet(7)};
    Separation sep;
    CHECK_THROWS_AS(absorb_neighbours(g, st, sep, 8, 1), std::invalid_argument);
  }
  SUBCASE("large cross matchings close an ℓ-cycle") {
    const int ell = 27, k = 20;
    std::vector<Edge> cross;
    for (int i = 0; i < 4; ++i) {
      const int next = (i + 1) % 4;
      for (int j = 0; j < 4; ++j) cross.emplace_back(i * k + j, next * k + 4 + j);
    }
    Graph g = with_edges(gen::disjoint_union(std::vector<Graph>(4, gen::complete(k))), cross);
    AbsorptionState st;
    for (int i = 0; i < 4; ++i) st.blocks.push_back(make_block(g, range(i * k, (i + 1) * k)));
    st.remainder = VertexSet(g.order());
    Separation sep = separate_remainder(g, st, ell);
    NeighbourAbsorption na = absorb_neighbours(g, st, sep, ell, 3);
    for (int s : na.matching_sizes) CHECK(s == 8);
    REQUIRE(na.cycle);
    CHECK(na.cycle->length() == ell);
    CHECK(is_cycle(g, *na.cycle));
  }
}

TEST_CASE("final_absorption closes a cycle of length ℓ") {
  Graph g = with_edges(gen::disjoint_union({gen::complete(8), gen::empty(2)}), {});
  std::vector<Edge> extra;
  for (int y : {8, 9})
    for (int x = 0; x < 8; ++x) extra.emplace_back(y, x);
  g = with_edges(g, extra);
  AbsorptionState st{{make_block(g, range(0, 8))}, VertexSet(10)};
  NeighbourAbsorption na;
  na.block = 0;
  na.v = 0;
  na.whittled = range(0, 8);
  auto c = final_absorption(g, st, na, 10);
  REQUIRE(c);
  CHECK(c->length() == 10);
  CHECK(is_cycle(g, *c));
}

TEST_CASE("ramsey_search") {
  SUBCASE("wrong order") {
    CHECK_THROWS_AS(ramsey_search(random_coloring(10, 1), 6, 3), std::invalid_argument);
  }
  SUBCASE("random colorings at (6,3) agree with the exact oracles") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      EdgeColoring c = random_coloring(11, seed);
      SearchResult r = ramsey_search(c, 6, 3, {}, seed);
      REQUIRE(r.certificate);
      CHECK(verify_certificate(c, *r.certificate, 6, 3));
      if (r.certificate->kind == Certificate::Kind::RedCycle) CHECK(brute::has_cycle(c.red, 6));
      else CHECK(brute::alpha(c.red) >= 3);
    }
  }
  SUBCASE("extremal coloring padded with a universal vertex") {
    for (auto [ell, n] : std::vector<Edge>{{6, 3}, {5, 4}, {30, 3}}) {
      std::vector<Graph> parts(static_cast<std::size_t>(n - 1), gen::complete(ell - 1));
      parts.push_back(gen::empty(1));
      Graph base = gen::disjoint_union(parts);
      const int u = base.order() - 1;
      std::vector<Edge> spokes;
      for (int x = 0; x < u; ++x) spokes.emplace_back(x, u);
      EdgeColoring c{with_edges(base, spokes)};
      SearchResult r = ramsey_search(c, ell, n, {}, 4);
      REQUIRE(r.certificate);
      CHECK(r.certificate->kind == Certificate::Kind::RedCycle);
      CHECK(verify_certificate(c, *r.certificate, ell, n));
    }
  }
  SUBCASE("n = 2") {
    for (int ell = 3; ell <= 8; ++ell) {
      EdgeColoring red{gen::complete(ell)};
      SearchResult r = ramsey_search(red, ell, 2);
      REQUIRE(r.certificate);
      CHECK(r.certificate->kind == Certificate::Kind::RedCycle);
      GraphBuilder b(ell);
      for (auto [x, y] : gen::complete(ell).edges())
        if (!(x == 0 && y == ell - 1)) b.add_edge(x, y);
      EdgeColoring one_blue{std::move(b).build()};
      SearchResult s = ramsey_search(one_blue, ell, 2);
      REQUIRE(s.certificate);
      CHECK(s.certificate->kind == Certificate::Kind::BlueIndependentSet);
      CHECK(s.certificate->vertices == std::vector<Vertex>{0, ell - 1});
    }
  }
  SUBCASE("n = 1") {
    SearchResult r = ramsey_search({gen::empty(1)}, 5, 1);
    REQUIRE(r.certificate);
    CHECK(r.certificate->vertices == std::vector<Vertex>{0});
  }
  SUBCASE("(3,3) has colorings with no certificate") {
    SearchResult r = ramsey_search({gen::cycle(5)}, 3, 3);
    CHECK(r.incomplete());
  }
  SUBCASE("determinism") {
    EdgeColoring c = random_coloring(16, 77);
    RunParams p;
    std::string a = search_report_json(ramsey_search(c, 6, 4, p, 9), 6, 4, p, 9);
    std::string b = search_report_json(ramsey_search(c, 6, 4, p, 9), 6, 4, p, 9);
    CHECK(a == b);
    CHECK(a.find("\"status\": \"certificate\"") != std::string::npos);
  }
}

TEST_CASE("run parameters round-trip through JSON") {
  RunParams p;
  p.eps = 0.2;
  p.retries = 7;
  CHECK(params_from_json(params_to_json(p)) == p);
  CHECK(params_from_json("{}") == RunParams{});
  CHECK_THROWS_AS(params_from_json("{\"bogus\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(params_from_json("{\"retries\": 1.5}"), std::invalid_argument);
  CHECK_THROWS_AS(params_from_json("[1]"), std::invalid_argument);
  CHECK_THROWS_AS(params_from_json("{\"eps\": 2}"), std::invalid_argument);
}
