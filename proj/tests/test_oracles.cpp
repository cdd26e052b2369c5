#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "cycram/errors.hpp"
#include "cycram/oracles.hpp"

using namespace cycram;

namespace {

Graph clique_blocks(int block, int count) {
  std::vector<Graph> parts(static_cast<std::size_t>(count), gen::complete(block));
  return gen::disjoint_union(parts);
}

}  // namespace

TEST_CASE("find_cycle_exact on named graphs") {
  auto c7 = find_cycle_exact(gen::cycle(7), 7);
  REQUIRE(c7);
  CHECK(is_cycle(gen::cycle(7), *c7));
  CHECK(c7->length() == 7);
  CHECK_FALSE(find_cycle_exact(gen::cycle(7), 6));

  Graph p = gen::petersen();
  auto c5 = find_cycle_exact(p, 5);
  REQUIRE(c5);
  CHECK(is_cycle(p, *c5));
  CHECK(brute::has_cycle(p, 5));
  for (int ell : {3, 4, 7}) {
    CHECK_FALSE(brute::has_cycle(p, ell));
    CHECK_FALSE(find_cycle_exact(p, ell));
  }
  CHECK_FALSE(find_cycle_exact(clique_blocks(5, 3), 6));
  CHECK_THROWS_AS(find_cycle_exact(p, 2), std::invalid_argument);
}

TEST_CASE("find_cycle_exact agrees with DFS enumeration on small random graphs") {
  brute::GraphGen gen(101);
  for (int t = 0; t < 1000; ++t) {
    Graph g = gen.graph(1, 9);
    int ell = gen.uniform(3, 9);
    auto c = find_cycle_exact(g, ell);
    CHECK(c.has_value() == brute::has_cycle(g, ell));
    if (c) {
      CHECK(is_cycle(g, *c));
      CHECK(c->length() == ell);
    }
  }
}

TEST_CASE("sparse and colour-coded strategies agree with the dense DP") {
  brute::GraphGen gen(102);
  CycleSearchOptions sparse;
  sparse.dense_dp_limit = 0;
  CycleSearchOptions colour = sparse;
  colour.sparse_state_budget = 0;
  for (int t = 0; t < 60; ++t) {
    Graph g = gen.graph(6, 14, 0.25);
    int ell = gen.uniform(3, 6);
    bool truth = find_cycle_exact(g, ell).has_value();
    auto a = find_cycle_exact(g, ell, sparse);
    auto b = find_cycle_exact(g, ell, colour);
    CHECK(a.has_value() == truth);
    CHECK(b.has_value() == truth);
    if (a) CHECK(is_cycle(g, *a));
    if (b) CHECK(is_cycle(g, *b));
  }
}

TEST_CASE("find_cycle_exact on larger graphs") {
  // Block of order 100: only colour coding or sparse DP can answer.
  Graph g = gen::gnp(100, 0.05, 3);
  for (int ell : {3, 4, 5, 6}) {
    auto c = find_cycle_exact(g, ell);
    if (c) CHECK(is_cycle(g, *c));
  }
  CHECK(find_cycle_exact(gen::cycle(80), 80));
  CHECK_FALSE(find_cycle_exact(gen::cycle(80), 79));
  CHECK_FALSE(find_cycle_exact(clique_blocks(7, 40), 8));
  CHECK(find_cycle_exact(clique_blocks(7, 40), 7));
}

TEST_CASE("biconnected blocks") {
  // Two triangles sharing vertex 2, plus a pendant path.
  Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}});
  CHECK(biconnected_blocks(g) == std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}});
  CHECK(biconnected_blocks(gen::petersen()).size() == 1);
}

TEST_CASE("max_independent_set") {
  CHECK(max_independent_set(gen::complete(6)).count() == 1);
  CHECK(max_independent_set(gen::cycle(5)).count() == 2);
  Graph p = gen::petersen();
  VertexSet s = max_independent_set(p);
  CHECK(is_independent(p, s));
  CHECK(s.count() == brute::alpha(p));
  CHECK(s.count() == 4);
  CHECK_THROWS_AS(max_independent_set(gen::empty(65)), CapacityError);
  CHECK_THROWS_AS(max_independent_set(gen::empty(20), 10), CapacityError);
  CHECK(max_independent_set(gen::empty(64)).count() == 64);
}

TEST_CASE("max_independent_set matches subset enumeration and the Turán bound") {
  brute::GraphGen gen(103);
  for (int t = 0; t < 300; ++t) {
    Graph g = gen.graph(0, 16);
    VertexSet s = max_independent_set(g);
    CHECK(is_independent(g, s));
    CHECK(s.count() == brute::alpha(g));
    CHECK(s.count() >= static_cast<int>(std::ceil(g.order() / (g.average_degree() + 1))));
  }
  for (int t = 0; t < 20; ++t) {
    Graph g = gen.graph(50, 64, 0.3);
    VertexSet s = max_independent_set(g);
    CHECK(is_independent(g, s));
    CHECK(s.count() >= static_cast<int>(std::ceil(g.order() / (g.average_degree() + 1))));
  }
}

TEST_CASE("verify_certificate") {
  EdgeColoring c{gen::cycle(5)};
  CHECK(verify_certificate(c, Certificate::red_cycle({0, 1, 2, 3, 4}), 5, 3));
  CHECK_FALSE(verify_certificate(c, Certificate::red_cycle({0, 2, 4, 1, 3}), 5, 3));
  CHECK_FALSE(verify_certificate(c, Certificate::blue_set({0, 1}), 5, 3));
  CHECK_FALSE(verify_certificate(c, Certificate::red_cycle({0, 1, 2, 3, 4}), 4, 3));
  CHECK_THROWS_AS(verify_certificate(c, Certificate::blue_set({0, 7}), 5, 2), std::invalid_argument);

  // Red graph: two disjoint triangles on K_6. A blue set takes at most one
  // vertex per triangle.
  EdgeColoring ch{clique_blocks(3, 2)};
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b) {
      bool truth = !brute::adjacent(ch.red, a, b);
      CHECK(verify_certificate(ch, Certificate::blue_set({a, b}), 4, 2) == truth);
    }
  CHECK_FALSE(verify_certificate(ch, Certificate::blue_set({0, 3, 4}), 4, 3));
}

TEST_CASE("certificate JSON round trip is bit exact") {
  Certificate cyc = Certificate::red_cycle({3, 1, 4, 0});
  std::string text = certificate_to_json(cyc, 4, 9);
  CHECK(text == R"({"kind":"red_cycle","vertices":[3,1,4,0],"ell":4})");
  ParsedCertificate back = certificate_from_json(text);
  CHECK(back.cert == cyc);
  CHECK(back.ell == 4);
  CHECK(certificate_to_json(back.cert, back.ell, back.n) == text);

  Certificate set = Certificate::blue_set({0, 5, 9});
  text = certificate_to_json(set, 7, 3);
  back = certificate_from_json(text);
  CHECK(back.cert == set);
  CHECK(certificate_to_json(back.cert, back.ell, back.n) == text);
  CHECK_THROWS_AS(certificate_from_json("{\"kind\":\"other\",\"vertices\":[]}"), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json("not json"), std::invalid_argument);
}

TEST_CASE("canonical codes are invariant under relabelling") {
  brute::GraphGen gen(104);
  for (int t = 0; t < 300; ++t) {
    Graph g = gen.graph(0, 11);
    Graph h = brute::relabel(g, gen.permutation(g.order()));
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(canonical_code(graph_from_code(canonical_code(g), g.order())) == canonical_code(g));
  }
  CHECK(canonical_code(gen::cycle(6)) != canonical_code(clique_blocks(3, 2)));
  CHECK(canonical_code(gen::petersen()) == canonical_code(brute::relabel(gen::petersen(), {3, 9, 0, 1, 7, 2, 8, 5, 4, 6})));
}

TEST_CASE("ramsey_exact reproduces small values") {
  auto r33 = ramsey_exact(3, 3, 8);
  REQUIRE(r33.value);
  CHECK(*r33.value == 6);
  CHECK(ramsey_formula(3, 3) == 5);
  REQUIRE(r33.extremal_example);
  CHECK(canonical_code(*r33.extremal_example) == canonical_code(gen::cycle(5)));

  CHECK(ramsey_exact(4, 3, 9).value == 7);
  for (int ell = 3; ell <= 8; ++ell) CHECK(ramsey_exact(ell, 2, 10).value == ell);
  CHECK(ramsey_exact(5, 1, 5).value == 1);
  CHECK(ramsey_exact(5, 3, 9).value == ramsey_formula(5, 3));
}

TEST_CASE("ramsey_exact agrees with brute force over all labelled graphs") {
  // (3,3): avoiding graph at 5, none at 6.
  CHECK(brute::some_colouring_avoids(5, 3, 3));
  CHECK_FALSE(brute::some_colouring_avoids(6, 3, 3));
  CHECK(brute::some_colouring_avoids(6, 4, 3));
  CHECK_FALSE(brute::some_colouring_avoids(7, 4, 3));
}

TEST_CASE("ramsey_exact is independent of thread count") {
  RamseyExactOptions opts;
  opts.threads = 4;
  auto a = ramsey_exact(4, 3, 9, opts);
  auto b = ramsey_exact(4, 3, 9);
  CHECK(a.value == b.value);
  CHECK(a.avoiding_counts == b.avoiding_counts);
  CHECK(a.extremal_example == b.extremal_example);
}

TEST_CASE("ramsey_exact reports Unknown below the answer") {
  auto r = ramsey_exact(6, 3, 8);
  CHECK_FALSE(r.value);
  CHECK(r.searched_to == 8);
  CHECK_THROWS_AS(ramsey_exact(2, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(ramsey_exact(3, 0, 5), std::invalid_argument);
}
