#include <stdexcept>

#include "cycram/errors.hpp"
#include "cycram/extremal.hpp"
#include "cycram/oracles.hpp"

namespace cycram {

bool is_complete_bipartite(const Graph& g, int* left_size) {
  const int n = g.order();
  if (n < 2) return false;
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  int seen = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    bool ok = true;
    g.neighbors(v).for_each([&](Vertex w) {
      auto& s = side[static_cast<std::size_t>(w)];
      if (s == -1) {
        s = 1 - side[static_cast<std::size_t>(v)];
        ++seen;
        stack.push_back(w);
      } else if (s == side[static_cast<std::size_t>(v)]) {
        ok = false;
      }
    });
    if (!ok) return false;
  }
  if (seen != n) return false;
  std::int64_t a = 0;
  for (int s : side) a += s == 0;
  if (g.edge_count() != a * (n - a)) return false;
  if (left_size) *left_size = static_cast<int>(a);
  return true;
}

namespace {

std::optional<Cycle> from_hamilton(const Graph& g, const Cycle& h, int ell) {
  const int n = h.length();
  auto at = [&](int i) { return h.vertices[static_cast<std::size_t>(((i % n) + n) % n)]; };
  // One chord spanning ell - 1 steps of the Hamilton cycle.
  for (int i = 0; i < n; ++i)
    if (g.adjacent(at(i), at(i + ell - 1))) {
      Cycle c;
      for (int j = 0; j < ell; ++j) c.vertices.push_back(at(i + j));
      return c;
    }
  // Two crossing chords a-c and b-d with a < b < c < d (positions along the
  // cycle): a..b, b-d, d down to c, c-a has (b - a + 1) + (d - c + 1) vertices.
  for (int a = 0; a < n; ++a)
    for (int c = a + 2; c < n; ++c) {
      if (!g.adjacent(at(a), at(c))) continue;
      for (int b = a + 1; b < c; ++b) {
        int d = c + ell - (b - a + 1) - 1;
        if (d <= c || d >= a + n) continue;
        if (!g.adjacent(at(b), at(d))) continue;
        Cycle cyc;
        for (int j = a; j <= b; ++j) cyc.vertices.push_back(at(j));
        for (int j = d; j >= c; --j) cyc.vertices.push_back(at(j));
        return cyc;
      }
    }
  return std::nullopt;
}

}  // namespace

PancyclicOutcome pancyclic_cycle(const Graph& g, int ell) {
  const int n = g.order();
  if (ell < 3 || ell > n) throw std::invalid_argument("cycle length must lie in [3, order]");
  if (2 * g.min_degree() < n)
    throw GuaranteeUnavailable("min_degree >= order/2", "pancyclicity needs δ(G) >= v(G)/2");
  int a = 0;
  if (is_complete_bipartite(g, &a)) {
    if (ell % 2 == 1) return BipartiteException{a, n - a};
    std::vector<Vertex> left, right;
    for (Vertex v = 0; v < n; ++v) (g.adjacent(0, v) ? right : left).push_back(v);
    Cycle c;
    for (int i = 0; i < ell / 2; ++i) {
      c.vertices.push_back(left[static_cast<std::size_t>(i)]);
      c.vertices.push_back(right[static_cast<std::size_t>(i)]);
    }
    return c;
  }
  Cycle h = hamilton_cycle(g);
  if (ell == n) return h;
  if (auto c = from_hamilton(g, h, ell)) return *c;
  try {
    if (auto c = find_cycle_exact(g, ell)) return *c;
  } catch (const CapacityError&) {
  }
  throw GuaranteeViolated("no " + std::to_string(ell) + "-cycle found in a graph with δ >= v/2");
}

}  // namespace cycram
