#include "cycram/dense.hpp"

#include <cmath>
#include <stdexcept>

#include "cycram/bfs.hpp"
#include "cycram/errors.hpp"
#include "cycram/oracles.hpp"

namespace cycram {

PathOrDense path_or_dense(const Graph& g, Vertex start, int D) {
  if (D < 1) throw std::invalid_argument("D must be at least 1");
  if (start < 0 || start >= g.order()) throw std::invalid_argument("start vertex out of range");
  Path walk{{start}};
  VertexSet on(g.order());
  on.insert(start);
  while (walk.length() < D) {
    Vertex best = -1;
    int best_back = -1;
    (g.neighbors(walk.vertices.back()) - on).for_each([&](Vertex v) {
      int back = g.degree_into(v, on);
      if (back > best_back) {
        best = v;
        best_back = back;
      }
    });
    if (best == -1) {
      DenseSubgraph h{on, walk, g.edges_within(on)};
      const std::int64_t delta = g.min_degree();
      if (h.edges < delta * (delta + 1) / 2) throw GuaranteeViolated("greedy walk spans fewer than C(delta+1, 2) edges");
      return h;
    }
    walk.vertices.push_back(best);
    on.insert(best);
  }
  return walk;
}

namespace {

std::vector<int> owners(int order, const std::vector<DecompTriple>& triples) {
  std::vector<int> out(static_cast<std::size_t>(order), -1);
  for (std::size_t t = 0; t < triples.size(); ++t)
    for (Vertex v : triples[t].members) out[static_cast<std::size_t>(v)] = static_cast<int>(t);
  return out;
}

// Joins the tree path y_j -> z_0 in T_i, the walk z_0..z_{ℓ2} and the tree path
// z_{ℓ2} -> y_j in T'_j into an ell-cycle.
std::optional<Cycle> close_walk(const Graph& g, const std::vector<Vertex>& z, int ell, const std::vector<DecompTriple>& xs,
                                const std::vector<int>& x_owner, const std::vector<DecompTriple>& ys,
                                const std::vector<int>& y_owner) {
  const int j = y_owner[static_cast<std::size_t>(z[0])];
  if (j < 0) return std::nullopt;
  const DecompTriple& yt = ys[static_cast<std::size_t>(j)];
  const int i = x_owner[static_cast<std::size_t>(yt.root)];
  if (i < 0) return std::nullopt;
  std::vector<Vertex> p1 = xs[static_cast<std::size_t>(i)].tree->tree_path(yt.root, z[0]);
  const int l2 = ell - (static_cast<int>(p1.size()) - 1) - yt.depth;
  if (l2 < 1 || l2 >= static_cast<int>(z.size())) return std::nullopt;
  std::vector<Vertex> p3 = yt.tree->path_to_root(z[static_cast<std::size_t>(l2)]);
  Cycle c{p1};
  c.vertices.insert(c.vertices.end(), z.begin() + 1, z.begin() + l2 + 1);
  for (std::size_t k = 1; k + 1 < p3.size(); ++k) c.vertices.push_back(p3[k]);
  if (c.length() != ell || !is_cycle(g, c)) return std::nullopt;
  return c;
}

}  // namespace

DenseBoundResult dense_under_indep_bound(const Graph& g, const DenseBoundParams& p) {
  if (!(p.gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
  if (p.D < 1) throw std::invalid_argument("D must be at least 1");
  if (p.ell < 3) throw std::invalid_argument("ell must be at least 3");
  const int n = g.order();
  const bool enforce = p.mode == HypothesisMode::Enforce;
  DenseBoundResult out;
  out.edge_threshold = p.d * p.d / (512.0 * std::pow(p.gamma, 4));
  out.hypotheses_met = 3.0 * log_base(std::max(n, 1), p.gamma) <= p.ell + 1e-9 && p.ell <= p.D && p.d >= 8.0 * p.gamma * p.gamma;
  if (enforce && !out.hypotheses_met)
    throw GuaranteeUnavailable("3 log_gamma(N) <= ell <= D and d >= 8 gamma^2",
                               "hypotheses fail for N = " + std::to_string(n) + ", ell = " + std::to_string(p.ell) +
                                   ", D = " + std::to_string(p.D) + ", gamma = " + std::to_string(p.gamma) +
                                   ", d = " + std::to_string(p.d));

  const double alpha_budget = n / p.d + 1e-9;
  if (p.alpha == AlphaPolicy::Verify || (p.alpha == AlphaPolicy::Assume && n <= kExactIndependenceLimit)) {
    const int a = independence_number(g);
    out.alpha_checked = true;
    if (a > alpha_budget) {
      if (p.alpha == AlphaPolicy::Assume)
        throw AssumptionViolation("alpha(G) = " + std::to_string(a) + " exceeds N/d = " + std::to_string(n / p.d));
      if (enforce)
        throw GuaranteeUnavailable("alpha(G) <= N/d", "alpha(G) = " + std::to_string(a) + " exceeds N/d = " + std::to_string(n / p.d));
      out.hypotheses_met = false;
    }
  }
  if (n == 0) {
    if (enforce) throw GuaranteeViolated("empty graph has no dense subgraph");
    return out;
  }

  auto xs = triple_decomposition(g, p.gamma);
  VertexSet x(n);
  for (const auto& t : xs)
    for (Vertex v : t.members) x.insert(v);
  auto ys = triple_decomposition(g, p.gamma, x);
  VertexSet y(n);
  for (const auto& t : ys)
    for (Vertex v : t.members) y.insert(v);
  const auto x_owner = owners(n, xs);
  const auto y_owner = owners(n, ys);

  Subgraph gy = induced_subgraph(g, y);
  const int k = static_cast<int>(std::ceil(gy.graph.average_degree() / 2.0 - 1e-9));
  auto core = min_degree_subgraph(gy.graph, k);
  if (core) {
    auto lift = [&](Vertex v) { return gy.to_parent[static_cast<std::size_t>(core->to_parent[static_cast<std::size_t>(v)])]; };
    for (Vertex s = 0; s < core->graph.order(); ++s) {
      PathOrDense r = path_or_dense(core->graph, s, p.D);
      if (auto* h = std::get_if<DenseSubgraph>(&r)) {
        DenseSubgraph lifted{VertexSet(n), Path{}, h->edges};
        h->vertices.for_each([&](Vertex v) { lifted.vertices.insert(lift(v)); });
        for (Vertex v : h->walk.vertices) lifted.walk.vertices.push_back(lift(v));
        out.guarantee_met = lifted.vertices.count() <= p.D && static_cast<double>(lifted.edges) >= out.edge_threshold;
        out.dense = std::move(lifted);
        return out;
      }
      std::vector<Vertex> z;
      for (Vertex v : std::get<Path>(r).vertices) z.push_back(lift(v));
      if (auto c = close_walk(g, z, p.ell, xs, x_owner, ys, y_owner)) {
        out.cycle = std::move(c);
        return out;
      }
    }
  }
  if (enforce) throw GuaranteeViolated("no core vertex yielded a dense subgraph or an ell-cycle");
  return out;
}

DensePartition dense_partition(const Graph& g, int ell, double eps) {
  if (ell < 3) throw std::invalid_argument("ell must be at least 3");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  const int n = g.order();
  DensePartition out;
  const double beta = eps / 8.0;
  out.gamma = std::pow(static_cast<double>(ell), beta);
  out.d = std::pow(static_cast<double>(ell), 1.0 - beta);
  const double block_edges = std::pow(static_cast<double>(ell), 2.0 - eps);

  VertexSet remaining = g.all_vertices();
  bool blocks_ok = true;
  while (!remaining.empty()) {
    Subgraph sub = induced_subgraph(g, remaining);
    DenseBoundParams params{ell, ell, out.gamma, out.d, HypothesisMode::BestEffort, AlphaPolicy::Unchecked};
    DenseBoundResult r = dense_under_indep_bound(sub.graph, params);
    if (r.cycle) {
      out.surfaced = Cycle{sub.lift(r.cycle->vertices)};
      break;
    }
    if (!r.dense || r.dense->edges == 0) break;
    VertexSet block = sub.lift(r.dense->vertices, n);
    for (bool grew = true; grew;) {
      grew = false;
      (remaining - block).for_each([&](Vertex v) {
        if (block.count() + 1 < ell && 2 * g.degree_into(v, block) >= block.count()) {
          block.insert(v);
          grew = true;
        }
      });
    }
    blocks_ok = blocks_ok && block.count() < ell && static_cast<double>(g.edges_within(block)) > block_edges;
    out.blocks.push_back(block.to_vector());
    remaining -= block;
  }
  out.leftover = remaining.to_vector();
  out.guarantee_met = blocks_ok && !out.surfaced && static_cast<double>(out.leftover.size()) <= eps * n + 1e-9;
  return out;
}

}  // namespace cycram
