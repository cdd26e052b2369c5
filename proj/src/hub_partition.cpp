#include <cmath>
#include <stdexcept>

#include "cycram/dense.hpp"
#include "cycram/hubs.hpp"

namespace cycram {

HubPartition hub_partition(const Graph& g, int ell, double eps, std::uint64_t seed, const HubParams& params) {
  if (ell < 3) throw std::invalid_argument("ell must be at least 3");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  const int n = g.order();
  HubPartition out;
  out.u = static_cast<int>(std::floor(std::pow(static_cast<double>(ell), 1.0 - eps) + 1e-9));
  const double beta = eps / 8.0;
  const double gamma = std::pow(static_cast<double>(ell), beta);
  const double d = std::pow(static_cast<double>(ell), 1.0 - beta);

  VertexSet remaining = g.all_vertices();
  VertexSet barren(n);  // blocks in which no hub could be built
  Rng rng(seed);
  while (out.u >= 2 && static_cast<double>(remaining.count()) > eps * n && !(remaining - barren).empty()) {
    const VertexSet open = remaining - barren;
    Subgraph sub = induced_subgraph(g, open);
    DenseBoundResult r = dense_under_indep_bound(sub.graph, {ell, ell, gamma, d, HypothesisMode::BestEffort, AlphaPolicy::Unchecked});
    VertexSet block(n);
    if (r.dense && r.dense->edges > 0 && r.dense->vertices.count() >= 2 * out.u) {
      block = sub.lift(r.dense->vertices, n);
    } else {
      std::int64_t best = 0;
      for (const auto& comp : connected_components(g, open)) {
        VertexSet c = VertexSet::of(n, comp);
        std::int64_t e = g.edges_within(c);
        if (e > best) {
          best = e;
          block = c;
        }
      }
      if (best == 0) break;
      ++out.fallback_blocks;
    }
    HubOutcome h = build_hub(g, out.u, eps, rng(), params, block);
    auto* hub = std::get_if<Hub>(&h);
    if (!hub) {
      barren |= block;
      continue;
    }
    remaining -= hub->vertices();
    out.hubs.push_back(std::move(*hub));
  }
  out.leftover = remaining.to_vector();
  out.guarantee_met = static_cast<double>(out.leftover.size()) <= eps * n + 1e-9;
  return out;
}

}  // namespace cycram
