#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cycram/errors.hpp"
#include "cycram/extremal.hpp"
#include "cycram/oracles.hpp"
#include "cycram/stability.hpp"

namespace cycram {

namespace {

int ceil_guarded(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

// An ℓ-cycle inside a block of at least ℓ vertices: pancyclicity when the block
// is Dirac, otherwise trim lowest-degree vertices down to ℓ and look for a
// Hamilton cycle.
std::optional<Cycle> cycle_in_block(const Graph& g, const std::vector<Vertex>& block, int ell) {
  Subgraph sub = induced_subgraph(g, block);
  const Graph& h = sub.graph;
  if (2 * h.min_degree() >= h.order()) {
    PancyclicOutcome r = pancyclic_cycle(h, ell);
    if (auto* c = std::get_if<Cycle>(&r)) return Cycle{sub.lift(c->vertices)};
  }
  VertexSet keep = h.all_vertices();
  while (keep.count() > ell) {
    Vertex worst = -1;
    int worst_deg = h.order();
    keep.for_each([&](Vertex v) {
      int deg = h.degree_into(v, keep);
      if (deg < worst_deg) {
        worst = v;
        worst_deg = deg;
      }
    });
    keep.erase(worst);
  }
  Subgraph trimmed = induced_subgraph(h, keep);
  if (2 * trimmed.graph.min_degree() < trimmed.graph.order()) return std::nullopt;
  Cycle c = hamilton_cycle(trimmed.graph);
  return Cycle{sub.lift(trimmed.lift(c.vertices))};
}

}  // namespace

std::vector<ThresholdCheck> check_decomposition(const Graph& g, int ell, const CliqueDecomposition& d) {
  const int lo = ceil_guarded((1.0 - d.eta) * ell);
  VertexSet covered(g.order());
  bool partition = true, sizes = true, degrees = true, cross = true;
  std::vector<VertexSet> sets;
  for (const auto& block : d.blocks) {
    VertexSet s = VertexSet::of(g.order(), block);
    if (s.count() != static_cast<int>(block.size()) || s.intersects(covered)) partition = false;
    covered |= s;
    sets.push_back(s);
    const int size = s.count();
    if (size < lo || size > ell) sizes = false;
    s.for_each([&](Vertex v) { degrees = degrees && g.degree_into(v, s) >= lo; });
  }
  const VertexSet left = VertexSet::of(g.order(), d.leftover);
  if (left.intersects(covered) || (left | covered).count() != g.order()) partition = false;
  for (std::size_t i = 0; i < sets.size(); ++i)
    sets[i].for_each([&](Vertex v) { cross = cross && !g.neighbors(v).intersects(covered - sets[i]); });
  const bool coverage = covered.count() >= (1.0 - d.eta) * g.order() - 1e-9;
  return {{"partition", partition}, {"block_sizes", sizes}, {"block_min_degree", degrees}, {"coverage", coverage}, {"no_cross_edges", cross}};
}

StabilityOutcome stability_decomposition(const Graph& g, int ell, int n, double eta, std::uint64_t seed, const StabilityParams& params) {
  if (ell < 3) throw std::invalid_argument("ell must be at least 3");
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie in (0,1)");
  const double eps = params.eps;
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  const int order = g.order();
  StabilityOutcome out;
  out.decomposition.eta = eta;
  auto note = [&](std::string name, bool held) { out.checks.push_back({std::move(name), held}); };

  if (order <= params.exact_check_order) {
    if (auto c = find_cycle_exact(g, ell)) {
      note("c_ell_free", false);
      out.cycle = std::move(*c);
      out.decomposition.leftover = g.all_vertices().to_vector();
      return out;
    }
    note("c_ell_free", true);
    note("alpha_below_n", independence_number(g) <= n - 1);
  }

  HubPartition hp = hub_partition(g, ell, eps, seed, params.hub);
  out.hubs = static_cast<int>(hp.hubs.size());
  note("hub_partition", hp.guarantee_met);
  ParityBreak pb = parity_break_all(g, std::move(hp.hubs));
  out.parity_exceptions = static_cast<int>(pb.exceptions.size());
  note("parity_broken", pb.exceptions.size() <= eps * out.hubs);
  InterHubGraphs ih = inter_hub_graphs(g, pb.broken, ell, eps);
  note("h1_average_degree", ih.h1.average_degree() <= std::pow(static_cast<double>(ell), 1.0 - 3.0 * eps));
  bool small_components = true;
  for (const auto& comp : connected_components(ih.h3))
    small_components = small_components && comp.size() < (1.0 + 2.0 * eps) * std::pow(static_cast<double>(ell), eps) / 2.0;
  note("h3_components", small_components);

  VertexSet base(order);
  for (std::size_t i = 0; i < pb.broken.size(); ++i)
    if (!ih.high_degree[i]) base |= pb.broken[i].vertices();
  for (const auto& [pair, m] : ih.pair_matchings) {
    if (ih.h3.adjacent(pair.first, pair.second)) continue;
    for (const auto& [x, y] : m) {
      base.erase(x);
      base.erase(y);
    }
  }
  const bool hub_coverage = base.count() >= (1.0 - eta) * order - 1e-9;
  note("hub_coverage", hub_coverage);
  if (!hub_coverage) {
    base = g.all_vertices();
    out.hub_fallback = true;
  }

  const double sparse_cut = (1.0 - std::sqrt(eps)) * ell;
  const int k = ceil_guarded((1.0 - eta / 2.0) * ell);
  std::vector<std::vector<Vertex>> blocks;
  for (const auto& comp : connected_components(g, base)) {
    const VertexSet c = VertexSet::of(order, comp);
    if (2.0 * static_cast<double>(g.edges_within(c)) / static_cast<double>(comp.size()) <= sparse_cut) continue;
    Subgraph sub = induced_subgraph(g, c);
    std::optional<Subgraph> core = min_degree_subgraph(sub.graph, k);
    if (!core) continue;
    for (const auto& part : connected_components(core->graph)) blocks.push_back(sub.lift(core->lift(part)));
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());

  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) < ell) continue;
    if (auto c = cycle_in_block(g, b, ell)) {
      out.cycle = std::move(*c);
      break;
    }
  }
  VertexSet covered(order);
  for (const auto& b : blocks) covered |= VertexSet::of(order, b);
  out.decomposition.blocks = std::move(blocks);
  out.decomposition.leftover = (g.all_vertices() - covered).to_vector();
  bool all = !out.cycle.has_value();
  for (auto& chk : check_decomposition(g, ell, out.decomposition)) {
    all = all && chk.held;
    out.checks.push_back(std::move(chk));
  }
  out.decomposition.guarantee_met = all;
  return out;
}

}  // namespace cycram
