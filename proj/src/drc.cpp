#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

#include "cycram/errors.hpp"
#include "cycram/extremal.hpp"

namespace cycram {

int pairwise_common_floor(const Graph& g, const VertexSet& side, const VertexSet& other) {
  auto members = side.to_vector();
  int floor = INT_MAX;
  for (std::size_t i = 0; i < members.size(); ++i) {
    VertexSet ni = g.neighbors(members[i]) & other;
    for (std::size_t j = i + 1; j < members.size(); ++j)
      floor = std::min(floor, ni.intersection_count(g.neighbors(members[j])));
  }
  return floor;
}

namespace {

// Repeatedly drop the vertex lying in the most bad pairs (lowest index on ties)
// until every same-side pair on both sides meets the threshold.
void prune_bad_pairs(const Graph& g, VertexSet& u1, VertexSet& u2, int threshold) {
  while (true) {
    std::vector<int> bad(static_cast<std::size_t>(g.order()), 0);
    bool any = false;
    for (int s = 0; s < 2; ++s) {
      const VertexSet& side = s == 0 ? u1 : u2;
      const VertexSet& other = s == 0 ? u2 : u1;
      auto members = side.to_vector();
      for (std::size_t i = 0; i < members.size(); ++i) {
        VertexSet ni = g.neighbors(members[i]) & other;
        for (std::size_t j = i + 1; j < members.size(); ++j)
          if (ni.intersection_count(g.neighbors(members[j])) < threshold) {
            ++bad[static_cast<std::size_t>(members[i])];
            ++bad[static_cast<std::size_t>(members[j])];
            any = true;
          }
      }
    }
    if (!any) return;
    auto worst = static_cast<Vertex>(std::max_element(bad.begin(), bad.end()) - bad.begin());
    if (u1.contains(worst)) u1.erase(worst);
    else u2.erase(worst);
  }
}

}  // namespace

DrcOutcome dependent_random_choice(const Graph& g, double eps, std::uint64_t seed, const DrcParams& params) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  const int n = g.order();
  if (n < params.n0)
    throw GuaranteeUnavailable("order >= N_0", "order " + std::to_string(n) + " is below N_0 = " + std::to_string(params.n0));
  const double needed = std::pow(static_cast<double>(n), 2.0 - params.delta0);
  if (static_cast<double>(g.edge_count()) < needed)
    throw GuaranteeUnavailable("e(G) >= order^(2 - delta0)", "e(G) = " + std::to_string(g.edge_count()) +
                                                                 " is below order^(2 - delta0) = " + std::to_string(needed));
  const int threshold = static_cast<int>(std::ceil(std::pow(static_cast<double>(n), 1.0 - eps) - 1e-9));

  Rng rng(seed);
  DrcFailure fail;
  fail.required = threshold;
  for (int attempt = 1; attempt <= params.retries; ++attempt) {
    // U_1 is the common neighbourhood of 1..3 random pivots, U_2 everything else.
    int t = 1 + (attempt - 1) % 3;
    VertexSet pivots(n);
    VertexSet u1 = g.all_vertices();
    for (int i = 0; i < t; ++i) {
      auto p = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
      pivots.insert(p);
      u1 &= g.neighbors(p);
    }
    VertexSet u2 = g.all_vertices() - u1 - pivots;
    fail.attempts = attempt;
    if (u1.count() >= params.min_size && u2.count() >= params.min_size)
      fail.best_threshold = std::max(fail.best_threshold, std::min(pairwise_common_floor(g, u1, u2), pairwise_common_floor(g, u2, u1)));
    prune_bad_pairs(g, u1, u2, threshold);
    if (u1.count() < params.min_size || u2.count() < params.min_size) continue;
    int floor = std::min(pairwise_common_floor(g, u1, u2), pairwise_common_floor(g, u2, u1));
    if (floor >= threshold) return DrcResult{u1, u2, floor, attempt};
  }
  fail.reason = "no attempt produced two sides of size >= " + std::to_string(params.min_size) +
                " with pairwise common neighbourhoods >= " + std::to_string(threshold);
  return fail;
}

}  // namespace cycram
