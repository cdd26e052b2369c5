#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "cycram/graph.hpp"

namespace cycram {

/// Greedy minimum-degree-first independent set (lowest index breaks ties);
/// always of size >= ceil(order / (d + 1)).
VertexSet turan_independent_set(const Graph& g);

struct PathSearchOptions {
  /// Rotations explored per stuck state before giving up on extension.
  int rotation_budget = 4096;
  /// Orders up to this size get an exhaustive DFS fallback.
  int exhaustive_order = 20;
};

/// A path of length >= k. Guaranteed when d(g) > k - 1 (throws GuaranteeViolated
/// if the construction fails there); otherwise best effort.
std::optional<Path> long_path(const Graph& g, int k, const PathSearchOptions& opts = {});

/// Hamilton cycle by rotation-extension. Requires δ(g) >= order/2 and order >= 3;
/// throws GuaranteeUnavailable otherwise.
Cycle hamilton_cycle(const Graph& g);

/// Longest path found inside `within` by greedy extension, cycle reopening and
/// Pósa rotations, stopping early once it reaches `target` length.
Path extend_long_path(const Graph& g, const VertexSet& within, int target, const PathSearchOptions& opts = {});

struct BipartiteException {
  int left = 0;
  int right = 0;
};
using PancyclicOutcome = std::variant<Cycle, BipartiteException>;

bool is_complete_bipartite(const Graph& g, int* left_size = nullptr);

/// An ℓ-cycle in a graph with δ(g) >= order/2, or the complete bipartite
/// exception. Throws GuaranteeUnavailable if the degree condition fails and
/// std::invalid_argument unless 3 <= ℓ <= order.
PancyclicOutcome pancyclic_cycle(const Graph& g, int ell);

struct DrcParams {
  double delta0 = 0.5;
  int n0 = 64;
  int retries = 64;
  /// Minimum size of each returned side.
  int min_size = 2;
};

struct DrcResult {
  VertexSet u1;
  VertexSet u2;
  /// min over same-side pairs of |N(a) ∩ N(a') ∩ U_other|, as verified.
  int witness_threshold = 0;
  int attempts = 0;
};

struct DrcFailure {
  int attempts = 0;
  /// Largest verified pairwise floor over attempts with both sides of size >= min_size; -1 if none.
  int best_threshold = -1;
  int required = 0;
  std::string reason;
};

using DrcOutcome = std::variant<DrcResult, DrcFailure>;

/// Disjoint U_1, U_2 in which every same-side pair has at least ceil(order^{1-ε})
/// common neighbours on the other side. Throws GuaranteeUnavailable when
/// e(g) < order^{2-δ₀} or order < N_0.
DrcOutcome dependent_random_choice(const Graph& g, double eps, std::uint64_t seed, const DrcParams& params = {});

/// min over unordered pairs a != a' in `side` of |N(a) ∩ N(a') ∩ other|; a large
/// value for sides with fewer than two vertices.
int pairwise_common_floor(const Graph& g, const VertexSet& side, const VertexSet& other);

}  // namespace cycram
