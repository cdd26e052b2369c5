#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cycram/graph.hpp"

namespace cycram {

/// H = G[vertices] reached by the back-degree greedy walk, which stopped at
/// walk.vertices.back() with every neighbour of that vertex already on the walk.
struct DenseSubgraph {
  VertexSet vertices;
  Path walk;
  std::int64_t edges = 0;
};

using PathOrDense = std::variant<Path, DenseSubgraph>;

/// Greedy walk from `start`, each step moving to the unvisited neighbour with the
/// most neighbours already on the walk (lowest index on ties). Returns the walk
/// once it has length D, otherwise the dense subgraph it spans, which has at most
/// D vertices and at least C(δ(g)+1, 2) edges.
PathOrDense path_or_dense(const Graph& g, Vertex start, int D);

enum class HypothesisMode { Enforce, BestEffort };

/// How the bound α(g) <= order/d is established.
///  Verify: computed exactly (CapacityError above kExactIndependenceLimit).
///  Assume: taken on trust, but checked when the order allows; a false
///          assumption throws AssumptionViolation.
///  Unchecked: neither checked nor relied on.
enum class AlphaPolicy { Verify, Assume, Unchecked };

struct DenseBoundParams {
  int ell = 0;  // the cycle length g is supposed to avoid
  int D = 0;
  double gamma = 2.0;
  double d = 0.0;
  HypothesisMode mode = HypothesisMode::Enforce;
  AlphaPolicy alpha = AlphaPolicy::Assume;
};

struct DenseBoundResult {
  std::optional<DenseSubgraph> dense;  // vertices are those of g
  std::optional<Cycle> cycle;          // an ell-cycle met along the way
  double edge_threshold = 0.0;         // d^2 / (2^9 γ^4)
  bool hypotheses_met = false;
  bool alpha_checked = false;          // α(g) <= order/d was computed, not assumed
  bool guarantee_met = false;          // dense found with v <= D and e >= threshold

  bool found() const { return dense || cycle; }
};

/// Two rounds of triple_decomposition, a half-average-degree core, then
/// path_or_dense from each core vertex. A walk of length D is closed into an
/// ell-cycle through the two BFS trees. In Enforce mode the hypotheses
/// 3 log_γ(order) <= ell <= D and d >= 8γ² are required (GuaranteeUnavailable)
/// and an empty result is a GuaranteeViolated.
DenseBoundResult dense_under_indep_bound(const Graph& g, const DenseBoundParams& params);

struct DensePartition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> leftover;
  std::optional<Cycle> surfaced;  // an ell-cycle met during extraction
  double gamma = 0.0;
  double d = 0.0;
  bool guarantee_met = false;  // every |V_i| < ell, e(V_i) > ell^(2-ε), |W| <= ε order
};

/// Repeatedly extracts a dense block from the remaining vertices, grows it by
/// any vertex adjacent to at least half of it while it stays below ell vertices,
/// and removes it. Stops when extraction yields no block with an edge.
/// Parameters: γ = ell^(ε/8), D = ell, d = ell^(1 - ε/8).
DensePartition dense_partition(const Graph& g, int ell, double eps);

}  // namespace cycram
