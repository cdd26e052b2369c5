#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycram/graph.hpp"
#include "cycram/hubs.hpp"

namespace cycram {

/// A named threshold of an asymptotic lemma and whether it held on this input.
struct ThresholdCheck {
  std::string name;
  bool held = false;
  bool operator==(const ThresholdCheck&) const = default;
};

/// Maximum matching between disjoint vertex sets by augmenting paths, lowest
/// index first. Edges are (left, right).
std::vector<Edge> max_bipartite_matching(const Graph& g, const VertexSet& left, const VertexSet& right);

struct ParityBreak {
  std::vector<Hub> broken;      // parity_matching set
  std::vector<Hub> exceptions;  // no large matching in G[A]; their vertices belong in W
};

ParityBreak parity_break_all(const Graph& g, std::vector<Hub> hubs);

struct IndependentSetChain {
  std::vector<int> blocks;   // i_0 .. i_d
  std::vector<Edge> matching;  // matching[j] joins I_{i_j} and I_{i_{j+1}}
};

/// Maximal matching with at most one edge per pair of sets, the auxiliary graph
/// on [s] it induces, and a path of length d there. std::nullopt when no such
/// path is found. std::invalid_argument unless the sets are disjoint,
/// independent, of equal size m with m >= 3d and d >= 1.
std::optional<IndependentSetChain> matching_across_independent_sets(const Graph& g, const std::vector<VertexSet>& sets, int d);

struct InterHubGraphs {
  std::vector<Edge> cross_matching;  // ℳ: at most one edge per hub pair, ends in distinct hubs
  Graph h1;                          // on hub indices
  std::vector<bool> high_degree;     // deleted from H_2
  Graph h2;
  Graph h3;
  std::map<Edge, std::vector<Edge>> pair_matchings;  // maximum matching of G[U_i, U_j] for each H_2 edge
  double degree_cap = 0;     // ε^{-1} ℓ^{1-3ε}
  double matching_need = 0;  // 2 ℓ^ε
};

/// ℳ greedily then improved by swapping one edge for two; H_1 from ℳ; H_2 drops
/// hubs of H_1-degree above the cap; H_3 keeps H_2 edges whose hub pair has a
/// matching of size at least 2ℓ^ε.
InterHubGraphs inter_hub_graphs(const Graph& g, const std::vector<Hub>& hubs, int ell, double eps);

struct CliqueDecomposition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> leftover;
  double eta = 0.0;
  bool guarantee_met = false;
};

/// The four conclusions: block sizes in [⌈(1-η)ℓ⌉, ℓ], block minimum degree at
/// least ⌈(1-η)ℓ⌉, coverage at least (1-η)·order, no edges between blocks.
std::vector<ThresholdCheck> check_decomposition(const Graph& g, int ell, const CliqueDecomposition& d);

struct StabilityParams {
  double eps = 0.05;
  int exact_check_order = 24;  // C_ℓ-freeness and α <= n-1 are checked exactly up to this order
  HubParams hub;
};

struct StabilityOutcome {
  CliqueDecomposition decomposition;
  std::optional<Cycle> cycle;  // an ℓ-cycle of g surfaced along the way
  int hubs = 0;
  int parity_exceptions = 0;
  bool hub_fallback = false;  // hubs covered too little, components of g used instead
  std::vector<ThresholdCheck> checks;
};

/// hub_partition, parity_break_all, inter_hub_graphs, removal of the small
/// cross matchings, components of what remains, removal of components with
/// average degree at most (1-ε^{1/2})ℓ and the ⌈(1-η/2)ℓ⌉-core of each
/// remaining one. A block with at least ℓ vertices yields an ℓ-cycle instead.
StabilityOutcome stability_decomposition(const Graph& g, int ell, int n, double eta, std::uint64_t seed,
                                         const StabilityParams& params = {});

}  // namespace cycram
