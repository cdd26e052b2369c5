#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycram/graph.hpp"
#include "cycram/stability.hpp"

namespace cycram {

/// A path outside a block whose first vertex is adjacent to `a` and last to `b`.
struct AbsorbedPath {
  Path path;
  Vertex a = -1;
  Vertex b = -1;
  bool operator==(const AbsorbedPath&) const = default;
};

/// W = V ∪ R with R covered by absorbed paths; `available` ⊆ V holds the
/// vertices not yet used as attachments.
struct BlockState {
  VertexSet core;
  VertexSet available;
  std::vector<AbsorbedPath> paths;

  VertexSet absorbed() const;
  VertexSet whole() const { return core | absorbed(); }
  bool operator==(const BlockState&) const = default;
};

BlockState make_block(const Graph& g, const std::vector<Vertex>& core);

/// Paths vertex-disjoint, outside V, of length <= 2, attachments distinct and in
/// V, and each end adjacent to its attachment.
bool is_absorbable(const Graph& g, const BlockState& b);
/// δ(G[V]) >= 0.9|V|, |R| <= 0.1|V| and is_absorbable.
bool block_hypotheses(const Graph& g, const BlockState& b);

/// An xy-path of length len inside W. Requires 2 <= len <= ⌊2|W|/3⌋, and
/// len >= 6 when x or y is absorbed (std::invalid_argument otherwise).
/// GuaranteeViolated if construction fails under the block hypotheses,
/// GuaranteeUnavailable if it fails without them.
Path block_path(const Graph& g, const BlockState& b, Vertex x, Vertex y, int len);

/// A cycle of length len inside W, 3 <= len <= |W|. Same error contract.
Cycle block_cycle(const Graph& g, const BlockState& b, int len);

struct AbsorptionState {
  std::vector<BlockState> blocks;
  VertexSet remainder;
};

struct AbsorbOutcome {
  AbsorptionState state;
  std::optional<Cycle> cycle;
  int rounds = 0;
};

/// Rounds of: a path of length <= 2 in G[R] attaching to two distinct available
/// vertices of one block moves into that block. A block reaching ℓ vertices
/// gives an ℓ-cycle; when none can be built the path stays in R and the block
/// takes no further paths, so every block ends with |W| <= ℓ-1.
AbsorbOutcome absorb_remainder(const Graph& g, const CliqueDecomposition& d, int ell);

struct Separation {
  std::vector<int> s, t;
  std::vector<VertexSet> touching;  // A'_i
  std::vector<VertexSet> clean;     // B_i = A_i \ A'_i
  int parts = 0;                    // parts of the diameter-two partition of R
  std::optional<Cycle> cycle;
  std::vector<ThresholdCheck> checks;
};

/// T = {i : |A'_i| < ℓ^{2/3}}; R split into stars of order ⌈ℓ^{1/2}⌉ and
/// singletons; a short cycle in the block/part incidence graph is expanded
/// into an ℓ-cycle when one exists.
Separation separate_remainder(const Graph& g, const AbsorptionState& state, int ell);

struct NeighbourAbsorption {
  int block = -1;
  Vertex v = -1;
  std::vector<Vertex> whittled;  // D_{i*}
  std::vector<int> matching_sizes;  // |ℳ_i| for i in T, -1 elsewhere
  std::optional<Cycle> cycle;
  std::vector<ThresholdCheck> checks;
};

/// Maximum matchings ℳ_i from B_i to outside W_i; when every one exceeds
/// ℓ^{1/3} a seeded bipartition is tried for an ℓ-cycle. Otherwise picks the
/// lowest i in T with the smallest ℳ_i, whittles D_i and returns its lowest
/// vertex. std::invalid_argument when T is empty.
NeighbourAbsorption absorb_neighbours(const Graph& g, const AbsorptionState& state, const Separation& sep, int ell,
                                      std::uint64_t seed, int retries = 64);

/// Attaches ℓ - |W_i| outside neighbours of v to D_i and closes an ℓ-cycle
/// with block_cycle. std::nullopt when the attachments cannot be chosen.
std::optional<Cycle> final_absorption(const Graph& g, const AbsorptionState& state, const NeighbourAbsorption& na, int ell);

}  // namespace cycram
