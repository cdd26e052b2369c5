#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cycram/extremal.hpp"
#include "cycram/graph.hpp"

namespace cycram {

/// Rounding of every hub threshold, in one place.
namespace hub_bounds {
int floor_required(int u, double eps);  // ceil(u^{1-ε/2})
int d_cap(int u, double eps);           // ceil(εu)
int max_pairs(int u, double eps);       // floor(u^{1-ε})
int length_budget(int u, double eps);   // floor(2(1-ε)u), bounds Σ(ℓ_i + 1)
int parity_matching(int u, double eps); // ceil(2u^{1-ε})
}  // namespace hub_bounds

/// A verified (u,ε)-hub. Only make_hub and build_hub produce one.
struct Hub {
  VertexSet a, b, d;
  int u = 0;
  double eps = 0.0;
  Cycle backbone;  // a_1 b_1 a_2 b_2 ... alternating, a_i in A
  int common_neighbor_floor = 0;
  std::optional<std::vector<Edge>> parity_matching;  // set once the hub is known parity broken

  bool parity_broken() const { return parity_matching.has_value(); }
  VertexSet vertices() const { return a | b | d; }
  bool operator==(const Hub&) const = default;
};

/// Checks the hub invariants in g and returns the hub; std::invalid_argument if any fails.
Hub make_hub(const Graph& g, const Cycle& backbone, const VertexSet& d, int u, double eps);

struct HubParams {
  double drc_eps = -1.0;  // ε of the dependent random choice step; ε/2 when negative
  int retries = 64;
  int smoke_requests = 2;
  DrcParams drc;
};

struct HubFailure {
  int attempts = 0;
  int best_floor = -1;
  int required_floor = 0;
  std::string reason;
};

using HubOutcome = std::variant<Hub, HubFailure>;

/// Bipartite half of g[within], dependent random choice for U_1, U_2, a greedy
/// alternating backbone A/B, then D sampled from (U_1 ∪ U_2) \ (A ∪ B) with
/// probability εu/(2·order), repaired greedily and verified exactly.
HubOutcome build_hub(const Graph& g, int u, double eps, std::uint64_t seed, const HubParams& params = {});
HubOutcome build_hub(const Graph& g, int u, double eps, std::uint64_t seed, const HubParams& params, const VertexSet& within);

struct ConnectionRequest {
  std::vector<Edge> pairs;  // (s_i, t_i)
  std::vector<int> lengths;
};

/// ℓ even with x, y on one side, or ℓ odd with x, y on opposite sides.
bool bipartite_length_ok(const Hub& hub, Vertex x, Vertex y, int ell);

/// Vertex-disjoint s_i t_i-paths of length ℓ_i inside A ∪ B ∪ D.
/// std::invalid_argument when the request is malformed or a length has the
/// wrong parity; GuaranteeViolated when the backbone or D runs out.
std::vector<Path> hub_connect(const Graph& g, const Hub& hub, const ConnectionRequest& req);

/// Greedy maximal matching in G[A]; stored on the hub when it reaches
/// hub_bounds::parity_matching.
std::optional<std::vector<Edge>> find_parity_matching(const Graph& g, Hub& hub);

/// hub_connect where a wrong-parity pair (length >= 7) is routed through a
/// matching edge x y of G[A] as s..x, y..t.
std::vector<Path> hub_connect_parity_broken(const Graph& g, const Hub& hub, const ConnectionRequest& req);

/// Paths[i] runs from b_i in hubs[i] to a_{i+1} in hubs[i+1] (indices cyclic).
struct HandleSystem {
  std::vector<const Hub*> hubs;
  std::vector<Path> paths;
};

/// An ℓ-cycle through the handles, each hub supplying an a_i b_i-path.
/// std::invalid_argument when the handle system is malformed or ℓ is outside
/// the window or of the wrong parity.
Cycle cycle_from_handles(const Graph& g, const HandleSystem& hs, int ell);

struct HubPartition {
  std::vector<Hub> hubs;
  std::vector<Vertex> leftover;
  int u = 0;
  int fallback_blocks = 0;  // blocks taken as a whole component when no dense subgraph was found
  bool guarantee_met = false;  // |W| <= ε order
};

/// Repeatedly takes a dense block of the remaining graph (dense_under_indep_bound
/// with γ = ℓ^β, D = ℓ, d = ℓ^{1-β}, β = ε/8; failing that the component with most
/// edges), builds a (u,ε)-hub with u = floor(ℓ^{1-ε}) inside it and removes the hub.
/// A block that yields no hub is set aside into W. Stops once |W| <= ε order or
/// every remaining vertex has been set aside.
HubPartition hub_partition(const Graph& g, int ell, double eps, std::uint64_t seed, const HubParams& params = {});

}  // namespace cycram
