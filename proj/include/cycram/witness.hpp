#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cycram/graph.hpp"

namespace cycram {

enum class WitnessMethod { ChvatalHarary, Random };

/// Status of one claim: verified by an exact oracle, true by construction
/// but not re-checked, or a statistical estimate.
enum class ClaimStatus { Certified, Asserted, Estimated };

struct WitnessClaim {
  std::string name;
  ClaimStatus status = ClaimStatus::Asserted;
};

struct RandomStats {
  int n = 0;
  double eps = 0;
  int target_order = 0;  // N = ceil(2 n log2 n)
  double p = 0;
  bool explicit_p = false;
  int ell0 = 0;
  long long short_cycles = 0;
  int deleted = 0;
  int attempts = 0;
  bool deleted_within_half = false;
  bool alpha_below_n = false;
};

struct WitnessReport {
  EdgeColoring coloring;
  WitnessMethod method = WitnessMethod::ChvatalHarary;
  int ell_lo = 0, ell_hi = 0;  // red has no C_k for ell_lo <= k <= ell_hi
  int alpha = 0;               // exact, or the largest independent set found
  bool alpha_exact = false;
  std::vector<WitnessClaim> claims;
  std::optional<RandomStats> random;
  /// r(C_k, K_{alpha+1}) >= order + 1 for every k in [ell_lo, ell_hi].
  int bound_n() const { return alpha + 1; }
};

/// Red graph: n-1 disjoint copies of K_{ℓ-1} on (ℓ-1)(n-1) vertices.
/// std::invalid_argument unless ℓ >= 3 and n >= 2.
EdgeColoring chvatal_harary(int ell, int n);

/// Report for the CH coloring, re-verified exactly when the order allows.
WitnessReport chvatal_harary_report(int ell, int n);

struct RandomWitnessOptions {
  std::optional<double> p;     // default 3 log2 log2 n / (n - 1)
  std::optional<int> ell0;     // default max(3, floor((1-eps) log2 n / log2 log2 n))
  int min_n = 1 << 16;         // smallest n accepted without an explicit p
  int retries = 16;
  int estimate_rounds = 64;    // random greedy rounds when the residual exceeds 64 vertices
  int max_order = 20000;        // dense adjacency rows bound the sample size
  long long max_short_cycles = 50'000'000;
};

struct WitnessFailure {
  RandomStats stats;
  /// The largest residual seen; its girth still exceeds ℓ0.
  std::optional<WitnessReport> best;
};

using RandomWitnessOutcome = std::variant<WitnessReport, WitnessFailure>;

/// Samples G(N,p), deletes the lowest vertex of every still intact cycle of
/// length at most ℓ0, and accepts when at most N/2 vertices were deleted and
/// the residual has independence number below n. Retries with fresh samples.
/// std::invalid_argument on bad parameters or n below min_n without an
/// explicit p; CapacityError when the sample would be too large.
RandomWitnessOutcome random_lower_bound(int n, double eps, std::uint64_t seed, const RandomWitnessOptions& opts = {});

/// Visits every cycle of length 3..max_len once, as the vertex sequence that
/// starts at its lowest vertex with the second vertex below the last. Returns
/// the count; CapacityError once it exceeds limit.
long long enumerate_short_cycles(const Graph& g, int max_len, const std::function<void(const std::vector<Vertex>&)>& visit,
                                 long long limit = 50'000'000);

/// Natural logarithms of the two expectation bounds of the random construction:
/// (eN/n e^{-p(n-1)/2})^n and 2(Np)^{ℓ0}, with N = 2n log2 n,
/// p = 3 log2 log2 n/(n-1), ℓ0 = (1-eps) log2 n / log2 log2 n.
struct ExpectationDisplays {
  double n = 0;
  double order = 0;  // N
  double p = 0;
  double ell0 = 0;
  double log_independent_sets = 0;  // below 0 means the bound is < 1
  double log_short_cycles = 0;      // below log N means the bound is < N
  bool independent_sets_below_one() const { return log_independent_sets < 0; }
  bool short_cycles_below_order() const;
};
ExpectationDisplays expectation_displays(double n, double eps);

/// Re-checks the report with exact oracles: no red C_k for k in [ell_lo, ell_hi]
/// and no red-independent set of size n. CapacityError when the order is
/// beyond the exact independence limit, unless accept_estimate is set, in
/// which case the reported estimate is compared instead.
bool verify_witness(const WitnessReport& w, int ell_lo, int ell_hi, int n, bool accept_estimate = false);

std::string witness_report_json(const WitnessReport& w);
std::string witness_failure_json(const WitnessFailure& f);

/// Writes `<stem>.el` (edge list of the red graph) and `<stem>.json`.
void save_witness(const std::string& stem, const WitnessReport& w);

}  // namespace cycram
