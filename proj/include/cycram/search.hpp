#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycram/oracles.hpp"
#include "cycram/params.hpp"
#include "cycram/stability.hpp"

namespace cycram {

struct StageRecord {
  int level = 0;  // induction depth
  int order = 0;
  int n = 0;
  std::string stage;
  std::string outcome;
  std::vector<ThresholdCheck> checks;
};

struct SearchResult {
  std::optional<Certificate> certificate;  // verified whenever present
  std::vector<StageRecord> stages;
  bool incomplete() const { return !certificate.has_value(); }
};

/// Induction on n: a vertex of red degree below ℓ-1 is removed with its
/// neighbourhood and the search recurses on n-1. Orders up to the exact
/// threshold go to the exact oracles; larger ones run stability, absorption,
/// separation and neighbour absorption, then fall back to the exact oracles up
/// to the exact limit. Any returned certificate has passed verify_certificate.
/// std::invalid_argument unless the coloring has order (ℓ-1)(n-1)+1.
SearchResult ramsey_search(const EdgeColoring& c, int ell, int n, const RunParams& params = {}, std::uint64_t seed = 0);

/// Parameters, per-stage outcomes with their threshold checks, and the certificate.
std::string search_report_json(const SearchResult& r, int ell, int n, const RunParams& params, std::uint64_t seed);

}  // namespace cycram
