#pragma once

#include <string>

namespace cycram {

/// Tunables of a pipeline run. Serialised as one flat JSON object.
struct RunParams {
  double eps = 0.05;
  double eta = 0.1;
  double gamma = 2.0;
  double delta0 = 0.5;
  int n0 = 64;
  int exact_threshold = 24;  // orders at or below this go straight to the exact oracles
  int exact_limit = 64;      // largest order the exact fallback attempts
  int retries = 64;

  bool operator==(const RunParams&) const = default;
};

std::string params_to_json(const RunParams& p);
/// Missing keys keep their defaults; unknown keys or wrong types throw std::invalid_argument.
RunParams params_from_json(const std::string& text);

}  // namespace cycram
