#include <json.hpp>
#include <stdexcept>

#include "cycram/params.hpp"

namespace cycram {

std::string params_to_json(const RunParams& p) {
  nlohmann::ordered_json j;
  j["eps"] = p.eps;
  j["eta"] = p.eta;
  j["gamma"] = p.gamma;
  j["delta0"] = p.delta0;
  j["n0"] = p.n0;
  j["exact_threshold"] = p.exact_threshold;
  j["exact_limit"] = p.exact_limit;
  j["retries"] = p.retries;
  return j.dump();
}

RunParams params_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("params: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("params: expected a JSON object");
  RunParams p;
  for (const auto& [key, value] : j.items()) {
    auto real = [&](double& field) {
      if (!value.is_number()) throw std::invalid_argument("params: " + key + " must be a number");
      field = value.get<double>();
    };
    auto integer = [&](int& field) {
      if (!value.is_number_integer()) throw std::invalid_argument("params: " + key + " must be an integer");
      field = value.get<int>();
    };
    if (key == "eps") real(p.eps);
    else if (key == "eta") real(p.eta);
    else if (key == "gamma") real(p.gamma);
    else if (key == "delta0") real(p.delta0);
    else if (key == "n0") integer(p.n0);
    else if (key == "exact_threshold") integer(p.exact_threshold);
    else if (key == "exact_limit") integer(p.exact_limit);
    else if (key == "retries") integer(p.retries);
    else throw std::invalid_argument("params: unknown key " + key);
  }
  if (!(p.eps > 0.0 && p.eps < 1.0)) throw std::invalid_argument("params: eps must lie in (0,1)");
  if (!(p.eta > 0.0 && p.eta < 1.0)) throw std::invalid_argument("params: eta must lie in (0,1)");
  if (!(p.gamma > 1.0)) throw std::invalid_argument("params: gamma must exceed 1");
  if (p.retries < 1) throw std::invalid_argument("params: retries must be positive");
  if (p.exact_limit > 64) throw std::invalid_argument("params: exact_limit is at most 64");
  return p;
}

}  // namespace cycram
