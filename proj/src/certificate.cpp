#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "cycram/oracles.hpp"

namespace cycram {

// Deliberately written against the raw adjacency test only, so that a bug in a
// search routine cannot also hide in the check of its output.
bool verify_certificate(const EdgeColoring& c, const Certificate& cert, int ell, int n) {
  const int order = c.order();
  for (Vertex v : cert.vertices)
    if (v < 0 || v >= order) throw std::invalid_argument("certificate vertex " + std::to_string(v) + " out of range");
  const auto& vs = cert.vertices;
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  for (Vertex v : vs) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  if (cert.kind == Certificate::Kind::RedCycle) {
    if (ell < 3 || static_cast<int>(vs.size()) != ell) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (!c.red.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
    return true;
  }
  if (static_cast<int>(vs.size()) != n) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (c.red.adjacent(vs[i], vs[j])) return false;
  return true;
}

std::string certificate_to_json(const Certificate& cert, int ell, int n) {
  nlohmann::ordered_json j;
  if (cert.kind == Certificate::Kind::RedCycle) {
    j["kind"] = "red_cycle";
    j["vertices"] = cert.vertices;
    j["ell"] = ell;
  } else {
    j["kind"] = "blue_independent_set";
    j["vertices"] = cert.vertices;
    j["n"] = n;
  }
  return j.dump();
}

ParsedCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate JSON: ") + e.what());
  }
  ParsedCertificate out;
  try {
    const auto kind = j.at("kind").get<std::string>();
    out.cert.vertices = j.at("vertices").get<std::vector<Vertex>>();
    if (kind == "red_cycle") {
      out.cert.kind = Certificate::Kind::RedCycle;
      out.ell = j.at("ell").get<int>();
    } else if (kind == "blue_independent_set") {
      out.cert.kind = Certificate::Kind::BlueIndependentSet;
      out.n = j.at("n").get<int>();
    } else {
      throw std::invalid_argument("unknown certificate kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
  return out;
}

}  // namespace cycram
