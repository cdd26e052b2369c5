#include <algorithm>
#include <json.hpp>
#include <stdexcept>

#include "cycram/absorb.hpp"
#include "cycram/errors.hpp"
#include "cycram/extremal.hpp"
#include "cycram/search.hpp"

namespace cycram {

namespace {

class Solver {
 public:
  Solver(int ell, const RunParams& params, std::uint64_t seed) : ell_(ell), params_(params), rng_(seed) {}

  std::optional<Certificate> solve(const Graph& h, int n, int level) {
    const int order = h.order();
    if (n <= 1) {
      if (order == 0) return std::nullopt;
      record(level, h, n, "base", "single vertex");
      return Certificate::blue_set({0});
    }
    if (n == 2) return base_pair(h, level);

    for (Vertex v = 0; v < order; ++v) {
      if (h.degree(v) >= ell_ - 1) continue;
      record(level, h, n, "low_degree", "vertex " + std::to_string(v) + " of degree " + std::to_string(h.degree(v)));
      VertexSet rest = h.all_vertices() - h.neighbors(v);
      rest.erase(v);
      Subgraph sub = induced_subgraph(h, rest);
      std::optional<Certificate> inner = solve(sub.graph, n - 1, level + 1);
      if (!inner) return std::nullopt;
      inner->vertices = sub.lift(inner->vertices);
      if (inner->kind == Certificate::Kind::BlueIndependentSet) {
        inner->vertices.push_back(v);
        std::sort(inner->vertices.begin(), inner->vertices.end());
      }
      return inner;
    }

    if (order <= params_.exact_threshold) return exact(h, n, level, "exact");
    if (auto c = pipeline(h, n, level)) return c;
    VertexSet greedy = turan_independent_set(h);
    if (greedy.count() >= n) {
      record(level, h, n, "greedy_independent_set", "found");
      return blue(greedy, n);
    }
    if (order <= params_.exact_limit) return exact(h, n, level, "exact_fallback");
    record(level, h, n, "incomplete", "order exceeds the exact limit");
    return std::nullopt;
  }

  std::vector<StageRecord> stages;

 private:
  int ell_;
  RunParams params_;
  Rng rng_;

  void record(int level, const Graph& h, int n, std::string stage, std::string outcome, std::vector<ThresholdCheck> checks = {}) {
    stages.push_back({level, h.order(), n, std::move(stage), std::move(outcome), std::move(checks)});
  }

  static Certificate blue(const VertexSet& s, int n) {
    std::vector<Vertex> v = s.to_vector();
    v.resize(static_cast<std::size_t>(n));
    return Certificate::blue_set(std::move(v));
  }

  Certificate red(const Graph& h, const Cycle& c) const {
    if (c.length() != ell_ || !is_cycle(h, c)) throw GuaranteeViolated("a pipeline stage produced an invalid cycle");
    return Certificate::red_cycle(c.vertices);
  }

  std::optional<Certificate> base_pair(const Graph& h, int level) {
    for (Vertex u = 0; u < h.order(); ++u) {
      Vertex w = (h.all_vertices() - h.neighbors(u)).next(u + 1);
      if (w != -1) {
        record(level, h, 2, "base", "non-adjacent pair");
        return Certificate::blue_set({u, w});
      }
    }
    if (h.order() < ell_) return std::nullopt;
    record(level, h, 2, "base", "complete graph");
    std::vector<Vertex> c(static_cast<std::size_t>(ell_));
    for (int i = 0; i < ell_; ++i) c[static_cast<std::size_t>(i)] = i;
    return Certificate::red_cycle(std::move(c));
  }

  std::optional<Certificate> exact(const Graph& h, int n, int level, const std::string& stage) {
    try {
      if (auto c = find_cycle_exact(h, ell_)) {
        record(level, h, n, stage, "red cycle");
        return red(h, *c);
      }
      VertexSet mis = max_independent_set(h, std::min(params_.exact_limit, kExactIndependenceLimit));
      if (mis.count() >= n) {
        record(level, h, n, stage, "independent set");
        return blue(mis, n);
      }
      record(level, h, n, stage, "no certificate exists");
    } catch (const CapacityError& e) {
      record(level, h, n, stage, std::string("capacity: ") + e.what());
    }
    return std::nullopt;
  }

  std::optional<Certificate> pipeline(const Graph& h, int n, int level) {
    try {
      StabilityParams sp;
      sp.eps = params_.eps;
      sp.exact_check_order = params_.exact_threshold;
      sp.hub.retries = params_.retries;
      sp.hub.drc.delta0 = params_.delta0;
      sp.hub.drc.n0 = params_.n0;
      sp.hub.drc.retries = params_.retries;
      StabilityOutcome st = stability_decomposition(h, ell_, n, params_.eta, rng_(), sp);
      auto checks = st.checks;
      checks.push_back({"guarantee_met", st.decomposition.guarantee_met});
      record(level, h, n, "stability", std::to_string(st.decomposition.blocks.size()) + " blocks", std::move(checks));
      if (st.cycle) return red(h, *st.cycle);
      if (st.decomposition.blocks.empty()) return std::nullopt;

      AbsorbOutcome ab = absorb_remainder(h, st.decomposition, ell_);
      record(level, h, n, "absorb_remainder", std::to_string(ab.rounds) + " rounds");
      if (ab.cycle) return red(h, *ab.cycle);

      Separation sep = separate_remainder(h, ab.state, ell_);
      record(level, h, n, "separate_remainder", std::to_string(sep.t.size()) + " blocks in T", sep.checks);
      if (sep.cycle) return red(h, *sep.cycle);
      if (sep.t.empty()) return std::nullopt;

      NeighbourAbsorption na = absorb_neighbours(h, ab.state, sep, ell_, rng_(), params_.retries);
      record(level, h, n, "absorb_neighbours", "block " + std::to_string(na.block), na.checks);
      if (na.cycle) return red(h, *na.cycle);

      std::optional<Cycle> fin = final_absorption(h, ab.state, na, ell_);
      record(level, h, n, "final_absorption", fin ? "red cycle" : "attachments unavailable");
      if (fin) return red(h, *fin);
    } catch (const GuaranteeUnavailable& e) {
      record(level, h, n, "pipeline", std::string("hypothesis failed: ") + e.what());
    } catch (const CapacityError& e) {
      record(level, h, n, "pipeline", std::string("capacity: ") + e.what());
    }
    return std::nullopt;
  }
};

}  // namespace

SearchResult ramsey_search(const EdgeColoring& c, int ell, int n, const RunParams& params, std::uint64_t seed) {
  if (ell < 3) throw std::invalid_argument("ell must be at least 3");
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (c.order() != ramsey_formula(ell, n))
    throw std::invalid_argument("coloring has order " + std::to_string(c.order()) + ", expected (ell-1)(n-1)+1 = " +
                                std::to_string(ramsey_formula(ell, n)));
  Solver solver(ell, params, seed);
  SearchResult out;
  out.certificate = solver.solve(c.red, n, 0);
  out.stages = std::move(solver.stages);
  if (out.certificate && !verify_certificate(c, *out.certificate, ell, n))
    throw GuaranteeViolated("internal certificate failed verification");
  return out;
}

std::string search_report_json(const SearchResult& r, int ell, int n, const RunParams& params, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["ell"] = ell;
  j["n"] = n;
  j["order"] = ramsey_formula(ell, n);
  j["seed"] = seed;
  j["params"] = nlohmann::ordered_json::parse(params_to_json(params));
  j["status"] = r.incomplete() ? "incomplete" : "certificate";
  j["certificate"] = r.certificate ? nlohmann::ordered_json::parse(certificate_to_json(*r.certificate, ell, n)) : nlohmann::ordered_json();
  auto& stages = j["stages"] = nlohmann::ordered_json::array();
  for (const auto& s : r.stages) {
    nlohmann::ordered_json e;
    e["level"] = s.level;
    e["order"] = s.order;
    e["n"] = s.n;
    e["stage"] = s.stage;
    e["outcome"] = s.outcome;
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const auto& c : s.checks) checks[c.name] = c.held;
    e["thresholds"] = std::move(checks);
    stages.push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace cycram
