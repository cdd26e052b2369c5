#include <cmath>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "cycram/errors.hpp"
#include "cycram/extremal.hpp"
#include "cycram/graph_io.hpp"
#include "cycram/oracles.hpp"
#include "cycram/witness.hpp"

namespace cycram {

namespace {

const char* status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Certified: return "certified";
    case ClaimStatus::Asserted: return "asserted";
    case ClaimStatus::Estimated: return "estimated";
  }
  return "";
}

// G(N,p) by geometric skips over the pairs u < v in row order.
Graph sample_gnp(int order, double p, Rng& rng) {
  GraphBuilder b(order);
  if (order < 2 || p <= 0) return std::move(b).build();
  const double log_q = std::log1p(-p);
  Vertex u = 0, v = 0;
  for (;;) {
    std::int64_t skip = 0;
    if (p < 1) skip = static_cast<std::int64_t>(std::floor(std::log1p(-uniform01(rng)) / log_q));
    std::int64_t step = skip + 1;
    while (step > 0 && u < order - 1) {
      std::int64_t room = order - 1 - v;
      if (step <= room) {
        v += static_cast<Vertex>(step);
        step = 0;
      } else {
        step -= room;
        ++u;
        v = u;
      }
    }
    if (u >= order - 1) break;
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

// Largest independent set found by the greedy bound on random induced subgraphs.
int estimate_alpha(const Graph& g, int rounds, Rng& rng) {
  int best = turan_independent_set(g).count();
  for (int r = 0; r < rounds; ++r) {
    VertexSet keep(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      if (uniform01(rng) < 0.9) keep.insert(v);
    best = std::max(best, turan_independent_set(induced_subgraph(g, keep).graph).count());
  }
  return best;
}

nlohmann::ordered_json stats_json(const RandomStats& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["eps"] = s.eps;
  j["target_order"] = s.target_order;
  j["p"] = s.p;
  j["explicit_p"] = s.explicit_p;
  j["ell0"] = s.ell0;
  j["short_cycles"] = s.short_cycles;
  j["deleted"] = s.deleted;
  j["attempts"] = s.attempts;
  j["deleted_within_half"] = s.deleted_within_half;
  j["alpha_below_n"] = s.alpha_below_n;
  return j;
}

nlohmann::ordered_json report_json(const WitnessReport& w) {
  nlohmann::ordered_json j;
  j["method"] = w.method == WitnessMethod::ChvatalHarary ? "ch" : "random";
  j["order"] = w.coloring.order();
  j["red_edges"] = w.coloring.red.edge_count();
  j["ell_avoided"] = {{"lo", w.ell_lo}, {"hi", w.ell_hi}};
  j["alpha_red"] = w.alpha;
  j["alpha_exact"] = w.alpha_exact;
  auto& claims = j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : w.claims) claims.push_back({{"name", c.name}, {"status", status_name(c.status)}});
  j["bound"] = "r(C_k,K_" + std::to_string(w.bound_n()) + ") >= " + std::to_string(w.coloring.order() + 1) + " for k in [" +
               std::to_string(w.ell_lo) + "," + std::to_string(w.ell_hi) + "]";
  j["random"] = w.random ? stats_json(*w.random) : nlohmann::ordered_json();
  return j;
}

}  // namespace

EdgeColoring chvatal_harary(int ell, int n) {
  if (ell < 3 || n < 2) throw std::invalid_argument("chvatal_harary needs ell >= 3 and n >= 2");
  const int k = ell - 1;
  GraphBuilder b(k * (n - 1));
  for (int c = 0; c < n - 1; ++c)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) b.add_edge(c * k + i, c * k + j);
  return {std::move(b).build()};
}

WitnessReport chvatal_harary_report(int ell, int n) {
  WitnessReport w;
  w.coloring = chvatal_harary(ell, n);
  w.method = WitnessMethod::ChvatalHarary;
  w.ell_lo = ell;
  w.ell_hi = std::max(ell, w.coloring.order());
  w.alpha = n - 1;
  w.alpha_exact = true;
  const bool exact = w.coloring.order() <= kExactIndependenceLimit;
  if (exact && !verify_witness(w, w.ell_lo, w.ell_hi, n)) throw GuaranteeViolated("Chvatal-Harary coloring failed verification");
  const ClaimStatus st = exact ? ClaimStatus::Certified : ClaimStatus::Asserted;
  w.claims = {{"no_red_long_cycle", st}, {"alpha_red", st}};
  return w;
}

long long enumerate_short_cycles(const Graph& g, int max_len, const std::function<void(const std::vector<Vertex>&)>& visit,
                                 long long limit) {
  long long count = 0;
  std::vector<Vertex> path;
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  std::function<void(Vertex)> dfs = [&](Vertex s) {
    Vertex cur = path.back();
    const VertexSet& nb = g.neighbors(cur);
    for (Vertex x = nb.next(s + 1); x != -1; x = nb.next(x + 1)) {
      if (on[static_cast<std::size_t>(x)]) continue;
      path.push_back(x);
      if (static_cast<int>(path.size()) >= 3 && path[1] < x && g.adjacent(x, s)) {
        if (++count > limit) throw CapacityError("more than " + std::to_string(limit) + " short cycles");
        visit(path);
      }
      if (static_cast<int>(path.size()) < max_len) {
        on[static_cast<std::size_t>(x)] = 1;
        dfs(s);
        on[static_cast<std::size_t>(x)] = 0;
      }
      path.pop_back();
    }
  };
  if (max_len < 3) return 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    on[static_cast<std::size_t>(s)] = 1;
    dfs(s);
    on[static_cast<std::size_t>(s)] = 0;
  }
  return count;
}

RandomWitnessOutcome random_lower_bound(int n, double eps, std::uint64_t seed, const RandomWitnessOptions& opts) {
  if (n < 2) throw std::invalid_argument("random_lower_bound needs n >= 2");
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0,1)");
  if (opts.retries < 1) throw std::invalid_argument("retries must be positive");
  if (opts.p && !(*opts.p > 0 && *opts.p <= 1)) throw std::invalid_argument("p must lie in (0,1]");
  if (opts.ell0 && *opts.ell0 < 3) throw std::invalid_argument("ell0 must be at least 3");
  if (!opts.p && n < opts.min_n)
    throw std::invalid_argument("n = " + std::to_string(n) + " is below the minimum " + std::to_string(opts.min_n) +
                                "; supply p explicitly for smaller n");
  const double lg = std::log2(static_cast<double>(n));
  const double lglg = lg > 1 ? std::log2(lg) : 0;
  const double order_real = std::ceil(2 * n * lg);
  if (order_real > opts.max_order)
    throw CapacityError("sample order " + std::to_string(static_cast<long long>(order_real)) + " exceeds " + std::to_string(opts.max_order));

  RandomStats base;
  base.n = n;
  base.eps = eps;
  base.target_order = static_cast<int>(order_real);
  base.explicit_p = opts.p.has_value();
  base.p = opts.p ? *opts.p : 3 * lglg / (n - 1);
  if (opts.ell0) base.ell0 = *opts.ell0;
  else base.ell0 = std::max(3, lglg > 0 ? static_cast<int>(std::floor((1 - eps) * lg / lglg)) : 3);

  Rng rng(seed);
  WitnessFailure failure;
  failure.stats = base;
  for (int attempt = 1; attempt <= opts.retries; ++attempt) {
    RandomStats st = base;
    st.attempts = attempt;
    Graph g = sample_gnp(st.target_order, st.p, rng);
    VertexSet deleted(g.order());
    st.short_cycles = enumerate_short_cycles(
        g, st.ell0,
        [&](const std::vector<Vertex>& c) {
          for (Vertex v : c)
            if (deleted.contains(v)) return;
          deleted.insert(c.front());
        },
        opts.max_short_cycles);
    st.deleted = deleted.count();
    st.deleted_within_half = 2 * st.deleted <= st.target_order;

    WitnessReport w;
    w.coloring = {induced_subgraph(g, g.all_vertices() - deleted).graph};
    w.method = WitnessMethod::Random;
    w.ell_lo = 3;
    w.ell_hi = st.ell0;
    if (enumerate_short_cycles(w.coloring.red, st.ell0, [](const std::vector<Vertex>&) {}, opts.max_short_cycles) != 0)
      throw GuaranteeViolated("short cycle survived deletion");
    w.claims.push_back({"girth_above_ell0", ClaimStatus::Certified});
    if (w.coloring.order() <= kExactIndependenceLimit) {
      w.alpha = independence_number(w.coloring.red);
      w.alpha_exact = true;
      w.claims.push_back({"alpha_red", ClaimStatus::Certified});
    } else {
      w.alpha = estimate_alpha(w.coloring.red, opts.estimate_rounds, rng);
      w.claims.push_back({"alpha_red", ClaimStatus::Estimated});
    }
    st.alpha_below_n = w.alpha < n;
    w.random = st;
    if (st.deleted_within_half && st.alpha_below_n) return w;
    failure.stats = st;
    if (!failure.best || failure.best->coloring.order() < w.coloring.order()) failure.best = std::move(w);
  }
  return failure;
}

bool ExpectationDisplays::short_cycles_below_order() const { return log_short_cycles < std::log(order); }

ExpectationDisplays expectation_displays(double n, double eps) {
  if (!(n > 4)) throw std::invalid_argument("expectation displays need n > 4");
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0,1)");
  ExpectationDisplays d;
  const double lg = std::log2(n), lglg = std::log2(lg);
  d.n = n;
  d.order = 2 * n * lg;
  d.p = 3 * lglg / (n - 1);
  d.ell0 = (1 - eps) * lg / lglg;
  d.log_independent_sets = n * (1 + std::log(d.order / n) - d.p * (n - 1) / 2);
  d.log_short_cycles = std::log(2.0) + d.ell0 * std::log(d.order * d.p);
  return d;
}

bool verify_witness(const WitnessReport& w, int ell_lo, int ell_hi, int n, bool accept_estimate) {
  const Graph& red = w.coloring.red;
  for (int k = std::max(3, ell_lo); k <= std::min(ell_hi, red.order()); ++k)
    if (find_cycle_exact(red, k)) return false;
  if (red.order() <= kExactIndependenceLimit) {
    const int alpha = independence_number(red);
    if (w.alpha_exact && alpha != w.alpha) return false;
    return alpha < n;
  }
  if (!accept_estimate) throw CapacityError("order " + std::to_string(red.order()) + " is beyond the exact independence limit");
  return w.alpha < n;
}

std::string witness_report_json(const WitnessReport& w) {
  nlohmann::ordered_json j;
  j["status"] = "witness";
  j["report"] = report_json(w);
  return j.dump(2);
}

std::string witness_failure_json(const WitnessFailure& f) {
  nlohmann::ordered_json j;
  j["status"] = "failure";
  j["stats"] = stats_json(f.stats);
  j["best"] = f.best ? report_json(*f.best) : nlohmann::ordered_json();
  return j.dump(2);
}

void save_witness(const std::string& stem, const WitnessReport& w) {
  io::save_graph(stem + ".el", w.coloring.red);
  std::ofstream out(stem + ".json");
  if (!out) throw std::runtime_error("cannot write " + stem + ".json");
  out << witness_report_json(w) << '\n';
}

}  // namespace cycram
