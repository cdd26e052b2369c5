#include <cmath>
#include <iostream>

#include "cli.hpp"
#include "cycram/bfs.hpp"
#include "cycram/dense.hpp"
#include "cycram/graph_io.hpp"
#include "cycram/hubs.hpp"
#include "cycram/stability.hpp"

namespace cycram::cli {

namespace {

struct Common {
  std::string in, json;
  std::uint64_t seed = 0;
};

Json checks_json(const std::vector<std::pair<std::string, bool>>& checks) {
  Json j = Json::object();
  for (const auto& [name, held] : checks) j[name] = held;
  return j;
}

bool all_held(const Json& checks) {
  for (const auto& [k, v] : checks.items())
    if (!v.get<bool>()) return false;
  return true;
}

// The result goes to --json when given and to standard output otherwise; the
// summary line always goes to standard output.
int emit(const Common& c, const std::string& lemma, Json result, const std::string& summary) {
  Json j;
  j["lemma"] = lemma;
  j["input"] = c.in;
  j["seed"] = c.seed;
  for (auto& [k, v] : result.items()) j[k] = v;
  const bool ok = !j.contains("checks") || all_held(j["checks"]);
  j["invariants_held"] = ok;
  if (c.json.empty()) std::cout << j.dump(2) << '\n';
  else write_file(c.json, j.dump(2));
  std::cout << lemma << ": " << summary << (ok ? "" : " (invariant violated)") << '\n';
  return ok ? kOk : kFailure;
}

Json hub_json(const Hub& h) {
  Json j;
  j["u"] = h.u;
  j["eps"] = h.eps;
  j["a"] = h.a.to_vector();
  j["b"] = h.b.to_vector();
  j["d"] = h.d.to_vector();
  j["backbone"] = h.backbone.vertices;
  j["common_neighbor_floor"] = h.common_neighbor_floor;
  return j;
}

CLI::App* lemma_sub(CLI::App& parent, const std::string& name, const std::string& desc, const std::shared_ptr<Common>& c) {
  CLI::App* s = parent.add_subcommand(name, desc);
  s->add_option("--in", c->in, "Input graph (edge list, or graph6 with .g6)")->required();
  s->add_option("--seed", c->seed, "Random seed");
  s->add_option("--json", c->json, "Write the JSON result here");
  return s;
}

void bfs_cutoff(CLI::App& lemma, Action& action) {
  auto c = std::make_shared<Common>();
  auto root = std::make_shared<int>(0);
  auto gamma = std::make_shared<double>(2.0);
  CLI::App* s = lemma_sub(lemma, "bfs-cutoff", "Growth cutoff of the BFS layers", c);
  s->add_option("--root", *root, "BFS root");
  s->add_option("--gamma", *gamma, "Growth factor (> 1)");
  s->callback([=, &action] {
    action = [=] {
      Graph g = io::load_graph(c->in);
      BfsLayers b = bfs_layers(g, *root);
      const int m = growth_cutoff(b, *gamma);
      std::vector<int> sizes;
      for (const auto& l : b.layers) sizes.push_back(static_cast<int>(l.size()));
      bool minimal = true;
      for (int k = 0; k < m; ++k) minimal = minimal && b.cumulative(k + 1) > *gamma * b.cumulative(k);
      Json r;
      r["root"] = *root;
      r["gamma"] = *gamma;
      r["layer_sizes"] = sizes;
      r["m"] = m;
      r["checks"] = checks_json({{"cutoff_holds", b.cumulative(m + 1) <= *gamma * b.cumulative(m)},
                                 {"minimal", minimal},
                                 {"within_log_gamma_order", m <= log_base(g.order(), *gamma) + 1e-9}});
      return emit(*c, "bfs-cutoff", std::move(r), "m = " + std::to_string(m));
    };
  });
}

void cycle_range(CLI::App& lemma, Action& action) {
  auto c = std::make_shared<Common>();
  auto d1 = std::make_shared<int>(2);
  auto gamma = std::make_shared<double>(2.0);
  CLI::App* s = lemma_sub(lemma, "cycle-range", "A cycle with length in [d1, d1 + ceil(2 log_gamma N)]", c);
  s->add_option("--d1", *d1, "Lower end of the window");
  s->add_option("--gamma", *gamma, "Growth factor (> 1)");
  s->callback([=, &action] {
    action = [=] {
      Graph g = io::load_graph(c->in);
      Cycle cyc = cycle_in_range(g, *d1, *gamma);
      CycleRange w = cycle_length_window(g.order(), *d1, *gamma);
      Json r;
      r["d1"] = *d1;
      r["gamma"] = *gamma;
      r["window"] = {{"lo", w.lo}, {"hi", w.hi}};
      r["cycle"] = cyc.vertices;
      r["length"] = cyc.length();
      r["checks"] = checks_json({{"is_cycle", is_cycle(g, cyc)}, {"length_in_window", cyc.length() >= w.lo && cyc.length() <= w.hi}});
      return emit(*c, "cycle-range", std::move(r), "cycle of length " + std::to_string(cyc.length()));
    };
  });
}

void path_dense(CLI::App& lemma, Action& action) {
  auto c = std::make_shared<Common>();
  auto start = std::make_shared<int>(0);
  auto big_d = std::make_shared<int>(1);
  CLI::App* s = lemma_sub(lemma, "path-or-dense", "A path of length D or a dense subgraph on at most D vertices", c);
  s->add_option("--start", *start, "Start vertex");
  s->add_option("--D", *big_d, "Target length / size bound")->required();
  s->callback([=, &action] {
    action = [=] {
      Graph g = io::load_graph(c->in);
      PathOrDense out = path_or_dense(g, *start, *big_d);
      Json r;
      r["start"] = *start;
      r["D"] = *big_d;
      if (auto* p = std::get_if<Path>(&out)) {
        r["outcome"] = "path";
        r["path"] = p->vertices;
        r["checks"] = checks_json({{"is_path", is_path(g, *p)}, {"starts_at_start", p->vertices.front() == *start}, {"length_at_least_D", p->length() >= *big_d}});
        return emit(*c, "path-or-dense", std::move(r), "path of length " + std::to_string(p->length()));
      }
      const auto& h = std::get<DenseSubgraph>(out);
      const std::int64_t e = g.edges_within(h.vertices);
      const std::int64_t delta = g.min_degree();
      const Vertex last = h.walk.vertices.back();
      r["outcome"] = "dense";
      r["vertices"] = h.vertices.to_vector();
      r["walk"] = h.walk.vertices;
      r["edges"] = e;
      r["checks"] = checks_json({{"walk_is_path", is_path(g, h.walk)},
                                 {"size_at_most_D", h.vertices.count() <= *big_d},
                                 {"contains_last_neighbourhood", (g.neighbors(last) - h.vertices).empty()},
                                 {"edges_at_least_binom_delta_plus_1", e >= delta * (delta + 1) / 2},
                                 {"edge_count_matches", e == h.edges}});
      return emit(*c, "path-or-dense", std::move(r), "dense subgraph on " + std::to_string(h.vertices.count()) + " vertices");
    };
  });
}

void drc(CLI::App& lemma, Action& action) {
  auto c = std::make_shared<Common>();
  auto eps = std::make_shared<double>(0.5);
  auto params = std::make_shared<DrcParams>();
  CLI::App* s = lemma_sub(lemma, "drc", "Dependent random choice", c);
  s->add_option("--eps", *eps, "Epsilon in (0,1)");
  s->add_option("--delta0", params->delta0, "Edge exponent slack");
  s->add_option("--n0", params->n0, "Smallest order");
  s->add_option("--retries", params->retries, "Sampling rounds");
  s->callback([=, &action] {
    action = [=] {
      Graph g = io::load_graph(c->in);
      DrcOutcome out = dependent_random_choice(g, *eps, c->seed, *params);
      Json r;
      r["eps"] = *eps;
      if (auto* f = std::get_if<DrcFailure>(&out)) {
        r["outcome"] = "failure";
        r["attempts"] = f->attempts;
        r["best_threshold"] = f->best_threshold;
        r["required"] = f->required;
        r["reason"] = f->reason;
        emit(*c, "drc", std::move(r), "failed: " + f->reason);
        return kFailure;
      }
      const auto& d = std::get<DrcResult>(out);
      const int required = static_cast<int>(std::ceil(std::pow(g.order(), 1.0 - *eps) - 1e-9));
      r["outcome"] = "sets";
      r["u1"] = d.u1.to_vector();
      r["u2"] = d.u2.to_vector();
      r["witness_threshold"] = d.witness_threshold;
      r["attempts"] = d.attempts;
      r["checks"] = checks_json({{"disjoint", !d.u1.intersects(d.u2)},
                                 {"u1_pairs", pairwise_common_floor(g, d.u1, d.u2) >= required},
                                 {"u2_pairs", pairwise_common_floor(g, d.u2, d.u1) >= required}});
      return emit(*c, "drc", std::move(r), "|U1| = " + std::to_string(d.u1.count()) + ", |U2| = " + std::to_string(d.u2.count()));
    };
  });
}

void hub_build(CLI::App& lemma, Action& action) {
  auto c = std::make_shared<Common>();
  auto u = std::make_shared<int>(0);
  auto eps = std::make_shared<double>(0.5);
  auto params = std::make_shared<HubParams>();
  CLI::App* s = lemma_sub(lemma, "hub-build", "Build a (u, eps)-hub", c);
  s->add_option("--u", *u, "Hub size")->required();
  s->add_option("--eps", *eps, "Epsilon in (0,1)");
  s->add_option("--retries", params->retries, "Attempts");
  s->callback([=, &action] {
    action = [=] {
      Graph g = io::load_graph(c->in);
      HubOutcome out = build_hub(g, *u, *eps, c->seed, *params);
      Json r;
      if (auto* f = std::get_if<HubFailure>(&out)) {
        r["outcome"] = "failure";
        r["attempts"] = f->attempts;
        r["best_floor"] = f->best_floor;
        r["required_floor"] = f->required_floor;
        r["reason"] = f->reason;
        emit(*c, "hub-build", std::move(r), "failed: " + f->reason);
        return kFailure;
      }
      const Hub& h = std::get<Hub>(out);
      bool revalidated = true;
      try {
        revalidated = make_hub(g, h.backbone, h.d, h.u, h.eps) == h;
      } catch (const std::invalid_argument&) {
        revalidated = false;
      }
      r["outcome"] = "hub";
      r["hub"] = hub_json(h);
      r["checks"] = checks_json({{"revalidated", revalidated},
                                 {"common_neighbor_floor", h.common_neighbor_floor >= hub_bounds::floor_required(h.u, h.eps)},
                                 {"d_cap", h.d.count() <= hub_bounds::d_cap(h.u, h.eps)}});
      return emit(*c, "hub-build", std::move(r), "hub with u = " + std::to_string(h.u));
    };
  });
}

void hub_connect_cmd(CLI::App& lemma, Action& action) {
  auto c = std::make_shared<Common>();
  auto u = std::make_shared<int>(0);
  auto eps = std::make_shared<double>(0.5);
  auto pairs = std::make_shared<int>(1);
  auto length = std::make_shared<int>(2);
  CLI::App* s = lemma_sub(lemma, "hub-connect", "Build a hub, then connect backbone pairs by paths of given lengths", c);
  s->add_option("--u", *u, "Hub size")->required();
  s->add_option("--eps", *eps, "Epsilon in (0,1)");
  s->add_option("--pairs", *pairs, "Number of pairs");
  s->add_option("--length", *length, "Requested length, raised by one where parity demands");
  s->callback([=, &action] {
    action = [=] {
      Graph g = io::load_graph(c->in);
      HubOutcome out = build_hub(g, *u, *eps, c->seed);
      if (auto* f = std::get_if<HubFailure>(&out)) {
        Json r;
        r["outcome"] = "hub_failure";
        r["reason"] = f->reason;
        emit(*c, "hub-connect", std::move(r), "hub construction failed: " + f->reason);
        return kFailure;
      }
      const Hub& h = std::get<Hub>(out);
      const auto& bb = h.backbone.vertices;
      ConnectionRequest req;
      for (int i = 0; i < *pairs; ++i) {
        const std::size_t at = static_cast<std::size_t>(4 * i);
        if (at + 2 >= bb.size()) throw std::invalid_argument("too many pairs for the backbone");
        Vertex s0 = bb[at], t0 = bb[at + 2];
        req.pairs.push_back({s0, t0});
        req.lengths.push_back(bipartite_length_ok(h, s0, t0, *length) ? *length : *length + 1);
      }
      std::vector<Path> paths = hub_connect(g, h, req);
      bool endpoints = paths.size() == req.pairs.size(), lengths = endpoints, disjoint = true, contained = true;
      VertexSet seen(g.order());
      const VertexSet hv = h.vertices();
      Json pj = Json::array();
      for (std::size_t i = 0; i < paths.size(); ++i) {
        const Path& p = paths[i];
        pj.push_back(p.vertices);
        endpoints = endpoints && is_path(g, p) && p.vertices.front() == req.pairs[i].first && p.vertices.back() == req.pairs[i].second;
        lengths = lengths && p.length() == req.lengths[i];
        for (Vertex v : p.vertices) {
          disjoint = disjoint && !seen.contains(v);
          contained = contained && hv.contains(v);
          seen.insert(v);
        }
      }
      Json r;
      r["outcome"] = "paths";
      r["hub"] = hub_json(h);
      r["lengths"] = req.lengths;
      r["paths"] = std::move(pj);
      r["checks"] = checks_json({{"endpoints", endpoints}, {"exact_lengths", lengths}, {"disjoint", disjoint}, {"inside_hub", contained}});
      return emit(*c, "hub-connect", std::move(r), std::to_string(paths.size()) + " paths");
    };
  });
}

void stability(CLI::App& lemma, Action& action) {
  auto c = std::make_shared<Common>();
  auto ell = std::make_shared<int>(0);
  auto n = std::make_shared<int>(0);
  auto eta = std::make_shared<double>(0.5);
  auto sp = std::make_shared<StabilityParams>();
  sp->eps = 0.1;
  CLI::App* s = lemma_sub(lemma, "stability", "Near-clique block decomposition of a C_ell-free graph", c);
  s->add_option("--ell", *ell, "Cycle length")->required();
  s->add_option("--n", *n, "Clique order")->required();
  s->add_option("--eta", *eta, "Block tolerance in (0,1)");
  s->add_option("--eps", sp->eps, "Epsilon in (0,1)");
  s->callback([=, &action] {
    action = [=] {
      Graph g = io::load_graph(c->in);
      StabilityOutcome out = stability_decomposition(g, *ell, *n, *eta, c->seed, *sp);
      Json r;
      r["ell"] = *ell;
      r["n"] = *n;
      r["eta"] = *eta;
      r["eps"] = sp->eps;
      if (out.cycle) {
        r["outcome"] = "cycle";
        r["cycle"] = out.cycle->vertices;
        r["checks"] = checks_json({{"is_cycle", is_cycle(g, *out.cycle)}, {"length_is_ell", out.cycle->length() == *ell}});
        return emit(*c, "stability", std::move(r), "found a C_" + std::to_string(*ell));
      }
      r["outcome"] = "decomposition";
      r["blocks"] = out.decomposition.blocks;
      r["leftover"] = out.decomposition.leftover;
      r["hubs"] = out.hubs;
      r["hub_fallback"] = out.hub_fallback;
      r["guarantee_met"] = out.decomposition.guarantee_met;
      Json th = Json::object();
      for (const auto& t : out.checks) th[t.name] = t.held;
      r["thresholds"] = std::move(th);
      return emit(*c, "stability", std::move(r),
                  std::to_string(out.decomposition.blocks.size()) + " blocks, guarantee " + (out.decomposition.guarantee_met ? "met" : "not met"));
    };
  });
}

}  // namespace

void add_lemma(CLI::App& app, Action& action) {
  CLI::App* lemma = app.add_subcommand("lemma", "Run one structural operation and check its invariants");
  lemma->require_subcommand(1);
  bfs_cutoff(*lemma, action);
  cycle_range(*lemma, action);
  path_dense(*lemma, action);
  drc(*lemma, action);
  hub_build(*lemma, action);
  hub_connect_cmd(*lemma, action);
  stability(*lemma, action);
}

}  // namespace cycram::cli
