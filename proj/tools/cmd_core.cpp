#include <fstream>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "cycram/errors.hpp"
#include "cycram/graph_io.hpp"
#include "cycram/oracles.hpp"
#include "cycram/search.hpp"
#include "cycram/witness.hpp"

namespace cycram::cli {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string range_text(int lo, int hi) { return lo == hi ? std::to_string(lo) : "k in [" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

}  // namespace

void add_witness(CLI::App& app, Action& action) {
  struct Opts {
    int ell = 0, n = 0;
    std::string method = "ch", out;
    std::uint64_t seed = 0;
    double eps = 0.1;
    std::optional<double> p;
    std::optional<int> ell0, min_n, retries;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("witness", "Lower-bound colorings: Chvatal-Harary or the random construction");
  sub->add_option("--ell", o->ell, "Cycle length (ch)");
  sub->add_option("--n", o->n, "Clique order")->required();
  sub->add_option("--method", o->method, "ch | random")->check(CLI::IsMember({"ch", "random"}));
  sub->add_option("--seed", o->seed, "Random seed");
  sub->add_option("--out", o->out, "Output stem: writes STEM.el and STEM.json");
  sub->add_option("--p", o->p, "Edge probability (random)");
  sub->add_option("--eps", o->eps, "Epsilon of the random construction");
  sub->add_option("--ell0", o->ell0, "Short-cycle bound (random)");
  sub->add_option("--min-n", o->min_n, "Smallest n accepted without --p");
  sub->add_option("--retries", o->retries, "Sampling attempts (random)");
  sub->callback([o, &action] {
    action = [o] {
      if (o->method == "ch") {
        if (o->ell == 0) throw std::invalid_argument("--ell is required for --method ch");
        WitnessReport w = chvatal_harary_report(o->ell, o->n);
        if (!o->out.empty()) save_witness(o->out, w);
        std::cout << "r(C_" << o->ell << ",K_" << o->n << ") >= " << w.coloring.order() + 1 << '\n';
        return kOk;
      }
      RandomWitnessOptions ro;
      ro.p = o->p;
      ro.ell0 = o->ell0;
      if (o->min_n) ro.min_n = *o->min_n;
      if (o->retries) ro.retries = *o->retries;
      RandomWitnessOutcome r;
      try {
        r = random_lower_bound(o->n, o->eps, o->seed, ro);
      } catch (const CapacityError& e) {
        std::cerr << "generation failed: " << e.what() << '\n';
        return kFailure;
      }
      if (auto* w = std::get_if<WitnessReport>(&r)) {
        if (!o->out.empty()) save_witness(o->out, *w);
        std::cout << "r(C_" << range_text(w->ell_lo, w->ell_hi) << ",K_" << o->n << ") >= " << w->coloring.order() + 1
                  << " (alpha " << (w->alpha_exact ? "exact" : "estimated") << " " << w->alpha << ")\n";
        return kOk;
      }
      const auto& f = std::get<WitnessFailure>(r);
      if (!o->out.empty()) {
        if (f.best) io::save_graph(o->out + ".el", f.best->coloring.red);
        write_file(o->out + ".json", witness_failure_json(f));
      }
      std::cout << "generation failed after " << f.stats.attempts << " attempts (deleted " << f.stats.deleted << " of "
                << f.stats.target_order << ", alpha below n: " << (f.stats.alpha_below_n ? "yes" : "no") << ")\n";
      if (f.best)
        std::cout << "best residual: order " << f.best->coloring.order() << ", girth above " << f.best->ell_hi << ", alpha "
                  << (f.best->alpha_exact ? "exact " : "estimated ") << f.best->alpha << '\n';
      return kFailure;
    };
  });
}

void add_search(CLI::App& app, Action& action) {
  struct Opts {
    int ell = 0, n = 0;
    std::string in, params, out;
    std::optional<std::uint64_t> coloring_seed;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("search", "Find a red C_ell or a blue K_n in a coloring of order (ell-1)(n-1)+1");
  sub->add_option("--ell", o->ell, "Cycle length")->required();
  sub->add_option("--n", o->n, "Clique order")->required();
  auto* in = sub->add_option("--in", o->in, "Red graph (edge list, or graph6 with .g6)");
  auto* rc = sub->add_option("--random-coloring", o->coloring_seed, "Seed of a uniformly random coloring");
  in->excludes(rc);
  sub->add_option("--params", o->params, "RunParams JSON file");
  sub->add_option("--seed", o->seed, "Search seed");
  sub->add_option("--out", o->out, "Write the JSON report here");
  sub->callback([o, &action] {
    action = [o] {
      if (o->in.empty() && !o->coloring_seed) throw std::invalid_argument("one of --in or --random-coloring is required");
      RunParams params;
      if (!o->params.empty()) params = params_from_json(read_text(o->params));
      EdgeColoring c;
      if (o->coloring_seed) c.red = gen::gnp(ramsey_formula(o->ell, o->n), 0.5, *o->coloring_seed);
      else c.red = io::load_graph(o->in);
      SearchResult r = ramsey_search(c, o->ell, o->n, params, o->seed);
      const std::string report = search_report_json(r, o->ell, o->n, params, o->seed);
      if (!o->out.empty()) write_file(o->out, report);
      if (r.incomplete()) {
        std::cout << "incomplete: no certificate within the configured limits\n";
        return kIncomplete;
      }
      const Certificate& cert = *r.certificate;
      std::cout << (cert.kind == Certificate::Kind::RedCycle ? "red C_" + std::to_string(o->ell) : "blue K_" + std::to_string(o->n)) << ":";
      for (Vertex v : cert.vertices) std::cout << ' ' << v;
      std::cout << " (verified)\n";
      return kOk;
    };
  });
}

void add_exact(CLI::App& app, Action& action) {
  struct Opts {
    int ell = 0, n = 0, threads = 1;
    std::optional<int> nmax;
    std::string json;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("exact", "Exhaustive r(C_ell,K_n) for tiny parameters");
  sub->add_option("--ell", o->ell, "Cycle length")->required();
  sub->add_option("--n", o->n, "Clique order")->required();
  sub->add_option("--nmax", o->nmax, "Largest order examined (default: formula value + 1)");
  sub->add_option("--threads", o->threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--json", o->json, "Write a JSON result here");
  sub->callback([o, &action] {
    action = [o] {
      const int formula = ramsey_formula(o->ell, o->n);
      RamseyExactOptions opts;
      opts.threads = o->threads;
      RamseyExactResult r = ramsey_exact(o->ell, o->n, o->nmax.value_or(formula + 1), opts);
      const bool known = r.value && !r.budget_exceeded;
      const bool match = known && *r.value == formula;
      if (!o->json.empty()) {
        Json j;
        j["ell"] = o->ell;
        j["n"] = o->n;
        j["nmax"] = o->nmax.value_or(formula + 1);
        j["value"] = known ? Json(*r.value) : Json();
        j["formula"] = formula;
        j["match"] = match;
        j["searched_to"] = r.searched_to;
        j["budget_exceeded"] = r.budget_exceeded;
        j["avoiding_counts"] = r.avoiding_counts;
        write_file(o->json, j.dump(2));
      }
      if (!known) {
        std::cout << "r = Unknown (" << (r.budget_exceeded ? "budget exceeded" : "no value") << " up to order " << r.searched_to << ")\n";
        return kIncomplete;
      }
      std::cout << "r = " << *r.value << " (formula: " << formula << ", ";
      if (match) std::cout << "match)\n";
      else if (o->ell == 3 && o->n == 3) std::cout << "MISMATCH: (3,3) is the known exception to the formula)\n";
      else std::cout << "MISMATCH)\n";
      return kOk;
    };
  });
}

}  // namespace cycram::cli
