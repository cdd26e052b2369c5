#include <chrono>
#include <ctime>
#include <iostream>
#include <map>

#include "cli.hpp"
#include "cycram/errors.hpp"
#include "cycram/extremal.hpp"
#include "cycram/oracles.hpp"
#include "cycram/search.hpp"

namespace cycram::cli {

namespace {

// Rows are deterministic; wall times and the timestamp live under "timing" so
// that reports can be compared with that key removed.
class Bench {
 public:
  template <class F>
  void row(const std::string& name, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Json r = body();
    const auto t1 = std::chrono::steady_clock::now();
    wall_[name] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r["name"] = name;
    rows_.push_back(std::move(r));
  }

  Json report(const std::string& suite) const {
    Json j;
    j["suite"] = suite;
    j["rows"] = rows_;
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timing"] = {{"timestamp", stamp}, {"wall_ms", wall_}};
    return j;
  }

 private:
  Json rows_ = Json::array();
  Json wall_ = Json::object();
};

void exact_suite(Bench& b) {
  std::vector<std::pair<int, int>> cases{{3, 3}, {4, 3}};
  for (int ell = 3; ell <= 8; ++ell) cases.push_back({ell, 2});
  for (int ell = 3; ell <= 8; ++ell) cases.push_back({ell, 1});
  for (auto [ell, n] : cases) {
    b.row("r(C_" + std::to_string(ell) + ",K_" + std::to_string(n) + ")", [&, ell = ell, n = n] {
      const int formula = ramsey_formula(ell, n);
      RamseyExactResult r = ramsey_exact(ell, n, formula + 1);
      Json j;
      j["ell"] = ell;
      j["n"] = n;
      j["value"] = r.value && !r.budget_exceeded ? Json(*r.value) : Json();
      j["formula"] = formula;
      j["match"] = r.value == formula;
      return j;
    });
  }
}

void pipeline_suite(Bench& b) {
  for (auto [ell, n] : std::vector<std::pair<int, int>>{{6, 3}, {8, 3}, {6, 4}}) {
    b.row("search(" + std::to_string(ell) + "," + std::to_string(n) + ")", [&, ell = ell, n = n] {
      int red = 0, blue = 0, incomplete = 0;
      std::map<std::string, int> stages;
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        EdgeColoring c{gen::gnp(ramsey_formula(ell, n), 0.5, seed)};
        SearchResult r = ramsey_search(c, ell, n, {}, seed);
        for (const auto& s : r.stages) ++stages[s.stage];
        if (r.incomplete()) ++incomplete;
        else if (r.certificate->kind == Certificate::Kind::RedCycle) ++red;
        else ++blue;
      }
      Json j;
      j["ell"] = ell;
      j["n"] = n;
      j["colorings"] = 200;
      j["red_cycle"] = red;
      j["blue_set"] = blue;
      j["incomplete"] = incomplete;
      j["success_rate"] = (red + blue) / 200.0;
      Json st = Json::object();
      for (const auto& [k, v] : stages) st[k] = v;
      j["stages"] = std::move(st);
      return j;
    });
  }
}

void oracle_suite(Bench& b) {
  for (int order : {20, 40, 60}) {
    const std::string tag = "gnp(" + std::to_string(order) + ",0.3)";
    b.row("find_cycle_exact " + tag, [order] {
      int found = 0, capacity = 0;
      for (std::uint64_t seed = 0; seed < 10; ++seed)
        for (int ell : {5, 8}) {
          try {
            found += find_cycle_exact(gen::gnp(order, 0.3, seed), ell).has_value();
          } catch (const CapacityError&) {
            ++capacity;
          }
        }
      return Json{{"instances", 20}, {"found", found}, {"capacity", capacity}};
    });
    b.row("independence_number " + tag, [order] {
      int total = 0;
      for (std::uint64_t seed = 0; seed < 10; ++seed) total += independence_number(gen::gnp(order, 0.3, seed));
      return Json{{"instances", 10}, {"alpha_sum", total}};
    });
  }
  b.row("hamilton_cycle K_{30,30}", [] {
    Cycle c = hamilton_cycle(gen::complete_bipartite(30, 30));
    return Json{{"instances", 1}, {"length", c.length()}};
  });
  b.row("pancyclic_cycle gnp(30,0.8)", [] {
    int ok = 0, ran = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Graph g = gen::gnp(30, 0.8, seed);
      if (2 * g.min_degree() < g.order()) continue;
      ++ran;
      for (int ell = 3; ell <= 30; ++ell) ok += std::holds_alternative<Cycle>(pancyclic_cycle(g, ell));
    }
    return Json{{"dirac_instances", ran}, {"cycles", ok}};
  });
}

}  // namespace

void add_bench(CLI::App& app, Action& action) {
  auto suite = std::make_shared<std::string>("oracles");
  auto out = std::make_shared<std::string>();
  CLI::App* sub = app.add_subcommand("bench", "Timed runs over a fixed corpus");
  sub->add_option("--suite", *suite, "exact | pipeline | oracles")->check(CLI::IsMember({"exact", "pipeline", "oracles"}));
  sub->add_option("--out", *out, "Write the JSON report here");
  sub->callback([=, &action] {
    action = [=] {
      Bench b;
      if (*suite == "exact") exact_suite(b);
      else if (*suite == "pipeline") pipeline_suite(b);
      else oracle_suite(b);
      Json j = b.report(*suite);
      if (out->empty()) std::cout << j.dump(2) << '\n';
      else write_file(*out, j.dump(2));
      for (const auto& r : j["rows"]) std::cout << r["name"].get<std::string>() << ": " << j["timing"]["wall_ms"][r["name"].get<std::string>()].get<double>() << " ms\n";
      return kOk;
    };
  });
}

}  // namespace cycram::cli
