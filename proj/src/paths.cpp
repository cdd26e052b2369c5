#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "cycram/errors.hpp"
#include "cycram/extremal.hpp"

namespace cycram {

VertexSet turan_independent_set(const Graph& g) {
  VertexSet alive = g.all_vertices();
  VertexSet chosen(g.order());
  while (!alive.empty()) {
    Vertex best = -1;
    int best_deg = 0;
    alive.for_each([&](Vertex v) {
      int d = g.degree_into(v, alive);
      if (best == -1 || d < best_deg) {
        best = v;
        best_deg = d;
      }
    });
    chosen.insert(best);
    alive -= g.neighbors(best);
    alive.erase(best);
  }
  return chosen;
}

namespace {

// Closing a path whose ends have all their neighbours on it: some i has
// v0 ~ v_{i+1} and vk ~ v_i, giving v0..v_i vk..v_{i+1} v0.
std::optional<std::vector<Vertex>> close_path(const Graph& g, const std::vector<Vertex>& p) {
  const std::size_t k = p.size() - 1;
  if (p.size() < 3) return std::nullopt;
  if (g.adjacent(p.front(), p.back())) return p;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    if (g.adjacent(p.front(), p[i + 1]) && g.adjacent(p.back(), p[i])) {
      std::vector<Vertex> c(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      for (std::size_t j = k; j > i; --j) c.push_back(p[j]);
      return c;
    }
  }
  return std::nullopt;
}

class PathGrower {
 public:
  PathGrower(const Graph& g, const VertexSet& within, const PathSearchOptions& opts)
      : g_(g), within_(within), opts_(opts), on_(g.order()) {}

  Path run(int target) {
    Vertex start = within_.first();
    if (start == -1) return {};
    path_ = {start};
    on_.insert(start);
    while (true) {
      extend_both();
      if (static_cast<int>(path_.size()) - 1 >= target) break;
      if (reopen_cycle()) continue;
      if (rotate()) continue;
      break;
    }
    return Path{path_};
  }

 private:
  VertexSet free_nbrs(Vertex v) const { return (g_.neighbors(v) & within_) - on_; }

  void extend_tail() {
    while (true) {
      VertexSet f = free_nbrs(path_.back());
      if (f.empty()) return;
      // Warnsdorff: step to the free neighbour with the fewest onward options.
      Vertex best = -1;
      int best_count = 0;
      f.for_each([&](Vertex w) {
        int c = g_.degree_into(w, within_) - g_.degree_into(w, on_);
        if (best == -1 || c < best_count) {
          best = w;
          best_count = c;
        }
      });
      path_.push_back(best);
      on_.insert(best);
    }
  }

  void extend_both() {
    extend_tail();
    std::reverse(path_.begin(), path_.end());
    extend_tail();
  }

  bool reopen_cycle() {
    auto cyc = close_path(g_, path_);
    if (!cyc) return false;
    const std::size_t m = cyc->size();
    for (std::size_t i = 0; i < m; ++i) {
      VertexSet f = free_nbrs((*cyc)[i]);
      if (f.empty()) continue;
      Vertex w = f.first();
      std::vector<Vertex> np{w};
      for (std::size_t j = 0; j < m; ++j) np.push_back((*cyc)[(i + j) % m]);
      path_ = std::move(np);
      on_.insert(w);
      return true;
    }
    return false;
  }

  // Pósa rotations with the first vertex fixed, breadth first over endpoints.
  bool rotate_tail() {
    std::deque<std::vector<Vertex>> queue{path_};
    VertexSet seen_ends(g_.order());
    seen_ends.insert(path_.back());
    int budget = opts_.rotation_budget;
    while (!queue.empty() && budget > 0) {
      std::vector<Vertex> p = std::move(queue.front());
      queue.pop_front();
      const std::size_t k = p.size() - 1;
      for (std::size_t i = 0; i + 1 < k && budget > 0; ++i) {
        if (!g_.adjacent(p.back(), p[i])) continue;
        --budget;
        Vertex end = p[i + 1];
        if (seen_ends.contains(end)) continue;
        seen_ends.insert(end);
        std::vector<Vertex> q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        for (std::size_t j = k; j > i; --j) q.push_back(p[j]);
        if (!free_nbrs(end).empty() || reopens(q)) {
          path_ = std::move(q);
          return true;
        }
        queue.push_back(std::move(q));
      }
    }
    return false;
  }

  bool reopens(const std::vector<Vertex>& q) const {
    auto cyc = close_path(g_, q);
    if (!cyc) return false;
    for (Vertex v : *cyc)
      if (!free_nbrs(v).empty()) return true;
    return false;
  }

  bool rotate() {
    if (rotate_tail()) return true;
    std::reverse(path_.begin(), path_.end());
    return rotate_tail();
  }

  const Graph& g_;
  VertexSet within_;
  PathSearchOptions opts_;
  VertexSet on_;
  std::vector<Vertex> path_;
};

std::optional<Path> exhaustive_path(const Graph& g, int k) {
  const int n = g.order();
  std::vector<Vertex> cur;
  VertexSet used(n);
  std::function<bool(Vertex)> dfs = [&](Vertex v) {
    cur.push_back(v);
    used.insert(v);
    if (static_cast<int>(cur.size()) - 1 >= k) return true;
    bool found = false;
    (g.neighbors(v) - used).for_each([&](Vertex w) {
      if (!found && dfs(w)) found = true;
    });
    if (found) return true;
    cur.pop_back();
    used.erase(v);
    return false;
  };
  for (Vertex s = 0; s < n; ++s)
    if (dfs(s)) return Path{cur};
  return std::nullopt;
}

}  // namespace

Path extend_long_path(const Graph& g, const VertexSet& within, int target, const PathSearchOptions& opts) {
  return PathGrower(g, within, opts).run(target);
}

std::optional<Path> long_path(const Graph& g, int k, const PathSearchOptions& opts) {
  if (k < 1) throw std::invalid_argument("path length must be at least 1");
  if (k > g.order() - 1) return std::nullopt;
  const bool guaranteed = g.average_degree() > k - 1;

  auto components = connected_components(g);
  auto density = [&](const std::vector<Vertex>& c) {
    return 2.0 * static_cast<double>(g.edges_within(VertexSet::of(g.order(), c))) / static_cast<double>(c.size());
  };
  std::stable_sort(components.begin(), components.end(),
                   [&](const auto& a, const auto& b) { return density(a) > density(b); });

  for (const auto& comp : components) {
    if (static_cast<int>(comp.size()) < k + 1) continue;
    VertexSet alive = VertexSet::of(g.order(), comp);
    if (density(comp) > k - 1) {
      // Strip vertices of degree <= (k-1)/2; each removal loses at most (k-1)/2
      // edges, so a dense remainder survives.
      VertexSet core = alive;
      bool changed = true;
      while (changed) {
        changed = false;
        core.for_each([&](Vertex v) {
          if (core.contains(v) && 2 * g.degree_into(v, core) <= k - 1) {
            core.erase(v);
            changed = true;
          }
        });
      }
      for (const auto& part : connected_components(g, core)) {
        Path p = extend_long_path(g, VertexSet::of(g.order(), part), k, opts);
        if (p.length() >= k) return p;
      }
    }
    Path p = extend_long_path(g, alive, k, opts);
    if (p.length() >= k) return p;
  }
  if (g.order() <= opts.exhaustive_order)
    if (auto p = exhaustive_path(g, k)) return p;
  if (guaranteed) throw GuaranteeViolated("no path of length " + std::to_string(k) + " found although d(G) > k - 1");
  return std::nullopt;
}

Cycle hamilton_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3 || 2 * g.min_degree() < n)
    throw GuaranteeUnavailable("min_degree >= order/2", "Hamilton cycle construction needs δ(G) >= v(G)/2 and v(G) >= 3");
  Path p = extend_long_path(g, g.all_vertices(), n - 1);
  if (p.length() == n - 1)
    if (auto c = close_path(g, p.vertices)) return Cycle{*c};
  throw GuaranteeViolated("rotation-extension failed in the Dirac regime");
}

}  // namespace cycram
