#include <algorithm>
#include <stdexcept>

#include "cycram/absorb.hpp"
#include "cycram/errors.hpp"
#include "cycram/extremal.hpp"
#include "cycram/oracles.hpp"

namespace cycram {

namespace {

constexpr long kSearchBudget = 200000;

// Depth-first search for an x-y path with exactly `len` edges whose inner
// vertices lie in `allowed`, lowest index first, bounded by a node budget.
struct ExactPathSearch {
  const Graph& g;
  const VertexSet& allowed;
  Vertex target;
  long budget = kSearchBudget;
  std::vector<Vertex> path;
  VertexSet used;

  bool extend(int remaining) {
    if (--budget < 0) return false;
    Vertex cur = path.back();
    if (remaining == 1) return g.adjacent(cur, target);
    if (remaining == 2) {
      Vertex mid = (g.neighbors(cur) & g.neighbors(target) & (allowed - used)).first();
      if (mid == -1) return false;
      path.push_back(mid);
      return true;
    }
    bool ok = false;
    (g.neighbors(cur) & (allowed - used)).for_each([&](Vertex next) {
      if (ok || budget < 0) return;
      path.push_back(next);
      used.insert(next);
      if (extend(remaining - 1)) {
        ok = true;
        return;
      }
      used.erase(next);
      path.pop_back();
    });
    return ok;
  }
};

std::optional<std::vector<Vertex>> exact_path(const Graph& g, const VertexSet& allowed, Vertex x, Vertex y, int len) {
  if (len < 1 || x == y) return std::nullopt;
  ExactPathSearch s{g, allowed, y, kSearchBudget, {x}, VertexSet(g.order())};
  s.used.insert(x);
  s.used.insert(y);
  if (!s.extend(len)) return std::nullopt;
  s.path.push_back(y);
  return s.path;
}

[[noreturn]] void construction_failed(const Graph& g, const BlockState& b, const std::string& what) {
  if (block_hypotheses(g, b)) throw GuaranteeViolated(what + " failed under the block hypotheses");
  throw GuaranteeUnavailable("block minimum degree 0.9|V| and |R| <= 0.1|V|", what + " failed; the block hypotheses do not hold");
}

// Ways to leave an absorbed vertex towards an attachment: the vertices from x
// to the path end, followed by the attachment.
std::vector<std::vector<Vertex>> exits(const BlockState& b, Vertex x) {
  for (const auto& ap : b.paths) {
    const auto& vs = ap.path.vertices;
    auto it = std::find(vs.begin(), vs.end(), x);
    if (it == vs.end()) continue;
    std::vector<Vertex> front(std::make_reverse_iterator(it + 1), vs.rend());
    front.push_back(ap.a);
    std::vector<Vertex> back(it, vs.end());
    back.push_back(ap.b);
    if (back.size() < front.size()) return {back, front};
    return {front, back};
  }
  return {{x}};
}

const AbsorbedPath* owner(const BlockState& b, Vertex x) {
  for (const auto& ap : b.paths)
    if (std::find(ap.path.vertices.begin(), ap.path.vertices.end(), x) != ap.path.vertices.end()) return &ap;
  return nullptr;
}

}  // namespace

VertexSet BlockState::absorbed() const {
  VertexSet r(core.universe());
  for (const auto& ap : paths)
    for (Vertex v : ap.path.vertices) r.insert(v);
  return r;
}

BlockState make_block(const Graph& g, const std::vector<Vertex>& core) {
  BlockState b;
  b.core = VertexSet::of(g.order(), core);
  b.available = b.core;
  return b;
}

bool is_absorbable(const Graph& g, const BlockState& b) {
  VertexSet seen(g.order()), attach(g.order());
  for (const auto& ap : b.paths) {
    if (ap.path.vertices.empty() || ap.path.length() > 2 || !is_path(g, ap.path)) return false;
    for (Vertex v : ap.path.vertices) {
      if (v < 0 || v >= g.order() || seen.contains(v) || b.core.contains(v)) return false;
      seen.insert(v);
    }
    if (ap.a == ap.b || !b.core.contains(ap.a) || !b.core.contains(ap.b)) return false;
    if (attach.contains(ap.a) || attach.contains(ap.b)) return false;
    attach.insert(ap.a);
    attach.insert(ap.b);
    if (!g.adjacent(ap.path.vertices.front(), ap.a) || !g.adjacent(ap.path.vertices.back(), ap.b)) return false;
  }
  return true;
}

bool block_hypotheses(const Graph& g, const BlockState& b) {
  const int v = b.core.count();
  bool dense = true;
  b.core.for_each([&](Vertex x) { dense = dense && g.degree_into(x, b.core) >= 0.9 * v - 1e-9; });
  return dense && b.absorbed().count() <= 0.1 * v + 1e-9 && is_absorbable(g, b);
}

Path block_path(const Graph& g, const BlockState& b, Vertex x, Vertex y, int len) {
  const VertexSet w = b.whole();
  if (x == y || x < 0 || y < 0 || x >= g.order() || y >= g.order() || !w.contains(x) || !w.contains(y))
    throw std::invalid_argument("block_path needs distinct endpoints in the block");
  const bool outer = !b.core.contains(x) || !b.core.contains(y);
  if (len < (outer ? 6 : 2) || len > 2 * w.count() / 3)
    throw std::invalid_argument("block_path length " + std::to_string(len) + " outside the window");

  std::vector<std::vector<Vertex>> xs = exits(b, x), ys = exits(b, y);
  const AbsorbedPath* px = owner(b, x);
  if (px && px == owner(b, y)) {
    const auto& vs = px->path.vertices;
    bool x_first = std::find(vs.begin(), vs.end(), x) < std::find(vs.begin(), vs.end(), y);
    auto pick = [](const std::vector<std::vector<Vertex>>& opts, Vertex att) {
      return opts[0].back() == att ? std::vector<std::vector<Vertex>>{opts[0]} : std::vector<std::vector<Vertex>>{opts[1]};
    };
    xs = pick(xs, x_first ? px->a : px->b);
    ys = pick(ys, x_first ? px->b : px->a);
  }
  for (const auto& ex : xs)
    for (const auto& ey : ys) {
      Vertex s = ex.back(), t = ey.back();
      if (s == t) continue;
      const int middle = len - static_cast<int>(ex.size() - 1) - static_cast<int>(ey.size() - 1);
      auto mid = exact_path(g, b.core, s, t, middle);
      if (!mid) continue;
      Path p;
      p.vertices.assign(ex.begin(), ex.end() - 1);
      p.vertices.insert(p.vertices.end(), mid->begin(), mid->end());
      p.vertices.insert(p.vertices.end(), ey.rbegin() + 1, ey.rend());
      if (!is_path(g, p) || p.length() != len) throw GuaranteeViolated("block_path assembled an invalid path");
      return p;
    }
  construction_failed(g, b, "block_path");
}

Cycle block_cycle(const Graph& g, const BlockState& b, int len) {
  const VertexSet w = b.whole();
  if (len < 3 || len > w.count()) throw std::invalid_argument("block_cycle length " + std::to_string(len) + " outside [3, |W|]");
  std::optional<Cycle> out;
  if (len <= b.core.count()) {
    Subgraph sub = induced_subgraph(g, b.core);
    if (2 * sub.graph.min_degree() >= sub.graph.order()) {
      PancyclicOutcome r = pancyclic_cycle(sub.graph, len);
      if (auto* c = std::get_if<Cycle>(&r)) out = Cycle{sub.lift(c->vertices)};
    }
    for (Vertex v = b.core.first(); !out && v != -1; v = b.core.next(v + 1)) {
      (g.neighbors(v) & b.core).for_each([&](Vertex u) {
        if (out || u < v) return;
        if (auto p = exact_path(g, b.core, v, u, len - 1)) out = Cycle{*p};
      });
    }
  } else {
    VertexSet attach(g.order());
    int outer = 0;
    for (const auto& ap : b.paths) {
      attach.insert(ap.a);
      attach.insert(ap.b);
      outer += static_cast<int>(ap.path.vertices.size());
    }
    const int want = len - attach.count() - outer;
    std::vector<Vertex> pool = (b.core - attach).to_vector();
    if (want >= 1 && want <= static_cast<int>(pool.size())) {
      std::vector<VertexSet> common;
      for (const auto& ap : b.paths) common.push_back(g.neighbors(ap.a) & g.neighbors(ap.b));
      std::vector<int> score(static_cast<std::size_t>(g.order()), 0);
      for (Vertex v : pool)
        for (const auto& c : common) score[static_cast<std::size_t>(v)] += c.contains(v);
      std::stable_sort(pool.begin(), pool.end(), [&](Vertex p, Vertex q) { return score[static_cast<std::size_t>(p)] > score[static_cast<std::size_t>(q)]; });
      pool.resize(static_cast<std::size_t>(want));
      std::sort(pool.begin(), pool.end());
      const int m = want, k = static_cast<int>(b.paths.size());
      GraphBuilder hb(m + k);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (g.adjacent(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)])) hb.add_edge(i, j);
      for (int p = 0; p < k; ++p)
        for (int i = 0; i < m; ++i)
          if (common[static_cast<std::size_t>(p)].contains(pool[static_cast<std::size_t>(i)])) hb.add_edge(i, m + p);
      Graph h = std::move(hb).build();
      std::optional<Cycle> ham;
      if (h.order() >= 3 && 2 * h.min_degree() >= h.order()) ham = hamilton_cycle(h);
      else if (h.order() >= 3 && h.order() <= 24) ham = find_cycle_exact(h, h.order());
      if (ham) {
        Cycle c;
        const auto& hv = ham->vertices;
        for (std::size_t i = 0; i < hv.size(); ++i) {
          Vertex x = hv[i];
          if (x < m) {
            c.vertices.push_back(pool[static_cast<std::size_t>(x)]);
            continue;
          }
          const AbsorbedPath& ap = b.paths[static_cast<std::size_t>(x - m)];
          c.vertices.push_back(ap.a);
          c.vertices.insert(c.vertices.end(), ap.path.vertices.begin(), ap.path.vertices.end());
          c.vertices.push_back(ap.b);
        }
        out = std::move(c);
      }
    }
  }
  if (!out) construction_failed(g, b, "block_cycle");
  if (!is_cycle(g, *out) || out->length() != len) throw GuaranteeViolated("block_cycle assembled an invalid cycle");
  return *out;
}

}  // namespace cycram
