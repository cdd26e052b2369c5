#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "cycram/absorb.hpp"
#include "cycram/bfs.hpp"
#include "cycram/errors.hpp"
#include "cycram/oracles.hpp"

namespace cycram {

namespace {

// An a-b path inside one block whose length is chosen during assembly.
struct Segment {
  int block = -1;
  Vertex from = -1, to = -1;
};

// Closes segment[k] .. links[k] .. segment[k+1] .. into an ℓ-cycle. links[k]
// runs from segments[k].to to segments[k+1].from, both ends included.
std::optional<Cycle> assemble(const Graph& g, const AbsorptionState& state, const std::vector<Segment>& segs,
                              const std::vector<std::vector<Vertex>>& links, int ell) {
  const int k = static_cast<int>(segs.size());
  int fixed = 0;
  for (const auto& l : links) fixed += static_cast<int>(l.size()) - 1;
  std::vector<int> len(static_cast<std::size_t>(k), 2), cap(static_cast<std::size_t>(k));
  int rest = ell - fixed - 2 * k;
  for (int i = 0; i < k; ++i)
    cap[static_cast<std::size_t>(i)] = std::min(ell / 2, 2 * state.blocks[static_cast<std::size_t>(segs[static_cast<std::size_t>(i)].block)].whole().count() / 3);
  for (bool moved = true; rest > 0 && moved;) {
    moved = false;
    for (int i = 0; i < k && rest > 0; ++i)
      if (len[static_cast<std::size_t>(i)] < cap[static_cast<std::size_t>(i)]) {
        ++len[static_cast<std::size_t>(i)];
        --rest;
        moved = true;
      }
  }
  if (rest != 0) return std::nullopt;
  Cycle c;
  try {
    for (int i = 0; i < k; ++i) {
      const Segment& s = segs[static_cast<std::size_t>(i)];
      Path p = block_path(g, state.blocks[static_cast<std::size_t>(s.block)], s.from, s.to, len[static_cast<std::size_t>(i)]);
      c.vertices.insert(c.vertices.end(), p.vertices.begin(), p.vertices.end());
      const auto& l = links[static_cast<std::size_t>(i)];
      if (l.size() > 2) c.vertices.insert(c.vertices.end(), l.begin() + 1, l.end() - 1);
    }
  } catch (const GuaranteeUnavailable&) {
    return std::nullopt;
  } catch (const GuaranteeViolated&) {
    return std::nullopt;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (c.length() != ell || !is_cycle(g, c)) return std::nullopt;
  return c;
}

// Short cycles of an auxiliary graph: the approximate-length construction
// when its hypotheses hold, then exact even lengths up to max_len at small order.
std::vector<Cycle> aux_cycles(const Graph& h, int ell, int max_len) {
  std::vector<Cycle> out;
  const double root = std::pow(static_cast<double>(ell), 1.0 / 14.0);
  try {
    Cycle c = cycle_in_range(h, std::max(2, static_cast<int>(root)), std::max(2.0, root));
    if (c.length() <= max_len) out.push_back(std::move(c));
  } catch (const GuaranteeUnavailable&) {
  } catch (const GuaranteeViolated&) {
  }
  if (h.order() > 64) return out;
  for (int len = 4; len <= std::min(max_len, h.order()); len += 2) {
    try {
      if (auto c = find_cycle_exact(h, len)) out.push_back(std::move(*c));
    } catch (const CapacityError&) {
      break;
    }
  }
  return out;
}

// Rotates a cycle so that it starts at a vertex satisfying `first`.
std::vector<Vertex> rotate_to(const Cycle& c, const std::function<bool(Vertex)>& first) {
  std::vector<Vertex> v = c.vertices;
  auto it = std::find_if(v.begin(), v.end(), first);
  std::rotate(v.begin(), it, v.end());
  return v;
}

// Shortest x-y path inside `within` (x itself when x == y).
std::vector<Vertex> short_link(const Graph& g, const VertexSet& within, Vertex x, Vertex y) {
  if (x == y) return {x};
  BfsLayers t = bfs_layers(g, x, within);
  if (!t.reached(y)) return {};
  std::vector<Vertex> p = t.path_to_root(y);
  std::reverse(p.begin(), p.end());
  return p;
}

struct Attach {
  Vertex a = -1, b = -1;
};

// Two distinct attachments for the ends r1, r2 of a remainder path.
Attach attachments(const Graph& g, const VertexSet& avail, Vertex r1, Vertex r2) {
  const VertexSet n1 = g.neighbors(r1) & avail, n2 = g.neighbors(r2) & avail;
  Attach at{n1.first(), -1};
  if (at.a == -1) return {};
  VertexSet rest = n2;
  rest.erase(at.a);
  at.b = rest.first();
  if (at.b != -1) return at;
  at.b = n2.first();
  if (at.b == -1) return {};
  rest = n1;
  rest.erase(at.b);
  at.a = rest.first();
  return at.a == -1 ? Attach{} : at;
}

std::optional<AbsorbedPath> find_absorbable(const Graph& g, const VertexSet& r, const VertexSet& avail) {
  for (Vertex x = r.first(); x != -1; x = r.next(x + 1)) {
    Attach at = attachments(g, avail, x, x);
    if (at.b != -1) return AbsorbedPath{Path{{x}}, at.a, at.b};
  }
  for (Vertex x = r.first(); x != -1; x = r.next(x + 1)) {
    const VertexSet nx = g.neighbors(x) & r;
    for (Vertex y = nx.first(); y != -1; y = nx.next(y + 1)) {
      Attach at = attachments(g, avail, x, y);
      if (at.b != -1) return AbsorbedPath{Path{{x, y}}, at.a, at.b};
    }
  }
  for (Vertex m = r.first(); m != -1; m = r.next(m + 1)) {
    const VertexSet nm = g.neighbors(m) & r;
    for (Vertex x = nm.first(); x != -1; x = nm.next(x + 1))
      for (Vertex y = nm.next(x + 1); y != -1; y = nm.next(y + 1)) {
        Attach at = attachments(g, avail, x, y);
        if (at.b != -1) return AbsorbedPath{Path{{x, m, y}}, at.a, at.b};
      }
  }
  return std::nullopt;
}

// An ℓ-cycle inside an over-full block: the block construction first, then
// the exact oracle on G[W] when it is small enough.
std::optional<Cycle> cycle_in_whole(const Graph& g, const BlockState& b, int ell) {
  try {
    return block_cycle(g, b, ell);
  } catch (const GuaranteeUnavailable&) {
  }
  const VertexSet w = b.whole();
  if (w.count() > kExactIndependenceLimit) return std::nullopt;
  Subgraph sub = induced_subgraph(g, w);
  try {
    if (auto c = find_cycle_exact(sub.graph, ell)) return Cycle{sub.lift(c->vertices)};
  } catch (const CapacityError&) {
  }
  return std::nullopt;
}

}  // namespace

AbsorbOutcome absorb_remainder(const Graph& g, const CliqueDecomposition& d, int ell) {
  if (ell < 3) throw std::invalid_argument("ell must be at least 3");
  AbsorbOutcome out;
  for (const auto& b : d.blocks) out.state.blocks.push_back(make_block(g, b));
  out.state.remainder = VertexSet::of(g.order(), d.leftover);
  std::vector<bool> closed(out.state.blocks.size(), false);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < out.state.blocks.size(); ++i) {
      if (closed[i]) continue;
      BlockState next = out.state.blocks[i];
      std::optional<AbsorbedPath> ap = find_absorbable(g, out.state.remainder, next.available);
      if (!ap) continue;
      next.available.erase(ap->a);
      next.available.erase(ap->b);
      next.paths.push_back(*ap);
      if (next.whole().count() >= ell) {
        if ((out.cycle = cycle_in_whole(g, next, ell))) {
          out.state.blocks[i] = std::move(next);
          for (Vertex v : ap->path.vertices) out.state.remainder.erase(v);
          ++out.rounds;
          return out;
        }
        closed[i] = true;
        progress = true;
        break;
      }
      for (Vertex v : ap->path.vertices) out.state.remainder.erase(v);
      out.state.blocks[i] = std::move(next);
      ++out.rounds;
      progress = true;
      break;
    }
  }
  return out;
}

Separation separate_remainder(const Graph& g, const AbsorptionState& state, int ell) {
  const int s = static_cast<int>(state.blocks.size());
  const VertexSet& r = state.remainder;
  Separation out;
  const double threshold = std::pow(static_cast<double>(ell), 2.0 / 3.0);
  for (int i = 0; i < s; ++i) {
    const BlockState& b = state.blocks[static_cast<std::size_t>(i)];
    VertexSet touching(g.order());
    b.available.for_each([&](Vertex v) {
      if (g.neighbors(v).intersects(r)) touching.insert(v);
    });
    out.clean.push_back(b.available - touching);
    (touching.count() < threshold ? out.t : out.s).push_back(i);
    out.touching.push_back(std::move(touching));
  }
  out.checks.push_back({"t_at_least_half", 2 * out.t.size() >= static_cast<std::size_t>(s)});

  const int star = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(ell)) - 1e-9));
  std::vector<int> part(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> centre;
  VertexSet open = r;
  for (Vertex v = open.first(); v != -1;) {
    const VertexSet nv = g.neighbors(v) & open;
    if (nv.count() + 1 >= star && star >= 2) {
      std::vector<Vertex> leaves = nv.to_vector();
      leaves.resize(static_cast<std::size_t>(star - 1));
      const int id = static_cast<int>(centre.size());
      centre.push_back(v);
      part[static_cast<std::size_t>(v)] = id;
      open.erase(v);
      for (Vertex x : leaves) {
        part[static_cast<std::size_t>(x)] = id;
        open.erase(x);
      }
      v = open.first();
    } else {
      v = open.next(v + 1);
    }
  }
  open.for_each([&](Vertex v) {
    part[static_cast<std::size_t>(v)] = static_cast<int>(centre.size());
    centre.push_back(v);
  });
  out.parts = static_cast<int>(centre.size());

  GraphBuilder hb(s + out.parts);
  std::map<Edge, Edge> witness;  // (block, s + part) -> (v, u_v)
  for (int i = 0; i < s; ++i)
    out.touching[static_cast<std::size_t>(i)].for_each([&](Vertex v) {
      Vertex u = (g.neighbors(v) & r).first();
      const int node = s + part[static_cast<std::size_t>(u)];
      if (hb.add_edge(i, node)) witness[{i, node}] = {v, u};
    });
  const Graph h = std::move(hb).build();
  for (const Cycle& c : aux_cycles(h, ell, std::max(4, ell / 4))) {
    std::vector<Vertex> seq = rotate_to(c, [&](Vertex x) { return x < s; });
    std::vector<Segment> segs;
    std::vector<std::vector<Vertex>> links;
    const std::size_t len = seq.size();
    for (std::size_t k = 0; k < len; k += 2) {
      const Vertex blk = seq[k], node = seq[k + 1], next = seq[(k + 2) % len];
      const Edge out_edge = witness.at({blk, node}), in_edge = witness.at({next, node});
      const Vertex mid = centre[static_cast<std::size_t>(node - s)];
      std::vector<Vertex> link{out_edge.first, out_edge.second};
      if (out_edge.second != in_edge.second) {
        if (!g.adjacent(out_edge.second, in_edge.second)) link.push_back(mid);
        link.push_back(in_edge.second);
      }
      link.push_back(in_edge.first);
      links.push_back(std::move(link));
      segs.push_back({static_cast<int>(blk), -1, out_edge.first});
    }
    for (std::size_t k = 0; k < segs.size(); ++k) segs[(k + 1) % segs.size()].from = links[k].back();
    if (auto cyc = assemble(g, state, segs, links, ell)) {
      out.cycle = std::move(cyc);
      break;
    }
  }
  return out;
}

NeighbourAbsorption absorb_neighbours(const Graph& g, const AbsorptionState& state, const Separation& sep, int ell,
                                      std::uint64_t seed, int retries) {
  if (sep.t.empty()) throw std::invalid_argument("absorb_neighbours needs a nonempty T");
  const int s = static_cast<int>(state.blocks.size());
  const double threshold = std::cbrt(static_cast<double>(ell));
  NeighbourAbsorption out;
  out.matching_sizes.assign(static_cast<std::size_t>(s), -1);
  std::vector<VertexSet> whole;
  std::vector<int> block_of(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < s; ++i) {
    whole.push_back(state.blocks[static_cast<std::size_t>(i)].whole());
    whole.back().for_each([&](Vertex v) { block_of[static_cast<std::size_t>(v)] = i; });
  }
  std::vector<std::vector<Edge>> m(static_cast<std::size_t>(s));
  bool all_large = true;
  for (int i : sep.t) {
    m[static_cast<std::size_t>(i)] = max_bipartite_matching(g, sep.clean[static_cast<std::size_t>(i)], g.all_vertices() - whole[static_cast<std::size_t>(i)]);
    out.matching_sizes[static_cast<std::size_t>(i)] = static_cast<int>(m[static_cast<std::size_t>(i)].size());
    all_large = all_large && m[static_cast<std::size_t>(i)].size() > threshold;
  }
  out.checks.push_back({"small_matching_exists", !all_large});

  if (all_large) {
    std::size_t total = 0;
    for (int i : sep.t) total += m[static_cast<std::size_t>(i)].size();
    Rng rng(seed);
    for (int attempt = 0; attempt < retries && !out.cycle; ++attempt) {
      std::vector<bool> first(static_cast<std::size_t>(s));
      for (int i = 0; i < s; ++i) first[static_cast<std::size_t>(i)] = (rng() >> 63) != 0;
      GraphBuilder hb(s);
      std::map<Edge, Edge> witness;  // (i, j) with i in S_1 -> (b, c)
      std::size_t good = 0;
      for (int i : sep.t) {
        if (!first[static_cast<std::size_t>(i)]) continue;
        for (const auto& [b, c] : m[static_cast<std::size_t>(i)]) {
          const int j = block_of[static_cast<std::size_t>(c)];
          if (j == -1 || first[static_cast<std::size_t>(j)]) continue;
          ++good;
          if (hb.add_edge(i, j)) witness[{i, j}] = {b, c};
        }
      }
      if (4 * good < total) continue;
      const Graph h = std::move(hb).build();
      for (const Cycle& c : aux_cycles(h, ell, std::max(4, ell / 8))) {
        std::vector<Vertex> seq = rotate_to(c, [&](Vertex x) { return first[static_cast<std::size_t>(x)]; });
        std::vector<Segment> segs;
        std::vector<std::vector<Vertex>> links;
        const std::size_t len = seq.size();
        bool ok = true;
        for (std::size_t k = 0; k < len && ok; k += 2) {
          const int i = seq[k], j = seq[k + 1], next = seq[(k + 2) % len];
          const Edge leave = witness.at({i, j}), enter = witness.at({next, j});
          std::vector<Vertex> inner = short_link(g, whole[static_cast<std::size_t>(j)], leave.second, enter.second);
          if (inner.empty()) ok = false;
          std::vector<Vertex> link{leave.first};
          link.insert(link.end(), inner.begin(), inner.end());
          link.push_back(enter.first);
          links.push_back(std::move(link));
          segs.push_back({i, -1, leave.first});
        }
        if (!ok) continue;
        for (std::size_t k = 0; k < segs.size(); ++k) segs[(k + 1) % segs.size()].from = links[k].back();
        if (auto cyc = assemble(g, state, segs, links, ell)) {
          out.cycle = std::move(cyc);
          return out;
        }
      }
    }
  }

  int best = sep.t.front();
  for (int i : sep.t)
    if (m[static_cast<std::size_t>(i)].size() < m[static_cast<std::size_t>(best)].size()) best = i;
  out.block = best;
  VertexSet d = sep.clean[static_cast<std::size_t>(best)];
  const double limit = 2.0 * threshold;
  VertexSet others(g.order());
  for (int j = 0; j < s; ++j)
    if (j != best) others |= whole[static_cast<std::size_t>(j)];
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex x = others.first(); x != -1; x = others.next(x + 1)) {
      const int deg = g.degree_into(x, d);
      if (deg >= 1 && deg <= limit) {
        d = d - g.neighbors(x);
        changed = true;
        break;
      }
    }
  }
  out.whittled = d.to_vector();
  out.v = d.first();
  out.checks.push_back({"whittled_nonempty", out.v != -1});
  return out;
}

std::optional<Cycle> final_absorption(const Graph& g, const AbsorptionState& state, const NeighbourAbsorption& na, int ell) {
  if (na.v == -1 || na.block < 0) return std::nullopt;
  BlockState b = state.blocks[static_cast<std::size_t>(na.block)];
  const VertexSet w = b.whole();
  const int k = ell - w.count();
  VertexSet pool = VertexSet::of(g.order(), na.whittled) & b.available;
  for (int added = 0; added < k;) {
    bool placed = false;
    const VertexSet candidates = g.neighbors(na.v) - w - b.absorbed();
    for (Vertex y = candidates.first(); y != -1 && !placed; y = candidates.next(y + 1)) {
      const VertexSet att = g.neighbors(y) & pool;
      if (att.count() < 2) continue;
      const Vertex a = att.first(), c = att.next(a + 1);
      b.paths.push_back({Path{{y}}, a, c});
      pool.erase(a);
      pool.erase(c);
      b.available.erase(a);
      b.available.erase(c);
      ++added;
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
  try {
    return block_cycle(g, b, ell);
  } catch (const GuaranteeUnavailable&) {
  } catch (const GuaranteeViolated&) {
  }
  return std::nullopt;
}

}  // namespace cycram
