#include <algorithm>
#include <map>
#include <stdexcept>

#include "cycram/errors.hpp"
#include "cycram/hubs.hpp"

namespace cycram {

namespace {

// 0 for A, 1 for B.
int side(const Hub& hub, Vertex v) {
  if (hub.a.contains(v)) return 0;
  if (hub.b.contains(v)) return 1;
  throw std::invalid_argument("vertex " + std::to_string(v) + " is not in A or B");
}

int min_bipartite_length(const Hub& hub, Vertex s, Vertex t) { return side(hub, s) == side(hub, t) ? 2 : 3; }

void validate_request(const Hub& hub, const ConnectionRequest& req) {
  if (req.pairs.size() != req.lengths.size()) throw std::invalid_argument("pairs and lengths differ in size");
  if (static_cast<int>(req.pairs.size()) > hub_bounds::max_pairs(hub.u, hub.eps))
    throw std::invalid_argument("more than floor(u^(1-eps)) pairs");
  VertexSet ends(hub.a.universe());
  int total = 0;
  for (std::size_t i = 0; i < req.pairs.size(); ++i) {
    for (Vertex v : {req.pairs[i].first, req.pairs[i].second}) {
      side(hub, v);
      if (ends.contains(v)) throw std::invalid_argument("endpoints are not distinct");
      ends.insert(v);
    }
    if (req.lengths[i] < 2) throw std::invalid_argument("lengths must be at least 2");
    total += req.lengths[i] + 1;
  }
  if (total > hub_bounds::length_budget(hub.u, hub.eps)) throw std::invalid_argument("sum of (length + 1) exceeds floor(2(1-eps)u)");
}

// The connection procedure: the backbone minus the endpoints, cut into runs that
// start and end in A, stitched through D into one path R; short pairs are joined
// through D, longer ones through a segment of R bridged by D at both ends.
class Connector {
 public:
  Connector(const Graph& g, const Hub& hub, const VertexSet& avoid) : g_(g), hub_(hub), free_d_(hub.d) {
    const auto& c = hub.backbone.vertices;
    const int len = static_cast<int>(c.size());
    int start = 0;
    for (int i = 0; i < len; ++i)
      if (avoid.contains(c[static_cast<std::size_t>(i)])) start = (i + 1) % len;
    std::vector<std::vector<Vertex>> runs{{}};
    for (int k = 0; k < len; ++k) {
      Vertex v = c[static_cast<std::size_t>((start + k) % len)];
      if (avoid.contains(v)) runs.emplace_back();
      else runs.back().push_back(v);
    }
    if (avoid.empty()) runs.back().pop_back();  // open the cycle
    for (auto& run : runs) {
      if (!run.empty() && hub.b.contains(run.back())) run.pop_back();
      if (!run.empty() && hub.b.contains(run.front())) run.erase(run.begin());
      if (run.empty()) continue;
      if (!r_.empty()) {
        Vertex link = (g.neighbors(r_.back()) & g.neighbors(run.front()) & free_d_).first();
        if (link == -1) continue;
        free_d_.erase(link);
        r_.push_back(link);
      }
      r_.insert(r_.end(), run.begin(), run.end());
    }
  }

  Path connect(Vertex s, Vertex t, int ell) {
    if (ell == 2) {
      Vertex m = common(s, t, -1);
      if (m == -1) throw GuaranteeViolated("no unused common neighbour in D for a length-2 pair");
      take(m);
      return Path{{s, m, t}};
    }
    if (ell == 3) {
      for (Vertex x = (g_.neighbors(s) & free_d_).first(); x != -1; x = (g_.neighbors(s) & free_d_).next(x + 1)) {
        Vertex y = common(x, t, x);
        if (y == -1) continue;
        take(x);
        take(y);
        return Path{{s, x, y, t}};
      }
      throw GuaranteeViolated("no D-path of length 3 for a pair");
    }
    const std::size_t seg = static_cast<std::size_t>(ell - 3);  // vertices of R used
    for (std::size_t o = front_; o + seg <= r_.size(); ++o) {
      if (static_cast<int>(o % 2) != side(hub_, s)) continue;
      Vertex x = r_[o], y = r_[o + seg - 1];
      if (hub_.d.contains(x) || hub_.d.contains(y)) continue;
      Vertex ux = common(s, x, -1);
      Vertex vy = common(t, y, ux);
      if (ux == -1 || vy == -1) continue;
      take(ux);
      take(vy);
      Path p{{s, ux}};
      p.vertices.insert(p.vertices.end(), r_.begin() + static_cast<std::ptrdiff_t>(o), r_.begin() + static_cast<std::ptrdiff_t>(o + seg));
      p.vertices.push_back(vy);
      p.vertices.push_back(t);
      front_ = o + seg;
      return p;
    }
    throw GuaranteeViolated("backbone path exhausted for a pair of length " + std::to_string(ell));
  }

 private:
  Vertex common(Vertex x, Vertex y, Vertex skip) const {
    VertexSet c = g_.neighbors(x) & g_.neighbors(y) & free_d_;
    if (skip >= 0 && c.contains(skip)) c.erase(skip);
    return c.first();
  }
  void take(Vertex v) { free_d_.erase(v); }

  const Graph& g_;
  const Hub& hub_;
  VertexSet free_d_;
  std::vector<Vertex> r_;
  std::size_t front_ = 0;
};

void check_paths(const Graph& g, const Hub& hub, const std::vector<Edge>& pairs, const std::vector<int>& lengths,
                 const std::vector<Path>& paths) {
  VertexSet seen(g.order());
  const VertexSet inside = hub.vertices();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    if (!is_path(g, p) || p.length() != lengths[i] || p.vertices.front() != pairs[i].first || p.vertices.back() != pairs[i].second)
      throw GuaranteeViolated("hub connection produced an invalid path");
    for (Vertex v : p.vertices) {
      if (!inside.contains(v) || seen.contains(v)) throw GuaranteeViolated("hub connection paths overlap or leave the hub");
      seen.insert(v);
    }
  }
}

std::vector<Path> connect_all(const Graph& g, const Hub& hub, const std::vector<Edge>& pairs, const std::vector<int>& lengths,
                              const VertexSet& avoid) {
  Connector conn(g, hub, avoid);
  std::vector<Path> out;
  // Long pairs first so the D-only pairs cannot starve the bridges.
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return (lengths[x] >= 4) > (lengths[y] >= 4); });
  out.resize(pairs.size());
  for (std::size_t i : order) out[i] = conn.connect(pairs[i].first, pairs[i].second, lengths[i]);
  check_paths(g, hub, pairs, lengths, out);
  return out;
}

VertexSet endpoints(int order, const std::vector<Edge>& pairs) {
  VertexSet s(order);
  for (auto [x, y] : pairs) {
    s.insert(x);
    s.insert(y);
  }
  return s;
}

}  // namespace

bool bipartite_length_ok(const Hub& hub, Vertex x, Vertex y, int ell) {
  if (x == y) throw std::invalid_argument("endpoints must be distinct");
  const bool same = side(hub, x) == side(hub, y);
  return same == (ell % 2 == 0);
}

std::vector<Path> hub_connect(const Graph& g, const Hub& hub, const ConnectionRequest& req) {
  validate_request(hub, req);
  for (std::size_t i = 0; i < req.pairs.size(); ++i)
    if (!bipartite_length_ok(hub, req.pairs[i].first, req.pairs[i].second, req.lengths[i]))
      throw std::invalid_argument("length " + std::to_string(req.lengths[i]) + " is not a bipartite length for its pair");
  return connect_all(g, hub, req.pairs, req.lengths, endpoints(g.order(), req.pairs));
}

std::optional<std::vector<Edge>> find_parity_matching(const Graph& g, Hub& hub) {
  std::vector<Edge> m;
  VertexSet free = hub.a;
  hub.a.for_each([&](Vertex x) {
    if (!free.contains(x)) return;
    Vertex y = (g.neighbors(x) & free).first();
    if (y == -1) return;
    free.erase(x);
    free.erase(y);
    m.emplace_back(x, y);
  });
  if (static_cast<int>(m.size()) < hub_bounds::parity_matching(hub.u, hub.eps)) return std::nullopt;
  hub.parity_matching = m;
  return m;
}

std::vector<Path> hub_connect_parity_broken(const Graph& g, const Hub& hub, const ConnectionRequest& req) {
  if (!hub.parity_broken()) throw std::invalid_argument("hub is not parity broken");
  validate_request(hub, req);
  VertexSet ends = endpoints(g.order(), req.pairs);
  std::vector<Edge> matching;
  for (auto [x, y] : *hub.parity_matching)
    if (!ends.contains(x) && !ends.contains(y)) matching.push_back({x, y});
  std::vector<Edge> pairs;
  std::vector<int> lengths;
  std::vector<int> split(req.pairs.size(), -1);  // index of the first sub-pair when split
  std::size_t next = 0;
  for (std::size_t i = 0; i < req.pairs.size(); ++i) {
    auto [s, t] = req.pairs[i];
    const int ell = req.lengths[i];
    if (bipartite_length_ok(hub, s, t, ell)) {
      pairs.push_back({s, t});
      lengths.push_back(ell);
      continue;
    }
    if (ell < 7) throw std::invalid_argument("a wrong-parity length must be at least 7");
    if (next == matching.size()) throw GuaranteeViolated("parity matching exhausted");
    auto [x, y] = matching[next++];
    const int l1 = side(hub, s) == 0 ? 2 : 3;
    split[i] = static_cast<int>(pairs.size());
    pairs.push_back({s, x});
    lengths.push_back(l1);
    pairs.push_back({y, t});
    lengths.push_back(ell - 1 - l1);
  }
  auto sub = connect_all(g, hub, pairs, lengths, endpoints(g.order(), pairs));
  std::vector<Path> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < req.pairs.size(); ++i) {
    if (split[i] < 0) {
      out.push_back(sub[k++]);
      continue;
    }
    Path p = sub[k++];
    const Path& q = sub[k++];
    p.vertices.insert(p.vertices.end(), q.vertices.begin(), q.vertices.end());
    if (!is_path(g, p) || p.length() != req.lengths[i]) throw GuaranteeViolated("split path does not join through the matching edge");
    out.push_back(std::move(p));
  }
  return out;
}

Cycle cycle_from_handles(const Graph& g, const HandleSystem& hs, int ell) {
  const std::size_t k = hs.paths.size();
  if (k == 0 || hs.hubs.size() != k) throw std::invalid_argument("handle system needs one hub per path");
  // a_i ends path i-1, b_i starts path i.
  std::vector<Vertex> a(k), b(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (hs.paths[i].length() < 1 || !is_path(g, hs.paths[i])) throw std::invalid_argument("handle is not a path of length >= 1");
    b[i] = hs.paths[i].vertices.front();
    a[(i + 1) % k] = hs.paths[i].vertices.back();
  }
  std::map<const Hub*, std::vector<std::size_t>> by_hub;
  VertexSet hub_vertices(g.order());
  for (std::size_t i = 0; i < k; ++i) {
    by_hub[hs.hubs[i]].push_back(i);
    hub_vertices |= hs.hubs[i]->vertices();
  }
  for (auto it = by_hub.begin(); it != by_hub.end(); ++it)
    for (auto jt = std::next(it); jt != by_hub.end(); ++jt)
      if (it->first->vertices().intersects(jt->first->vertices())) throw std::invalid_argument("hubs are not vertex-disjoint");
  VertexSet used(g.order());
  int total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& pv = hs.paths[i].vertices;
    for (std::size_t j = 0; j < pv.size(); ++j) {
      if (used.contains(pv[j])) throw std::invalid_argument("handles are not vertex-disjoint");
      used.insert(pv[j]);
      if (j > 0 && j + 1 < pv.size() && hub_vertices.contains(pv[j])) throw std::invalid_argument("handle meets a hub internally");
    }
    total += hs.paths[i].length();
    const Hub& h = *hs.hubs[i];
    const VertexSet ab = h.a | h.b;
    if (!ab.contains(a[i]) || !ab.contains(b[i])) throw std::invalid_argument("attachments must lie in A or B of their hub");
  }
  for (const auto& [hub, idx] : by_hub)
    if (2 * static_cast<int>(idx.size()) > hub_bounds::max_pairs(hub->u, hub->eps))
      throw std::invalid_argument("a hub hosts more than u^(1-eps)/2 attachments");

  // Base lengths, then a parity flip through a parity broken hub, then pour.
  std::vector<int> len(k);
  int base = 0;
  bool all_in_a = true;
  for (std::size_t i = 0; i < k; ++i) {
    len[i] = min_bipartite_length(*hs.hubs[i], a[i], b[i]);
    base += len[i];
    all_in_a = all_in_a && hs.hubs[i]->a.contains(a[i]) && hs.hubs[i]->a.contains(b[i]);
  }
  bool any_broken = false;
  for (const auto& [hub, idx] : by_hub) any_broken = any_broken || hub->parity_broken();
  const int ki = static_cast<int>(k);
  const int hi = hub_bounds::length_budget(hs.hubs[0]->u, hs.hubs[0]->eps) * static_cast<int>(by_hub.size()) + total - 2 * ki;
  const bool case_i = all_in_a && ell >= 2 * ki + total && ell <= hi && (ell - total) % 2 == 0;
  const bool case_ii = any_broken && ell >= 7 * ki + total && ell <= hi;
  if (!case_i && !case_ii)
    throw std::invalid_argument("ell = " + std::to_string(ell) + " is outside the handle window or has the wrong parity");
  int rem = ell - total - base;
  if (rem % 2 != 0) {
    bool flipped = false;
    for (std::size_t i = 0; i < k && !flipped; ++i) {
      if (!hs.hubs[i]->parity_broken()) continue;
      const int flip = len[i] == 2 ? 7 : 8;
      if (flip - len[i] > rem) continue;
      rem -= flip - len[i];
      len[i] = flip;
      flipped = true;
    }
    if (!flipped) throw GuaranteeViolated("no parity broken hub can absorb the parity flip");
  }
  std::map<const Hub*, int> room;
  for (const auto& [hub, idx] : by_hub) {
    int r = hub_bounds::length_budget(hub->u, hub->eps);
    for (std::size_t i : idx) r -= len[i] + 1;
    if (r < 0) throw std::invalid_argument("handle system exceeds a hub length budget");
    room[hub] = r;
  }
  for (std::size_t i = 0; i < k && rem > 0; ++i) {
    int add = std::min(rem, room[hs.hubs[i]]) / 2 * 2;
    len[i] += add;
    room[hs.hubs[i]] -= add;
    rem -= add;
  }
  if (rem > 0) throw GuaranteeViolated("hub length budgets cannot absorb ell inside the window");

  std::vector<Path> inner(k);
  for (const auto& [hub, idx] : by_hub) {
    ConnectionRequest req;
    bool needs_break = false;
    for (std::size_t i : idx) {
      req.pairs.push_back({a[i], b[i]});
      req.lengths.push_back(len[i]);
      needs_break = needs_break || !bipartite_length_ok(*hub, a[i], b[i], len[i]);
    }
    auto paths = needs_break ? hub_connect_parity_broken(g, *hub, req) : hub_connect(g, *hub, req);
    for (std::size_t j = 0; j < idx.size(); ++j) inner[idx[j]] = std::move(paths[j]);
  }
  Cycle c;
  for (std::size_t i = 0; i < k; ++i) {
    c.vertices.insert(c.vertices.end(), inner[i].vertices.begin(), inner[i].vertices.end());
    const auto& pv = hs.paths[i].vertices;
    c.vertices.insert(c.vertices.end(), pv.begin() + 1, pv.end() - 1);
  }
  if (c.length() != ell || !is_cycle(g, c)) throw GuaranteeViolated("assembled handle cycle is invalid");
  return c;
}

}  // namespace cycram
