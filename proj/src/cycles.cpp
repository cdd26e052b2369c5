#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "cycram/errors.hpp"
#include "cycram/oracles.hpp"

namespace cycram {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> row_masks(const Graph& g) {
  std::vector<Mask> rows(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    g.neighbors(v).for_each([&](Vertex w) { rows[static_cast<std::size_t>(v)] |= Mask{1} << w; });
  return rows;
}

Mask above(int s) { return s >= 63 ? 0 : ~((Mask{2} << s) - 1); }

// dp[mask] = set of endpoints v such that a path starting at min(mask) visits
// exactly mask and ends at v. Only vertices above the start may be appended, so
// each cycle is found from its lowest vertex.
std::optional<std::vector<Vertex>> dense_dp(const Graph& g, int ell) {
  const int b = g.order();
  const auto rows = row_masks(g);
  std::vector<std::uint32_t> dp(std::size_t{1} << b, 0);
  for (int s = 0; s < b; ++s) dp[std::size_t{1} << s] = 1U << s;
  for (std::uint32_t mask = 1; mask < (1U << b); ++mask) {
    std::uint32_t ends = dp[mask];
    if (!ends) continue;
    int pc = std::popcount(mask);
    int s = std::countr_zero(mask);
    if (pc == ell) {
      std::uint32_t closing = ends & static_cast<std::uint32_t>(rows[static_cast<std::size_t>(s)]);
      if (!closing) continue;
      std::vector<Vertex> seq{std::countr_zero(closing)};
      std::uint32_t m = mask;
      Vertex cur = seq.back();
      while (m != (1U << s)) {
        std::uint32_t pm = m & ~(1U << cur);
        std::uint32_t cand = dp[pm] & static_cast<std::uint32_t>(rows[static_cast<std::size_t>(cur)]);
        cur = std::countr_zero(cand);
        seq.push_back(cur);
        m = pm;
      }
      std::reverse(seq.begin(), seq.end());
      return seq;
    }
    std::uint32_t allowed = ~mask & static_cast<std::uint32_t>(above(s));
    for (std::uint32_t e = ends; e; e &= e - 1) {
      int v = std::countr_zero(e);
      for (std::uint32_t ext = static_cast<std::uint32_t>(rows[static_cast<std::size_t>(v)]) & allowed; ext; ext &= ext - 1) {
        int w = std::countr_zero(ext);
        dp[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  return std::nullopt;
}

struct SparseOutcome {
  bool decided = false;
  std::optional<std::vector<Vertex>> cycle;
};

// Same recurrence as dense_dp, stored level by level as sorted (mask, ends)
// pairs so only reachable subsets of size <= ell are ever materialised.
SparseOutcome sparse_dp(const Graph& g, int ell, std::size_t budget) {
  const int b = g.order();
  const auto rows = row_masks(g);
  using Level = std::vector<std::pair<Mask, Mask>>;
  std::vector<Level> levels(1);
  for (int s = 0; s < b; ++s) levels[0].emplace_back(Mask{1} << s, Mask{1} << s);
  std::size_t total = levels[0].size();
  auto ends_of = [&](int level, Mask m) -> Mask {
    const auto& lv = levels[static_cast<std::size_t>(level)];
    auto it = std::lower_bound(lv.begin(), lv.end(), std::make_pair(m, Mask{0}));
    return it != lv.end() && it->first == m ? it->second : 0;
  };
  for (int len = 1; len < ell; ++len) {
    Level next;
    for (auto [mask, ends] : levels.back()) {
      int s = std::countr_zero(mask);
      Mask allowed = ~mask & above(s);
      for (Mask e = ends; e; e &= e - 1) {
        int v = std::countr_zero(e);
        for (Mask ext = rows[static_cast<std::size_t>(v)] & allowed; ext; ext &= ext - 1) {
          Mask w = ext & -ext;
          next.emplace_back(mask | w, w);
        }
      }
      if (total + next.size() > budget) return {};
    }
    std::sort(next.begin(), next.end());
    Level merged;
    for (auto [m, e] : next) {
      if (!merged.empty() && merged.back().first == m) merged.back().second |= e;
      else merged.emplace_back(m, e);
    }
    total += merged.size();
    if (total > budget) return {};
    levels.push_back(std::move(merged));
  }
  for (auto [mask, ends] : levels.back()) {
    int s = std::countr_zero(mask);
    Mask closing = ends & rows[static_cast<std::size_t>(s)];
    if (!closing) continue;
    Vertex cur = std::countr_zero(closing);
    std::vector<Vertex> seq{cur};
    Mask m = mask;
    for (int level = ell - 2; level >= 0; --level) {
      Mask pm = m & ~(Mask{1} << cur);
      cur = std::countr_zero(ends_of(level, pm) & rows[static_cast<std::size_t>(cur)]);
      seq.push_back(cur);
      m = pm;
    }
    std::reverse(seq.begin(), seq.end());
    return {true, seq};
  }
  return {true, std::nullopt};
}

// Colour coding: dp[S][v] holds the start vertices of colourful paths ending at v
// whose colour set is S.
std::optional<std::vector<Vertex>> colour_coding(const Graph& g, int ell, const CycleSearchOptions& opts) {
  const int b = g.order();
  const std::size_t words = static_cast<std::size_t>((b + 63) / 64);
  const std::size_t subsets = std::size_t{1} << ell;
  double memory_words = static_cast<double>(subsets) * b * static_cast<double>(words);
  if (ell > 24 || memory_words > static_cast<double>(std::size_t{1} << 25))
    throw CapacityError("cycle length too large for colour coding on a block of order " + std::to_string(b));
  double colourful = 1.0;
  for (int i = 1; i <= ell; ++i) colourful *= static_cast<double>(i) / ell;
  auto trials = static_cast<std::int64_t>(std::ceil(opts.failure_exponent * std::log(2.0) / colourful));
  double per_trial = static_cast<double>(subsets) * (2.0 * static_cast<double>(g.edge_count()) + b) * static_cast<double>(words);
  if (per_trial * static_cast<double>(trials) > opts.colour_work_budget)
    throw CapacityError("colour coding would exceed its work budget for cycle length " + std::to_string(ell));

  std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(b));
  for (Vertex v = 0; v < b; ++v) nbrs[static_cast<std::size_t>(v)] = g.neighbors(v).to_vector();
  std::vector<Mask> dp(subsets * static_cast<std::size_t>(b) * words);
  auto cell = [&](std::size_t S, Vertex v) { return dp.data() + (S * static_cast<std::size_t>(b) + static_cast<std::size_t>(v)) * words; };
  auto has = [&](const Mask* row, Vertex s) { return (row[static_cast<std::size_t>(s) / 64] >> (s % 64)) & 1U; };
  std::vector<int> colour(static_cast<std::size_t>(b));
  Rng rng(opts.colour_seed);
  for (std::int64_t t = 0; t < trials; ++t) {
    for (auto& c : colour) c = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(ell)));
    std::fill(dp.begin(), dp.end(), 0);
    for (Vertex v = 0; v < b; ++v) cell(std::size_t{1} << colour[static_cast<std::size_t>(v)], v)[static_cast<std::size_t>(v) / 64] |= Mask{1} << (v % 64);
    for (std::size_t S = 1; S < subsets; ++S) {
      bool full = std::popcount(S) == ell;
      for (Vertex v = 0; v < b; ++v) {
        if (!((S >> colour[static_cast<std::size_t>(v)]) & 1U)) continue;
        const Mask* row = cell(S, v);
        bool any = false;
        for (std::size_t k = 0; k < words && !any; ++k) any = row[k] != 0;
        if (!any) continue;
        if (full) {
          for (Vertex s : nbrs[static_cast<std::size_t>(v)]) {
            if (!has(row, s)) continue;
            std::vector<Vertex> seq{v};
            Vertex cur = v;
            std::size_t curS = S;
            while (std::popcount(curS) > 1) {
              std::size_t prevS = curS & ~(std::size_t{1} << colour[static_cast<std::size_t>(cur)]);
              for (Vertex u : nbrs[static_cast<std::size_t>(cur)])
                if (((prevS >> colour[static_cast<std::size_t>(u)]) & 1U) && has(cell(prevS, u), s)) {
                  cur = u;
                  break;
                }
              seq.push_back(cur);
              curS = prevS;
            }
            std::reverse(seq.begin(), seq.end());
            return seq;
          }
          continue;
        }
        for (Vertex w : nbrs[static_cast<std::size_t>(v)]) {
          int cw = colour[static_cast<std::size_t>(w)];
          if ((S >> cw) & 1U) continue;
          Mask* dst = cell(S | (std::size_t{1} << cw), w);
          for (std::size_t k = 0; k < words; ++k) dst[k] |= row[k];
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) nbrs[static_cast<std::size_t>(v)] = g.neighbors(v).to_vector();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> estack;
  std::vector<std::vector<Vertex>> blocks;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t idx;
  };
  std::vector<Frame> frames;
  int timer = 0;
  auto at = [](auto& vec, Vertex v) -> auto& { return vec[static_cast<std::size_t>(v)]; };
  for (Vertex r = 0; r < n; ++r) {
    if (at(disc, r) != -1) continue;
    at(disc, r) = at(low, r) = timer++;
    frames.push_back({r, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nb = at(nbrs, f.v);
      if (f.idx < nb.size()) {
        Vertex v = f.v, w = nb[f.idx++];
        if (w == f.parent) continue;
        if (at(disc, w) == -1) {
          estack.emplace_back(v, w);
          at(disc, w) = at(low, w) = timer++;
          frames.push_back({w, v, 0});
        } else if (at(disc, w) < at(disc, v)) {
          estack.emplace_back(v, w);
          at(low, v) = std::min(at(low, v), at(disc, w));
        }
        continue;
      }
      Vertex v = f.v, p = f.parent;
      frames.pop_back();
      if (p == -1) continue;
      at(low, p) = std::min(at(low, p), at(low, v));
      if (at(low, v) < at(disc, p)) continue;
      std::vector<Vertex> block;
      while (true) {
        Edge e = estack.back();
        estack.pop_back();
        block.push_back(e.first);
        block.push_back(e.second);
        if (e == Edge{p, v}) break;
      }
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      if (block.size() >= 3) blocks.push_back(std::move(block));
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::optional<Cycle> find_cycle_exact(const Graph& g, int ell, const CycleSearchOptions& opts) {
  if (ell < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (ell > g.order()) return std::nullopt;
  for (const auto& block : biconnected_blocks(g)) {
    if (static_cast<int>(block.size()) < ell) continue;
    Subgraph sub = induced_subgraph(g, block);
    const int b = sub.graph.order();
    std::optional<std::vector<Vertex>> local;
    if (sub.graph.max_degree() == 2) {
      // A 2-regular block is a single cycle through all of its vertices.
      if (b != ell) continue;
      std::vector<Vertex> walk{0};
      for (Vertex prev = -1, cur = 0; static_cast<int>(walk.size()) < b;) {
        Vertex nxt = sub.graph.neighbors(cur).first();
        if (nxt == prev) nxt = sub.graph.neighbors(cur).next(nxt + 1);
        walk.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      return Cycle{sub.lift(walk)};
    }
    if (b <=std::min(opts.dense_dp_limit, 26)) {
      local = dense_dp(sub.graph, ell);
    } else {
      SparseOutcome sparse;
      if (b <= 64) sparse = sparse_dp(sub.graph, ell, opts.sparse_state_budget);
      local = sparse.decided ? sparse.cycle : colour_coding(sub.graph, ell, opts);
    }
    if (local) return Cycle{sub.lift(*local)};
  }
  return std::nullopt;
}

}  // namespace cycram
