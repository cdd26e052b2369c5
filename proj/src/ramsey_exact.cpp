#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

#include "cycram/errors.hpp"
#include "cycram/oracles.hpp"

namespace cycram {

namespace {

constexpr int kMaxCanonicalOrder = 11;
using Rows = std::vector<std::uint32_t>;

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

std::uint64_t code_of(const Rows& rows, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  const int k = static_cast<int>(perm.size());
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i)
      if ((rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >> perm[static_cast<std::size_t>(j)]) & 1U)
        code |= std::uint64_t{1} << pair_index(i, j);
  return code;
}

class Canonizer {
 public:
  explicit Canonizer(const Rows& rows) : rows_(rows), k_(static_cast<int>(rows.size())) {}

  std::uint64_t run() {
    if (k_ <= 1) return 0;
    std::vector<std::vector<int>> start(1);
    for (int v = 0; v < k_; ++v) start[0].push_back(v);
    search(std::move(start));
    return best_;
  }

 private:
  using Partition = std::vector<std::vector<int>>;

  // Split cells by neighbour counts into every cell until stable. Cell order is
  // decided by the signatures alone, so the result is labelling-invariant.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint32_t> masks(p.size(), 0);
      for (std::size_t c = 0; c < p.size(); ++c)
        for (int v : p[c]) masks[c] |= 1U << v;
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (p[c].size() < 2) continue;
        std::vector<std::pair<std::vector<int>, int>> sig;
        for (int v : p[c]) {
          std::vector<int> counts(p.size());
          for (std::size_t d = 0; d < p.size(); ++d) counts[d] = std::popcount(rows_[static_cast<std::size_t>(v)] & masks[d]);
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        if (sig.front().first == sig.back().first) continue;
        Partition split;
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i == 0 || sig[i].first != sig[i - 1].first) split.emplace_back();
          split.back().push_back(sig[i].second);
        }
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), split.begin(), split.end());
        changed = true;
        break;
      }
    }
  }

  bool twins(int u, int v) const {
    std::uint32_t mu = rows_[static_cast<std::size_t>(u)] & ~(1U << v);
    std::uint32_t mv = rows_[static_cast<std::size_t>(v)] & ~(1U << u);
    return mu == mv;
  }

  void search(Partition p) {
    refine(p);
    auto cell = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
    if (cell == p.end()) {
      std::vector<int> perm;
      for (const auto& c : p) perm.push_back(c[0]);
      std::uint64_t code = code_of(rows_, perm);
      if (!found_ || code < best_) best_ = code;
      found_ = true;
      return;
    }
    const std::size_t ci = static_cast<std::size_t>(cell - p.begin());
    const std::vector<int> members = *cell;
    // A cell of pairwise twins is an orbit of transpositions; one branch suffices.
    bool all_twins = true;
    for (std::size_t i = 1; i < members.size() && all_twins; ++i) all_twins = twins(members[0], members[i]);
    for (int v : members) {
      Partition q = p;
      q[ci].erase(std::find(q[ci].begin(), q[ci].end(), v));
      q.insert(q.begin() + static_cast<std::ptrdiff_t>(ci), std::vector<int>{v});
      search(std::move(q));
      if (all_twins) break;
    }
  }

  const Rows& rows_;
  int k_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

Rows rows_from_code(std::uint64_t code, int order) {
  Rows rows(static_cast<std::size_t>(order), 0);
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> pair_index(i, j)) & 1U) {
        rows[static_cast<std::size_t>(i)] |= 1U << j;
        rows[static_cast<std::size_t>(j)] |= 1U << i;
      }
  return rows;
}

int alpha(const Rows& rows, std::uint32_t mask) {
  if (!mask) return 0;
  int v = std::countr_zero(mask);
  std::uint32_t rest = mask & ~(1U << v);
  int without = alpha(rows, rest);
  int with = 1 + alpha(rows, rest & ~rows[static_cast<std::size_t>(v)]);
  return std::max(with, without);
}

// Is there an ell-cycle through `start`? Depth-first over simple paths.
bool cycle_through(const Rows& rows, int start, int ell, int cur, std::uint32_t used, int len) {
  if (len == ell) return (rows[static_cast<std::size_t>(cur)] >> start) & 1U;
  for (std::uint32_t ext = rows[static_cast<std::size_t>(cur)] & ~used; ext; ext &= ext - 1) {
    int w = std::countr_zero(ext);
    if (cycle_through(rows, start, ell, w, used | (1U << w), len + 1)) return true;
  }
  return false;
}

void extend_range(const std::vector<std::uint64_t>& level, std::size_t lo, std::size_t hi, int k, int ell, int n,
                  std::vector<std::uint64_t>& out) {
  for (std::size_t idx = lo; idx < hi; ++idx) {
    Rows base = rows_from_code(level[idx], k);
    for (std::uint32_t s = 0; s < (1U << k); ++s) {
      Rows rows = base;
      rows.push_back(s);
      for (int u = 0; u < k; ++u)
        if ((s >> u) & 1U) rows[static_cast<std::size_t>(u)] |= 1U << k;
      std::uint32_t non_nbrs = ((1U << k) - 1) & ~s;
      if (1 + alpha(rows, non_nbrs) > n - 1) continue;
      if (k + 1 >= ell && cycle_through(rows, k, ell, k, 1U << k, 1)) continue;
      out.push_back(Canonizer(rows).run());
    }
  }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw CapacityError("canonical codes are limited to order " + std::to_string(kMaxCanonicalOrder));
  Rows rows(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    g.neighbors(v).for_each([&](Vertex w) { rows[static_cast<std::size_t>(v)] |= 1U << w; });
  return Canonizer(rows).run();
}

Graph graph_from_code(std::uint64_t code, int order) {
  if (order < 0 || order > kMaxCanonicalOrder) throw std::invalid_argument("order out of range for graph codes");
  Rows rows = rows_from_code(code, order);
  GraphBuilder b(order);
  for (int v = 0; v < order; ++v)
    for (std::uint32_t m = rows[static_cast<std::size_t>(v)]; m; m &= m - 1)
      if (std::countr_zero(m) > v) b.add_edge(v, std::countr_zero(m));
  return std::move(b).build();
}

RamseyExactResult ramsey_exact(int ell, int n, int max_order, const RamseyExactOptions& opts) {
  if (ell < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (n < 1) throw std::invalid_argument("independent set size must be at least 1");
  if (max_order < 0) throw std::invalid_argument("max_order must be non-negative");
  if (max_order > kMaxCanonicalOrder)
    throw CapacityError("exhaustive search is limited to order " + std::to_string(kMaxCanonicalOrder));
  RamseyExactResult res;
  std::vector<std::uint64_t> level{0};
  res.avoiding_counts.push_back(1);
  res.extremal_example = Graph(0);
  const int threads = std::max(1, opts.threads);
  for (int order = 1; order <= max_order; ++order) {
    const int k = order - 1;
    std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(threads));
    const std::size_t chunk = (level.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
    if (threads == 1) {
      extend_range(level, 0, level.size(), k, ell, n, parts[0]);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        std::size_t lo = std::min(level.size(), chunk * static_cast<std::size_t>(t));
        std::size_t hi = std::min(level.size(), lo + chunk);
        pool.emplace_back(extend_range, std::cref(level), lo, hi, k, ell, n, std::ref(parts[static_cast<std::size_t>(t)]));
      }
      for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> next;
    for (auto& p : parts) next.insert(next.end(), p.begin(), p.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    res.searched_to = order;
    res.avoiding_counts.push_back(next.size());
    if (next.empty()) {
      res.value = order;
      return res;
    }
    res.extremal_example = graph_from_code(next.front(), order);
    if (next.size() > opts.max_graphs_per_level) {
      res.budget_exceeded = true;
      return res;
    }
    level = std::move(next);
  }
  return res;
}

}  // namespace cycram
