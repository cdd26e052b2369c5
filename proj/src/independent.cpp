#include <algorithm>
#include <bit>
#include <string>

#include "cycram/errors.hpp"
#include "cycram/oracles.hpp"

namespace cycram {

namespace {

using Mask = std::uint64_t;

// Maximum clique of the complement. Colour classes of the complement are cliques
// of g, so the number of classes bounds how many more vertices can be added.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> rows) : rows_(std::move(rows)) {}

  Mask run(Mask candidates) {
    expand(candidates, 0, 0);
    return best_;
  }

 private:
  void expand(Mask cand, Mask current, int size) {
    if (!cand) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    int order[64], bound[64];
    int k = 0;
    Mask uncoloured = cand;
    for (int colour = 1; uncoloured; ++colour) {
      Mask q = uncoloured;
      while (q) {
        int v = std::countr_zero(q);
        q &= ~rows_[static_cast<std::size_t>(v)] & ~(Mask{1} << v);
        uncoloured &= ~(Mask{1} << v);
        order[k] = v;
        bound[k++] = colour;
      }
    }
    for (int i = k - 1; i >= 0; --i) {
      if (size + bound[i] <= best_size_) return;
      int v = order[i];
      Mask bit = Mask{1} << v;
      expand(cand & rows_[static_cast<std::size_t>(v)], current | bit, size + 1);
      cand &= ~bit;
    }
  }

  std::vector<Mask> rows_;
  Mask best_ = 0;
  int best_size_ = 0;
};

}  // namespace

VertexSet max_independent_set(const Graph& g, int limit) {
  const int n = g.order();
  if (n > std::min(limit, 64))
    throw CapacityError("exact independence number limited to order " + std::to_string(std::min(limit, 64)) + ", got " + std::to_string(n));
  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Vertex v = 0; v < n; ++v) {
    Mask adj = 0;
    g.neighbors(v).for_each([&](Vertex w) { adj |= Mask{1} << w; });
    rows[static_cast<std::size_t>(v)] = all & ~adj & ~(Mask{1} << v);
  }
  Mask best = CliqueSearch(std::move(rows)).run(all);
  VertexSet out(n);
  for (Mask m = best; m; m &= m - 1) out.insert(std::countr_zero(m));
  return out;
}

int independence_number(const Graph& g, int limit) { return max_independent_set(g, limit).count(); }

}  // namespace cycram
