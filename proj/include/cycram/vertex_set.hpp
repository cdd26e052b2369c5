#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cycram {

using Vertex = int;

/// Dense bitset over the universe [0, universe). All set algebra is word-parallel,
/// which is what every neighbourhood intersection in the library reduces to.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }
  template <typename Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && ((words_[word(v)] >> bit(v)) & 1U);
  }
  void insert(Vertex v) {
    check(v);
    words_[word(v)] |= Word{1} << bit(v);
  }
  void erase(Vertex v) {
    check(v);
    words_[word(v)] &= ~(Word{1} << bit(v));
  }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  /// Lowest member, or -1.
  Vertex first() const { return next(0); }
  /// Lowest member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from < 0) from = 0;
    if (from >= universe_) return -1;
    std::size_t wi = word(from);
    Word w = words_[wi] & (~Word{0} << bit(from));
    while (true) {
      if (w) return static_cast<Vertex>(wi * kWordBits + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(static_cast<Vertex>(wi * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  int intersection_count(const VertexSet& o) const {
    same_universe(o);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) / kWordBits; }
  static int bit(Vertex v) { return v % kWordBits; }
  void check(Vertex v) const {
    if (v < 0 || v >= universe_) throw std::out_of_range("vertex outside set universe");
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("vertex sets over different universes");
  }
  void trim() {
    if (universe_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace cycram
