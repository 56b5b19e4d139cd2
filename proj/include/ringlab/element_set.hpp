#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ringlab {

/// Index of an element inside a FiniteRing's tables.
using Elem = std::uint32_t;

/// Fixed-universe bitset over element indices [0, universe).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }

  static ElementSet of(std::size_t universe, std::initializer_list<Elem> xs) {
    ElementSet s(universe);
    for (Elem x : xs) s.insert(x);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Elem x) const {
    return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1u) != 0;
  }

  /// Returns true if x was newly inserted.
  bool insert(Elem x) {
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  void erase(Elem x) {
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(count_);
    for_each([&](Elem x) { out.push_back(x); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    count_ = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] |= o.words_[w];
      count_ += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    count_ = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] &= o.words_[w];
      count_ += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::size_t hash() const {
    std::size_t h = 14695981039346656037ull;
    for (std::uint64_t w : words_) h = (h ^ w) * 1099511628211ull;
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace ringlab
