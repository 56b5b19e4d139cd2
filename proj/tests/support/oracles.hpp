#pragma once

// Test-only brute-force oracles, independent of the library's fast paths.

#include <algorithm>
#include <optional>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab::testing {

/// Greedy generating set of r as a unital ring.
inline std::vector<Elem> ring_generators(const FiniteRing& r) {
  std::vector<Elem> gens;
  ElementSet closed(r.order());
  auto close = [&]() {
    std::vector<Elem> list;
    ElementSet s(r.order());
    auto push = [&](Elem x) {
      if (s.insert(x)) list.push_back(x);
    };
    push(r.zero());
    push(r.one());
    for (Elem g : gens) push(g);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem a = list[i], b = list[j];
        push(r.add(a, b));
        push(r.mul(a, b));
        push(r.mul(b, a));
        push(r.neg(a));
      }
    return s;
  };
  closed = close();
  for (Elem x = 0; x < r.order() && closed.size() < r.order(); ++x)
    if (!closed.contains(x)) {
      gens.push_back(x);
      closed = close();
    }
  return gens;
}

/// Extends a partial assignment of generators to a map by closure; returns the
/// map if it is a well-defined bijective ring homomorphism.
inline std::optional<std::vector<Elem>> extend_map(const FiniteRing& r, const FiniteRing& s,
                                                   const std::vector<Elem>& gens,
                                                   const std::vector<Elem>& images) {
  const Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> f(r.order(), unset);
  std::vector<Elem> known;
  auto assign = [&](Elem x, Elem y) {
    if (f[x] == unset) {
      f[x] = y;
      known.push_back(x);
      return true;
    }
    return f[x] == y;
  };
  if (!assign(r.zero(), s.zero()) || !assign(r.one(), s.one())) return std::nullopt;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!assign(gens[i], images[i])) return std::nullopt;
  for (std::size_t i = 0; i < known.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem a = known[i], b = known[j];
      if (!assign(r.add(a, b), s.add(f[a], f[b])) || !assign(r.mul(a, b), s.mul(f[a], f[b])) ||
          !assign(r.mul(b, a), s.mul(f[b], f[a])) || !assign(r.neg(a), s.neg(f[a])))
        return std::nullopt;
    }
  if (known.size() != r.order()) return std::nullopt;
  std::vector<bool> hit(s.order(), false);
  for (Elem y : f) {
    if (hit[y]) return std::nullopt;
    hit[y] = true;
  }
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b)
      if (f[r.add(a, b)] != s.add(f[a], f[b]) || f[r.mul(a, b)] != s.mul(f[a], f[b])) return std::nullopt;
  return f;
}

/// Brute-force ring isomorphism r -> s. Intended for orders <= 64.
inline std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& r, const FiniteRing& s) {
  if (r.order() != s.order()) return std::nullopt;
  const auto gens = ring_generators(r);
  // Candidate images must share the power-cycle shape and additive order.
  auto additive_order = [](const FiniteRing& x, Elem a) {
    std::size_t k = 1;
    for (Elem y = a; y != x.zero(); y = x.add(y, a)) ++k;
    return k;
  };
  std::vector<std::vector<Elem>> cands;
  for (Elem g : gens) {
    const auto wg = power_cycle(r, g);
    std::vector<Elem> c;
    for (Elem y = 0; y < s.order(); ++y) {
      const auto wy = power_cycle(s, y);
      if (wy.k == wg.k && wy.l == wg.l && additive_order(s, y) == additive_order(r, g)) c.push_back(y);
    }
    cands.push_back(std::move(c));
  }
  std::vector<Elem> images(gens.size());
  std::optional<std::vector<Elem>> found;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) {
      found = extend_map(r, s, gens, images);
      return found.has_value();
    }
    for (Elem y : cands[i]) {
      images[i] = y;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

inline bool isomorphic(const FiniteRing& r, const FiniteRing& s) { return find_isomorphism(r, s).has_value(); }

/// Raw tables of a ring, for feeding validate_ring.
inline RawTables raw_tables(const FiniteRing& r) {
  RawTables t;
  t.order = r.order();
  t.add.assign(r.add_table().begin(), r.add_table().end());
  t.mul.assign(r.mul_table().begin(), r.mul_table().end());
  t.one = r.one();
  return t;
}

/// Element of a matrix ring given row-major entries over the base ring
/// (first entry most significant).
inline Elem matrix_index(std::size_t base, const std::vector<Elem>& entries) {
  std::size_t idx = 0;
  for (Elem e : entries) idx = idx * base + e;
  return static_cast<Elem>(idx);
}

}  // namespace ringlab::testing
