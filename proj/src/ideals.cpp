#include "ringlab/ideals.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ringlab/constructions.hpp"

namespace ringlab {

namespace {

void require_oracle_order(const FiniteRing& r, const char* what) {
  if (r.order() > kOracleMaxOrder)
    throw RingError(std::string(what) + ": order " + std::to_string(r.order()) +
                    " exceeds oracle cap " + std::to_string(kOracleMaxOrder));
}

bool closes_left(Side s) { return s == Side::Left || s == Side::TwoSided; }
bool closes_right(Side s) { return s == Side::Right || s == Side::TwoSided; }

/// Grows an additive subgroup until it is closed under the requested
/// multiplications.
ElementSet close_under(const FiniteRing& r, ElementSet s, Side side) {
  s = additive_closure(r, s);
  if (side == Side::AdditiveOnly) return s;
  for (;;) {
    ElementSet extra(r.order());
    bool grew = false;
    s.for_each([&](Elem x) {
      for (Elem a = 0; a < r.order(); ++a) {
        if (closes_left(side)) {
          const Elem y = r.mul(a, x);
          if (!s.contains(y)) grew |= extra.insert(y);
        }
        if (closes_right(side)) {
          const Elem y = r.mul(x, a);
          if (!s.contains(y)) grew |= extra.insert(y);
        }
      }
    });
    if (!grew) return s;
    s = additive_closure(r, s | extra);
  }
}

void require_matching(const IdealSet& i, const IdealSet& j, const char* what) {
  require_same_ring(i.ring(), j.ring(), what);
  if (i.side() != j.side())
    throw RingError(std::string(what) + ": mixed sidedness (" + to_string(i.side()) + " and " +
                    to_string(j.side()) + ")");
}

bool less_ideal(const IdealSet& a, const IdealSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members().members() < b.members().members();
}

/// Closure of the given principal ideals under pairwise sums.
std::vector<IdealSet> crawl_lattice(const FiniteRing& r, std::vector<ElementSet> principal,
                                    Side side) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> found;
  auto add = [&](ElementSet s) {
    if (seen.insert(s).second) found.push_back(std::move(s));
  };
  add(ElementSet::of(r.order(), {r.zero()}));
  std::vector<ElementSet> gens;
  for (auto& p : principal)
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
  for (std::size_t k = 0; k < found.size(); ++k)
    for (const ElementSet& p : gens) {
      if (p.is_subset_of(found[k])) continue;
      add(additive_closure(r, found[k] | p));
    }
  std::vector<IdealSet> out;
  for (auto& s : found) out.push_back(IdealSet::trusted(r, std::move(s), side));
  std::sort(out.begin(), out.end(), less_ideal);
  return out;
}

std::vector<IdealSet> maximal_proper(std::vector<IdealSet> all) {
  std::vector<IdealSet> proper;
  for (auto& i : all)
    if (!i.is_whole()) proper.push_back(std::move(i));
  std::vector<IdealSet> out;
  for (const auto& i : proper) {
    bool maximal = true;
    for (const auto& j : proper)
      if (j.size() > i.size() && i.members().is_subset_of(j.members())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

}  // namespace

IdealSet ideal_generated(const FiniteRing& r, Elem x, Side side) {
  r.require_element(x);
  return ideal_generated(r, ElementSet::of(r.order(), {x}), side);
}

IdealSet ideal_generated(const FiniteRing& r, const ElementSet& generators, Side side) {
  if (generators.universe() != r.order()) throw RingError("ideal_generated: universe does not match ring");
  return IdealSet::trusted(r, close_under(r, generators, side), side);
}

IdealSet ideal_sum(const IdealSet& i, const IdealSet& j) {
  require_matching(i, j, "ideal_sum");
  return IdealSet::trusted(i.ring(), additive_closure(i.ring(), i.members() | j.members()), i.side());
}

IdealSet ideal_product(const IdealSet& i, const IdealSet& j) {
  require_matching(i, j, "ideal_product");
  const FiniteRing& r = i.ring();
  ElementSet prods(r.order());
  const auto jm = j.members().members();
  i.members().for_each([&](Elem a) {
    for (Elem b : jm) prods.insert(r.mul(a, b));
  });
  return IdealSet::trusted(r, additive_closure(r, prods), i.side());
}

IdealSet ideal_power(const IdealSet& i, std::size_t t) {
  if (t == 0) throw RingError("ideal_power: exponent must be at least 1");
  IdealSet p = i;
  for (std::size_t k = 1; k < t; ++k) p = ideal_product(i, p);
  return p;
}

IdealSet ideal_intersection(const IdealSet& i, const IdealSet& j) {
  require_matching(i, j, "ideal_intersection");
  return IdealSet::trusted(i.ring(), i.members() & j.members(), i.side());
}

std::optional<std::size_t> nilpotency_index(const IdealSet& i) {
  IdealSet p = i;
  for (std::size_t t = 1;; ++t) {
    if (p.is_zero()) return t;
    IdealSet next = ideal_product(i, p);
    if (next.size() == p.size()) return std::nullopt;  // powers only shrink
    p = std::move(next);
  }
}

ElementSet nil_elements(const FiniteRing& r) {
  ElementSet out(r.order());
  for (Elem a = 0; a < r.order(); ++a) {
    Elem x = a;
    for (std::size_t k = 1; k <= r.order(); ++k) {
      if (x == r.zero()) {
        out.insert(a);
        break;
      }
      x = r.mul(x, a);
    }
  }
  return out;
}

IdealSet jacobson_radical(const FiniteRing& r) {
  const UnitGroup u = units(r);
  ElementSet j(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    bool in = true;
    for (Elem a = 0; a < r.order() && in; ++a) in = u.members.contains(r.add(r.one(), r.mul(a, x)));
    if (in) j.insert(x);
  }
  return IdealSet::trusted(r, std::move(j), Side::TwoSided);
}

IdealSet jacobson_radical_by_definition(const FiniteRing& r) {
  const UnitGroup u = units(r);
  ElementSet j(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    bool in = true;
    for (Elem a = 0; a < r.order() && in; ++a) {
      const Elem ax = r.mul(a, x);
      for (Elem b = 0; b < r.order() && in; ++b) in = u.members.contains(r.add(r.one(), r.mul(ax, b)));
    }
    if (in) j.insert(x);
  }
  return IdealSet(r, std::move(j), Side::TwoSided);
}

IdealSet prime_radical(const FiniteRing& r) {
  // A sum of nilpotent ideals is nilpotent, and every nilpotent ideal is the
  // sum of its principal ideals, so one pass over nil elements suffices.
  ElementSet sum = ElementSet::of(r.order(), {r.zero()});
  nil_elements(r).for_each([&](Elem x) {
    if (sum.contains(x)) return;
    IdealSet p = ideal_generated(r, x, Side::TwoSided);
    if (nilpotency_index(p)) sum = additive_closure(r, sum | p.members());
  });
  IdealSet out = IdealSet::trusted(r, std::move(sum), Side::TwoSided);
  if (!nilpotency_index(out)) throw std::logic_error("prime_radical: sum is not nilpotent");
  return out;
}

std::vector<IdealSet> enumerate_ideals(const FiniteRing& r) {
  require_oracle_order(r, "enumerate_ideals");
  std::vector<ElementSet> principal;
  for (Elem x = 0; x < r.order(); ++x) principal.push_back(close_under(r, ElementSet::of(r.order(), {x}), Side::TwoSided));
  return crawl_lattice(r, std::move(principal), Side::TwoSided);
}

std::vector<IdealSet> enumerate_one_sided_ideals(const FiniteRing& r, Side side) {
  require_oracle_order(r, "enumerate_one_sided_ideals");
  if (side != Side::Left && side != Side::Right)
    throw RingError("enumerate_one_sided_ideals: side must be left or right");
  std::vector<ElementSet> principal;
  for (Elem x = 0; x < r.order(); ++x) {
    ElementSet s(r.order());
    for (Elem a = 0; a < r.order(); ++a) s.insert(side == Side::Right ? r.mul(x, a) : r.mul(a, x));
    principal.push_back(std::move(s));
  }
  return crawl_lattice(r, std::move(principal), side);
}

IdealSet prime_radical_oracle(const FiniteRing& r) {
  require_oracle_order(r, "prime_radical_oracle");
  ElementSet meet = ElementSet::full(r.order());
  for (const IdealSet& i : enumerate_ideals(r)) {
    if (i.is_whole()) continue;
    if (is_prime_ideal(i)) meet &= i.members();
  }
  return IdealSet(r, std::move(meet), Side::TwoSided);
}

bool is_prime_ideal(const IdealSet& i) {
  if (i.side() != Side::TwoSided) throw RingError("is_prime_ideal: ideal must be two-sided");
  if (i.is_whole()) throw RingError("is_prime_ideal: ideal equals the whole ring");
  const QuotientRing q = quotient(i.ring(), i);
  const FiniteRing& s = q.ring;
  for (Elem a = 1; a < s.order(); ++a)
    for (Elem b = 1; b < s.order(); ++b) {
      bool separated = false;
      for (Elem x = 0; x < s.order() && !separated; ++x) separated = s.mul(s.mul(a, x), b) != s.zero();
      if (!separated) return false;
    }
  return true;
}

bool is_completely_prime_ideal(const IdealSet& i) {
  if (i.side() != Side::TwoSided) throw RingError("is_completely_prime_ideal: ideal must be two-sided");
  if (i.is_whole()) throw RingError("is_completely_prime_ideal: ideal equals the whole ring");
  const FiniteRing& r = i.ring();
  for (Elem a = 0; a < r.order(); ++a) {
    if (i.contains(a)) continue;
    for (Elem b = 0; b < r.order(); ++b)
      if (!i.contains(b) && i.contains(r.mul(a, b))) return false;
  }
  return true;
}

LocalNilpotency is_locally_nilpotent(const IdealSet& i) {
  const FiniteRing& r = i.ring();
  ElementSet covered = ElementSet::of(r.order(), {r.zero()});
  LocalNilpotency out;
  for (Elem x : i.members().members()) {
    // Elements of an already nilpotent sum generate nilpotent ideals.
    if (covered.contains(x)) continue;
    IdealSet p = ideal_generated(r, x, Side::TwoSided);
    if (!nilpotency_index(p)) {
      out.holds = false;
      out.witness = x;
      return out;
    }
    covered = additive_closure(r, covered | p.members());
  }
  return out;
}

bool is_T_nilpotent(const IdealSet& i, Side side) {
  if (side != Side::Left && side != Side::Right) throw RingError("is_T_nilpotent: side must be left or right");
  return nilpotency_index(i).has_value();
}

bool t_nilpotent_by_game(const IdealSet& i, Side side) {
  if (side != Side::Left && side != Side::Right) throw RingError("t_nilpotent_by_game: side must be left or right");
  const FiniteRing& r = i.ring();
  const auto members = i.members().members();
  // Graph on nonzero partial products; an infinite non-vanishing sequence
  // exists iff some cycle exists.
  std::vector<int> color(r.order(), 0);
  std::vector<std::pair<Elem, std::size_t>> stack;
  for (Elem start : members) {
    if (start == r.zero() || color[start] != 0) continue;
    stack.push_back({start, 0});
    color[start] = 1;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      if (next == members.size()) {
        color[x] = 2;
        stack.pop_back();
        continue;
      }
      const Elem a = members[next++];
      const Elem y = side == Side::Left ? r.mul(x, a) : r.mul(a, x);
      if (y == r.zero()) continue;
      if (color[y] == 1) return false;
      if (color[y] == 0) {
        color[y] = 1;
        stack.push_back({y, 0});
      }
    }
  }
  return true;
}

std::vector<IdealSet> maximal_right_ideals_oracle(const FiniteRing& r) {
  return maximal_proper(enumerate_one_sided_ideals(r, Side::Right));
}

std::vector<IdealSet> maximal_left_ideals_oracle(const FiniteRing& r) {
  const FiniteRing op = opposite_ring(r);
  std::vector<IdealSet> out;
  for (const IdealSet& i : maximal_proper(enumerate_one_sided_ideals(op, Side::Right)))
    out.push_back(IdealSet::trusted(r, i.members(), Side::Left));
  return out;
}

}  // namespace ringlab
