#include "ringlab/classify.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "ringlab/constructions.hpp"
#include "ringlab/ideals.hpp"

namespace ringlab {

namespace {

std::mutex g_facts_mutex;
std::unordered_map<std::uint64_t, std::vector<std::shared_ptr<const RingFacts>>> g_facts;

using Row = std::vector<std::uint64_t>;

Certificate cert(std::string kind, std::vector<std::uint64_t> elems, std::string equation) {
  return Certificate{std::move(kind), std::move(elems), std::move(equation)};
}

Verdict positive(std::vector<std::string> fields, std::vector<Row> rows = {}, std::string note = {}) {
  Verdict v;
  v.holds = true;
  v.witness_fields = std::move(fields);
  v.witness = std::move(rows);
  v.note = std::move(note);
  return v;
}

Verdict negative(Certificate c, std::string note = {}) {
  Verdict v;
  v.holds = false;
  v.certificate = std::move(c);
  v.note = std::move(note);
  return v;
}

/// Least potent p with a - p in s (and commuting with a if asked).
std::optional<Elem> least_potent_in_coset(const RingFacts& f, Elem a, const ElementSet& s,
                                          bool commuting) {
  const FiniteRing& r = f.ring;
  for (Elem p : f.potent_list) {
    if (!s.contains(r.sub(a, p))) continue;
    if (commuting && r.mul(a, p) != r.mul(p, a)) continue;
    return p;
  }
  return std::nullopt;
}

Verdict potent_coset_verdict(const RingFacts& f, const ElementSet& s, bool commuting,
                             const std::string& kind, const std::string& equation) {
  const FiniteRing& r = f.ring;
  std::vector<Row> rows;
  for (Elem a = 0; a < r.order(); ++a) {
    auto p = least_potent_in_coset(f, a, s, commuting);
    if (!p) return negative(cert(kind, {a}, equation));
    rows.push_back({a, *p});
  }
  return positive({"a", "p"}, std::move(rows));
}

bool is_potent_element(const FiniteRing& r, Elem p) { return potency_exponent(r, p).has_value(); }

/// (ab)^n - ab^n - a^n b + ab.
Elem n_like_defect(const FiniteRing& r, const std::vector<Elem>& pw, Elem a, Elem b) {
  const Elem ab = r.mul(a, b);
  Elem x = r.sub(pw[ab], r.mul(a, pw[b]));
  x = r.sub(x, r.mul(pw[a], b));
  return r.add(x, ab);
}

std::vector<Elem> power_table(const RingFacts& f, std::uint64_t n) {
  std::vector<Elem> pw(f.ring.order());
  for (Elem a = 0; a < f.ring.order(); ++a) pw[a] = pow_reduced(f.ring, f.cycles[a], n);
  return pw;
}

std::vector<ElementSet> difference_sets(const FiniteRing& r, std::uint64_t max_exponent) {
  std::vector<ElementSet> d;
  d.reserve(r.order());
  for (Elem a = 0; a < r.order(); ++a) {
    ElementSet s(r.order());
    Elem p = r.mul(a, a);
    for (std::uint64_t n = 2; n <= max_exponent; ++n) {
      s.insert(r.sub(a, p));
      p = r.mul(p, a);
    }
    d.push_back(std::move(s));
  }
  return d;
}

/// S * D, or nullopt if zero becomes attainable.
std::optional<ElementSet> step(const FiniteRing& r, const ElementSet& s, const std::vector<Elem>& d) {
  ElementSet out(r.order());
  bool hit_zero = false;
  s.for_each([&](Elem x) {
    if (hit_zero) return;
    for (Elem y : d) {
      const Elem z = r.mul(x, y);
      if (z == r.zero()) {
        hit_zero = true;
        return;
      }
      out.insert(z);
    }
  });
  if (hit_zero) return std::nullopt;
  return out;
}

bool right_ideal_is_maximal(const FiniteRing& r, const ElementSet& members) {
  for (Elem x = 0; x < r.order(); ++x) {
    if (members.contains(x)) continue;
    ElementSet gen = members;
    for (Elem a = 0; a < r.order(); ++a) gen.insert(r.mul(x, a));
    if (additive_closure(r, gen).size() != r.order()) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Facts cache

std::shared_ptr<const RingFacts> ring_facts(const FiniteRing& r) {
  const std::uint64_t h = r.content_hash();
  {
    std::lock_guard<std::mutex> lock(g_facts_mutex);
    auto it = g_facts.find(h);
    if (it != g_facts.end())
      for (const auto& f : it->second)
        if (f->ring == r) return f;
  }
  auto f = std::make_shared<RingFacts>();
  f->ring = r;
  f->cycles.reserve(r.order());
  f->potents = ElementSet(r.order());
  for (Elem a = 0; a < r.order(); ++a) {
    f->cycles.push_back(power_cycle(r, a));
    if (f->cycles.back().k == 1) {
      f->potents.insert(a);
      f->potent_list.push_back(a);
    }
  }
  f->units = units(r);
  f->idempotents = idempotents(r);
  f->nil = nil_elements(r);
  f->center = center(r);
  f->jacobson = jacobson_radical(r);
  f->prime = prime_radical(r);
  if (!f->prime.members().is_subset_of(f->jacobson.members()))
    throw std::logic_error("prime radical not contained in Jacobson radical");
  std::lock_guard<std::mutex> lock(g_facts_mutex);
  g_facts[h].push_back(f);
  return f;
}

void clear_facts_cache() {
  std::lock_guard<std::mutex> lock(g_facts_mutex);
  g_facts.clear();
}

// ---------------------------------------------------------------------------
// Predicates

Verdict is_periodic(const FiniteRing& r) {
  auto f = ring_facts(r);
  std::vector<Row> rows;
  for (const auto& w : f->cycles) {
    if (!w.verify(r)) throw std::logic_error("periodicity witness failed to verify");
    rows.push_back({w.element, w.k, w.l});
  }
  return positive({"a", "k", "l"}, std::move(rows));
}

Verdict is_potent_ring(const FiniteRing& r) {
  auto f = ring_facts(r);
  std::vector<Row> rows;
  for (const auto& w : f->cycles) {
    if (w.k != 1) return negative(cert("non-potent", {w.element}, "a^m != a for all m >= 2"));
    rows.push_back({w.element, w.l});
  }
  return positive({"a", "m"}, std::move(rows));
}

Verdict is_weakly_periodic(const FiniteRing& r, bool require_commuting) {
  auto f = ring_facts(r);
  return potent_coset_verdict(*f, f->nil, require_commuting,
                              require_commuting ? "no-commuting-potent-nil-decomposition"
                                                : "no-potent-nil-decomposition",
                              require_commuting ? "a - p not nilpotent for every potent p with ap = pa"
                                                : "a - p not nilpotent for every potent p");
}

Verdict is_strongly_periodic(const FiniteRing& r, bool require_commuting) {
  auto f = ring_facts(r);
  return potent_coset_verdict(*f, f->prime.members(), require_commuting,
                              require_commuting ? "no-commuting-potent-prime-radical-decomposition"
                                                : "no-potent-prime-radical-decomposition",
                              require_commuting ? "a - p not in P(R) for every potent p with ap = pa"
                                                : "a - p not in P(R) for every potent p");
}

Verdict is_2_primal(const FiniteRing& r) {
  auto f = ring_facts(r);
  std::vector<Row> rows;
  for (Elem x : f->nil.members()) {
    if (!f->prime.contains(x))
      return negative(cert("nilpotent-outside-prime-radical", {x}, "x nilpotent, x not in P(R)"));
    rows.push_back({x});
  }
  return positive({"x"}, std::move(rows), "every nilpotent lies in P(R)");
}

Verdict is_nil_semicommutative(const FiniteRing& r) {
  auto f = ring_facts(r);
  const auto nil = f->nil.members();
  std::size_t pairs = 0;
  for (Elem a : nil)
    for (Elem b : nil) {
      if (r.mul(a, b) != r.zero()) continue;
      ++pairs;
      for (Elem x = 0; x < r.order(); ++x)
        if (r.mul(r.mul(a, x), b) != r.zero())
          return negative(cert("nil-semicommutative-violation", {a, x, b},
                               "a, b nilpotent, ab = 0, axb != 0"));
    }
  return positive({}, {}, std::to_string(pairs) + " nilpotent pairs with ab = 0 have aRb = 0");
}

Verdict is_abelian_ring(const FiniteRing& r) {
  auto f = ring_facts(r);
  std::vector<Row> rows;
  for (Elem e : f->idempotents.members()) {
    for (Elem x = 0; x < r.order(); ++x)
      if (r.mul(e, x) != r.mul(x, e))
        return negative(cert("non-central-idempotent", {e, x}, "e^2 = e, ex != xe"));
    rows.push_back({e});
  }
  return positive({"e"}, std::move(rows), "every idempotent is central");
}

Verdict is_commutative_ring(const FiniteRing& r) {
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = a + 1; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return negative(cert("noncommuting-pair", {a, b}, "ab != ba"));
  return positive({});
}

Verdict is_J_clean(const FiniteRing& r) {
  auto f = ring_facts(r);
  const auto idem = f->idempotents.members();
  std::vector<Row> rows;
  for (Elem a = 0; a < r.order(); ++a) {
    std::optional<Elem> found;
    for (Elem e : idem)
      if (f->jacobson.contains(r.sub(a, e))) {
        found = e;
        break;
      }
    if (!found)
      return negative(cert("no-idempotent-J-decomposition", {a}, "a - e not in J(R) for every idempotent e"));
    rows.push_back({a, *found});
  }
  return positive({"a", "e"}, std::move(rows));
}

Verdict is_J_clean_like(const FiniteRing& r) {
  auto f = ring_facts(r);
  return potent_coset_verdict(*f, f->jacobson.members(), false, "no-potent-J-decomposition",
                              "a - p not in J(R) for every potent p");
}

Verdict potent_lifts_mod_J(const FiniteRing& r) {
  auto f = ring_facts(r);
  const ElementSet& j = f->jacobson.members();
  std::vector<Row> rows;
  for (Elem p = 0; p < r.order(); ++p) {
    // Least n >= 2 with p - p^n in J; n <= order + 1 covers the power cycle.
    std::optional<std::uint64_t> n;
    Elem pn = r.mul(p, p);
    for (std::uint64_t e = 2; e <= r.order() + 1; ++e) {
      if (j.contains(r.sub(p, pn))) {
        n = e;
        break;
      }
      pn = r.mul(pn, p);
    }
    if (!n) continue;
    auto q = least_potent_in_coset(*f, p, j, false);
    if (!q)
      return negative(cert("potent-does-not-lift", {p, *n}, "p - p^n in J(R), p - q not in J(R) for every potent q"));
    rows.push_back({p, *n, *q});
  }
  return positive({"p", "n", "q"}, std::move(rows));
}

Verdict is_quasi_duo(const FiniteRing& r, Side side, const QuasiDuoOptions& opts) {
  if (side != Side::Left && side != Side::Right) throw RingError("is_quasi_duo: side must be left or right");
  auto f = ring_facts(r);
  const ElementSet& j = f->jacobson.members();
  std::optional<std::pair<Elem, Elem>> noncomm;
  for (Elem a = 0; a < r.order() && !noncomm; ++a)
    for (Elem b = a + 1; b < r.order(); ++b)
      if (!j.contains(r.sub(r.mul(a, b), r.mul(b, a)))) {
        noncomm = {a, b};
        break;
      }
  const bool fast = !noncomm;
  if (r.order() > opts.oracle_cap) {
    if (fast) return positive({}, {}, "R/J(R) is commutative");
    return negative(cert("noncommutative-mod-J", {noncomm->first, noncomm->second}, "ab - ba not in J(R)"),
                    "R/J(R) is not commutative");
  }
  const auto maximal = side == Side::Right ? maximal_right_ideals_oracle(r) : maximal_left_ideals_oracle(r);
  std::optional<Certificate> bad;
  std::vector<Row> rows;
  for (const IdealSet& m : maximal) {
    const auto members = m.members().members();
    Row row;
    for (Elem x : members) row.push_back(x);
    rows.push_back(row);
    if (bad) continue;
    for (Elem x = 0; x < r.order() && !bad; ++x)
      for (Elem y : members) {
        const Elem z = side == Side::Right ? r.mul(x, y) : r.mul(y, x);
        if (!m.contains(z)) {
          std::vector<std::uint64_t> elems{x, y};
          elems.insert(elems.end(), members.begin(), members.end());
          bad = cert(side == Side::Right ? "non-two-sided-maximal-right-ideal" : "non-two-sided-maximal-left-ideal",
                     std::move(elems),
                     side == Side::Right ? "I maximal right ideal, y in I, xy not in I"
                                         : "I maximal left ideal, y in I, yx not in I");
          break;
        }
      }
  }
  if (fast != !bad) throw std::logic_error("quasi-duo fast path disagrees with maximal ideal enumeration");
  if (bad) return negative(*bad, "maximal one-sided ideal is not two-sided");
  Verdict v = positive({"maximal ideal members"}, std::move(rows), "every maximal one-sided ideal is two-sided");
  return v;
}

Verdict is_generalized_n_like(const FiniteRing& r, std::uint64_t n) {
  if (n < 2) throw RingError("is_generalized_n_like: n must be at least 2");
  auto f = ring_facts(r);
  const auto pw = power_table(*f, n);
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b)
      if (n_like_defect(r, pw, a, b) != r.zero())
        return negative(cert("generalized-n-like-violation", {n, a, b}, "(ab)^n - ab^n - a^n b + ab != 0"));
  return positive({"n"}, {{n}});
}

bool EuwDecomposition::verify(const FiniteRing& r) const {
  if (r.mul(e, e) != e) return false;
  if (!is_unit(r, u) || r.pow(u, m) != r.one()) return false;
  if (!ring_facts(r)->prime.contains(w)) return false;
  if (r.mul(e, u) != r.mul(u, e) || r.mul(e, w) != r.mul(w, e) || r.mul(u, w) != r.mul(w, u)) return false;
  return true;
}

std::optional<EuwDecomposition> euw_decomposition(const FiniteRing& r, Elem a) {
  r.require_element(a);
  auto f = ring_facts(r);
  const auto idem = f->idempotents.members();
  const auto us = f->units.members.members();
  for (Elem e : idem)
    for (Elem u : us) {
      const Elem eu = r.mul(e, u);
      if (eu != r.mul(u, e)) continue;
      const Elem w = r.sub(a, eu);
      if (!f->prime.contains(w)) continue;
      if (r.mul(e, w) != r.mul(w, e) || r.mul(u, w) != r.mul(w, u)) continue;
      EuwDecomposition d{e, u, w, 1};
      for (Elem x = u; x != r.one(); x = r.mul(x, u)) ++d.m;
      return d;
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sequence game

std::string to_string(SequenceOutcome o) {
  switch (o) {
    case SequenceOutcome::Holds: return "holds";
    case SequenceOutcome::Fails: return "fails";
    case SequenceOutcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

SequenceResult sequence_vanishing(const FiniteRing& r, const SequenceOptions& opts) {
  SequenceResult res;
  if (r.order() == 1) return res;
  const std::uint64_t max_exp = opts.max_exponent ? opts.max_exponent : r.order() + 1;
  const auto d_sets = difference_sets(r, max_exp);
  // Adversary moves, one per distinct D(a) avoiding zero.
  std::vector<Elem> choice;
  std::vector<std::vector<Elem>> moves;
  {
    std::unordered_map<ElementSet, int, ElementSetHash> seen;
    for (Elem a = 0; a < r.order(); ++a) {
      if (d_sets[a].contains(r.zero())) continue;
      if (seen.emplace(d_sets[a], 1).second) {
        choice.push_back(a);
        moves.push_back(d_sets[a].members());
      }
    }
  }
  struct Frame {
    ElementSet state;
    std::size_t next = 0;
    Elem taken = 0;
  };
  std::unordered_map<ElementSet, int, ElementSetHash> color;  // 1 grey, 2 black
  std::vector<Frame> stack;
  ElementSet start = ElementSet::of(r.order(), {r.one()});
  color[start] = 1;
  stack.push_back({start});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == moves.size()) {
      color[top.state] = 2;
      stack.pop_back();
      continue;
    }
    const std::size_t mv = top.next++;
    auto nxt = step(r, top.state, moves[mv]);
    if (!nxt) continue;
    top.taken = choice[mv];
    auto it = color.find(*nxt);
    if (it != color.end()) {
      if (it->second == 2) continue;
      // Grey: cycle back to a frame on the stack.
      SequenceWitness w;
      std::size_t at = 0;
      while (!(stack[at].state == *nxt)) ++at;
      for (std::size_t i = 0; i < at; ++i) w.prefix.push_back(stack[i].taken);
      for (std::size_t i = at; i < stack.size(); ++i) w.cycle.push_back(stack[i].taken);
      res.outcome = SequenceOutcome::Fails;
      res.witness = std::move(w);
      res.states = color.size();
      return res;
    }
    if (color.size() >= opts.max_states) {
      res.outcome = SequenceOutcome::Inconclusive;
      res.states = color.size();
      return res;
    }
    color.emplace(*nxt, 1);
    stack.push_back({std::move(*nxt)});
  }
  res.states = color.size();
  return res;
}

bool verify_sequence_witness(const FiniteRing& r, const SequenceWitness& w, const SequenceOptions& opts) {
  if (w.cycle.empty() || r.order() == 1) return false;
  const std::uint64_t max_exp = opts.max_exponent ? opts.max_exponent : r.order() + 1;
  const auto d_sets = difference_sets(r, max_exp);
  ElementSet s = ElementSet::of(r.order(), {r.one()});
  auto apply = [&](Elem a) {
    if (a >= r.order()) return false;
    auto nxt = step(r, s, d_sets[a].members());
    if (!nxt) return false;
    s = std::move(*nxt);
    return true;
  };
  for (Elem a : w.prefix)
    if (!apply(a)) return false;
  // The state at cycle boundaries is deterministic, so it must repeat.
  std::unordered_map<ElementSet, int, ElementSetHash> boundary;
  for (std::size_t round = 0; round <= opts.max_states; ++round) {
    if (!boundary.emplace(s, 1).second) return true;
    for (Elem a : w.cycle)
      if (!apply(a)) return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Certificates

bool reverify(const FiniteRing& r, const Certificate& c) {
  const auto& x = c.elements;
  auto elem = [&](std::size_t i) { return static_cast<Elem>(x.at(i)); };
  const std::size_t n = r.order();
  auto in_range = [&](std::size_t count) {
    if (x.size() < count) return false;
    for (std::size_t i = 0; i < count; ++i)
      if (x[i] >= n) return false;
    return true;
  };
  auto coset_empty = [&](const ElementSet& s, bool commuting) {
    if (!in_range(1)) return false;
    const Elem a = elem(0);
    for (Elem p = 0; p < n; ++p) {
      if (!is_potent_element(r, p) || !s.contains(r.sub(a, p))) continue;
      if (commuting && r.mul(a, p) != r.mul(p, a)) continue;
      return false;
    }
    return true;
  };
  const std::string& k = c.kind;
  if (k == "non-potent") return in_range(1) && !potency_exponent(r, elem(0));
  if (k == "no-potent-nil-decomposition") return coset_empty(nil_elements(r), false);
  if (k == "no-commuting-potent-nil-decomposition") return coset_empty(nil_elements(r), true);
  if (k == "no-potent-prime-radical-decomposition") return coset_empty(prime_radical(r).members(), false);
  if (k == "no-commuting-potent-prime-radical-decomposition") return coset_empty(prime_radical(r).members(), true);
  if (k == "no-potent-J-decomposition") return coset_empty(jacobson_radical(r).members(), false);
  if (k == "nilpotent-outside-prime-radical")
    return in_range(1) && element_nilpotency_index(r, elem(0)) && !prime_radical(r).contains(elem(0));
  if (k == "nil-semicommutative-violation") {
    if (!in_range(3)) return false;
    const Elem a = elem(0), m = elem(1), b = elem(2);
    return element_nilpotency_index(r, a) && element_nilpotency_index(r, b) && r.mul(a, b) == r.zero() &&
           r.mul(r.mul(a, m), b) != r.zero();
  }
  if (k == "non-central-idempotent")
    return in_range(2) && r.mul(elem(0), elem(0)) == elem(0) && r.mul(elem(0), elem(1)) != r.mul(elem(1), elem(0));
  if (k == "noncommuting-pair") return in_range(2) && r.mul(elem(0), elem(1)) != r.mul(elem(1), elem(0));
  if (k == "no-idempotent-J-decomposition") {
    if (!in_range(1)) return false;
    const auto j = jacobson_radical(r);
    for (Elem e = 0; e < n; ++e)
      if (r.mul(e, e) == e && j.contains(r.sub(elem(0), e))) return false;
    return true;
  }
  if (k == "potent-does-not-lift") {
    if (!in_range(1) || x.size() < 2 || x[1] < 2) return false;
    const auto j = jacobson_radical(r);
    const Elem p = elem(0);
    if (!j.contains(r.sub(p, r.pow(p, x[1])))) return false;
    for (Elem q = 0; q < n; ++q)
      if (is_potent_element(r, q) && j.contains(r.sub(p, q))) return false;
    return true;
  }
  if (k == "noncommutative-mod-J")
    return in_range(2) && !jacobson_radical(r).contains(r.sub(r.mul(elem(0), elem(1)), r.mul(elem(1), elem(0))));
  if (k == "non-two-sided-maximal-right-ideal" || k == "non-two-sided-maximal-left-ideal") {
    if (!in_range(x.size()) || x.size() < 3) return false;
    const bool right = k == "non-two-sided-maximal-right-ideal";
    const FiniteRing base = right ? r : opposite_ring(r);
    ElementSet members(n);
    for (std::size_t i = 2; i < x.size(); ++i) members.insert(elem(i));
    const IdealSet i = IdealSet::trusted(base, members, Side::Right);
    if (!i.is_additive_subgroup() || !i.is_right_closed() || i.is_whole()) return false;
    if (!right_ideal_is_maximal(base, members)) return false;
    const Elem a = elem(0), y = elem(1);
    return members.contains(y) && !members.contains(base.mul(a, y));
  }
  if (k == "generalized-n-like-violation") {
    if (x.size() < 3 || x[0] < 2 || x[1] >= n || x[2] >= n) return false;
    std::vector<Elem> pw(n);
    for (Elem a = 0; a < n; ++a) pw[a] = r.pow(a, x[0]);
    return n_like_defect(r, pw, elem(1), elem(2)) != r.zero();
  }
  if (k == "generalized-n-like-violations") {
    if (x.empty() || x.size() % 3 != 0) return false;
    for (std::size_t i = 0; i < x.size(); i += 3) {
      Certificate one{"generalized-n-like-violation", {x[i], x[i + 1], x[i + 2]}, {}};
      if (!reverify(r, one)) return false;
    }
    return true;
  }
  if (k == "no-euw-decomposition") {
    if (!in_range(1)) return false;
    const auto p = prime_radical(r);
    const Elem a = elem(0);
    for (Elem e = 0; e < n; ++e) {
      if (r.mul(e, e) != e) continue;
      for (Elem u = 0; u < n; ++u) {
        if (!is_unit(r, u)) continue;
        const Elem w = r.sub(a, r.mul(e, u));
        if (p.contains(w) && r.mul(e, u) == r.mul(u, e) && r.mul(e, w) == r.mul(w, e) &&
            r.mul(u, w) == r.mul(w, u))
          return false;
      }
    }
    return true;
  }
  return false;
}

bool reverify_witness(const FiniteRing& r, const std::string& name, const Verdict& v) {
  if (!v.holds) return v.certificate && reverify(r, *v.certificate);
  const std::size_t n = r.order();
  auto rows_cover_all = [&]() {
    if (v.witness.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (v.witness[i].empty() || v.witness[i][0] != i) return false;
    return true;
  };
  auto coset_rows = [&](const ElementSet& s, bool commuting) {
    if (!rows_cover_all()) return false;
    for (const auto& row : v.witness) {
      if (row.size() != 2 || row[1] >= n) return false;
      const auto a = static_cast<Elem>(row[0]), p = static_cast<Elem>(row[1]);
      if (!is_potent_element(r, p) || !s.contains(r.sub(a, p))) return false;
      if (commuting && r.mul(a, p) != r.mul(p, a)) return false;
    }
    return true;
  };
  if (name == "periodic") {
    if (!rows_cover_all()) return false;
    for (const auto& row : v.witness)
      if (row.size() != 3 || row[1] >= row[2] ||
          r.pow(static_cast<Elem>(row[0]), row[1]) != r.pow(static_cast<Elem>(row[0]), row[2]))
        return false;
    return true;
  }
  if (name == "potent") {
    if (!rows_cover_all()) return false;
    for (const auto& row : v.witness)
      if (row.size() != 2 || row[1] < 2 || r.pow(static_cast<Elem>(row[0]), row[1]) != row[0]) return false;
    return true;
  }
  if (name == "weakly-periodic") return coset_rows(nil_elements(r), false);
  if (name == "weakly-periodic-commuting") return coset_rows(nil_elements(r), true);
  if (name == "strongly-periodic") return coset_rows(prime_radical(r).members(), false);
  if (name == "strongly-periodic-commuting") return coset_rows(prime_radical(r).members(), true);
  if (name == "J-clean-like") return coset_rows(jacobson_radical(r).members(), false);
  if (name == "J-clean") {
    if (!rows_cover_all()) return false;
    const auto j = jacobson_radical(r);
    for (const auto& row : v.witness) {
      if (row.size() != 2 || row[1] >= n) return false;
      const auto a = static_cast<Elem>(row[0]), e = static_cast<Elem>(row[1]);
      if (r.mul(e, e) != e || !j.contains(r.sub(a, e))) return false;
    }
    return true;
  }
  if (name == "potent-lifting") {
    const auto j = jacobson_radical(r);
    for (const auto& row : v.witness) {
      if (row.size() != 3 || row[0] >= n || row[2] >= n) return false;
      const auto p = static_cast<Elem>(row[0]), q = static_cast<Elem>(row[2]);
      if (!j.contains(r.sub(p, r.pow(p, row[1]))) || !is_potent_element(r, q) || !j.contains(r.sub(p, q)))
        return false;
    }
    return potent_lifts_mod_J(r).holds;
  }
  // Universal statements without a per-element table: replay the scan.
  if (name == "2-primal") return is_2_primal(r).holds;
  if (name == "nil-semicommutative") return is_nil_semicommutative(r).holds;
  if (name == "abelian") return is_abelian_ring(r).holds;
  if (name == "commutative") return is_commutative_ring(r).holds;
  if (name == "right-quasi-duo") return is_quasi_duo(r, Side::Right).holds;
  if (name == "left-quasi-duo") return is_quasi_duo(r, Side::Left).holds;
  if (name == "generalized-n-like") {
    if (v.witness.empty()) return false;
    for (const auto& row : v.witness)
      if (row.empty() || !is_generalized_n_like(r, row[0]).holds) return false;
    return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Report

const std::vector<std::string>& classification_keys() {
  static const std::vector<std::string> keys = {
      "periodic",           "potent",           "weakly-periodic",
      "weakly-periodic-commuting", "strongly-periodic", "strongly-periodic-commuting",
      "2-primal",           "nil-semicommutative", "abelian",
      "commutative",        "right-quasi-duo",  "left-quasi-duo",
      "J-clean",            "J-clean-like",     "potent-lifting",
      "generalized-n-like"};
  return keys;
}

ClassificationReport classification_report(const FiniteRing& r, const ClassifyOptions& opts) {
  ClassificationReport rep;
  rep.ring_hash = r.content_hash();
  rep.order = r.order();
  auto& v = rep.verdicts;
  v["periodic"] = is_periodic(r);
  v["potent"] = is_potent_ring(r);
  v["weakly-periodic"] = is_weakly_periodic(r, false);
  v["weakly-periodic-commuting"] = is_weakly_periodic(r, true);
  v["strongly-periodic"] = is_strongly_periodic(r, false);
  v["strongly-periodic-commuting"] = is_strongly_periodic(r, true);
  v["2-primal"] = is_2_primal(r);
  v["nil-semicommutative"] = is_nil_semicommutative(r);
  v["abelian"] = is_abelian_ring(r);
  v["commutative"] = is_commutative_ring(r);
  v["right-quasi-duo"] = is_quasi_duo(r, Side::Right, opts.quasi_duo);
  v["left-quasi-duo"] = is_quasi_duo(r, Side::Left, opts.quasi_duo);
  v["J-clean"] = is_J_clean(r);
  v["J-clean-like"] = is_J_clean_like(r);
  v["potent-lifting"] = potent_lifts_mod_J(r);

  Verdict nl;
  nl.witness_fields = {"n"};
  std::vector<std::uint64_t> violations;
  for (std::uint64_t n = opts.n_like_min; n <= opts.n_like_max; ++n) {
    Verdict one = is_generalized_n_like(r, n);
    if (one.holds) {
      nl.witness.push_back({n});
    } else {
      violations.insert(violations.end(), one.certificate->elements.begin(), one.certificate->elements.end());
    }
  }
  nl.holds = !nl.witness.empty();
  nl.note = "n in [" + std::to_string(opts.n_like_min) + ", " + std::to_string(opts.n_like_max) + "]";
  if (!nl.holds)
    nl.certificate = cert("generalized-n-like-violations", std::move(violations),
                          "(ab)^n - ab^n - a^n b + ab != 0 for each listed (n, a, b)");
  v["generalized-n-like"] = std::move(nl);
  return rep;
}

}  // namespace ringlab
