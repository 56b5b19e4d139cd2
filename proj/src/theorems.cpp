#include "ringlab/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include "ringlab/ideals.hpp"

namespace ringlab {

namespace {

using Row = std::vector<std::uint64_t>;
/// A claim value and, when false, the evidence that replays it.
using Eval = std::pair<bool, std::optional<Json>>;

Eval yes() { return {true, std::nullopt}; }

Json role(const std::string& name) { return {{"name", name}}; }
Json quotient_role(const std::string& by, std::size_t power = 1) {
  return {{"name", "quotient"}, {"by", by}, {"power", power}};
}

Json evidence(const Json& ring, const std::string& kind, const Row& elements) {
  return {{"ring", ring}, {"kind", kind}, {"elements", elements}};
}

Eval fails(const Json& ring, const std::string& kind, const Row& elements) {
  return {false, evidence(ring, kind, elements)};
}

Eval from_verdict(const Json& ring, const Verdict& v) {
  if (v.holds) return yes();
  if (!v.certificate) return {false, std::nullopt};
  Json e = evidence(ring, v.certificate->kind, v.certificate->elements);
  e["equation"] = v.certificate->equation;
  return {false, e};
}

bool is_small_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t x = 1;
  while (e--) x *= b;
  return x;
}

bool mul_ok(std::uint64_t a, std::uint64_t b, std::uint64_t& out) { return !__builtin_mul_overflow(a, b, &out); }

// ---------------------------------------------------------------------------
// Derived rings. Every ring a check inspects is named by a role object so
// that evidence can be replayed from the inputs.

ConstructOptions construct_opts(const HarnessConfig& cfg) {
  ConstructOptions o;
  o.max_order = cfg.construct_max_order;
  return o;
}

RingEndomorphism alpha_of(const FiniteRing& r, const std::string& name) {
  if (name == "frobenius") return frobenius(r);
  return identity_endomorphism(r);
}

/// x^m in R[x]/(x^n): coefficient digit m, first digit most significant.
Elem monomial_index(const FiniteRing& r, std::size_t n, std::size_t m) {
  if (m >= n) return 0;
  return static_cast<Elem>(r.one() * ipow(r.order(), n - 1 - m));
}

const FiniteRing& input_ring(const CheckInput& in) {
  if (!in.ring) throw RingError("check input has no ring");
  return *in.ring;
}

FiniteRing resolve(const CheckInput& in, const Json& ring, const HarnessConfig& cfg) {
  const std::string name = ring.at("name").get<std::string>();
  const auto o = construct_opts(cfg);
  if (name == "A" || name == "B" || name == "T") {
    if (!in.context) throw RingError("role " + name + " needs a context input");
    if (name == "A") return in.context->a;
    if (name == "B") return in.context->b;
    return morita_ring(*in.context, o);
  }
  const FiniteRing& r = input_ring(in);
  if (name == "input") return r;
  if (name == "quotient") {
    const std::string by = ring.at("by").get<std::string>();
    IdealSet i = by == "J"   ? jacobson_radical(r)
                 : by == "P" ? prime_radical(r)
                             : (in.ideal ? *in.ideal : throw RingError("role quotient by I needs an ideal"));
    const std::size_t t = ring.value("power", std::size_t{1});
    if (t > 1) i = ideal_power(i, t);
    return quotient(r, i).ring;
  }
  if (name == "subring") {
    auto s = subring_generated(r, ring.at("generators").get<std::vector<Elem>>(), true);
    if (!s.ring) throw RingError("subring closure has no identity");
    return *s.ring;
  }
  if (name == "generalized_matrix") return generalized_matrix(r, ring.at("s").get<Elem>(), o);
  if (name == "trivial_extension") return trivial_extension(r, regular_bimodule(r), o);
  if (name == "skew_series")
    return truncated_skew_power_series(alpha_of(r, ring.at("alpha")), ring.at("n").get<std::size_t>(), o);
  if (name == "twisted_triangular")
    return triangular_matrix_ring(alpha_of(r, ring.at("alpha")), ring.at("n").get<std::size_t>(), o);
  if (name == "power_series_matrix") {
    const std::size_t n = ring.at("n").get<std::size_t>(), m = ring.at("m").get<std::size_t>();
    const FiniteRing base = truncated_power_series(r, n, o);
    return generalized_matrix(base, monomial_index(r, n, m), o);
  }
  throw RingError("unknown ring role '" + name + "'");
}

// ---------------------------------------------------------------------------
// Evaluations with replayable evidence

IdealSet image_ideal(const MoritaContextSpec& c, int which) {
  return which == 0 ? IdealSet(c.a, psi_image(c), Side::TwoSided) : IdealSet(c.b, phi_image(c), Side::TwoSided);
}

Eval image_nilpotent(const MoritaContextSpec& c, int which, std::size_t* index) {
  const auto t = nilpotency_index(image_ideal(c, which));
  if (!t) return fails(role(which == 0 ? "A" : "B"), "ideal-not-nilpotent", {static_cast<std::uint64_t>(which)});
  if (index) *index = *t;
  return yes();
}

Eval image_in_radical(const MoritaContextSpec& c, int which) {
  const FiniteRing& r = which == 0 ? c.a : c.b;
  const auto img = which == 0 ? psi_image(c) : phi_image(c);
  const auto j = jacobson_radical(r);
  for (Elem x : img.members())
    if (!j.contains(x)) return fails(role(which == 0 ? "A" : "B"), "image-outside-radical", {static_cast<std::uint64_t>(which), x});
  return yes();
}

Eval nil_is_ideal(const FiniteRing& r, const Json& ring) {
  const auto f = ring_facts(r);
  const auto nil = f->nil.members();
  for (Elem x : nil)
    for (Elem y : nil)
      if (!f->nil.contains(r.add(x, y))) return fails(ring, "nil-sum-not-nilpotent", {x, y});
  for (Elem x : nil)
    for (Elem a = 0; a < r.order(); ++a) {
      if (!f->nil.contains(r.mul(a, x))) return fails(ring, "nil-product-not-nilpotent", {a, x, 0});
      if (!f->nil.contains(r.mul(x, a))) return fails(ring, "nil-product-not-nilpotent", {a, x, 1});
    }
  return yes();
}

/// which: 0 = J(R), 1 = N(R) (caller has established N(R) is an ideal).
Eval locally_nilpotent(const FiniteRing& r, const Json& ring, int which) {
  const auto f = ring_facts(r);
  const IdealSet i = which == 0 ? f->jacobson : IdealSet::trusted(r, f->nil, Side::TwoSided);
  const auto res = is_locally_nilpotent(i);
  if (res.holds) return yes();
  return fails(ring, "not-locally-nilpotent", {*res.witness, static_cast<std::uint64_t>(which)});
}

Eval primes_completely_prime(const FiniteRing& r, const Json& ring) {
  for (const auto& i : enumerate_ideals(r)) {
    if (i.is_whole() || !is_prime_ideal(i) || is_completely_prime_ideal(i)) continue;
    Row members;
    for (Elem x : i.members().members()) members.push_back(x);
    return fails(ring, "prime-not-completely-prime", members);
  }
  return yes();
}

/// Some prime m >= 2 with a - a^m in p. Exponents past the preperiod only
/// matter modulo the period, and residues coprime to the period contain
/// infinitely many primes, so a bounded scan plus that residue test decides.
bool has_prime_exponent(const FiniteRing& r, const PeriodicityWitness& w, Elem a, const ElementSet& p) {
  const std::uint64_t per = w.period();
  const std::uint64_t bound = w.k + 2 * per + 2;
  for (std::uint64_t m = 2; m <= bound; ++m)
    if (is_small_prime(m) && p.contains(r.sub(a, pow_reduced(r, w, m)))) return true;
  for (std::uint64_t rho = 0; rho < per; ++rho) {
    const std::uint64_t e = w.k + rho;
    if (std::gcd(e, per) == 1 && p.contains(r.sub(a, pow_reduced(r, w, e)))) return true;
  }
  return false;
}

Eval prime_exponents(const FiniteRing& r, const Json& ring) {
  const auto f = ring_facts(r);
  for (Elem a = 0; a < r.order(); ++a)
    if (!has_prime_exponent(r, f->cycles[a], a, f->prime.members())) return fails(ring, "no-prime-exponent", {a});
  return yes();
}

Eval euw_everywhere(const FiniteRing& r, const Json& ring) {
  for (Elem a = 0; a < r.order(); ++a) {
    const auto d = euw_decomposition(r, a);
    if (!d) return fails(ring, "no-euw-decomposition", {a});
    if (!d->verify(r)) throw std::logic_error("euw decomposition failed to verify");
  }
  return yes();
}

bool radical_matches_quasi_units(const FiniteRing& r, Elem x) {
  return ring_facts(r)->jacobson.contains(x) == is_unit(r, r.sub(r.one(), x));
}

Eval j_is_quasi_units(const FiniteRing& r, const Json& ring) {
  for (Elem x = 0; x < r.order(); ++x)
    if (!radical_matches_quasi_units(r, x)) return fails(ring, "radical-mismatch", {x});
  return yes();
}

Eval nil_in_j(const FiniteRing& r, const Json& ring) {
  const auto f = ring_facts(r);
  for (Elem x : f->nil.members())
    if (!f->jacobson.contains(x)) return fails(ring, "nilpotent-outside-J", {x});
  return yes();
}

Eval j_is_nil(const FiniteRing& r, const Json& ring) {
  const auto f = ring_facts(r);
  for (Elem x : f->jacobson.members().members())
    if (!f->nil.contains(x)) return fails(ring, "J-not-nil", {x});
  return yes();
}

Eval j_t_nilpotent(const FiniteRing& r, const Json& ring, Side side) {
  if (is_T_nilpotent(ring_facts(r)->jacobson, side)) return yes();
  return fails(ring, "J-not-T-nilpotent", {side == Side::Left ? 0u : 1u});
}

/// Periodicity characterizations of one element, each from its own witness.
bool element_characterized(const FiniteRing& r, Elem a) {
  const auto w = power_cycle(r, a);
  if (w.k >= w.l || r.pow(a, w.k) != r.pow(a, w.l)) return false;
  const std::uint64_t m = std::max<std::uint64_t>(w.k, 2);
  if (r.pow(a, m) != r.mul(r.pow(a, m + 1), r.pow(a, w.l - w.k - 1))) return false;
  const Elem p = pow_reduced(r, w, w.n + 1);
  const auto nil = element_nilpotency_index(r, r.sub(a, p));
  if (!nil || *nil > w.n) return false;
  const auto d = potent_decomposition(r, a);
  return d.p == p && r.add(d.p, d.w) == a && potency_exponent(r, d.p) && element_nilpotency_index(r, d.w) &&
         r.mul(a, d.p) == r.mul(d.p, a);
}

struct CommonExponent {
  std::uint64_t k = 0, l = 0, n = 0;
  bool ok = false;
};

/// Shared k < l with a^k = a^l and b^k = b^l built from the two power cycles,
/// then n = k(l - k) and the nilpotency of a - a^{n+1}, b - b^{n+1}.
CommonExponent common_exponent(const FiniteRing& ra, Elem a, const FiniteRing& rb, Elem b) {
  const auto wa = power_cycle(ra, a), wb = power_cycle(rb, b);
  CommonExponent c;
  std::uint64_t k, span;
  if (!mul_ok(wa.k, wb.k, k) || !mul_ok(wb.l - wb.k, wa.k, span) || !mul_ok(span, wa.l - wa.k, span) ||
      !mul_ok(span, wb.k, span))
    return c;
  c.k = k;
  c.l = k + span;
  if (!mul_ok(c.k, c.l - c.k, c.n)) return c;
  if (pow_reduced(ra, wa, c.k) != pow_reduced(ra, wa, c.l) || pow_reduced(rb, wb, c.k) != pow_reduced(rb, wb, c.l))
    return c;
  const auto na = element_nilpotency_index(ra, ra.sub(a, pow_reduced(ra, wa, c.n + 1)));
  const auto nb = element_nilpotency_index(rb, rb.sub(b, pow_reduced(rb, wb, c.n + 1)));
  c.ok = na && nb && *na <= c.n && *nb <= c.n;
  return c;
}

/// (X - X^e)^E in T.
Elem certified_power(const FiniteRing& t, Elem x, std::uint64_t e, std::uint64_t big_e) {
  const Elem d = t.sub(x, pow_reduced(t, power_cycle(t, x), e));
  return pow_reduced(t, power_cycle(t, d), big_e);
}

/// The diagonal/strict split of an upper triangular 2x2 element (a, c, b).
bool triangular_split(const FiniteRing& r, Elem x) {
  const std::size_t q = static_cast<std::size_t>(std::cbrt(static_cast<double>(r.order())) + 0.5);
  const Elem a = static_cast<Elem>(x / (q * q)), c = static_cast<Elem>((x / q) % q), b = static_cast<Elem>(x % q);
  const Elem diag = static_cast<Elem>(a * q * q + b), strict = static_cast<Elem>(c * q);
  return r.add(diag, strict) == x && potency_exponent(r, diag) && ring_facts(r)->jacobson.contains(strict);
}

// ---------------------------------------------------------------------------
// Check bodies

struct Run {
  const CheckInput& in;
  const HarnessConfig& cfg;
  Json claims = Json::array();
  Json notes = Json::array();
  Json extra = Json::object();

  bool claim(const std::string& name, const Eval& e) {
    Json c{{"name", name}, {"holds", e.first}};
    if (e.second) c["evidence"] = *e.second;
    claims.push_back(std::move(c));
    return e.first;
  }
  bool claim_verdict(const std::string& name, const Json& ring, const Verdict& v) {
    return claim(name, from_verdict(ring, v));
  }
  void note(const std::string& s) {
    if (std::find(notes.begin(), notes.end(), s) == notes.end()) notes.push_back(s);
  }
  FiniteRing ring(const Json& r) const { return resolve(in, r, cfg); }
  const FiniteRing& R() const { return *in.ring; }
  /// Builds a derived ring, or notes why it could not be built.
  std::optional<FiniteRing> try_ring(const Json& r) {
    try {
      return ring(r);
    } catch (const RingError& e) {
      note(std::string("not built: ") + e.what());
      return std::nullopt;
    }
  }
};

Outcome iff(bool a, bool b) { return a == b ? Outcome::Pass : Outcome::Fail; }
Outcome holds(bool b) { return b ? Outcome::Pass : Outcome::Fail; }

const Json kInput = role("input");

Verdict sp(const FiniteRing& r) { return is_strongly_periodic(r); }
Verdict jcl(const FiniteRing& r) { return is_J_clean_like(r); }

Outcome t1_1(Run& run) {
  const FiniteRing& r = run.R();
  std::uint64_t max_n = 0;
  for (Elem a = 0; a < r.order(); ++a) {
    if (!element_characterized(r, a))
      return run.claim("every element satisfies all four characterizations",
                       fails(kInput, "element-characterization", {a})),
             Outcome::Fail;
    max_n = std::max(max_n, power_cycle(r, a).n);
  }
  run.claim("every element satisfies all four characterizations", yes());
  run.extra["elements"] = r.order();
  run.extra["max_n"] = max_n;
  return Outcome::Pass;
}

Outcome l2_1(Run& run) {
  const FiniteRing& r = run.R();
  const std::size_t n = r.order();
  std::vector<std::pair<Elem, Elem>> pairs;
  const bool sampled = n * n > run.cfg.pair_limit;
  if (!sampled) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) pairs.push_back({a, b});
  } else {
    std::mt19937_64 rng(run.cfg.seed ^ r.content_hash());
    for (Elem a = 0; a < n; ++a) pairs.push_back({a, a});
    while (pairs.size() < run.cfg.pair_limit)
      pairs.push_back({static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n)});
  }
  std::uint64_t max_n = 0;
  for (auto [a, b] : pairs) {
    const auto c = common_exponent(r, a, r, b);
    if (!c.ok)
      return run.claim("common exponent for every pair", fails(kInput, "common-exponent", {a, b})), Outcome::Fail;
    max_n = std::max(max_n, c.n);
  }
  run.claim("common exponent for every pair", yes());
  run.extra["pairs"] = pairs.size();
  run.extra["sampled"] = sampled;
  run.extra["max_n"] = max_n;
  return Outcome::Pass;
}

bool nilpotent_images(Run& run, std::size_t* s, std::size_t* t) {
  const auto& c = *run.in.context;
  const bool a = run.claim("im(psi) nilpotent", image_nilpotent(c, 0, s));
  const bool b = run.claim("im(phi) nilpotent", image_nilpotent(c, 1, t));
  return a && b;
}

Outcome t2_2(Run& run) {
  const auto& c = *run.in.context;
  std::size_t s = 0, t = 0;
  if (!nilpotent_images(run, &s, &t)) return Outcome::Skipped;
  const auto tr = run.try_ring(role("T"));
  if (!tr) return Outcome::Inconclusive;
  const bool lhs = run.claim_verdict("A periodic", role("A"), is_periodic(c.a)) &
                   run.claim_verdict("B periodic", role("B"), is_periodic(c.b));
  const bool rhs = run.claim_verdict("T periodic", role("T"), is_periodic(*tr));

  // Certified exponent chain, element by element.
  const std::uint64_t p = std::max<std::uint64_t>({s, t, 1});
  const std::size_t nb = c.b.order(), nm = c.m.order, nn = c.n.order;
  std::uint64_t max_l = 0, max_q = 0, max_j = 0, max_e = 0;
  for (Elem x = 0; x < tr->order(); ++x) {
    const Elem b = static_cast<Elem>(x % nb);
    const Elem a = static_cast<Elem>(x / (nb * nm * nn));
    const auto ce = common_exponent(c.a, a, c.b, b);
    if (!ce.ok) {
      run.claim("certified chain annihilates every element", fails(role("T"), "certified-exponent", {x, 0, 0}));
      return Outcome::Fail;
    }
    std::uint64_t q = 0, j = 0, big = 0;
    if (!mul_ok(p, ce.n + 1, q) || !mul_ok(2 * p, q + 1, j) || !mul_ok(2 * j, p, big)) {
      run.note("exponent chain overflows 64 bits at element " + std::to_string(x));
      return Outcome::Inconclusive;
    }
    if (certified_power(*tr, x, ce.n + 1, big) != tr->zero()) {
      run.claim("certified chain annihilates every element",
                fails(role("T"), "certified-exponent", {x, ce.n + 1, big}));
      return Outcome::Fail;
    }
    max_l = std::max(max_l, ce.n);
    max_q = std::max(max_q, q);
    max_j = std::max(max_j, j);
    max_e = std::max(max_e, big);
  }
  run.claim("certified chain annihilates every element", yes());
  run.extra["chain"] = {{"s", s}, {"t", t}, {"p", p}, {"max_l", max_l},
                        {"max_q", max_q}, {"max_j", max_j}, {"max_exponent", max_e}, {"elements", tr->order()}};
  return iff(lhs, rhs);
}

/// Elements of a radical that are central.
std::vector<Elem> central_members(const FiniteRing& r, const ElementSet& s) {
  std::vector<Elem> out;
  const auto f = ring_facts(r);
  for (Elem x : s.members())
    if (f->center.contains(x)) out.push_back(x);
  return out;
}

/// Runs pred over M_(s)(R) for each listed s. Inconclusive when none fits
/// the construction cap.
Outcome over_generalized_matrices(Run& run, const std::vector<Elem>& ss, const std::string& prop,
                                  const std::function<Eval(const FiniteRing&, const Json&)>& pred) {
  std::size_t built = 0;
  bool all = true;
  for (Elem s : ss) {
    const Json rl = {{"name", "generalized_matrix"}, {"s", s}};
    const auto m = run.try_ring(rl);
    if (!m) continue;
    ++built;
    all &= run.claim("M_(" + run.R().label(s) + ")(R) " + prop, pred(*m, rl));
  }
  if (built == 0) return Outcome::Inconclusive;
  return holds(all);
}

Outcome c2_3(Run& run) {
  const FiniteRing& r = run.R();
  if (!run.claim_verdict("R periodic", kInput, is_periodic(r))) return Outcome::Skipped;
  const auto ss = central_members(r, ring_facts(r)->nil);
  return over_generalized_matrices(run, ss, "periodic",
                                   [](const FiniteRing& m, const Json& rl) { return from_verdict(rl, is_periodic(m)); });
}

Outcome c2_4(Run& run) {
  const Json rl = role("trivial_extension");
  const auto t = run.try_ring(rl);
  if (!t) return Outcome::Inconclusive;
  const bool a = run.claim_verdict("R periodic", kInput, is_periodic(run.R()));
  const bool b = run.claim_verdict("T(R, R) periodic", rl, is_periodic(*t));
  return iff(a, b);
}

Outcome e2_5(Run& run) {
  const auto& c = *run.in.context;
  const bool zero = std::all_of(c.psi.begin(), c.psi.end(), [](Elem x) { return x == 0; }) &&
                    std::all_of(c.phi.begin(), c.phi.end(), [](Elem x) { return x == 0; });
  run.claim("both pairings vanish", {zero, std::nullopt});
  if (!zero) return Outcome::Skipped;
  if (!nilpotent_images(run, nullptr, nullptr)) return Outcome::Fail;
  const auto tr = run.try_ring(role("T"));
  if (!tr) return Outcome::Inconclusive;
  const bool ab = run.claim_verdict("A periodic", role("A"), is_periodic(c.a)) &
                  run.claim_verdict("B periodic", role("B"), is_periodic(c.b));
  if (!ab) return Outcome::Skipped;
  run.extra["order"] = tr->order();
  return holds(run.claim_verdict("T periodic", role("T"), is_periodic(*tr)));
}

Outcome l2_6(Run& run) {
  const FiniteRing& r = run.R();
  if (!run.claim_verdict("R periodic", kInput, is_periodic(r))) return Outcome::Skipped;
  std::vector<std::string> alphas{"identity"};
  try {
    (void)frobenius(r);
    alphas.push_back("frobenius");
  } catch (const RingError&) {
  }
  std::size_t built = 0;
  bool all = true;
  for (const auto& al : alphas)
    for (std::size_t n = 2; n <= 3; ++n)
      for (const char* kind : {"skew_series", "twisted_triangular"}) {
        const Json rl = {{"name", kind}, {"alpha", al}, {"n", n}};
        const auto s = run.try_ring(rl);
        if (!s) continue;
        ++built;
        all &= run.claim_verdict(std::string(kind) + " n=" + std::to_string(n) + " alpha=" + al + " periodic", rl,
                                 is_periodic(*s));
      }
  if (built == 0) return Outcome::Inconclusive;
  return holds(all);
}

Outcome power_series_matrices(Run& run, bool all_m, const std::string& prop,
                              const std::function<Eval(const FiniteRing&, const Json&)>& pred) {
  std::size_t built = 0;
  bool all = true;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= (all_m ? n : 1); ++m) {
      const Json rl = {{"name", "power_series_matrix"}, {"n", n}, {"m", m}};
      const auto s = run.try_ring(rl);
      if (!s) continue;
      ++built;
      all &= run.claim("M_(x^" + std::to_string(m) + ")(R[x]/(x^" + std::to_string(n) + ")) " + prop, pred(*s, rl));
    }
  if (built == 0) return Outcome::Inconclusive;
  return holds(all);
}

Outcome t2_7(Run& run) {
  if (!run.claim_verdict("R periodic", kInput, is_periodic(run.R()))) return Outcome::Skipped;
  return power_series_matrices(run, true, "periodic",
                               [](const FiniteRing& s, const Json& rl) { return from_verdict(rl, is_periodic(s)); });
}

Outcome c2_8(Run& run) {
  return power_series_matrices(run, true, "periodic",
                               [](const FiniteRing& s, const Json& rl) { return from_verdict(rl, is_periodic(s)); });
}

Outcome t3_1(Run& run) {
  const FiniteRing& r = run.R();
  const bool s1 = run.claim_verdict("(1) strongly periodic", kInput, sp(r));
  bool s2 = run.claim_verdict("(2) periodic", kInput, is_periodic(r));
  const Eval ideal = nil_is_ideal(r, kInput);
  s2 &= run.claim("(2) N(R) is an ideal", ideal);
  if (ideal.first) s2 &= run.claim("(2) N(R) locally nilpotent", locally_nilpotent(r, kInput, 1));
  const Json rj = quotient_role("J");
  bool s3 = run.claim_verdict("(3) R/J(R) potent", rj, is_potent_ring(run.ring(rj)));
  s3 &= run.claim_verdict("(3) potents lift modulo J(R)", kInput, potent_lifts_mod_J(r));
  s3 &= run.claim("(3) J(R) locally nilpotent", locally_nilpotent(r, kInput, 0));
  return holds(s1 == s2 && s2 == s3);
}

Outcome c3_2(Run& run) {
  const bool a = run.claim_verdict("strongly periodic (commuting)", kInput, is_strongly_periodic(run.R(), true));
  const bool b = run.claim_verdict("potent plus prime radical", kInput, is_strongly_periodic(run.R(), false));
  return iff(a, b);
}

Outcome t3_3(Run& run) {
  const FiniteRing& r = run.R();
  const bool a = run.claim_verdict("strongly periodic", kInput, sp(r));
  bool b = run.claim_verdict("2-primal", kInput, is_2_primal(r));
  b &= run.claim_verdict("weakly periodic", kInput, is_weakly_periodic(r));
  return iff(a, b);
}

Outcome c3_4(Run& run) {
  const FiniteRing& r = run.R();
  if (r.order() > kOracleMaxOrder) {
    run.note("prime ideal enumeration is capped at order " + std::to_string(kOracleMaxOrder));
    return Outcome::Inconclusive;
  }
  const bool a = run.claim_verdict("strongly periodic", kInput, sp(r));
  bool b = run.claim_verdict("weakly periodic", kInput, is_weakly_periodic(r));
  b &= run.claim("every prime ideal completely prime", primes_completely_prime(r, kInput));
  return iff(a, b);
}

Outcome c3_5(Run& run) {
  const FiniteRing& r = run.R();
  const bool h = run.claim_verdict("nil-semicommutative", kInput, is_nil_semicommutative(r)) &
                 run.claim_verdict("weakly periodic", kInput, is_weakly_periodic(r));
  if (!h) return Outcome::Skipped;
  return holds(run.claim_verdict("strongly periodic", kInput, sp(r)));
}

Outcome e3_6(Run& run) {
  const FiniteRing& r = run.R();
  for (std::size_t n : {3, 4}) {
    if (!(r == constant_diagonal_block(n))) continue;
    run.extra["block"] = n;
    bool ok = run.claim_verdict("strongly periodic", kInput, sp(r));
    if (n == 3) return holds(ok);
    const Verdict nsc = is_nil_semicommutative(r);
    ok &= run.claim("not nil-semicommutative", {!nsc.holds, std::nullopt});
    // a = e12 - e13, x = e23, b = e24 + e34.
    std::vector<Elem> a(16, 0), x(16, 0), b(16, 0);
    a[1] = 1;
    a[2] = 1;
    x[6] = 1;
    b[7] = 1;
    b[11] = 1;
    const Row triple{constant_diagonal_index(4, a), constant_diagonal_index(4, x), constant_diagonal_index(4, b)};
    const bool accepted = reverify(r, Certificate{"nil-semicommutative-violation", triple, {}});
    ok &= run.claim("exhibited triple violates nil-semicommutativity",
                    {accepted, accepted ? std::nullopt
                                        : std::optional<Json>(evidence(kInput, "nil-semicommutative-violation", triple))});
    run.extra["triple"] = triple;
    return holds(ok);
  }
  run.note("applies to the constant-diagonal blocks of size 3 and 4 only");
  return Outcome::Skipped;
}

Outcome t3_7(Run& run) {
  const auto& c = *run.in.context;
  if (!nilpotent_images(run, nullptr, nullptr)) return Outcome::Skipped;
  const auto tr = run.try_ring(role("T"));
  if (!tr) return Outcome::Inconclusive;
  const bool lhs =
      run.claim_verdict("A strongly periodic", role("A"), sp(c.a)) & run.claim_verdict("B strongly periodic", role("B"), sp(c.b));
  const bool rhs = run.claim_verdict("T strongly periodic", role("T"), sp(*tr));
  return iff(lhs, rhs);
}

Outcome c3_8(Run& run) {
  const FiniteRing& r = run.R();
  const bool base = run.claim_verdict("R strongly periodic", kInput, sp(r));
  const auto ss = central_members(r, ring_facts(r)->nil);
  return over_generalized_matrices(run, ss, "strongly periodic iff R is", [base](const FiniteRing& m, const Json& rl) {
    const Eval e = from_verdict(rl, sp(m));
    return Eval{e.first == base, e.first == base ? std::nullopt : e.second};
  });
}

Outcome e3_9(Run& run) {
  const FiniteRing z4 = zmod(4);
  const FiniteRing ref = morita_ring(ideal_context(z4, ElementSet::full(4), ElementSet::of(4, {0, 2})));
  if (!(run.R() == ref)) {
    run.note("applies to the Z4 context ring [[Z4, Z4], [2Z4, Z4]] only");
    return Outcome::Skipped;
  }
  run.extra["order"] = ref.order();
  return holds(run.claim_verdict("strongly periodic", kInput, sp(run.R())));
}

Outcome t3_10(Run& run) {
  const FiniteRing& r = run.R();
  const bool s1 = run.claim_verdict("(1) strongly periodic", kInput, sp(r));
  const Json rp = quotient_role("P");
  const bool s2 = run.claim_verdict("(2) R/P(R) potent", rp, is_potent_ring(run.ring(rp)));
  const bool s3 = run.claim("(3) a - a^m in P(R) for a prime m", prime_exponents(r, kInput));
  const bool s4 = run.claim("(4) a = eu + w decompositions", euw_everywhere(r, kInput));
  return holds(s1 == s2 && s2 == s3 && s3 == s4);
}

Outcome c3_11(Run& run) {
  const FiniteRing& r = run.R();
  if (!run.claim_verdict("R strongly periodic", kInput, sp(r))) return Outcome::Skipped;
  std::mt19937_64 rng(run.cfg.seed ^ r.content_hash());
  std::vector<ElementSet> seen;
  bool all = true;
  for (std::size_t attempt = 0; attempt < 4 * run.cfg.subring_samples && seen.size() < run.cfg.subring_samples;
       ++attempt) {
    const Elem x = static_cast<Elem>(rng() % r.order()), y = static_cast<Elem>(rng() % r.order());
    auto sub = subring_generated(r, {x, y}, true);
    if (!sub.ring) continue;
    if (std::find(seen.begin(), seen.end(), sub.members) != seen.end()) continue;
    seen.push_back(sub.members);
    const Json rl = {{"name", "subring"}, {"generators", {x, y}}};
    all &= run.claim("subring <" + std::to_string(x) + ", " + std::to_string(y) + "> strongly periodic", from_verdict(rl, sp(*sub.ring)));
  }
  run.extra["seed"] = run.cfg.seed;
  run.extra["subrings"] = seen.size();
  return holds(all);
}

Outcome l3_13(Run& run) {
  const IdealSet& i = *run.in.ideal;
  const bool nil = run.claim("I nilpotent", nilpotency_index(i) ? yes() : fails(kInput, "ideal-not-nilpotent", {2}));
  const Json rq = quotient_role("I");
  const bool q = run.claim_verdict("R/I strongly periodic", rq, sp(run.ring(rq)));
  if (!nil || !q) return Outcome::Skipped;
  return holds(run.claim_verdict("R strongly periodic", kInput, sp(run.R())));
}

Outcome t3_14(Run& run) {
  const IdealSet& i = *run.in.ideal;
  if (i.is_whole()) {
    run.note("I = R");
    return Outcome::Skipped;
  }
  // I^t for t = 1.. until the powers stabilise; later powers repeat the last.
  std::size_t top = 1;
  for (IdealSet cur = i;; ++top) {
    IdealSet next = ideal_power(i, top + 1);
    if (next == cur) break;
    cur = std::move(next);
  }
  const Json r1 = quotient_role("I", 1);
  const bool c1 = run.claim_verdict("(1) R/I strongly periodic", r1, sp(run.ring(r1)));
  bool every = true, some = false;
  for (std::size_t t = 1; t <= top; ++t) {
    const Json rt = quotient_role("I", t);
    const bool v = run.claim_verdict("R/I^" + std::to_string(t) + " strongly periodic", rt, sp(run.ring(rt)));
    every &= v;
    some |= v;
  }
  run.extra["distinct_powers"] = top;
  run.claim("(2) every power", {every, std::nullopt});
  run.claim("(3) some power", {some, std::nullopt});
  return holds(c1 == every && every == some);
}

Outcome l3_15(Run& run) {
  const FiniteRing& r = run.R();
  const bool h = run.claim_verdict("abelian", kInput, is_abelian_ring(r)) &
                 run.claim_verdict("periodic", kInput, is_periodic(r));
  if (!h) return Outcome::Skipped;
  return holds(run.claim_verdict("strongly periodic", kInput, sp(r)));
}

Outcome t3_16(Run& run) {
  const FiniteRing& r = run.R();
  const auto& co = run.cfg.classify;
  std::optional<std::uint64_t> like;
  for (std::uint64_t n = co.n_like_min; n <= co.n_like_max && !like; ++n)
    if (is_generalized_n_like(r, n).holds) like = n;
  bool ok = true;
  const bool instance = r == gf4_twisted_ring();
  if (instance) {
    run.extra["instance"] = "G7";
    ok &= run.claim_verdict("generalized 7-like", kInput, is_generalized_n_like(r, 7));
    ok &= run.claim_verdict("abelian", kInput, is_abelian_ring(r));
    const Verdict comm = is_commutative_ring(r);
    ok &= run.claim("not commutative", {!comm.holds, std::nullopt});
    ok &= run.claim_verdict("strongly periodic", kInput, sp(r));
  }
  if (!like) {
    run.note("not generalized n-like for n in [" + std::to_string(co.n_like_min) + ", " +
             std::to_string(co.n_like_max) + "]");
    return instance ? holds(false) : Outcome::Skipped;
  }
  run.extra["n"] = *like;
  ok &= run.claim_verdict("strongly periodic", kInput, sp(r));
  ok &= run.claim_verdict("abelian", kInput, is_abelian_ring(r));
  if (is_generalized_n_like(r, 3).holds) ok &= run.claim_verdict("3-like implies commutative", kInput, is_commutative_ring(r));
  return holds(ok);
}

Outcome t4_1(Run& run) {
  const auto& c = *run.in.context;
  bool h = run.claim("im(psi) in J(A)", image_in_radical(c, 0));
  h &= run.claim("im(phi) in J(B)", image_in_radical(c, 1));
  h &= run.claim_verdict("A J-clean-like", role("A"), jcl(c.a));
  h &= run.claim_verdict("B J-clean-like", role("B"), jcl(c.b));
  if (!h) return Outcome::Skipped;
  const auto tr = run.try_ring(role("T"));
  if (!tr) return Outcome::Inconclusive;
  return holds(run.claim_verdict("T J-clean-like", role("T"), jcl(*tr)));
}

Outcome c4_2(Run& run) {
  const FiniteRing& r = run.R();
  if (!run.claim_verdict("R J-clean-like", kInput, jcl(r))) return Outcome::Skipped;
  const auto ss = central_members(r, ring_facts(r)->jacobson.members());
  return over_generalized_matrices(run, ss, "J-clean-like",
                                   [](const FiniteRing& m, const Json& rl) { return from_verdict(rl, jcl(m)); });
}

Outcome c4_3(Run& run) {
  if (!run.claim_verdict("R J-clean-like", kInput, jcl(run.R()))) return Outcome::Skipped;
  run.note("power series replaced by the truncations R[x]/(x^n)");
  return power_series_matrices(run, false, "J-clean-like",
                               [](const FiniteRing& s, const Json& rl) { return from_verdict(rl, jcl(s)); });
}

Outcome p4_4(Run& run) {
  const FiniteRing& r = run.R();
  const bool a = run.claim_verdict("strongly periodic", kInput, sp(r));
  bool b = run.claim_verdict("J-clean-like", kInput, jcl(r));
  b &= run.claim("J(R) locally nilpotent", locally_nilpotent(r, kInput, 0));
  return iff(a, b);
}

Outcome p4_5(Run& run) {
  const FiniteRing& r = run.R();
  const bool a = run.claim_verdict("J-clean", kInput, is_J_clean(r));
  bool b = run.claim_verdict("J-clean-like", kInput, jcl(r));
  b &= run.claim("J(R) = {x : 1 - x unit}", j_is_quasi_units(r, kInput));
  return iff(a, b);
}

Outcome e4_6(Run& run) {
  const FiniteRing& r = run.R();
  if (!(r == triangular_matrix_ring(zmod(3), 2))) {
    run.note("applies to upper triangular 2x2 matrices over Z3 only");
    return Outcome::Skipped;
  }
  bool ok = run.claim_verdict("J-clean-like", kInput, jcl(r));
  const Verdict jc = is_J_clean(r);
  ok &= run.claim("not J-clean", {!jc.holds, std::nullopt});
  Eval split = yes();
  for (Elem x = 0; x < r.order() && split.first; ++x)
    if (!triangular_split(r, x)) split = fails(kInput, "decomposition-fails", {x});
  ok &= run.claim("diagonal part potent, strict part in J(R)", split);
  return holds(ok);
}

Outcome l4_7(Run& run) {
  const FiniteRing& r = run.R();
  const bool a = run.claim_verdict("J-clean-like", kInput, jcl(r));
  const Json rj = quotient_role("J");
  bool b = run.claim_verdict("R/J(R) potent", rj, is_potent_ring(run.ring(rj)));
  b &= run.claim_verdict("potents lift modulo J(R)", kInput, potent_lifts_mod_J(r));
  return iff(a, b);
}

Outcome t4_8(Run& run) {
  const FiniteRing& r = run.R();
  const QuasiDuoOptions& qd = run.cfg.classify.quasi_duo;
  const bool a = run.claim_verdict("J-clean-like", kInput, jcl(r));
  const Json rj = quotient_role("J");
  const bool per = run.claim_verdict("R/J(R) periodic", rj, is_periodic(run.ring(rj)));
  const bool lift = run.claim_verdict("potents lift modulo J(R)", kInput, potent_lifts_mod_J(r));
  const bool right = run.claim_verdict("right quasi-duo", kInput, is_quasi_duo(r, Side::Right, qd));
  const bool left = run.claim_verdict("left quasi-duo", kInput, is_quasi_duo(r, Side::Left, qd));
  return holds(a == (per && right && lift) && a == (per && left && lift));
}

Outcome c4_9(Run& run) {
  const FiniteRing& r = run.R();
  const QuasiDuoOptions& qd = run.cfg.classify.quasi_duo;
  const bool a = run.claim_verdict("strongly periodic", kInput, sp(r));
  const bool per = run.claim_verdict("periodic", kInput, is_periodic(r));
  const bool ln = run.claim("J(R) locally nilpotent", locally_nilpotent(r, kInput, 0));
  const bool right = run.claim_verdict("right quasi-duo", kInput, is_quasi_duo(r, Side::Right, qd));
  const bool left = run.claim_verdict("left quasi-duo", kInput, is_quasi_duo(r, Side::Left, qd));
  return holds(a == (per && right && ln) && a == (per && left && ln));
}

Outcome l4_11(Run& run) {
  if (!run.claim_verdict("J-clean-like", kInput, jcl(run.R()))) return Outcome::Skipped;
  return holds(run.claim("N(R) in J(R)", nil_in_j(run.R(), kInput)));
}

Outcome l4_12(Run& run) {
  const FiniteRing& r = run.R();
  bool a = run.claim_verdict("periodic", kInput, is_periodic(r));
  a &= run.claim("N(R) in J(R)", nil_in_j(r, kInput));
  bool b = run.claim_verdict("J-clean-like", kInput, jcl(r));
  b &= run.claim("J(R) nil", j_is_nil(r, kInput));
  return iff(a, b);
}

Outcome t4_13(Run& run) {
  const FiniteRing& r = run.R();
  if (r.order() > run.cfg.sequence_max_order) {
    run.note("sequence search is attempted up to order " + std::to_string(run.cfg.sequence_max_order));
    return Outcome::Inconclusive;
  }
  const auto res = sequence_vanishing(r);
  run.extra["sequence"] = {{"outcome", to_string(res.outcome)}, {"states", res.states}};
  if (res.witness) {
    run.extra["sequence"]["prefix"] = res.witness->prefix;
    run.extra["sequence"]["cycle"] = res.witness->cycle;
    run.claim("non-vanishing sequence witness replays", {verify_sequence_witness(r, *res.witness), std::nullopt});
  }
  if (res.outcome != SequenceOutcome::Holds) {
    run.note("hypothesis not established: " + to_string(res.outcome));
    return Outcome::Skipped;
  }
  run.claim("every sequence has a vanishing product", yes());
  return holds(run.claim_verdict("J-clean-like", kInput, jcl(r)));
}

Outcome c4_14(Run& run) {
  const FiniteRing& r = run.R();
  const Json rj = quotient_role("J");
  const bool pot = run.claim_verdict("R/J(R) potent", rj, is_potent_ring(run.ring(rj)));
  const bool left = run.claim("J(R) left T-nilpotent", j_t_nilpotent(r, kInput, Side::Left));
  const bool right = run.claim("J(R) right T-nilpotent", j_t_nilpotent(r, kInput, Side::Right));
  if (!pot || (!left && !right)) return Outcome::Skipped;
  return holds(run.claim_verdict("J-clean-like", kInput, jcl(r)));
}

struct Registered {
  TheoremCheck meta;
  std::function<Outcome(Run&)> body;
};

const std::vector<Registered>& registry() {
  using K = InputKind;
  static const std::vector<Registered> r = {
      {{"T1.1", K::Ring, "per element: periodic, a^m = a^{m+1} f(a), a - a^m nilpotent, potent plus commuting nilpotent",
        {"elements", "max_n"}},
       t1_1},
      {{"L2.1", K::Ring, "every pair a, b shares n with a - a^{n+1}, b - b^{n+1} nilpotent", {"pairs", "sampled", "max_n"}},
       l2_1},
      {{"T2.2", K::Context, "nilpotent pairing images: A, B periodic iff T periodic; certified exponent chain",
        {"chain"}},
       t2_2},
      {{"C2.3", K::Ring, "R periodic, s in N(R) and central: M_(s)(R) periodic", {}}, c2_3},
      {{"C2.4", K::Ring, "R periodic iff T(R, R) periodic", {}}, c2_4},
      {{"E2.5", K::Context, "zero pairings with periodic A, B: T periodic", {"order"}}, e2_5},
      {{"L2.6", K::Ring, "R periodic: R[[x; alpha]]/(x^n) and T_n(R, alpha) periodic", {}}, l2_6},
      {{"T2.7", K::Ring, "R periodic: M_(x^m)(R[x]/(x^n)) periodic for 1 <= m <= n", {}}, t2_7},
      {{"C2.8", K::Ring, "finite R: M_(x^m)(R[x]/(x^n)) periodic for 1 <= m <= n", {}}, c2_8},
      {{"T3.1", K::Ring,
        "strongly periodic iff periodic with N(R) a locally nilpotent ideal iff R/J potent, potents lift, J locally "
        "nilpotent",
        {}},
       t3_1},
      {{"C3.2", K::Ring, "strongly periodic iff every a - p in P(R) for a potent p, commuting or not", {}}, c3_2},
      {{"T3.3", K::Ring, "strongly periodic iff 2-primal and weakly periodic", {}}, t3_3},
      {{"C3.4", K::Ring, "strongly periodic iff weakly periodic and every prime ideal completely prime", {}}, c3_4},
      {{"C3.5", K::Ring, "nil-semicommutative and weakly periodic: strongly periodic", {}}, c3_5},
      {{"E3.6", K::Ring, "R_4 strongly periodic and not nil-semicommutative (exhibited triple); R_3 strongly periodic",
        {"block", "triple"}},
       e3_6},
      {{"T3.7", K::Context, "nilpotent pairing images: A, B strongly periodic iff T strongly periodic", {}}, t3_7},
      {{"C3.8", K::Ring, "s in N(R) and central: M_(s)(R) strongly periodic iff R is", {}}, c3_8},
      {{"E3.9", K::Ring, "[[Z4, Z4], [2Z4, Z4]] strongly periodic", {"order"}}, e3_9},
      {{"T3.10", K::Ring, "strongly periodic iff R/P potent iff prime exponents into P iff a = eu + w", {}}, t3_10},
      {{"C3.11", K::Ring, "subrings of strongly periodic rings are strongly periodic (seeded sample)",
        {"seed", "subrings"}},
       c3_11},
      {{"L3.13", K::RingIdeal, "I nilpotent and R/I strongly periodic: R strongly periodic", {}}, l3_13},
      {{"T3.14", K::RingIdeal, "R/I strongly periodic iff R/I^n is for every n iff for some n", {"distinct_powers"}},
       t3_14},
      {{"L3.15", K::Ring, "abelian and periodic: strongly periodic", {}}, l3_15},
      {{"T3.16", K::Ring, "generalized n-like: strongly periodic (and abelian); the GF4 instance", {"n", "instance"}},
       t3_16},
      {{"T4.1", K::Context, "pairing images in the radicals, A, B J-clean-like: T J-clean-like", {}}, t4_1},
      {{"C4.2", K::Ring, "R J-clean-like, s in J(R) and central: M_(s)(R) J-clean-like", {}}, c4_2},
      {{"C4.3", K::Ring, "R J-clean-like: M_(x)(R[x]/(x^n)) J-clean-like", {}}, c4_3},
      {{"P4.4", K::Ring, "strongly periodic iff J-clean-like with J locally nilpotent", {}}, p4_4},
      {{"P4.5", K::Ring, "J-clean iff J-clean-like with J = {x : 1 - x unit}", {}}, p4_5},
      {{"E4.6", K::Ring, "T_2(Z3) J-clean-like and not J-clean", {}}, e4_6},
      {{"L4.7", K::Ring, "J-clean-like iff R/J potent and potents lift", {}}, l4_7},
      {{"T4.8", K::Ring, "J-clean-like iff R/J periodic, quasi-duo (each side) and potents lift", {}}, t4_8},
      {{"C4.9", K::Ring, "strongly periodic iff periodic, quasi-duo (each side) and J locally nilpotent", {}}, c4_9},
      {{"L4.11", K::Ring, "J-clean-like: N(R) in J(R)", {}}, l4_11},
      {{"L4.12", K::Ring, "periodic with N in J iff J-clean-like with J nil", {}}, l4_12},
      {{"T4.13", K::Ring, "vanishing products along every sequence: J-clean-like", {"sequence"}}, t4_13},
      {{"C4.14", K::Ring, "R/J potent and J T-nilpotent: J-clean-like", {}}, c4_14},
  };
  return r;
}

const Registered* find_registered(const std::string& id) {
  for (const auto& r : registry())
    if (r.meta.id == id) return &r;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Evidence replay

bool replay(const CheckInput& in, const FiniteRing& r, const std::string& kind, const Row& x) {
  const std::size_t n = r.order();
  auto in_range = [&](std::size_t count) {
    if (x.size() < count) return false;
    for (std::size_t i = 0; i < count; ++i)
      if (x[i] >= n) return false;
    return true;
  };
  auto el = [&](std::size_t i) { return static_cast<Elem>(x[i]); };
  const auto f = ring_facts(r);
  if (kind == "ideal-not-nilpotent") {
    if (x.size() != 1) return false;
    if (x[0] == 2) return in.ideal && !nilpotency_index(*in.ideal);
    return in.context && x[0] < 2 && !nilpotency_index(image_ideal(*in.context, static_cast<int>(x[0])));
  }
  if (kind == "image-outside-radical") {
    if (!in.context || x.size() != 2 || x[0] > 1) return false;
    const auto& c = *in.context;
    const FiniteRing& side = x[0] == 0 ? c.a : c.b;
    const auto img = x[0] == 0 ? psi_image(c) : phi_image(c);
    return x[1] < side.order() && img.contains(static_cast<Elem>(x[1])) &&
           !jacobson_radical(side).contains(static_cast<Elem>(x[1]));
  }
  if (kind == "nil-sum-not-nilpotent")
    return in_range(2) && f->nil.contains(el(0)) && f->nil.contains(el(1)) && !f->nil.contains(r.add(el(0), el(1)));
  if (kind == "nil-product-not-nilpotent") {
    if (!in_range(2) || x.size() != 3 || !f->nil.contains(el(1))) return false;
    return !f->nil.contains(x[2] == 0 ? r.mul(el(0), el(1)) : r.mul(el(1), el(0)));
  }
  if (kind == "not-locally-nilpotent") {
    if (!in_range(1) || x.size() != 2) return false;
    const bool member = x[1] == 0 ? f->jacobson.contains(el(0)) : f->nil.contains(el(0));
    return member && !nilpotency_index(ideal_generated(r, el(0), Side::TwoSided));
  }
  if (kind == "prime-not-completely-prime") {
    if (!in_range(x.size()) || x.empty()) return false;
    ElementSet m(n);
    for (std::size_t i = 0; i < x.size(); ++i) m.insert(el(i));
    const IdealSet i = IdealSet::trusted(r, m, Side::TwoSided);
    if (!i.is_additive_subgroup() || !i.is_left_closed() || !i.is_right_closed() || i.is_whole()) return false;
    return is_prime_ideal(i) && !is_completely_prime_ideal(i);
  }
  if (kind == "no-prime-exponent")
    return in_range(1) && !has_prime_exponent(r, power_cycle(r, el(0)), el(0), prime_radical(r).members());
  if (kind == "radical-mismatch") return in_range(1) && !radical_matches_quasi_units(r, el(0));
  if (kind == "nilpotent-outside-J")
    return in_range(1) && element_nilpotency_index(r, el(0)) && !jacobson_radical(r).contains(el(0));
  if (kind == "J-not-nil")
    return in_range(1) && jacobson_radical(r).contains(el(0)) && !element_nilpotency_index(r, el(0));
  if (kind == "J-not-T-nilpotent")
    return x.size() == 1 && !is_T_nilpotent(jacobson_radical(r), x[0] == 0 ? Side::Left : Side::Right);
  if (kind == "element-characterization") return in_range(1) && !element_characterized(r, el(0));
  if (kind == "common-exponent") return in_range(2) && !common_exponent(r, el(0), r, el(1)).ok;
  if (kind == "certified-exponent") {
    if (!in_range(1) || x.size() != 3) return false;
    if (x[2] != 0) return certified_power(r, el(0), x[1], x[2]) != r.zero();
    if (!in.context) return false;
    const auto& c = *in.context;
    const std::size_t nb = c.b.order();
    const Elem a = static_cast<Elem>(x[0] / (nb * c.m.order * c.n.order)), b = static_cast<Elem>(x[0] % nb);
    return !common_exponent(c.a, a, c.b, b).ok;
  }
  if (kind == "decomposition-fails") return in_range(1) && !triangular_split(r, el(0));
  return reverify(r, Certificate{kind, x, {}});
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(InputKind k) {
  switch (k) {
    case InputKind::Ring: return "ring";
    case InputKind::Context: return "context";
    case InputKind::RingIdeal: return "ring+ideal";
  }
  return "unknown";
}

CheckInput CheckInput::of_ring(std::string name, FiniteRing r) {
  CheckInput c;
  c.name = std::move(name);
  c.kind = InputKind::Ring;
  c.ring = std::move(r);
  return c;
}

CheckInput CheckInput::of_context(std::string name, MoritaContextSpec spec) {
  const auto v = morita_violations(spec);
  if (!v.empty()) throw RingError("context " + name + " is invalid: " + v.front().describe());
  CheckInput c;
  c.name = std::move(name);
  c.kind = InputKind::Context;
  c.context = std::move(spec);
  return c;
}

CheckInput CheckInput::of_ideal(std::string name, IdealSet i) {
  if (i.side() != Side::TwoSided) throw RingError("check input ideal must be two-sided");
  CheckInput c;
  c.name = std::move(name);
  c.kind = InputKind::RingIdeal;
  c.ring = i.ring();
  c.ideal = std::move(i);
  return c;
}

std::vector<std::uint64_t> CheckInput::hashes() const {
  if (context) return {context->a.content_hash(), context->b.content_hash()};
  if (ring) return {ring->content_hash()};
  return {};
}

const std::vector<TheoremCheck>& check_registry() {
  static const std::vector<TheoremCheck> metas = [] {
    std::vector<TheoremCheck> out;
    for (const auto& r : registry()) out.push_back(r.meta);
    return out;
  }();
  return metas;
}

const TheoremCheck* find_check(const std::string& id) {
  for (const auto& c : check_registry())
    if (c.id == id) return &c;
  return nullptr;
}

VerdictReport run_check(const std::string& id, const CheckInput& in, const HarnessConfig& cfg) {
  const Registered* reg = find_registered(id);
  if (!reg) throw RingError("unknown check id '" + id + "'");
  if (reg->meta.input != in.kind)
    throw RingError("check " + id + " takes a " + to_string(reg->meta.input) + " input, got " + to_string(in.kind));
  const auto t0 = std::chrono::steady_clock::now();
  Run run{in, cfg};
  VerdictReport rep;
  rep.check_id = id;
  rep.input_name = in.name;
  rep.input_hashes = in.hashes();
  rep.verdict = reg->body(run);
  rep.payload = {{"claims", run.claims}, {"notes", run.notes}};
  if (in.ideal) {
    Row members;
    for (Elem x : in.ideal->members().members()) members.push_back(x);
    rep.payload["ideal"] = members;
  }
  for (auto& [k, v] : run.extra.items()) rep.payload[k] = v;
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

bool reverify_evidence(const CheckInput& in, const Json& ev, const HarnessConfig& cfg) {
  try {
    const FiniteRing r = resolve(in, ev.at("ring"), cfg);
    return replay(in, r, ev.at("kind").get<std::string>(), ev.at("elements").get<Row>());
  } catch (const std::exception&) {
    return false;
  }
}

bool reverify_payload(const CheckInput& in, const VerdictReport& rep, const HarnessConfig& cfg) {
  for (const auto& c : rep.payload.value("claims", Json::array()))
    if (c.contains("evidence") && !reverify_evidence(in, c["evidence"], cfg)) return false;
  return true;
}

std::vector<CheckInput> suite_inputs(const std::vector<CatalogEntry>& catalog,
                                     const std::vector<ContextEntry>& contexts) {
  std::vector<CheckInput> out;
  for (const auto& e : catalog) out.push_back(CheckInput::of_ring(e.name, e.ring));
  for (const auto& c : contexts) out.push_back(CheckInput::of_context(c.name, c.spec));
  for (const auto& e : catalog) {
    const FiniteRing& r = e.ring;
    std::vector<std::pair<std::string, IdealSet>> ideals;
    const IdealSet j = jacobson_radical(r);
    ideals.push_back({"P", prime_radical(r)});
    ideals.push_back({"J", j});
    ideals.push_back({"J^2", ideal_power(j, 2)});
    if (r.order() <= 16) {
      std::size_t k = 0;
      for (const auto& i : enumerate_ideals(r)) ideals.push_back({"I" + std::to_string(k++), i});
    }
    std::vector<ElementSet> seen;
    for (auto& [label, i] : ideals) {
      if (i.is_zero() || i.is_whole()) continue;
      if (std::find(seen.begin(), seen.end(), i.members()) != seen.end()) continue;
      seen.push_back(i.members());
      out.push_back(CheckInput::of_ideal(e.name + "|" + label, i));
    }
  }
  return out;
}

SuiteReport run_suite(const std::vector<CheckInput>& inputs, const HarnessConfig& cfg,
                      const std::vector<std::string>& ids) {
  std::vector<const Registered*> checks;
  if (ids.empty()) {
    for (const auto& r : registry()) checks.push_back(&r);
  } else {
    for (const auto& id : ids) {
      const auto* r = find_registered(id);
      if (!r) throw RingError("unknown check id '" + id + "'");
      checks.push_back(r);
    }
  }
  std::vector<std::pair<const Registered*, const CheckInput*>> jobs;
  for (const auto* c : checks)
    for (const auto& in : inputs)
      if (in.kind == c->meta.input) jobs.push_back({c, &in});

  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport suite;
  suite.reports.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i; (i = next++) < jobs.size();) {
      try {
        suite.reports[i] = run_check(jobs[i].first->meta.id, *jobs[i].second, cfg);
      } catch (const std::exception& e) {
        VerdictReport rep;
        rep.check_id = jobs[i].first->meta.id;
        rep.input_name = jobs[i].second->name;
        rep.input_hashes = jobs[i].second->hashes();
        rep.verdict = Outcome::Fail;
        rep.payload = {{"claims", Json::array()}, {"notes", Json::array({std::string("error: ") + e.what()})}};
        suite.reports[i] = std::move(rep);
      }
    }
  };
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : suite.reports) {
    switch (r.verdict) {
      case Outcome::Pass: ++suite.passed; break;
      case Outcome::Fail: ++suite.failed; break;
      case Outcome::Skipped: ++suite.skipped; break;
      case Outcome::Inconclusive: ++suite.inconclusive; break;
    }
  }
  suite.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return suite;
}

SuiteReport run_suite(const std::vector<CatalogEntry>& catalog, const HarnessConfig& cfg,
                      const std::vector<std::string>& ids) {
  std::vector<std::uint64_t> hashes;
  for (const auto& e : catalog) hashes.push_back(e.ring.content_hash());
  auto present = [&](const FiniteRing& r) {
    return std::find(hashes.begin(), hashes.end(), r.content_hash()) != hashes.end();
  };
  // A context belongs when every ring its recipe names is in the catalog.
  std::function<bool(const Json&)> rings_present = [&](const Json& j) {
    if (!j.is_object()) return true;
    if (j.contains("op")) return present(build_recipe(j, construct_opts(cfg)));
    for (const auto& [k, v] : j.items())
      if (!rings_present(v)) return false;
    return true;
  };
  std::vector<ContextEntry> contexts;
  for (const auto& c : catalog_contexts())
    if (rings_present(c.recipe)) contexts.push_back(c);
  return run_suite(suite_inputs(catalog, contexts), cfg, ids);
}

Json to_json(const VerdictReport& r, bool include_timing) {
  std::vector<std::string> hashes;
  for (auto h : r.input_hashes) hashes.push_back(hash_hex(h));
  Json j = {{"check", r.check_id},
            {"input", r.input_name},
            {"input_hashes", hashes},
            {"verdict", to_string(r.verdict)},
            {"payload", r.payload}};
  if (include_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

Json to_json(const SuiteReport& s, bool include_timing) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r, include_timing));
  Json j = {{"format", "ringlab-suite"},
            {"version", 1},
            {"summary",
             {{"checks", s.reports.size()},
              {"pass", s.passed},
              {"fail", s.failed},
              {"skipped", s.skipped},
              {"inconclusive", s.inconclusive}}},
            {"reports", reports}};
  if (include_timing) j["wall_ms"] = s.wall_ms;
  return j;
}

}  // namespace ringlab
