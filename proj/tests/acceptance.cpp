// Acceptance gate: one pass/fail line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "ringlab/catalog.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::ostringstream& detail)> body;
};

Elem m2(Elem a, Elem b, Elem c, Elem d) { return static_cast<Elem>(a * 8 + b * 4 + c * 2 + d); }

RawTables tables_of(const FiniteRing& r) {
  RawTables t;
  t.order = r.order();
  t.add.assign(r.add_table().begin(), r.add_table().end());
  t.mul.assign(r.mul_table().begin(), r.mul_table().end());
  t.one = r.one();
  return t;
}

bool axiom_suite(std::ostringstream& d) {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& e : catalog_build()) {
    const ValidationResult v = validate_ring(tables_of(e.ring));
    if (!v.ok() || !check_ring_axioms(e.ring).empty()) {
      d << " " << e.name << " invalid;";
      ok = false;
    }
  }
  const double s = seconds_since(t0);
  d << catalog_build().size() << " rings validated in " << s << " s (limit 60 s)";
  return ok && s <= 60.0;
}

bool universal_periodicity(std::ostringstream& d) {
  std::size_t elements = 0;
  for (const auto& e : catalog_build()) {
    const FiniteRing& r = e.ring;
    const Verdict v = is_periodic(r);
    if (!v.holds || v.witness.size() != r.order() || !reverify_witness(r, "periodic", v)) {
      d << e.name << " periodic verdict rejected";
      return false;
    }
    for (Elem a = 0; a < r.order(); ++a, ++elements) {
      const auto w = power_cycle(r, a);
      if (!w.verify(r) || w.k >= w.l || r.pow(a, w.k) != r.pow(a, w.l)) {
        d << e.name << " element " << a << " witness fails under pow";
        return false;
      }
    }
  }
  d << elements << " element witnesses re-verified via pow";
  return true;
}

bool theorem_1_1(std::ostringstream& d) {
  std::size_t elements = 0;
  for (const auto& e : catalog_build()) {
    const FiniteRing& r = e.ring;
    for (Elem a = 0; a < r.order(); ++a, ++elements) {
      const auto w = power_cycle(r, a);
      const Elem am = r.pow(a, w.n + 1);
      const Elem diff = r.sub(a, am);
      const auto nil = element_nilpotency_index(r, diff);
      const auto dec = potent_decomposition(r, a);
      const bool ok = nil && *nil <= w.n && dec.p == am && dec.w == diff && r.add(dec.p, dec.w) == a &&
                      r.pow(dec.p, dec.potency_exponent) == dec.p && r.pow(dec.w, dec.nilpotency_index) == 0 &&
                      r.mul(dec.p, dec.w) == r.mul(dec.w, dec.p);
      if (!ok) {
        d << e.name << " element " << a << " fails";
        return false;
      }
    }
  }
  d << elements << " elements: a - a^{n+1} nilpotent and a = p + w cross-validated";
  return true;
}

bool theorem_2_2_bound(std::ostringstream& d) {
  for (const char* name : {"E3.9", "MS2Z4"}) {
    const auto in = CheckInput::of_context(name, context_find(name)->spec);
    const VerdictReport rep = run_check("T2.2", in);
    if (rep.verdict != Outcome::Pass) {
      d << name << " T2.2 " << to_string(rep.verdict);
      return false;
    }
    // Independent pass over T with plain exponentiation.
    const auto& c = *in.context;
    const FiniteRing t = morita_ring(c);
    const std::uint64_t s = *nilpotency_index(IdealSet(c.a, psi_image(c), Side::TwoSided));
    const std::uint64_t u = *nilpotency_index(IdealSet(c.b, phi_image(c), Side::TwoSided));
    const std::uint64_t p = std::max(s, u);
    const std::size_t inner = c.n.order * c.m.order * c.b.order();
    for (Elem x = 0; x < t.order(); ++x) {
      const auto wa = power_cycle(c.a, static_cast<Elem>(x / inner));
      const auto wb = power_cycle(c.b, static_cast<Elem>(x % c.b.order()));
      const std::uint64_t k = wa.k * wb.k;
      const std::uint64_t l = k + (wb.l - wb.k) * wa.k * (wa.l - wa.k) * wb.k;
      const std::uint64_t n0 = k * (l - k);
      const std::uint64_t q = p * (n0 + 1), j = 2 * p * (q + 1);
      if (t.pow(t.sub(x, t.pow(x, n0 + 1)), 2 * j * p) != 0) {
        d << name << " element " << x << " survives the 2jp power";
        return false;
      }
    }
    d << name << ": s=" << s << " t=" << u << " max 2jp=" << rep.payload["chain"]["max_exponent"] << "; ";
  }
  return true;
}

bool fixtures(std::ostringstream& d) {
  const FiniteRing& r4 = catalog_find("E3.6")->ring;
  std::vector<Elem> a(16, 0), x(16, 0), b(16, 0);
  a[1] = a[2] = 1;
  x[6] = 1;
  b[7] = b[11] = 1;
  const Certificate triple{"nil-semicommutative-violation",
                           {constant_diagonal_index(4, a), constant_diagonal_index(4, x), constant_diagonal_index(4, b)},
                           ""};
  const bool e36 = is_strongly_periodic(r4).holds && !is_nil_semicommutative(r4).holds && reverify(r4, triple);
  const bool e39 = is_strongly_periodic(catalog_find("E3.9")->ring).holds;
  const FiniteRing& t2 = catalog_find("E4.6")->ring;
  const bool e46 = is_J_clean_like(t2).holds && !is_J_clean(t2).holds;
  const FiniteRing& g = catalog_find("G7")->ring;
  const bool g7 = is_generalized_n_like(g, 7).holds && is_abelian_ring(g).holds && !is_commutative_ring(g).holds &&
                  is_strongly_periodic(g).holds;
  d << "E3.6 " << (e36 ? "ok" : "BAD") << ", E3.9 " << (e39 ? "ok" : "BAD") << ", E4.6 " << (e46 ? "ok" : "BAD")
    << ", GF(4) 64-element ring " << (g7 ? "ok" : "BAD");
  return e36 && e39 && e46 && g7;
}

bool radical_cross_checks(std::ostringstream& d) {
  std::size_t prime_checked = 0, jac_checked = 0;
  for (const auto& e : catalog_build()) {
    const FiniteRing& r = e.ring;
    if (r.order() <= 32) {
      ++prime_checked;
      if (!(prime_radical(r) == prime_radical_oracle(r))) {
        d << e.name << " prime radical disagrees";
        return false;
      }
    }
    if (r.order() <= 27) {
      ++jac_checked;
      ElementSet meet = ElementSet::full(r.order());
      for (const auto& m : maximal_right_ideals_oracle(r)) meet &= m.members();
      if (!(meet == jacobson_radical(r).members())) {
        d << e.name << " Jacobson radical disagrees";
        return false;
      }
    }
  }
  d << prime_checked << " prime radicals and " << jac_checked << " Jacobson radicals match the oracles";
  return true;
}

bool biconditional_suite(std::ostringstream& d) {
  const auto t0 = Clock::now();
  const SuiteReport s = run_suite(catalog_build());
  const double secs = seconds_since(t0);
  const auto in = CheckInput::of_ring("M2Z2", catalog_find("M2Z2")->ring);
  auto holds = [](const VerdictReport& rep, const std::string& name) {
    for (const auto& c : rep.payload["claims"])
      if (c["name"] == name) return c["holds"].get<bool>();
    throw std::runtime_error(rep.check_id + " has no claim " + name);
  };
  const auto t33 = run_check("T3.3", in), t310 = run_check("T3.10", in);
  bool m2_both_false = t33.verdict == Outcome::Pass && t310.verdict == Outcome::Pass;
  m2_both_false &= !holds(t33, "strongly periodic") && !(holds(t33, "2-primal") && holds(t33, "weakly periodic"));
  for (const auto& c : t310.payload["claims"]) m2_both_false &= !c["holds"].get<bool>();
  d << s.reports.size() << " reports: pass " << s.passed << ", fail " << s.failed << ", skipped " << s.skipped
    << ", inconclusive " << s.inconclusive << " in " << secs << " s; M2(Z2) T3.3/T3.10 sides all false: "
    << (m2_both_false ? "yes" : "no");
  return s.failed == 0 && secs <= 600.0 && m2_both_false;
}

bool euw_decompositions(std::ostringstream& d) {
  std::size_t rings = 0, elements = 0;
  for (const auto& e : catalog_build()) {
    const FiniteRing& r = e.ring;
    if (!is_strongly_periodic(r).holds) continue;
    ++rings;
    for (Elem a = 0; a < r.order(); ++a, ++elements) {
      const auto dec = euw_decomposition(r, a);
      if (!dec || !dec->verify(r) || r.add(r.mul(dec->e, dec->u), dec->w) != a) {
        d << e.name << " element " << a << " has no verified decomposition";
        return false;
      }
    }
  }
  d << elements << " decompositions over " << rings << " strongly periodic rings (E3.9: 128, E4.6: 27)";
  return true;
}

bool sequence_checker(std::ostringstream& d) {
  const FiniteRing& z4 = catalog_find("Z4")->ring;
  const FiniteRing& m = catalog_find("M2Z2")->ring;
  const bool holds = sequence_vanishing(z4).outcome == SequenceOutcome::Holds;
  const SequenceResult f = sequence_vanishing(m);
  const bool fails = f.outcome == SequenceOutcome::Fails && f.witness && verify_sequence_witness(m, *f.witness);
  const bool alternating = verify_sequence_witness(m, SequenceWitness{{}, {m2(0, 1, 0, 0), m2(0, 0, 1, 0)}});
  bool terminates = true;
  std::size_t small = 0;
  SequenceOptions opts;
  opts.max_states = std::size_t{1} << 16;
  for (const auto& e : catalog_build()) {
    if (e.ring.order() > 16) continue;
    ++small;
    terminates &= sequence_vanishing(e.ring, opts).outcome != SequenceOutcome::Inconclusive;
  }
  d << "Z4 holds " << holds << ", M2(Z2) fails with replayed witness " << fails << ", e12/e21 cycle accepted "
    << alternating << ", " << small << " rings of order <= 16 decided " << terminates;
  return holds && fails && alternating && terminates;
}

bool finite_collapse(std::ostringstream& d) {
  std::size_t agree = 0;
  for (const auto& e : catalog_build()) {
    const bool sp = is_strongly_periodic(e.ring).holds;
    if (sp != is_2_primal(e.ring).holds || sp != is_J_clean_like(e.ring).holds) {
      d << e.name << " deviates";
      return false;
    }
    ++agree;
  }
  d << agree << " rings: strongly periodic = 2-primal = J-clean-like";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "axiom suite", axiom_suite},
      {2, "universal periodicity", universal_periodicity},
      {3, "T1.1 witnesses cross-validate", theorem_1_1},
      {4, "T2.2 certified 2jp bound", theorem_2_2_bound},
      {5, "example fixtures", fixtures},
      {6, "radical cross-checks", radical_cross_checks},
      {7, "biconditional suite", biconditional_suite},
      {8, "T3.10 decompositions", euw_decompositions},
      {9, "T4.13 sequence checker", sequence_checker},
      {10, "finite collapse", finite_collapse},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail << " exception: " << e.what();
    }
    std::printf("criterion %2d %s: %s (%s)\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), detail.str().c_str());
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
