#pragma once

// Class-membership predicates. Every verdict carries either a per-element
// witness table or a single counterexample certificate; both can be replayed
// with reverify(). Searches return the least witness by element index.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ideal_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Structural data shared by the predicates, computed once per ring.
struct RingFacts {
  FiniteRing ring;
  std::vector<PeriodicityWitness> cycles;  // indexed by element
  UnitGroup units;
  ElementSet idempotents;
  ElementSet potents;
  ElementSet nil;
  ElementSet center;
  IdealSet jacobson;
  IdealSet prime;
  std::vector<Elem> potent_list;  // ascending
};

/// Cached by content hash (with a table-equality check on hits).
std::shared_ptr<const RingFacts> ring_facts(const FiniteRing& r);
void clear_facts_cache();

struct Certificate {
  std::string kind;
  std::vector<std::uint64_t> elements;
  std::string equation;
};

/// True iff the certificate's violation reproduces on r.
bool reverify(const FiniteRing& r, const Certificate& c);

struct Verdict {
  bool holds = false;
  /// Column names of the witness rows, e.g. {"a", "p"}.
  std::vector<std::string> witness_fields;
  std::vector<std::vector<std::uint64_t>> witness;
  std::optional<Certificate> certificate;
  std::string note;
};

/// Re-checks every witness row of a positive verdict for the named class.
bool reverify_witness(const FiniteRing& r, const std::string& class_name, const Verdict& v);

Verdict is_periodic(const FiniteRing& r);
Verdict is_potent_ring(const FiniteRing& r);
Verdict is_weakly_periodic(const FiniteRing& r, bool require_commuting = false);
Verdict is_strongly_periodic(const FiniteRing& r, bool require_commuting = false);
Verdict is_2_primal(const FiniteRing& r);
Verdict is_nil_semicommutative(const FiniteRing& r);
Verdict is_abelian_ring(const FiniteRing& r);
Verdict is_commutative_ring(const FiniteRing& r);
Verdict is_J_clean(const FiniteRing& r);
Verdict is_J_clean_like(const FiniteRing& r);
Verdict potent_lifts_mod_J(const FiniteRing& r);

struct QuasiDuoOptions {
  std::size_t oracle_cap = 32;
};
/// Fast path: R/J commutative. Under the cap the maximal one-sided ideals are
/// enumerated as well and must agree (std::logic_error otherwise).
Verdict is_quasi_duo(const FiniteRing& r, Side side, const QuasiDuoOptions& opts = {});

/// (ab)^n - ab^n - a^n b + ab = 0 for all a, b. n >= 2.
Verdict is_generalized_n_like(const FiniteRing& r, std::uint64_t n);

struct EuwDecomposition {
  Elem e = 0, u = 0, w = 0;
  std::uint64_t m = 1;  // multiplicative order of u
  bool verify(const FiniteRing& r) const;
};
/// a = eu + w with e idempotent, u a unit, w in P(R), all commuting. Least
/// (e, u) by index.
std::optional<EuwDecomposition> euw_decomposition(const FiniteRing& r, Elem a);

struct SequenceOptions {
  /// 0 means order + 1, enough for every power cycle to close.
  std::uint64_t max_exponent = 0;
  std::size_t max_states = std::size_t{1} << 16;
};

enum class SequenceOutcome { Holds, Fails, Inconclusive };
std::string to_string(SequenceOutcome o);

struct SequenceWitness {
  std::vector<Elem> prefix;  // adversary choices
  std::vector<Elem> cycle;   // repeated forever
};

struct SequenceResult {
  SequenceOutcome outcome = SequenceOutcome::Holds;
  std::optional<SequenceWitness> witness;
  std::size_t states = 0;
};

/// Decides whether every sequence a_1, a_2, ... admits k and exponents
/// n_i in [2, max_exponent] with (a_1 - a_1^{n_1}) ... (a_k - a_k^{n_k}) = 0.
SequenceResult sequence_vanishing(const FiniteRing& r, const SequenceOptions& opts = {});
/// Replays a witness: every reachable product set along prefix + cycle avoids
/// zero and the set after one cycle equals the set before it.
bool verify_sequence_witness(const FiniteRing& r, const SequenceWitness& w,
                             const SequenceOptions& opts = {});

struct ClassifyOptions {
  std::uint64_t n_like_min = 2;
  std::uint64_t n_like_max = 16;
  QuasiDuoOptions quasi_duo;
};

struct ClassificationReport {
  std::uint64_t ring_hash = 0;
  std::size_t order = 0;
  std::map<std::string, Verdict> verdicts;
};

/// Fixed key set, in report order.
const std::vector<std::string>& classification_keys();

ClassificationReport classification_report(const FiniteRing& r, const ClassifyOptions& opts = {});

}  // namespace ringlab
