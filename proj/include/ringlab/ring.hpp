#pragma once

// Finite associative unital rings given by Cayley tables, plus the
// element-level periodicity data every other module builds on.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/element_set.hpp"

namespace ringlab {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Provenance { RawImport, ConstructorBuilt };

std::string to_string(Provenance p);

/// 16 lowercase hex digits.
std::string hash_hex(std::uint64_t h);

/// Default hard cap on ring order, shared by validation and constructors.
inline constexpr std::size_t kDefaultMaxOrder = 1024;
/// Raw imports up to this order get the full O(n^3) axiom scan.
inline constexpr std::size_t kFullScanLimit = 512;

/// Unvalidated input: row-major order x order tables.
struct RawTables {
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  Elem one = 0;
  std::vector<std::string> labels;
};

struct AxiomViolation {
  std::string axiom;            // e.g. "mul-associative", "one not identity"
  std::vector<Elem> witness;    // first offending tuple
  std::string describe() const;
};

class FiniteRing {
 public:
  FiniteRing() = default;

  /// Wraps tables without any axiom scan. Used by constructors; callers own
  /// correctness. Zero must already be index 0.
  static FiniteRing from_trusted_tables(std::size_t order, std::vector<Elem> add,
                                        std::vector<Elem> mul, Elem one,
                                        std::vector<std::string> labels = {},
                                        Provenance provenance = Provenance::ConstructorBuilt);

  std::size_t order() const { return d_ ? d_->order : 0; }
  Elem zero() const { return 0; }
  Elem one() const { return d_->one; }

  Elem add(Elem a, Elem b) const { return d_->add[a * d_->order + b]; }
  Elem mul(Elem a, Elem b) const { return d_->mul[a * d_->order + b]; }
  Elem neg(Elem a) const { return d_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  /// Bounds-checked variants for handles coming from outside.
  Elem checked_add(Elem a, Elem b) const;
  Elem checked_mul(Elem a, Elem b) const;
  Elem checked_neg(Elem a) const;
  void require_element(Elem a) const;

  /// a^k by repeated multiplication; a^0 = one.
  Elem pow(Elem a, std::uint64_t k) const;
  /// Integer multiple k*a (k may be negative).
  Elem times(std::int64_t k, Elem a) const;

  std::span<const Elem> add_table() const { return d_->add; }
  std::span<const Elem> mul_table() const { return d_->mul; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  std::string label(Elem a) const;
  Provenance provenance() const { return d_->provenance; }

  bool is_commutative() const;

  /// FNV-1a 64 over (order, add, mul, one); labels excluded.
  std::uint64_t content_hash() const { return d_->hash; }
  std::string content_hash_hex() const;

  /// Handle identity: true if both refer to the same table storage.
  bool same_handle(const FiniteRing& o) const { return d_ == o.d_; }
  /// Structural equality of tables (labels and provenance ignored).
  friend bool operator==(const FiniteRing& a, const FiniteRing& b);

  bool valid() const { return d_ != nullptr; }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Elem> add, mul, neg;
    Elem one = 0;
    std::vector<std::string> labels;
    Provenance provenance = Provenance::ConstructorBuilt;
    std::uint64_t hash = 0;
  };
  std::shared_ptr<const Data> d_;
};

/// Same ring up to handle or table equality; throws RingError otherwise.
void require_same_ring(const FiniteRing& a, const FiniteRing& b, const char* what);

struct ValidateOptions {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t full_scan_limit = kFullScanLimit;
};

struct ValidationResult {
  std::optional<FiniteRing> ring;
  std::vector<AxiomViolation> violations;
  bool ok() const { return ring.has_value(); }
  std::string describe() const;
};

/// Validates raw tables. The additive identity is re-indexed to 0 if needed.
ValidationResult validate_ring(const RawTables& tables, const ValidateOptions& opts = {});

/// Like validate_ring but throws RingError listing the violations.
FiniteRing ring_from_tables(const RawTables& tables, const ValidateOptions& opts = {});

/// Full axiom scan of an already-built ring (used on constructor outputs).
std::vector<AxiomViolation> check_ring_axioms(const FiniteRing& r);

/// Eventual periodicity data of a single element: least k, then least l > k
/// with a^k = a^l.
struct PeriodicityWitness {
  Elem element = 0;
  std::uint64_t k = 1;
  std::uint64_t l = 2;
  std::uint64_t n = 1;                // k * (l - k)
  std::uint64_t potent_power = 2;     // 1 + (l - k)
  std::uint64_t monomial_degree = 0;  // l - k - 1

  std::uint64_t period() const { return l - k; }
  /// Smallest exponent e' <= l - 1 with a^e = a^{e'}.
  std::uint64_t reduce(std::uint64_t e) const;
  /// Checks a^k = a^l, a^k = a^{k+1} a^{l-k-1} and (a - a^{n+1})^n = 0.
  bool verify(const FiniteRing& r) const;
};

PeriodicityWitness power_cycle(const FiniteRing& r, Elem a);
/// a^e using the cycle to shrink e first; equal to r.pow(a, e).
Elem pow_reduced(const FiniteRing& r, const PeriodicityWitness& w, std::uint64_t e);

struct PotentDecomposition {
  Elem p = 0;  // potent part
  Elem w = 0;  // nilpotent part
  std::uint64_t potency_exponent = 2;
  std::uint64_t nilpotency_index = 1;
  bool commutes = true;
};

/// Elements that are units, with inverse map (inverse[a] valid iff unit).
struct UnitGroup {
  ElementSet members;
  std::vector<Elem> inverse;
};

UnitGroup units(const FiniteRing& r);
bool is_unit(const FiniteRing& r, Elem a);
ElementSet center(const FiniteRing& r);
ElementSet idempotents(const FiniteRing& r);

/// Additive subgroup generated by a set of elements.
ElementSet additive_closure(const FiniteRing& r, const ElementSet& generators);

/// Least m >= 2 with a^m = a, if any.
std::optional<std::uint64_t> potency_exponent(const FiniteRing& r, Elem a);
/// Least t >= 1 with a^t = 0, if any.
std::optional<std::uint64_t> element_nilpotency_index(const FiniteRing& r, Elem a);

/// Decomposition a = p + w with p = a^{n+1}, n = k(l-k). Throws std::logic_error
/// if any of the guaranteed identities fails (signals a broken ring).
PotentDecomposition potent_decomposition(const FiniteRing& r, Elem a);

}  // namespace ringlab
