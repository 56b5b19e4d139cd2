#pragma once

// Ring constructors. Every output is a FiniteRing with constructor-built
// provenance. Element encodings are mixed-radix with the first component most
// significant, so the all-zero tuple is always index 0:
//   matrices            row-major entries
//   T_n(R, alpha)       upper-triangular entries (i <= j), row-major
//   R[[x;alpha]]/(x^n)  coefficients (r_0, ..., r_{n-1})
//   generalized matrix  (a, b, c, d) for [[a, b], [c, d]]
//   Morita ring         (a, n, m, b) for [[a, n], [m, b]]
//   trivial extension   (r, m)
//   direct product      (r, s)
//   GF(p^k)             sum c_i p^i for the polynomial sum c_i x^i

#include <cstddef>
#include <optional>
#include <vector>

#include "ringlab/ideal_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct ConstructOptions {
  std::size_t max_order = kDefaultMaxOrder;
};

struct RingEndomorphism {
  FiniteRing ring;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  bool is_identity() const;
  /// Violations of additivity, multiplicativity, map(0)=0, map(1)=1.
  std::vector<AxiomViolation> violations() const;
  RingEndomorphism compose(const RingEndomorphism& inner) const;  // this o inner
  RingEndomorphism power(std::size_t k) const;
};

RingEndomorphism identity_endomorphism(const FiniteRing& r);

/// An L-R bimodule. left_action is |L| x order, right_action is order x |R|.
struct BimoduleSpec {
  std::size_t order = 1;
  std::size_t left_order = 1;
  std::size_t right_order = 1;
  std::vector<Elem> add;
  std::vector<Elem> left_action;
  std::vector<Elem> right_action;
  std::vector<std::string> labels;

  Elem plus(Elem m, Elem m2) const { return add[m * order + m2]; }
  Elem left(Elem l, Elem m) const { return left_action[l * order + m]; }
  Elem right(Elem m, Elem r) const { return right_action[m * right_order + r]; }
  Elem negate(Elem m) const;
  std::string label(Elem m) const { return labels.empty() ? std::to_string(m) : labels[m]; }
};

std::vector<AxiomViolation> bimodule_violations(const FiniteRing& left, const BimoduleSpec& m,
                                                const FiniteRing& right);

/// R as an R-R bimodule over itself.
BimoduleSpec regular_bimodule(const FiniteRing& r);
/// The zero L-R bimodule.
BimoduleSpec zero_bimodule(const FiniteRing& left, const FiniteRing& right);
/// A two-sided ideal of R (given as a member set) as an R-R bimodule. Module
/// element i corresponds to the i-th smallest member.
BimoduleSpec ideal_bimodule(const FiniteRing& r, const ElementSet& members);
/// The ring S as an L-R bimodule through ring maps to_left: L -> S and
/// to_right: R -> S (l.s = to_left(l) s, s.r = s to_right(r)).
BimoduleSpec bimodule_via_maps(const FiniteRing& left, const FiniteRing& s,
                               const FiniteRing& right, const std::vector<Elem>& to_left,
                               const std::vector<Elem>& to_right);

/// (A, B, M, N, psi, phi): M is a B-A bimodule, N is an A-B bimodule,
/// psi: N x M -> A (index n * |M| + m), phi: M x N -> B (index m * |N| + n).
struct MoritaContextSpec {
  FiniteRing a, b;
  BimoduleSpec m, n;
  std::vector<Elem> psi, phi;

  Elem psi_of(Elem nn, Elem mm) const { return psi[nn * m.order + mm]; }
  Elem phi_of(Elem mm, Elem nn) const { return phi[mm * n.order + nn]; }
};

/// Every violated bimodule, balance, bilinearity or associativity condition
/// with its first witness tuple.
std::vector<AxiomViolation> morita_violations(const MoritaContextSpec& spec);

/// Context with all four slots equal to R and pairings psi(n,m) = s n m,
/// phi(m,n) = s m n.
MoritaContextSpec generalized_matrix_context(const FiniteRing& r, Elem s);
/// A = B = R, N and M two-sided ideals of R, pairings given by the product of R.
MoritaContextSpec ideal_context(const FiniteRing& r, const ElementSet& n_members,
                                const ElementSet& m_members);
/// Formal triangular context [[A, N], [0, B]] with zero pairings.
MoritaContextSpec triangular_context(const FiniteRing& a, const BimoduleSpec& n,
                                     const FiniteRing& b);

/// A = B = R x R x R (diagonal 3 x 3 matrices), M = R e32 and N = R e31 + R e32
/// inside M_3(R), all four actions by matrix product. Both pairings vanish.
/// N element (n31, n32) is n31 * |R| + n32.
MoritaContextSpec diagonal_block_context(const FiniteRing& r);

/// Image subgroups im(psi) in A and im(phi) in B (additive closures).
ElementSet psi_image(const MoritaContextSpec& spec);
ElementSet phi_image(const MoritaContextSpec& spec);

FiniteRing zmod(std::size_t n, const ConstructOptions& opts = {});

/// poly, if given, lists coefficients c_0..c_k of a monic degree-k polynomial.
FiniteRing galois_field(std::size_t p, std::size_t k,
                        const std::optional<std::vector<std::size_t>>& poly = std::nullopt,
                        const ConstructOptions& opts = {});
/// Lexicographically least monic irreducible of degree k over Z_p (by the
/// integer sum c_i p^i of its lower coefficients).
std::vector<std::size_t> least_irreducible(std::size_t p, std::size_t k);
bool is_irreducible_mod_p(const std::vector<std::size_t>& poly, std::size_t p);

FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s,
                          const ConstructOptions& opts = {});
FiniteRing matrix_ring(const FiniteRing& r, std::size_t k, const ConstructOptions& opts = {});
FiniteRing triangular_matrix_ring(const RingEndomorphism& alpha, std::size_t n,
                                  const ConstructOptions& opts = {});
FiniteRing triangular_matrix_ring(const FiniteRing& r, std::size_t n,
                                  const ConstructOptions& opts = {});
FiniteRing truncated_skew_power_series(const RingEndomorphism& alpha, std::size_t n,
                                       const ConstructOptions& opts = {});
FiniteRing truncated_power_series(const FiniteRing& r, std::size_t n,
                                  const ConstructOptions& opts = {});
FiniteRing generalized_matrix(const FiniteRing& r, Elem s, const ConstructOptions& opts = {});
FiniteRing morita_ring(const MoritaContextSpec& spec, const ConstructOptions& opts = {});
FiniteRing trivial_extension(const FiniteRing& r, const BimoduleSpec& m,
                             const ConstructOptions& opts = {});
FiniteRing opposite_ring(const FiniteRing& r);

/// Ring on an explicit list of k x k matrices over r (row-major entries).
/// The list must contain the zero matrix first and the identity, and be
/// closed under + and *; element i is list[i].
FiniteRing matrix_subring(const FiniteRing& r, std::size_t k,
                          const std::vector<std::vector<Elem>>& matrices,
                          const ConstructOptions& opts = {});

struct QuotientRing {
  FiniteRing ring;
  std::vector<Elem> projection;       // element of R -> coset index
  std::vector<Elem> representatives;  // coset index -> least element
};

QuotientRing quotient(const FiniteRing& r, const IdealSet& ideal);

struct SubringResult {
  ElementSet members;             // closure in the ambient ring
  std::optional<FiniteRing> ring; // present iff the closure has an identity
  std::vector<Elem> embedding;    // subring index -> ambient element
};

SubringResult subring_generated(const FiniteRing& r, const std::vector<Elem>& generators,
                                bool include_one);

/// a -> a^p on a finite field of characteristic p.
RingEndomorphism frobenius(const FiniteRing& field);

/// Constant-diagonal upper triangular n x n matrices over Z_2, 3 <= n <= 4.
/// Encoding: (diagonal, strict upper entries row-major).
FiniteRing constant_diagonal_block(std::size_t n, const ConstructOptions& opts = {});
/// Matrix of constant_diagonal_block(n) element as n x n row-major 0/1 entries.
std::vector<Elem> constant_diagonal_matrix(std::size_t n, Elem index);
Elem constant_diagonal_index(std::size_t n, const std::vector<Elem>& matrix);

/// The 64-element ring {[[x, y, z], [0, x^2, 0], [0, 0, x]] : x, y, z in GF(4)}.
/// Element index is (x * 4 + y) * 4 + z with GF(4) indices.
FiniteRing gf4_twisted_ring(const ConstructOptions& opts = {});

}  // namespace ringlab
