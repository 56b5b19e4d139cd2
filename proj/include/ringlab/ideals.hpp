#pragma once

// Ideal closures, ideal arithmetic, nilpotency and the radicals N(R), P(R),
// J(R). Functions suffixed _oracle are brute force and capped at order 32.

#include <cstddef>
#include <optional>
#include <vector>

#include "ringlab/ideal_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

inline constexpr std::size_t kOracleMaxOrder = 32;

/// Least ideal of the given sidedness containing the generators.
IdealSet ideal_generated(const FiniteRing& r, Elem x, Side side);
IdealSet ideal_generated(const FiniteRing& r, const ElementSet& generators, Side side);

/// Least ideal of the same sidedness containing both (two-sided only).
IdealSet ideal_sum(const IdealSet& i, const IdealSet& j);
/// Additive closure of {ab : a in I, b in J}.
IdealSet ideal_product(const IdealSet& i, const IdealSet& j);
/// I^1 = I, I^{t+1} = I * I^t. t >= 1.
IdealSet ideal_power(const IdealSet& i, std::size_t t);
IdealSet ideal_intersection(const IdealSet& i, const IdealSet& j);

/// Least t with I^t = 0, or nullopt if the powers stabilise above zero.
std::optional<std::size_t> nilpotency_index(const IdealSet& i);

/// Nilpotent elements; not an ideal in general.
ElementSet nil_elements(const FiniteRing& r);

/// Fast path: x in J iff 1 + rx is a unit for every r.
IdealSet jacobson_radical(const FiniteRing& r);
/// {x : 1 + rxs is a unit for all r, s}. O(n^3).
IdealSet jacobson_radical_by_definition(const FiniteRing& r);

/// Largest nilpotent two-sided ideal (sum of nilpotent principal ideals).
IdealSet prime_radical(const FiniteRing& r);
/// Intersection of all prime ideals. Order <= 32.
IdealSet prime_radical_oracle(const FiniteRing& r);

/// All two-sided ideals, ordered by size then members. Order <= 32.
std::vector<IdealSet> enumerate_ideals(const FiniteRing& r);
/// All right (or left) ideals. Order <= 32.
std::vector<IdealSet> enumerate_one_sided_ideals(const FiniteRing& r, Side side);

/// Prime: aRb in I implies a in I or b in I. Rejects I = R.
bool is_prime_ideal(const IdealSet& i);
/// Completely prime: ab in I implies a in I or b in I. Rejects I = R.
bool is_completely_prime_ideal(const IdealSet& i);

struct LocalNilpotency {
  bool holds = true;
  std::optional<Elem> witness;  // x with RxR not nilpotent
};
LocalNilpotency is_locally_nilpotent(const IdealSet& i);

/// Left: every sequence a_1, a_2, ... in I has a_1 a_2 ... a_k = 0 for some k
/// (right: a_k ... a_1). Computed through nilpotency.
bool is_T_nilpotent(const IdealSet& i, Side side);
/// Direct search for a sequence in I whose partial products never vanish.
/// Returns true iff no such sequence exists. |I| small.
bool t_nilpotent_by_game(const IdealSet& i, Side side);

/// Maximal proper right ideals. Order <= 32.
std::vector<IdealSet> maximal_right_ideals_oracle(const FiniteRing& r);
/// Maximal proper left ideals, via the opposite ring. Order <= 32.
std::vector<IdealSet> maximal_left_ideals_oracle(const FiniteRing& r);

}  // namespace ringlab
