#pragma once

#include <string>

#include "ringlab/element_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class Side { Left, Right, TwoSided, AdditiveOnly };

std::string to_string(Side s);

/// A subset of a ring closed under addition and, depending on the side, under
/// multiplication by ring elements.
class IdealSet {
 public:
  IdealSet() = default;

  /// Checks the closure conditions for the given side; throws RingError.
  IdealSet(FiniteRing ring, ElementSet members, Side side);

  /// Skips the closure check. For sets produced by closure operations.
  static IdealSet trusted(FiniteRing ring, ElementSet members, Side side);

  static IdealSet zero(const FiniteRing& r);
  static IdealSet whole(const FiniteRing& r);

  const FiniteRing& ring() const { return ring_; }
  const ElementSet& members() const { return members_; }
  Side side() const { return side_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem x) const { return members_.contains(x); }
  bool is_zero() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == ring_.order(); }

  bool is_left_closed() const;
  bool is_right_closed() const;
  bool is_additive_subgroup() const;

  /// Same ring and same members; sidedness is not compared.
  friend bool operator==(const IdealSet& a, const IdealSet& b);

 private:
  FiniteRing ring_;
  ElementSet members_;
  Side side_ = Side::TwoSided;
};

}  // namespace ringlab
