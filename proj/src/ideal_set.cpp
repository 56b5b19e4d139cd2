#include "ringlab/ideal_set.hpp"

namespace ringlab {

std::string to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::TwoSided: return "two-sided";
    case Side::AdditiveOnly: return "additive";
  }
  return "unknown";
}

IdealSet::IdealSet(FiniteRing ring, ElementSet members, Side side)
    : ring_(std::move(ring)), members_(std::move(members)), side_(side) {
  if (members_.universe() != ring_.order()) throw RingError("ideal: member set universe does not match ring");
  if (!is_additive_subgroup()) throw RingError("ideal: not an additive subgroup");
  if ((side_ == Side::Left || side_ == Side::TwoSided) && !is_left_closed())
    throw RingError("ideal: not closed under left multiplication");
  if ((side_ == Side::Right || side_ == Side::TwoSided) && !is_right_closed())
    throw RingError("ideal: not closed under right multiplication");
}

IdealSet IdealSet::trusted(FiniteRing ring, ElementSet members, Side side) {
  IdealSet s;
  s.ring_ = std::move(ring);
  s.members_ = std::move(members);
  s.side_ = side;
  return s;
}

IdealSet IdealSet::zero(const FiniteRing& r) {
  return trusted(r, ElementSet::of(r.order(), {r.zero()}), Side::TwoSided);
}

IdealSet IdealSet::whole(const FiniteRing& r) {
  return trusted(r, ElementSet::full(r.order()), Side::TwoSided);
}

bool IdealSet::is_additive_subgroup() const {
  if (!members_.contains(ring_.zero())) return false;
  const auto m = members_.members();
  for (Elem a : m) {
    if (!members_.contains(ring_.neg(a))) return false;
    for (Elem b : m)
      if (!members_.contains(ring_.add(a, b))) return false;
  }
  return true;
}

bool IdealSet::is_left_closed() const {
  const auto m = members_.members();
  for (Elem r = 0; r < ring_.order(); ++r)
    for (Elem a : m)
      if (!members_.contains(ring_.mul(r, a))) return false;
  return true;
}

bool IdealSet::is_right_closed() const {
  const auto m = members_.members();
  for (Elem r = 0; r < ring_.order(); ++r)
    for (Elem a : m)
      if (!members_.contains(ring_.mul(a, r))) return false;
  return true;
}

bool operator==(const IdealSet& a, const IdealSet& b) {
  return a.ring_ == b.ring_ && a.members_ == b.members_;
}

}  // namespace ringlab
