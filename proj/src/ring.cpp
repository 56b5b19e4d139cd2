#include "ringlab/ring.hpp"

#include <cstdio>
#include <numeric>
#include <sstream>
#include <utility>

namespace ringlab {

namespace {

std::uint64_t fnv_hash(std::size_t order, const std::vector<Elem>& add,
                       const std::vector<Elem>& mul, Elem one) {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&](std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  feed(order, 8);
  for (Elem x : add) feed(x, 4);
  for (Elem x : mul) feed(x, 4);
  feed(one, 4);
  return h;
}

}  // namespace

std::string to_string(Provenance p) {
  return p == Provenance::RawImport ? "raw-import" : "constructor-built";
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << axiom;
  if (!witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << witness[i];
    os << ")";
  }
  return os.str();
}

FiniteRing FiniteRing::from_trusted_tables(std::size_t order, std::vector<Elem> add,
                                           std::vector<Elem> mul, Elem one,
                                           std::vector<std::string> labels,
                                           Provenance provenance) {
  if (order == 0) throw RingError("ring order must be at least 1");
  if (add.size() != order * order || mul.size() != order * order)
    throw RingError("table size does not match order");
  auto d = std::make_shared<Data>();
  d->order = order;
  d->neg.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order; ++b) {
      if (add[a * order + b] == 0) {
        d->neg[a] = static_cast<Elem>(b);
        found = true;
        break;
      }
    }
    if (!found) throw RingError("element " + std::to_string(a) + " has no negative");
  }
  d->hash = fnv_hash(order, add, mul, one);
  d->add = std::move(add);
  d->mul = std::move(mul);
  d->one = one;
  if (!labels.empty() && labels.size() != order) throw RingError("label count does not match order");
  d->labels = std::move(labels);
  d->provenance = provenance;
  FiniteRing r;
  r.d_ = std::move(d);
  return r;
}

void FiniteRing::require_element(Elem a) const {
  if (!d_ || a >= d_->order)
    throw RingError("element index " + std::to_string(a) + " out of range for ring of order " +
                    std::to_string(order()));
}

Elem FiniteRing::checked_add(Elem a, Elem b) const {
  require_element(a);
  require_element(b);
  return add(a, b);
}

Elem FiniteRing::checked_mul(Elem a, Elem b) const {
  require_element(a);
  require_element(b);
  return mul(a, b);
}

Elem FiniteRing::checked_neg(Elem a) const {
  require_element(a);
  return neg(a);
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem x = one();
  for (std::uint64_t i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

Elem FiniteRing::times(std::int64_t k, Elem a) const {
  Elem base = k < 0 ? neg(a) : a;
  std::uint64_t m = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Elem x = zero();
  for (std::uint64_t i = 0; i < m; ++i) x = add(x, base);
  return x;
}

std::string FiniteRing::label(Elem a) const {
  if (!d_->labels.empty()) return d_->labels[a];
  return std::to_string(a);
}

bool FiniteRing::is_commutative() const {
  const std::size_t n = order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string FiniteRing::content_hash_hex() const { return hash_hex(content_hash()); }

bool operator==(const FiniteRing& a, const FiniteRing& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.d_->order == b.d_->order && a.d_->one == b.d_->one && a.d_->add == b.d_->add &&
         a.d_->mul == b.d_->mul;
}

void require_same_ring(const FiniteRing& a, const FiniteRing& b, const char* what) {
  if (a.same_handle(b)) return;
  if (a.content_hash() == b.content_hash() && a == b) return;
  throw RingError(std::string(what) + ": operands belong to different rings");
}

// ---------------------------------------------------------------------------
// Validation

namespace {

struct TableView {
  std::size_t n;
  const std::vector<Elem>& add;
  const std::vector<Elem>& mul;
  Elem A(Elem a, Elem b) const { return add[a * n + b]; }
  Elem M(Elem a, Elem b) const { return mul[a * n + b]; }
};

void scan_axioms(const TableView& t, Elem one, bool triples,
                 std::vector<AxiomViolation>& out) {
  const auto n = static_cast<Elem>(t.n);
  // zero is 0 here
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b)
        if (t.A(a, b) != t.A(b, a)) {
          out.push_back({"add-commutative", {a, b}});
          return;
        }
  }();
  for (Elem a = 0; a < n; ++a) {
    bool has = false;
    for (Elem b = 0; b < n && !has; ++b) has = t.A(a, b) == 0;
    if (!has) {
      out.push_back({"missing negative", {a}});
      break;
    }
  }
  for (Elem a = 0; a < n; ++a)
    if (t.M(one, a) != a || t.M(a, one) != a) {
      out.push_back({"one not identity", {one, a}});
      break;
    }
  if (n >= 2 && one == 0) out.push_back({"one equals zero", {one}});
  if (!triples) return;

  bool add_assoc = true, mul_assoc = true, left_dist = true, right_dist = true;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_add = t.A(a, b), ab_mul = t.M(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (add_assoc && t.A(ab_add, c) != t.A(a, t.A(b, c))) {
          out.push_back({"add-associative", {a, b, c}});
          add_assoc = false;
        }
        if (mul_assoc && t.M(ab_mul, c) != t.M(a, t.M(b, c))) {
          out.push_back({"mul-associative", {a, b, c}});
          mul_assoc = false;
        }
        if (left_dist && t.M(a, t.A(b, c)) != t.A(ab_mul, t.M(a, c))) {
          out.push_back({"left-distributive", {a, b, c}});
          left_dist = false;
        }
        if (right_dist && t.M(t.A(a, b), c) != t.A(t.M(a, c), t.M(b, c))) {
          out.push_back({"right-distributive", {a, b, c}});
          right_dist = false;
        }
      }
    }
  }
}

}  // namespace

std::string ValidationResult::describe() const {
  if (ok()) return "valid";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.describe();
  }
  return s;
}

ValidationResult validate_ring(const RawTables& in, const ValidateOptions& opts) {
  ValidationResult res;
  const std::size_t n = in.order;
  if (n == 0) {
    res.violations.push_back({"order must be at least 1", {}});
    return res;
  }
  if (n > opts.max_order) {
    res.violations.push_back({"order " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(opts.max_order), {}});
    return res;
  }
  if (n > opts.full_scan_limit) {
    res.violations.push_back({"raw import of order " + std::to_string(n) +
                                  " exceeds full-scan limit " +
                                  std::to_string(opts.full_scan_limit), {}});
    return res;
  }
  if (in.add.size() != n * n || in.mul.size() != n * n) {
    res.violations.push_back({"tables must be order x order", {}});
    return res;
  }
  if (!in.labels.empty() && in.labels.size() != n) {
    res.violations.push_back({"label count does not match order", {}});
    return res;
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (in.add[i] >= n) {
      res.violations.push_back({"add entry out of range",
                                {static_cast<Elem>(i / n), static_cast<Elem>(i % n)}});
      return res;
    }
    if (in.mul[i] >= n) {
      res.violations.push_back({"mul entry out of range",
                                {static_cast<Elem>(i / n), static_cast<Elem>(i % n)}});
      return res;
    }
  }
  if (in.one >= n) {
    res.violations.push_back({"one out of range", {in.one}});
    return res;
  }

  // Locate the additive identity.
  std::optional<Elem> zero;
  for (Elem z = 0; z < n && !zero; ++z) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = in.add[z * n + a] == a && in.add[a * n + z] == a;
    if (ok) zero = z;
  }
  if (!zero) {
    res.violations.push_back({"missing additive identity", {}});
    return res;
  }

  // Re-index so that zero is element 0.
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::swap(perm[0], perm[*zero]);
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      add[perm[a] * n + perm[b]] = perm[in.add[a * n + b]];
      mul[perm[a] * n + perm[b]] = perm[in.mul[a * n + b]];
    }
  const Elem one = perm[in.one];
  std::vector<std::string> labels;
  if (!in.labels.empty()) {
    labels.resize(n);
    for (Elem a = 0; a < n; ++a) labels[perm[a]] = in.labels[a];
  }

  scan_axioms(TableView{n, add, mul}, one, true, res.violations);
  if (!res.violations.empty()) return res;
  res.ring = FiniteRing::from_trusted_tables(n, std::move(add), std::move(mul), one,
                                             std::move(labels), Provenance::RawImport);
  return res;
}

FiniteRing ring_from_tables(const RawTables& tables, const ValidateOptions& opts) {
  auto res = validate_ring(tables, opts);
  if (!res.ok()) throw RingError("invalid ring: " + res.describe());
  return std::move(*res.ring);
}

std::vector<AxiomViolation> check_ring_axioms(const FiniteRing& r) {
  std::vector<Elem> add(r.add_table().begin(), r.add_table().end());
  std::vector<Elem> mul(r.mul_table().begin(), r.mul_table().end());
  std::vector<AxiomViolation> out;
  for (Elem a = 0; a < r.order(); ++a)
    if (add[a] != a || add[a * r.order()] != a) {
      out.push_back({"zero not additive identity", {a}});
      break;
    }
  scan_axioms(TableView{r.order(), add, mul}, r.one(), true, out);
  return out;
}

// ---------------------------------------------------------------------------
// Element data

std::uint64_t PeriodicityWitness::reduce(std::uint64_t e) const {
  if (e < k) return e;
  return k + (e - k) % (l - k);
}

bool PeriodicityWitness::verify(const FiniteRing& r) const {
  if (k < 1 || l <= k) return false;
  const Elem a = element;
  if (r.pow(a, k) != r.pow(a, l)) return false;
  if (r.pow(a, k) != r.mul(r.pow(a, k + 1), r.pow(a, monomial_degree))) return false;
  if (n != k * (l - k) || potent_power != 1 + (l - k) || monomial_degree != l - k - 1)
    return false;
  const Elem diff = r.sub(a, r.pow(a, n + 1));
  return r.pow(diff, n) == r.zero();
}

PeriodicityWitness power_cycle(const FiniteRing& r, Elem a) {
  r.require_element(a);
  std::vector<std::uint64_t> first_seen(r.order(), 0);
  Elem x = a;
  for (std::uint64_t i = 1;; ++i) {
    if (first_seen[x] != 0) {
      PeriodicityWitness w;
      w.element = a;
      w.k = first_seen[x];
      w.l = i;
      w.n = w.k * (w.l - w.k);
      w.potent_power = 1 + (w.l - w.k);
      w.monomial_degree = w.l - w.k - 1;
      return w;
    }
    first_seen[x] = i;
    x = r.mul(x, a);
  }
}

Elem pow_reduced(const FiniteRing& r, const PeriodicityWitness& w, std::uint64_t e) {
  return r.pow(w.element, w.reduce(e));
}

UnitGroup units(const FiniteRing& r) {
  const std::size_t n = r.order();
  UnitGroup g{ElementSet(n), std::vector<Elem>(n, 0)};
  for (Elem a = 0; a < n; ++a) {
    if (g.members.contains(a)) continue;
    for (Elem b = 0; b < n; ++b) {
      if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
        g.members.insert(a);
        g.members.insert(b);
        g.inverse[a] = b;
        g.inverse[b] = a;
        break;
      }
    }
  }
  return g;
}

bool is_unit(const FiniteRing& r, Elem a) {
  r.require_element(a);
  for (Elem b = 0; b < r.order(); ++b)
    if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) return true;
  return false;
}

ElementSet center(const FiniteRing& r) {
  const std::size_t n = r.order();
  ElementSet c(n);
  for (Elem a = 0; a < n; ++a) {
    bool central = true;
    for (Elem b = 0; b < n && central; ++b) central = r.mul(a, b) == r.mul(b, a);
    if (central) c.insert(a);
  }
  return c;
}

ElementSet idempotents(const FiniteRing& r) {
  ElementSet s(r.order());
  for (Elem a = 0; a < r.order(); ++a)
    if (r.mul(a, a) == a) s.insert(a);
  return s;
}

ElementSet additive_closure(const FiniteRing& r, const ElementSet& generators) {
  const std::size_t n = r.order();
  ElementSet h(n);
  h.insert(r.zero());
  std::vector<Elem> members{r.zero()};
  generators.for_each([&](Elem g) {
    if (h.contains(g)) return;
    // H <- H + <g>, walking cosets h + kg until they fall back into H.
    const std::vector<Elem> base = members;
    Elem step = g;
    while (!h.contains(step)) {
      for (Elem x : base) {
        const Elem y = r.add(x, step);
        if (h.insert(y)) members.push_back(y);
      }
      step = r.add(step, g);
    }
  });
  return h;
}

std::optional<std::uint64_t> potency_exponent(const FiniteRing& r, Elem a) {
  r.require_element(a);
  Elem x = a;
  for (std::uint64_t m = 2; m <= r.order() + 1; ++m) {
    x = r.mul(x, a);
    if (x == a) return m;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> element_nilpotency_index(const FiniteRing& r, Elem a) {
  r.require_element(a);
  Elem x = a;
  for (std::uint64_t t = 1; t <= r.order(); ++t) {
    if (x == r.zero()) return t;
    x = r.mul(x, a);
  }
  return std::nullopt;
}

PotentDecomposition potent_decomposition(const FiniteRing& r, Elem a) {
  const PeriodicityWitness cyc = power_cycle(r, a);
  PotentDecomposition d;
  d.p = r.pow(a, cyc.n + 1);
  d.w = r.sub(a, d.p);
  if (r.pow(d.p, cyc.potent_power) != d.p)
    throw std::logic_error("potent part fails p^(1+l-k) = p");
  if (r.pow(d.w, cyc.n) != r.zero()) throw std::logic_error("nilpotent part fails w^n = 0");
  if (r.mul(d.p, d.w) != r.mul(d.w, d.p)) throw std::logic_error("parts do not commute");
  d.potency_exponent = *potency_exponent(r, d.p);
  d.nilpotency_index = *element_nilpotency_index(r, d.w);
  d.commutes = true;
  return d;
}

}  // namespace ringlab
