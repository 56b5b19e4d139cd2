#include "ringlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

namespace ringlab {

namespace {

std::size_t checked_order(const std::vector<std::size_t>& factors, std::size_t max_order,
                          const char* what) {
  std::size_t n = 1;
  for (std::size_t f : factors) {
    if (f != 0 && n > max_order / f + 1) {
      throw RingError(std::string(what) + ": order exceeds cap " + std::to_string(max_order));
    }
    n *= f;
  }
  if (n > max_order)
    throw RingError(std::string(what) + ": order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_order));
  return n;
}

/// Mixed-radix codec, first digit most significant.
struct Codec {
  std::vector<std::size_t> radix;

  std::size_t size() const {
    std::size_t n = 1;
    for (std::size_t r : radix) n *= r;
    return n;
  }
  void decode(std::size_t idx, Elem* out) const {
    for (std::size_t i = radix.size(); i-- > 0;) {
      out[i] = static_cast<Elem>(idx % radix[i]);
      idx /= radix[i];
    }
  }
  Elem encode(const Elem* d) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) idx = idx * radix[i] + d[i];
    return static_cast<Elem>(idx);
  }
  /// Flat table of all decoded tuples.
  std::vector<Elem> all_digits() const {
    const std::size_t n = size(), len = radix.size();
    std::vector<Elem> out(n * len);
    for (std::size_t i = 0; i < n; ++i) decode(i, out.data() + i * len);
    return out;
  }
};

/// Builds a ring on tuples. combine_add/combine_mul write the result digits.
template <class AddF, class MulF>
FiniteRing build_tuple_ring(const Codec& codec, const std::vector<Elem>& one_digits,
                            AddF&& combine_add, MulF&& combine_mul,
                            std::vector<std::string> labels) {
  const std::size_t n = codec.size(), len = codec.radix.size();
  const auto digits = codec.all_digits();
  std::vector<Elem> add(n * n), mul(n * n), out(len);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem* da = digits.data() + a * len;
    for (std::size_t b = 0; b < n; ++b) {
      const Elem* db = digits.data() + b * len;
      combine_add(da, db, out.data());
      add[a * n + b] = codec.encode(out.data());
      combine_mul(da, db, out.data());
      mul[a * n + b] = codec.encode(out.data());
    }
  }
  return FiniteRing::from_trusted_tables(n, std::move(add), std::move(mul),
                                         codec.encode(one_digits.data()), std::move(labels));
}

std::vector<std::string> tuple_labels(const Codec& codec,
                                      const std::vector<const FiniteRing*>& rings,
                                      const std::vector<const BimoduleSpec*>& modules,
                                      std::size_t row_len, char open, char close) {
  // rings[i] or modules[i] labels digit i.
  const std::size_t n = codec.size(), len = codec.radix.size();
  if (n > 4096) return {};
  std::vector<std::string> labels(n);
  std::vector<Elem> d(len);
  for (std::size_t i = 0; i < n; ++i) {
    codec.decode(i, d.data());
    std::string s(1, open);
    for (std::size_t j = 0; j < len; ++j) {
      if (j) s += (row_len && j % row_len == 0) ? ";" : ",";
      s += rings[j] ? rings[j]->label(d[j]) : modules[j]->label(d[j]);
    }
    s += close;
    labels[i] = std::move(s);
  }
  return labels;
}

std::vector<std::string> uniform_labels(const Codec& codec, const FiniteRing& r,
                                        std::size_t row_len) {
  std::vector<const FiniteRing*> rings(codec.radix.size(), &r);
  std::vector<const BimoduleSpec*> mods(codec.radix.size(), nullptr);
  return tuple_labels(codec, rings, mods, row_len, '[', ']');
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Poly = std::vector<std::size_t>;  // c_0 .. c_deg

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of f modulo monic g over Z_p.
Poly poly_mod(Poly f, const Poly& g, std::size_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const std::size_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = (f[shift + i] + p - (lead * g[i]) % p) % p;
    trim(f);
  }
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// Endomorphisms and bimodules

bool RingEndomorphism::is_identity() const {
  for (Elem a = 0; a < map.size(); ++a)
    if (map[a] != a) return false;
  return true;
}

std::vector<AxiomViolation> RingEndomorphism::violations() const {
  std::vector<AxiomViolation> out;
  const std::size_t n = ring.order();
  if (map.size() != n) {
    out.push_back({"map size does not match ring order", {}});
    return out;
  }
  for (Elem x : map)
    if (x >= n) {
      out.push_back({"map entry out of range", {x}});
      return out;
    }
  if (map[ring.zero()] != ring.zero()) out.push_back({"map(0) != 0", {}});
  if (map[ring.one()] != ring.one()) out.push_back({"map(1) != 1", {}});
  bool add_ok = true, mul_ok = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (add_ok && map[ring.add(a, b)] != ring.add(map[a], map[b])) {
        out.push_back({"map not additive", {a, b}});
        add_ok = false;
      }
      if (mul_ok && map[ring.mul(a, b)] != ring.mul(map[a], map[b])) {
        out.push_back({"map not multiplicative", {a, b}});
        mul_ok = false;
      }
    }
  return out;
}

RingEndomorphism RingEndomorphism::compose(const RingEndomorphism& inner) const {
  require_same_ring(ring, inner.ring, "compose");
  RingEndomorphism out{ring, std::vector<Elem>(map.size())};
  for (Elem a = 0; a < map.size(); ++a) out.map[a] = map[inner.map[a]];
  return out;
}

RingEndomorphism RingEndomorphism::power(std::size_t k) const {
  RingEndomorphism out = identity_endomorphism(ring);
  for (std::size_t i = 0; i < k; ++i) out = compose(out);
  return out;
}

RingEndomorphism identity_endomorphism(const FiniteRing& r) {
  RingEndomorphism e{r, std::vector<Elem>(r.order())};
  for (Elem a = 0; a < r.order(); ++a) e.map[a] = a;
  return e;
}

Elem BimoduleSpec::negate(Elem m) const {
  for (Elem x = 0; x < order; ++x)
    if (plus(m, x) == 0) return x;
  throw RingError("module element has no negative");
}

std::vector<AxiomViolation> bimodule_violations(const FiniteRing& L, const BimoduleSpec& M,
                                                const FiniteRing& R) {
  std::vector<AxiomViolation> out;
  const auto m = static_cast<Elem>(M.order);
  const auto nl = static_cast<Elem>(L.order()), nr = static_cast<Elem>(R.order());
  if (M.add.size() != M.order * M.order || M.left_order != L.order() ||
      M.right_order != R.order() || M.left_action.size() != L.order() * M.order ||
      M.right_action.size() != M.order * R.order()) {
    out.push_back({"bimodule table shapes do not match rings", {}});
    return out;
  }
  for (Elem x : M.add)
    if (x >= m) return {{"module add entry out of range", {x}}};
  for (Elem x : M.left_action)
    if (x >= m) return {{"left action entry out of range", {x}}};
  for (Elem x : M.right_action)
    if (x >= m) return {{"right action entry out of range", {x}}};

  auto first = [&](const char* name, auto&& bad, Elem n1, Elem n2, Elem n3) {
    for (Elem a = 0; a < n1; ++a)
      for (Elem b = 0; b < n2; ++b)
        for (Elem c = 0; c < n3; ++c)
          if (bad(a, b, c)) {
            out.push_back({name, {a, b, c}});
            return;
          }
  };
  first("module zero not identity", [&](Elem x, Elem, Elem) { return M.plus(0, x) != x || M.plus(x, 0) != x; }, m, 1, 1);
  first("module add not commutative", [&](Elem x, Elem y, Elem) { return M.plus(x, y) != M.plus(y, x); }, m, m, 1);
  first("module add not associative",
        [&](Elem x, Elem y, Elem z) { return M.plus(M.plus(x, y), z) != M.plus(x, M.plus(y, z)); }, m, m, m);
  first("module missing negative", [&](Elem x, Elem, Elem) {
    for (Elem y = 0; y < m; ++y)
      if (M.plus(x, y) == 0) return false;
    return true;
  }, m, 1, 1);
  first("left action not unital", [&](Elem x, Elem, Elem) { return M.left(L.one(), x) != x; }, m, 1, 1);
  first("right action not unital", [&](Elem x, Elem, Elem) { return M.right(x, R.one()) != x; }, m, 1, 1);
  first("left action not additive in ring",
        [&](Elem a, Elem b, Elem x) { return M.left(L.add(a, b), x) != M.plus(M.left(a, x), M.left(b, x)); }, nl, nl, m);
  first("left action not additive in module",
        [&](Elem a, Elem x, Elem y) { return M.left(a, M.plus(x, y)) != M.plus(M.left(a, x), M.left(a, y)); }, nl, m, m);
  first("left action not associative",
        [&](Elem a, Elem b, Elem x) { return M.left(L.mul(a, b), x) != M.left(a, M.left(b, x)); }, nl, nl, m);
  first("right action not additive in ring",
        [&](Elem x, Elem a, Elem b) { return M.right(x, R.add(a, b)) != M.plus(M.right(x, a), M.right(x, b)); }, m, nr, nr);
  first("right action not additive in module",
        [&](Elem x, Elem y, Elem a) { return M.right(M.plus(x, y), a) != M.plus(M.right(x, a), M.right(y, a)); }, m, m, nr);
  first("right action not associative",
        [&](Elem x, Elem a, Elem b) { return M.right(x, R.mul(a, b)) != M.right(M.right(x, a), b); }, m, nr, nr);
  first("actions do not commute",
        [&](Elem a, Elem x, Elem b) { return M.right(M.left(a, x), b) != M.left(a, M.right(x, b)); }, nl, m, nr);
  return out;
}

BimoduleSpec regular_bimodule(const FiniteRing& r) {
  const std::size_t n = r.order();
  BimoduleSpec m;
  m.order = m.left_order = m.right_order = n;
  m.add.assign(r.add_table().begin(), r.add_table().end());
  m.left_action.assign(r.mul_table().begin(), r.mul_table().end());
  m.right_action.assign(r.mul_table().begin(), r.mul_table().end());
  m.labels = r.labels();
  return m;
}

BimoduleSpec zero_bimodule(const FiniteRing& left, const FiniteRing& right) {
  BimoduleSpec m;
  m.order = 1;
  m.left_order = left.order();
  m.right_order = right.order();
  m.add = {0};
  m.left_action.assign(left.order(), 0);
  m.right_action.assign(right.order(), 0);
  return m;
}

BimoduleSpec ideal_bimodule(const FiniteRing& r, const ElementSet& members) {
  const auto elems = members.members();
  if (elems.empty() || elems[0] != r.zero()) throw RingError("ideal bimodule: zero missing");
  std::vector<std::int64_t> index(r.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<std::int64_t>(i);
  auto at = [&](Elem x) {
    if (index[x] < 0) throw RingError("ideal bimodule: member set is not a two-sided ideal");
    return static_cast<Elem>(index[x]);
  };
  BimoduleSpec m;
  const std::size_t k = elems.size(), n = r.order();
  m.order = k;
  m.left_order = m.right_order = n;
  m.add.resize(k * k);
  m.left_action.resize(n * k);
  m.right_action.resize(k * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m.add[i * k + j] = at(r.add(elems[i], elems[j]));
  for (Elem a = 0; a < n; ++a)
    for (std::size_t i = 0; i < k; ++i) {
      m.left_action[a * k + i] = at(r.mul(a, elems[i]));
      m.right_action[i * n + a] = at(r.mul(elems[i], a));
    }
  for (Elem x : elems) m.labels.push_back(r.label(x));
  return m;
}

BimoduleSpec bimodule_via_maps(const FiniteRing& left, const FiniteRing& s,
                               const FiniteRing& right, const std::vector<Elem>& to_left,
                               const std::vector<Elem>& to_right) {
  if (to_left.size() != left.order() || to_right.size() != right.order())
    throw RingError("bimodule_via_maps: map sizes do not match rings");
  BimoduleSpec m;
  const std::size_t k = s.order();
  m.order = k;
  m.left_order = left.order();
  m.right_order = right.order();
  m.add.assign(s.add_table().begin(), s.add_table().end());
  m.left_action.resize(left.order() * k);
  m.right_action.resize(k * right.order());
  for (Elem a = 0; a < left.order(); ++a)
    for (Elem x = 0; x < k; ++x) m.left_action[a * k + x] = s.mul(to_left[a], x);
  for (Elem x = 0; x < k; ++x)
    for (Elem b = 0; b < right.order(); ++b)
      m.right_action[x * right.order() + b] = s.mul(x, to_right[b]);
  m.labels = s.labels();
  return m;
}

// ---------------------------------------------------------------------------
// Morita contexts

std::vector<AxiomViolation> morita_violations(const MoritaContextSpec& c) {
  std::vector<AxiomViolation> out;
  for (auto& v : bimodule_violations(c.a, c.n, c.b))
    out.push_back({"N (A-B bimodule): " + v.axiom, v.witness});
  for (auto& v : bimodule_violations(c.b, c.m, c.a))
    out.push_back({"M (B-A bimodule): " + v.axiom, v.witness});
  if (!out.empty()) return out;
  const auto nn = static_cast<Elem>(c.n.order), nm = static_cast<Elem>(c.m.order);
  const auto na = static_cast<Elem>(c.a.order()), nb = static_cast<Elem>(c.b.order());
  if (c.psi.size() != c.n.order * c.m.order || c.phi.size() != c.m.order * c.n.order)
    return {{"pairing table shapes do not match modules", {}}};
  for (Elem x : c.psi)
    if (x >= na) return {{"psi entry out of range", {x}}};
  for (Elem x : c.phi)
    if (x >= nb) return {{"phi entry out of range", {x}}};

  const FiniteRing& A = c.a;
  const FiniteRing& B = c.b;
  auto first = [&](const char* name, auto&& bad, Elem n1, Elem n2, Elem n3) {
    for (Elem x = 0; x < n1; ++x)
      for (Elem y = 0; y < n2; ++y)
        for (Elem z = 0; z < n3; ++z)
          if (bad(x, y, z)) {
            out.push_back({name, {x, y, z}});
            return;
          }
  };
  // psi: N x M -> A
  first("psi not additive in N", [&](Elem n1, Elem n2, Elem m) {
    return c.psi_of(c.n.plus(n1, n2), m) != A.add(c.psi_of(n1, m), c.psi_of(n2, m)); }, nn, nn, nm);
  first("psi not additive in M", [&](Elem n, Elem m1, Elem m2) {
    return c.psi_of(n, c.m.plus(m1, m2)) != A.add(c.psi_of(n, m1), c.psi_of(n, m2)); }, nn, nm, nm);
  first("psi not balanced over B", [&](Elem n, Elem b, Elem m) {
    return c.psi_of(c.n.right(n, b), m) != c.psi_of(n, c.m.left(b, m)); }, nn, nb, nm);
  first("psi not left A-linear", [&](Elem a, Elem n, Elem m) {
    return c.psi_of(c.n.left(a, n), m) != A.mul(a, c.psi_of(n, m)); }, na, nn, nm);
  first("psi not right A-linear", [&](Elem n, Elem m, Elem a) {
    return c.psi_of(n, c.m.right(m, a)) != A.mul(c.psi_of(n, m), a); }, nn, nm, na);
  // phi: M x N -> B
  first("phi not additive in M", [&](Elem m1, Elem m2, Elem n) {
    return c.phi_of(c.m.plus(m1, m2), n) != B.add(c.phi_of(m1, n), c.phi_of(m2, n)); }, nm, nm, nn);
  first("phi not additive in N", [&](Elem m, Elem n1, Elem n2) {
    return c.phi_of(m, c.n.plus(n1, n2)) != B.add(c.phi_of(m, n1), c.phi_of(m, n2)); }, nm, nn, nn);
  first("phi not balanced over A", [&](Elem m, Elem a, Elem n) {
    return c.phi_of(c.m.right(m, a), n) != c.phi_of(m, c.n.left(a, n)); }, nm, na, nn);
  first("phi not left B-linear", [&](Elem b, Elem m, Elem n) {
    return c.phi_of(c.m.left(b, m), n) != B.mul(b, c.phi_of(m, n)); }, nb, nm, nn);
  first("phi not right B-linear", [&](Elem m, Elem n, Elem b) {
    return c.phi_of(m, c.n.right(n, b)) != B.mul(c.phi_of(m, n), b); }, nm, nn, nb);
  // psi(n, m) n' = n phi(m, n')  and  phi(m, n) m' = m psi(n, m')
  for (Elem n = 0; n < nn; ++n)
    for (Elem m = 0; m < nm; ++m)
      for (Elem n2 = 0; n2 < nn; ++n2)
        if (c.n.left(c.psi_of(n, m), n2) != c.n.right(n, c.phi_of(m, n2))) {
          out.push_back({"associativity psi(n,m)n' = n phi(m,n') fails", {n, m, n2}});
          goto second;
        }
second:
  for (Elem m = 0; m < nm; ++m)
    for (Elem n = 0; n < nn; ++n)
      for (Elem m2 = 0; m2 < nm; ++m2)
        if (c.m.left(c.phi_of(m, n), m2) != c.m.right(m, c.psi_of(n, m2))) {
          out.push_back({"associativity phi(m,n)m' = m psi(n,m') fails", {m, n, m2}});
          return out;
        }
  return out;
}

MoritaContextSpec generalized_matrix_context(const FiniteRing& r, Elem s) {
  r.require_element(s);
  MoritaContextSpec c{r, r, regular_bimodule(r), regular_bimodule(r), {}, {}};
  const std::size_t n = r.order();
  c.psi.resize(n * n);
  c.phi.resize(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      c.psi[x * n + y] = r.mul(s, r.mul(x, y));  // s n m
      c.phi[x * n + y] = r.mul(s, r.mul(x, y));  // s m n
    }
  return c;
}

MoritaContextSpec ideal_context(const FiniteRing& r, const ElementSet& n_members,
                                const ElementSet& m_members) {
  MoritaContextSpec c{r, r, ideal_bimodule(r, m_members), ideal_bimodule(r, n_members), {}, {}};
  const auto ns = n_members.members(), ms = m_members.members();
  c.psi.resize(ns.size() * ms.size());
  c.phi.resize(ms.size() * ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) {
      c.psi[i * ms.size() + j] = r.mul(ns[i], ms[j]);
      c.phi[j * ns.size() + i] = r.mul(ms[j], ns[i]);
    }
  return c;
}

MoritaContextSpec triangular_context(const FiniteRing& a, const BimoduleSpec& n,
                                     const FiniteRing& b) {
  MoritaContextSpec c{a, b, zero_bimodule(b, a), n, {}, {}};
  c.psi.assign(n.order, 0);
  c.phi.assign(n.order, 0);
  return c;
}

MoritaContextSpec diagonal_block_context(const FiniteRing& r) {
  const std::size_t n = r.order();
  const FiniteRing d = direct_product(direct_product(r, r), r);
  auto part = [n](Elem x, int i) -> Elem {
    if (i == 0) return static_cast<Elem>(x / (n * n));
    if (i == 1) return static_cast<Elem>((x / n) % n);
    return static_cast<Elem>(x % n);
  };
  const std::size_t dn = d.order();
  BimoduleSpec m;  // B-A
  m.order = n;
  m.left_order = m.right_order = dn;
  m.add.assign(r.add_table().begin(), r.add_table().end());
  m.left_action.resize(dn * n);
  m.right_action.resize(n * dn);
  for (Elem x = 0; x < dn; ++x)
    for (Elem v = 0; v < n; ++v) {
      m.left_action[x * n + v] = r.mul(part(x, 2), v);
      m.right_action[v * dn + x] = r.mul(v, part(x, 1));
    }
  BimoduleSpec nn;  // A-B
  nn.order = n * n;
  nn.left_order = nn.right_order = dn;
  nn.add.resize(n * n * n * n);
  for (Elem u = 0; u < n * n; ++u)
    for (Elem v = 0; v < n * n; ++v)
      nn.add[u * n * n + v] = static_cast<Elem>(r.add(u / n, v / n) * n + r.add(u % n, v % n));
  nn.left_action.resize(dn * n * n);
  nn.right_action.resize(n * n * dn);
  for (Elem x = 0; x < dn; ++x)
    for (Elem u = 0; u < n * n; ++u) {
      const Elem u1 = static_cast<Elem>(u / n), u2 = static_cast<Elem>(u % n);
      nn.left_action[x * n * n + u] = static_cast<Elem>(r.mul(part(x, 2), u1) * n + r.mul(part(x, 2), u2));
      nn.right_action[u * dn + x] = static_cast<Elem>(r.mul(u1, part(x, 0)) * n + r.mul(u2, part(x, 1)));
    }
  MoritaContextSpec c{d, d, std::move(m), std::move(nn), {}, {}};
  c.psi.assign(c.n.order * c.m.order, 0);
  c.phi.assign(c.m.order * c.n.order, 0);
  return c;
}

ElementSet psi_image(const MoritaContextSpec& spec) {
  ElementSet gens(spec.a.order());
  for (Elem x : spec.psi) gens.insert(x);
  return additive_closure(spec.a, gens);
}

ElementSet phi_image(const MoritaContextSpec& spec) {
  ElementSet gens(spec.b.order());
  for (Elem x : spec.phi) gens.insert(x);
  return additive_closure(spec.b, gens);
}

// ---------------------------------------------------------------------------
// Basic rings

FiniteRing zmod(std::size_t n, const ConstructOptions& opts) {
  if (n == 0) throw RingError("zmod: modulus must be at least 1");
  checked_order({n}, opts.max_order, "zmod");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  return FiniteRing::from_trusted_tables(n, std::move(add), std::move(mul),
                                         static_cast<Elem>(1 % n));
}

bool is_irreducible_mod_p(const std::vector<std::size_t>& poly, std::size_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  // Any reducible f has a monic factor of degree d <= deg / 2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t v = 0; v < count; ++v) {
      Poly g(d + 1, 0);
      std::size_t t = v;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::size_t> least_irreducible(std::size_t p, std::size_t k) {
  if (!is_prime(p)) throw RingError("least_irreducible: p must be prime");
  if (k == 0) throw RingError("least_irreducible: degree must be at least 1");
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= p;
  for (std::size_t v = 0; v < count; ++v) {
    Poly f(k + 1, 0);
    std::size_t t = v;
    for (std::size_t i = 0; i < k; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[k] = 1;
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw RingError("least_irreducible: none found");
}

FiniteRing galois_field(std::size_t p, std::size_t k,
                        const std::optional<std::vector<std::size_t>>& poly,
                        const ConstructOptions& opts) {
  if (!is_prime(p)) throw RingError("galois_field: " + std::to_string(p) + " is not prime");
  if (k == 0) throw RingError("galois_field: degree must be at least 1");
  const std::size_t q = checked_order(std::vector<std::size_t>(k, p), opts.max_order, "galois_field");
  Poly f;
  if (poly) {
    f = *poly;
    if (f.size() != k + 1 || f[k] != 1)
      throw RingError("galois_field: polynomial must be monic of degree " + std::to_string(k));
    for (std::size_t c : f)
      if (c >= p) throw RingError("galois_field: coefficient out of range");
    if (!is_irreducible_mod_p(f, p)) throw RingError("galois_field: polynomial is reducible");
  } else {
    f = least_irreducible(p, k);
  }
  auto coeffs = [&](std::size_t idx) {
    Poly c(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return c;
  };
  auto index_of = [&](const Poly& c) {
    std::size_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
    return static_cast<Elem>(idx);
  };
  std::vector<Poly> all(q);
  for (std::size_t i = 0; i < q; ++i) all[i] = coeffs(i);
  std::vector<Elem> add(q * q), mul(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Poly s(k);
      for (std::size_t i = 0; i < k; ++i) s[i] = (all[a][i] + all[b][i]) % p;
      add[a * q + b] = index_of(s);
      Poly prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + all[a][i] * all[b][j]) % p;
      Poly rem = poly_mod(prod, f, p);
      rem.resize(k, 0);
      mul[a * q + b] = index_of(rem);
    }
  std::vector<std::string> labels;
  if (k > 1) {
    labels.resize(q);
    for (std::size_t i = 0; i < q; ++i) {
      std::string s;
      for (std::size_t d = k; d-- > 0;) {
        const std::size_t c = all[i][d];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (d == 0) {
          s += std::to_string(c);
        } else {
          if (c != 1) s += std::to_string(c);
          s += d == 1 ? "x" : "x^" + std::to_string(d);
        }
      }
      labels[i] = s.empty() ? "0" : s;
    }
  }
  return FiniteRing::from_trusted_tables(q, std::move(add), std::move(mul), 1, std::move(labels));
}

FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s, const ConstructOptions& opts) {
  checked_order({r.order(), s.order()}, opts.max_order, "direct_product");
  Codec codec{{r.order(), s.order()}};
  std::vector<const FiniteRing*> rings{&r, &s};
  auto labels = tuple_labels(codec, rings, {nullptr, nullptr}, 0, '(', ')');
  return build_tuple_ring(
      codec, {r.one(), s.one()},
      [&](const Elem* x, const Elem* y, Elem* o) {
        o[0] = r.add(x[0], y[0]);
        o[1] = s.add(x[1], y[1]);
      },
      [&](const Elem* x, const Elem* y, Elem* o) {
        o[0] = r.mul(x[0], y[0]);
        o[1] = s.mul(x[1], y[1]);
      },
      std::move(labels));
}

FiniteRing matrix_ring(const FiniteRing& r, std::size_t k, const ConstructOptions& opts) {
  if (k == 0) throw RingError("matrix_ring: size must be at least 1");
  checked_order(std::vector<std::size_t>(k * k, r.order()), opts.max_order, "matrix_ring");
  Codec codec{std::vector<std::size_t>(k * k, r.order())};
  std::vector<Elem> one(k * k, r.zero());
  for (std::size_t i = 0; i < k; ++i) one[i * k + i] = r.one();
  return build_tuple_ring(
      codec, one,
      [&](const Elem* x, const Elem* y, Elem* o) {
        for (std::size_t i = 0; i < k * k; ++i) o[i] = r.add(x[i], y[i]);
      },
      [&](const Elem* x, const Elem* y, Elem* o) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) {
            Elem acc = r.zero();
            for (std::size_t l = 0; l < k; ++l) acc = r.add(acc, r.mul(x[i * k + l], y[l * k + j]));
            o[i * k + j] = acc;
          }
      },
      uniform_labels(codec, r, k));
}

FiniteRing triangular_matrix_ring(const RingEndomorphism& alpha, std::size_t n,
                                  const ConstructOptions& opts) {
  if (n == 0) throw RingError("triangular_matrix_ring: size must be at least 1");
  if (auto v = alpha.violations(); !v.empty())
    throw RingError("triangular_matrix_ring: alpha is not an endomorphism: " + v[0].describe());
  const FiniteRing& r = alpha.ring;
  const std::size_t slots = n * (n + 1) / 2;
  checked_order(std::vector<std::size_t>(slots, r.order()), opts.max_order,
                "triangular_matrix_ring");
  std::vector<std::vector<std::int64_t>> pos(n, std::vector<std::int64_t>(n, -1));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pos[i][j] = static_cast<std::int64_t>(idx++);
  std::vector<RingEndomorphism> powers;
  for (std::size_t t = 0; t < n; ++t) powers.push_back(alpha.power(t));
  Codec codec{std::vector<std::size_t>(slots, r.order())};
  std::vector<Elem> one(slots, r.zero());
  for (std::size_t i = 0; i < n; ++i) one[pos[i][i]] = r.one();
  return build_tuple_ring(
      codec, one,
      [&](const Elem* x, const Elem* y, Elem* o) {
        for (std::size_t i = 0; i < slots; ++i) o[i] = r.add(x[i], y[i]);
      },
      [&](const Elem* x, const Elem* y, Elem* o) {
        // c_ij = sum_{k=i}^{j} a_ik alpha^{k-i}(b_kj)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j) {
            Elem acc = r.zero();
            for (std::size_t k = i; k <= j; ++k)
              acc = r.add(acc, r.mul(x[pos[i][k]], powers[k - i](y[pos[k][j]])));
            o[pos[i][j]] = acc;
          }
      },
      uniform_labels(codec, r, 0));
}

FiniteRing triangular_matrix_ring(const FiniteRing& r, std::size_t n, const ConstructOptions& opts) {
  return triangular_matrix_ring(identity_endomorphism(r), n, opts);
}

FiniteRing truncated_skew_power_series(const RingEndomorphism& alpha, std::size_t n,
                                       const ConstructOptions& opts) {
  if (n == 0) throw RingError("truncated_skew_power_series: n must be at least 1");
  if (auto v = alpha.violations(); !v.empty())
    throw RingError("truncated_skew_power_series: alpha is not an endomorphism: " + v[0].describe());
  const FiniteRing& r = alpha.ring;
  checked_order(std::vector<std::size_t>(n, r.order()), opts.max_order,
                "truncated_skew_power_series");
  std::vector<RingEndomorphism> powers;
  for (std::size_t t = 0; t < n; ++t) powers.push_back(alpha.power(t));
  Codec codec{std::vector<std::size_t>(n, r.order())};
  std::vector<Elem> one(n, r.zero());
  one[0] = r.one();
  return build_tuple_ring(
      codec, one,
      [&](const Elem* x, const Elem* y, Elem* o) {
        for (std::size_t i = 0; i < n; ++i) o[i] = r.add(x[i], y[i]);
      },
      [&](const Elem* x, const Elem* y, Elem* o) {
        // (a_i x^i)(b_j x^j) = a_i alpha^i(b_j) x^{i+j}
        for (std::size_t t = 0; t < n; ++t) o[t] = r.zero();
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; i + j < n; ++j)
            o[i + j] = r.add(o[i + j], r.mul(x[i], powers[i](y[j])));
      },
      uniform_labels(codec, r, 0));
}

FiniteRing truncated_power_series(const FiniteRing& r, std::size_t n, const ConstructOptions& opts) {
  return truncated_skew_power_series(identity_endomorphism(r), n, opts);
}

FiniteRing generalized_matrix(const FiniteRing& r, Elem s, const ConstructOptions& opts) {
  r.require_element(s);
  for (Elem x = 0; x < r.order(); ++x)
    if (r.mul(s, x) != r.mul(x, s)) throw RingError("generalized_matrix: s is not central");
  checked_order({r.order(), r.order(), r.order(), r.order()}, opts.max_order,
                "generalized_matrix");
  Codec codec{{r.order(), r.order(), r.order(), r.order()}};
  return build_tuple_ring(
      codec, {r.one(), r.zero(), r.zero(), r.one()},
      [&](const Elem* x, const Elem* y, Elem* o) {
        for (int i = 0; i < 4; ++i) o[i] = r.add(x[i], y[i]);
      },
      [&](const Elem* x, const Elem* y, Elem* o) {
        // [[a,b],[c,d]][[a',b'],[c',d']] = [[aa'+sbc', ab'+bd'], [ca'+dc', scb'+dd']]
        o[0] = r.add(r.mul(x[0], y[0]), r.mul(s, r.mul(x[1], y[2])));
        o[1] = r.add(r.mul(x[0], y[1]), r.mul(x[1], y[3]));
        o[2] = r.add(r.mul(x[2], y[0]), r.mul(x[3], y[2]));
        o[3] = r.add(r.mul(s, r.mul(x[2], y[1])), r.mul(x[3], y[3]));
      },
      uniform_labels(codec, r, 2));
}

FiniteRing morita_ring(const MoritaContextSpec& c, const ConstructOptions& opts) {
  if (auto v = morita_violations(c); !v.empty()) {
    std::string msg = "morita_ring: invalid context: ";
    for (std::size_t i = 0; i < v.size(); ++i) msg += (i ? "; " : "") + v[i].describe();
    throw RingError(msg);
  }
  checked_order({c.a.order(), c.n.order, c.m.order, c.b.order()}, opts.max_order, "morita_ring");
  Codec codec{{c.a.order(), c.n.order, c.m.order, c.b.order()}};
  const FiniteRing& A = c.a;
  const FiniteRing& B = c.b;
  std::vector<const FiniteRing*> rings{&A, nullptr, nullptr, &B};
  std::vector<const BimoduleSpec*> mods{nullptr, &c.n, &c.m, nullptr};
  auto labels = tuple_labels(codec, rings, mods, 2, '[', ']');
  return build_tuple_ring(
      codec, {A.one(), 0, 0, B.one()},
      [&](const Elem* x, const Elem* y, Elem* o) {
        o[0] = A.add(x[0], y[0]);
        o[1] = c.n.plus(x[1], y[1]);
        o[2] = c.m.plus(x[2], y[2]);
        o[3] = B.add(x[3], y[3]);
      },
      [&](const Elem* x, const Elem* y, Elem* o) {
        // (a, n, m, b) for [[a, n], [m, b]]
        o[0] = A.add(A.mul(x[0], y[0]), c.psi_of(x[1], y[2]));
        o[1] = c.n.plus(c.n.left(x[0], y[1]), c.n.right(x[1], y[3]));
        o[2] = c.m.plus(c.m.right(x[2], y[0]), c.m.left(x[3], y[2]));
        o[3] = B.add(c.phi_of(x[2], y[1]), B.mul(x[3], y[3]));
      },
      std::move(labels));
}

FiniteRing trivial_extension(const FiniteRing& r, const BimoduleSpec& m, const ConstructOptions& opts) {
  if (auto v = bimodule_violations(r, m, r); !v.empty())
    throw RingError("trivial_extension: invalid bimodule: " + v[0].describe());
  checked_order({r.order(), m.order}, opts.max_order, "trivial_extension");
  Codec codec{{r.order(), m.order}};
  auto labels = tuple_labels(codec, {&r, nullptr}, {nullptr, &m}, 0, '(', ')');
  return build_tuple_ring(
      codec, {r.one(), 0},
      [&](const Elem* x, const Elem* y, Elem* o) {
        o[0] = r.add(x[0], y[0]);
        o[1] = m.plus(x[1], y[1]);
      },
      [&](const Elem* x, const Elem* y, Elem* o) {
        // (r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 r2)
        o[0] = r.mul(x[0], y[0]);
        o[1] = m.plus(m.left(x[0], y[1]), m.right(x[1], y[0]));
      },
      std::move(labels));
}

FiniteRing opposite_ring(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<Elem> add(r.add_table().begin(), r.add_table().end());
  std::vector<Elem> mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) mul[a * n + b] = r.mul(b, a);
  return FiniteRing::from_trusted_tables(n, std::move(add), std::move(mul), r.one(), r.labels());
}

FiniteRing matrix_subring(const FiniteRing& r, std::size_t k,
                          const std::vector<std::vector<Elem>>& mats, const ConstructOptions& opts) {
  const std::size_t n = mats.size();
  checked_order({n}, opts.max_order, "matrix_subring");
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (mats[i].size() != k * k) throw RingError("matrix_subring: wrong matrix size");
    if (!index.emplace(mats[i], static_cast<Elem>(i)).second)
      throw RingError("matrix_subring: duplicate matrix");
  }
  std::vector<Elem> zero(k * k, r.zero()), ident(k * k, r.zero());
  for (std::size_t i = 0; i < k; ++i) ident[i * k + i] = r.one();
  if (n == 0 || mats[0] != zero) throw RingError("matrix_subring: zero matrix must come first");
  auto one_it = index.find(ident);
  if (one_it == index.end()) throw RingError("matrix_subring: identity missing");
  auto lookup = [&](const std::vector<Elem>& m) {
    auto it = index.find(m);
    if (it == index.end()) throw RingError("matrix_subring: set not closed");
    return it->second;
  };
  std::vector<Elem> add(n * n), mul(n * n), tmp(k * k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k * k; ++i) tmp[i] = r.add(mats[a][i], mats[b][i]);
      add[a * n + b] = lookup(tmp);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Elem acc = r.zero();
          for (std::size_t l = 0; l < k; ++l) acc = r.add(acc, r.mul(mats[a][i * k + l], mats[b][l * k + j]));
          tmp[i * k + j] = acc;
        }
      mul[a * n + b] = lookup(tmp);
    }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = "[";
    for (std::size_t j = 0; j < k * k; ++j) {
      if (j) s += (j % k == 0) ? ";" : ",";
      s += r.label(mats[i][j]);
    }
    labels[i] = s + "]";
  }
  return FiniteRing::from_trusted_tables(n, std::move(add), std::move(mul), one_it->second,
                                         std::move(labels));
}

// ---------------------------------------------------------------------------
// Quotients and subrings

QuotientRing quotient(const FiniteRing& r, const IdealSet& ideal) {
  require_same_ring(r, ideal.ring(), "quotient");
  if (ideal.side() != Side::TwoSided || !ideal.is_additive_subgroup() || !ideal.is_left_closed() ||
      !ideal.is_right_closed())
    throw RingError("quotient: ideal is not two-sided");
  const std::size_t n = r.order();
  const auto members = ideal.members().members();
  QuotientRing q;
  q.projection.assign(n, static_cast<Elem>(-1));
  for (Elem a = 0; a < n; ++a) {
    if (q.projection[a] != static_cast<Elem>(-1)) continue;
    const auto id = static_cast<Elem>(q.representatives.size());
    q.representatives.push_back(a);
    for (Elem i : members) q.projection[r.add(a, i)] = id;
  }
  const std::size_t m = q.representatives.size();
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      add[x * m + y] = q.projection[r.add(q.representatives[x], q.representatives[y])];
      mul[x * m + y] = q.projection[r.mul(q.representatives[x], q.representatives[y])];
    }
  std::vector<std::string> labels;
  if (!r.labels().empty())
    for (Elem rep : q.representatives) labels.push_back(r.label(rep) + "+I");
  q.ring = FiniteRing::from_trusted_tables(m, std::move(add), std::move(mul),
                                           q.projection[r.one()], std::move(labels));
  return q;
}

SubringResult subring_generated(const FiniteRing& r, const std::vector<Elem>& generators,
                                bool include_one) {
  const std::size_t n = r.order();
  ElementSet set(n);
  std::vector<Elem> list, queue;
  auto push = [&](Elem x) {
    if (set.insert(x)) {
      list.push_back(x);
      queue.push_back(x);
    }
  };
  push(r.zero());
  for (Elem g : generators) {
    r.require_element(g);
    push(g);
  }
  if (include_one) push(r.one());
  while (!queue.empty()) {
    const Elem x = queue.back();
    queue.pop_back();
    push(r.neg(x));
    const std::size_t count = list.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Elem y = list[i];
      push(r.add(x, y));
      push(r.mul(x, y));
      push(r.mul(y, x));
    }
  }
  SubringResult res;
  res.members = set;
  res.embedding = set.members();
  std::optional<Elem> local_one;
  if (include_one) {
    local_one = r.one();
  } else {
    for (Elem e : res.embedding) {
      bool ok = true;
      for (Elem s : res.embedding) {
        if (r.mul(e, s) != s || r.mul(s, e) != s) {
          ok = false;
          break;
        }
      }
      if (ok) {
        local_one = e;
        break;
      }
    }
  }
  if (!local_one) return res;
  const std::size_t m = res.embedding.size();
  std::vector<Elem> back(n, 0);
  for (std::size_t i = 0; i < m; ++i) back[res.embedding[i]] = static_cast<Elem>(i);
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = back[r.add(res.embedding[i], res.embedding[j])];
      mul[i * m + j] = back[r.mul(res.embedding[i], res.embedding[j])];
    }
  std::vector<std::string> labels;
  if (!r.labels().empty())
    for (Elem x : res.embedding) labels.push_back(r.label(x));
  res.ring = FiniteRing::from_trusted_tables(m, std::move(add), std::move(mul), back[*local_one],
                                             std::move(labels));
  return res;
}

RingEndomorphism frobenius(const FiniteRing& f) {
  const std::size_t n = f.order();
  if (n < 2 || !f.is_commutative()) throw RingError("frobenius: input is not a field");
  const UnitGroup u = units(f);
  if (u.members.size() != n - 1) throw RingError("frobenius: input is not a field");
  std::size_t p = 1;
  for (Elem x = f.one(); x != f.zero(); x = f.add(x, f.one())) ++p;
  if (!is_prime(p)) throw RingError("frobenius: characteristic is not prime");
  RingEndomorphism e{f, std::vector<Elem>(n)};
  for (Elem a = 0; a < n; ++a) e.map[a] = f.pow(a, p);
  return e;
}

std::vector<Elem> constant_diagonal_matrix(std::size_t n, Elem index) {
  const std::size_t strict = n * (n - 1) / 2;
  std::vector<Elem> m(n * n, 0);
  const Elem diag = (index >> strict) & 1u;
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = diag;
  std::size_t bit = strict;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = (index >> --bit) & 1u;
  return m;
}

Elem constant_diagonal_index(std::size_t n, const std::vector<Elem>& m) {
  Elem idx = m[0];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) idx = (idx << 1) | (m[i * n + j] & 1u);
  return idx;
}

FiniteRing constant_diagonal_block(std::size_t n, const ConstructOptions& opts) {
  if (n < 3) throw RingError("constant_diagonal_block: n must be at least 3");
  const std::size_t strict = n * (n - 1) / 2;
  checked_order(std::vector<std::size_t>(strict + 1, 2), opts.max_order, "constant_diagonal_block");
  const FiniteRing z2 = zmod(2);
  std::vector<std::vector<Elem>> mats;
  for (Elem i = 0; i < (Elem{1} << (strict + 1)); ++i) mats.push_back(constant_diagonal_matrix(n, i));
  return matrix_subring(z2, n, mats, opts);
}

FiniteRing gf4_twisted_ring(const ConstructOptions& opts) {
  const FiniteRing f = galois_field(2, 2);
  std::vector<std::vector<Elem>> mats;
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y)
      for (Elem z = 0; z < 4; ++z)
        mats.push_back({x, y, z, 0, f.mul(x, x), 0, 0, 0, x});
  return matrix_subring(f, 3, mats, opts);
}

}  // namespace ringlab
