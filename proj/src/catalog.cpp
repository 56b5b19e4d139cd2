#include "ringlab/catalog.hpp"

namespace ringlab {

namespace {

std::size_t get_size(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<std::int64_t>() < 0)
    throw RingError(std::string("recipe: missing unsigned integer '") + key + "'");
  return j[key].get<std::size_t>();
}

const Json& get_obj(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_object())
    throw RingError(std::string("recipe: missing object '") + key + "'");
  return j[key];
}

std::vector<Elem> get_elems(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw RingError(std::string("recipe: missing array '") + key + "'");
  std::vector<Elem> out;
  for (const auto& x : j[key]) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0) throw RingError(std::string("recipe: '") + key + "' must hold element indices");
    out.push_back(x.get<Elem>());
  }
  return out;
}

ElementSet member_set(const FiniteRing& r, const std::vector<Elem>& xs) {
  ElementSet s(r.order());
  for (Elem x : xs) {
    r.require_element(x);
    s.insert(x);
  }
  return s;
}

RingEndomorphism get_alpha(const Json& j, const FiniteRing& base) {
  const std::string a = j.value("alpha", "identity");
  if (a == "identity") return identity_endomorphism(base);
  if (a == "frobenius") return frobenius(base);
  throw RingError("recipe: unknown endomorphism '" + a + "'");
}

BimoduleSpec build_module(const Json& j, const FiniteRing& left, const FiniteRing& right,
                          const ConstructOptions& opts) {
  const std::string kind = j.value("module", "");
  if (kind == "regular") {
    require_same_ring(left, right, "regular module");
    return regular_bimodule(left);
  }
  if (kind == "zero") return zero_bimodule(left, right);
  if (kind == "ideal") {
    require_same_ring(left, right, "ideal module");
    return ideal_bimodule(left, member_set(left, get_elems(j, "members")));
  }
  if (kind == "via_maps") {
    const FiniteRing s = build_recipe(get_obj(j, "ring"), opts);
    return bimodule_via_maps(left, s, right, get_elems(j, "to_left"), get_elems(j, "to_right"));
  }
  throw RingError("recipe: unknown module kind '" + kind + "'");
}

Json zr(std::size_t n) { return {{"op", "zmod"}, {"n", n}}; }
Json gf(std::size_t p, std::size_t k) { return {{"op", "galois_field"}, {"p", p}, {"k", k}}; }

std::vector<CatalogEntry> make_catalog() {
  struct Seed {
    std::string name, description;
    Json recipe;
    std::map<std::string, bool> expected;
  };
  const std::map<std::string, bool> field{{"periodic", true},    {"potent", true},  {"commutative", true},
                                          {"strongly-periodic", true}, {"J-clean-like", true}};
  const std::map<std::string, bool> local_comm{
      {"periodic", true}, {"potent", false}, {"commutative", true}, {"strongly-periodic", true}};
  std::vector<Seed> seeds = {
      {"Z2", "integers mod 2", zr(2), field},
      {"Z3", "integers mod 3", zr(3), field},
      {"Z4", "integers mod 4", zr(4), local_comm},
      {"Z5", "integers mod 5", zr(5), field},
      {"Z6", "integers mod 6", zr(6), field},
      {"Z7", "integers mod 7", zr(7), field},
      {"Z8", "integers mod 8", zr(8), local_comm},
      {"GF4", "field with 4 elements, x^2+x+1", gf(2, 2), field},
      {"GF9", "field with 9 elements, x^2+1", gf(3, 2), field},
      {"M2Z2",
       "2x2 matrices over Z2",
       {{"op", "matrix"}, {"base", zr(2)}, {"k", 2}},
       {{"periodic", true}, {"strongly-periodic", false}, {"2-primal", false}, {"commutative", false}}},
      {"E4.6",
       "upper triangular 2x2 matrices over Z3",
       {{"op", "triangular"}, {"base", zr(3)}, {"n", 2}},
       {{"periodic", true}, {"J-clean-like", true}, {"J-clean", false}}},
      {"T3Z2", "upper triangular 3x3 matrices over Z2", {{"op", "triangular"}, {"base", zr(2)}, {"n", 3}},
       {{"periodic", true}, {"strongly-periodic", true}}},
      {"R3", "constant-diagonal upper triangular 3x3 matrices over Z2", {{"op", "constant_diagonal"}, {"n", 3}},
       {{"periodic", true}, {"strongly-periodic", true}}},
      {"E3.6",
       "constant-diagonal upper triangular 4x4 matrices over Z2",
       {{"op", "constant_diagonal"}, {"n", 4}},
       {{"periodic", true}, {"strongly-periodic", true}, {"nil-semicommutative", false}}},
      {"E3.9",
       "Morita ring [[Z4, Z4], [2Z4, Z4]] with products from Z4",
       {{"op", "morita"},
        {"context", {{"kind", "ideal"}, {"base", zr(4)}, {"n", {0, 1, 2, 3}}, {"m", {0, 2}}}}},
       {{"periodic", true}, {"strongly-periodic", true}}},
      {"G7",
       "matrices [[x, y, z], [0, x^2, 0], [0, 0, x]] over GF4",
       {{"op", "gf4_twisted"}},
       {{"periodic", true},
        {"strongly-periodic", true},
        {"abelian", true},
        {"commutative", false},
        {"generalized-n-like", true}}},
      {"MS2Z4", "generalized matrix ring over Z4 with s = 2",
       {{"op", "generalized_matrix"}, {"base", zr(4)}, {"s", 2}}, {{"periodic", true}}},
      {"MXZ2",
       "generalized matrix ring over Z2[x]/(x^2) with s = x",
       {{"op", "generalized_matrix"}, {"base", {{"op", "power_series"}, {"base", zr(2)}, {"n", 2}}}, {"s", 1}},
       {{"periodic", true}}},
      {"TZ2Z2", "trivial extension of Z2 by itself", {{"op", "trivial_extension"}, {"base", zr(2)}},
       {{"periodic", true}}},
      {"TZ4Z4", "trivial extension of Z4 by itself", {{"op", "trivial_extension"}, {"base", zr(4)}},
       {{"periodic", true}}},
      {"T2GF4F",
       "upper triangular 2x2 matrices over GF4 twisted by Frobenius",
       {{"op", "triangular"}, {"base", gf(2, 2)}, {"n", 2}, {"alpha", "frobenius"}},
       {{"periodic", true}}},
      {"SKEWGF4",
       "GF4[x; Frobenius]/(x^2)",
       {{"op", "skew_series"}, {"base", gf(2, 2)}, {"n", 2}, {"alpha", "frobenius"}},
       {{"periodic", true}}},
  };
  std::vector<CatalogEntry> out;
  for (auto& s : seeds) {
    CatalogEntry e;
    e.name = s.name;
    e.description = s.description;
    e.recipe = s.recipe;
    e.expected = s.expected;
    e.ring = build_recipe(e.recipe);
    e.order = e.ring.order();
    e.content_hash = e.ring.content_hash();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ContextEntry> make_contexts() {
  const Json z2z4_module = {{"module", "via_maps"},
                            {"ring", zr(2)},
                            {"to_left", {0, 1}},
                            {"to_right", {0, 1, 0, 1}}};
  const std::vector<std::pair<std::string, std::pair<std::string, Json>>> seeds = {
      {"E3.9", {"[[Z4, Z4], [2Z4, Z4]] with products from Z4",
                {{"kind", "ideal"}, {"base", zr(4)}, {"n", {0, 1, 2, 3}}, {"m", {0, 2}}}}},
      {"MS2Z4", {"generalized matrix context over Z4, s = 2",
                 {{"kind", "generalized_matrix"}, {"base", zr(4)}, {"s", 2}}}},
      {"E2.5", {"diagonal blocks over Z2 with zero pairings", {{"kind", "diagonal_block"}, {"base", zr(2)}}}},
      {"M0Z2", {"generalized matrix context over Z2, s = 0",
                {{"kind", "generalized_matrix"}, {"base", zr(2)}, {"s", 0}}}},
      {"M1Z2", {"generalized matrix context over Z2, s = 1 (pairings not nilpotent)",
                {{"kind", "generalized_matrix"}, {"base", zr(2)}, {"s", 1}}}},
      {"TRIZ2Z4", {"formal triangular [[Z2, Z2], [0, Z4]]",
                   {{"kind", "triangular"}, {"a", zr(2)}, {"b", zr(4)}, {"module", z2z4_module}}}},
  };
  std::vector<ContextEntry> out;
  for (const auto& [name, rest] : seeds) {
    ContextEntry e;
    e.name = name;
    e.description = rest.first;
    e.recipe = rest.second;
    e.spec = build_context_recipe(e.recipe);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

FiniteRing build_recipe(const Json& j, const ConstructOptions& opts) {
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
    throw RingError("recipe: expected an object with a string 'op'");
  const std::string op = j["op"].get<std::string>();
  if (op == "zmod") return zmod(get_size(j, "n"), opts);
  if (op == "galois_field") {
    std::optional<std::vector<std::size_t>> poly;
    if (j.contains("poly")) poly = j["poly"].get<std::vector<std::size_t>>();
    return galois_field(get_size(j, "p"), get_size(j, "k"), poly, opts);
  }
  if (op == "constant_diagonal") return constant_diagonal_block(get_size(j, "n"), opts);
  if (op == "gf4_twisted") return gf4_twisted_ring(opts);
  if (op == "catalog") {
    const std::string name = j.value("name", "");
    const CatalogEntry* e = catalog_find(name);
    if (!e) throw RingError("recipe: unknown catalog entry '" + name + "'");
    if (e->order > opts.max_order) throw RingError("recipe: catalog entry '" + name + "' exceeds order cap");
    return e->ring;
  }
  if (op == "morita") return morita_ring(build_context_recipe(get_obj(j, "context"), opts), opts);
  if (op == "direct_product")
    return direct_product(build_recipe(get_obj(j, "left"), opts), build_recipe(get_obj(j, "right"), opts), opts);

  const FiniteRing base = build_recipe(get_obj(j, "base"), opts);
  if (op == "matrix") return matrix_ring(base, get_size(j, "k"), opts);
  if (op == "triangular") return triangular_matrix_ring(get_alpha(j, base), get_size(j, "n"), opts);
  if (op == "skew_series") return truncated_skew_power_series(get_alpha(j, base), get_size(j, "n"), opts);
  if (op == "power_series") return truncated_power_series(base, get_size(j, "n"), opts);
  if (op == "generalized_matrix") return generalized_matrix(base, static_cast<Elem>(get_size(j, "s")), opts);
  if (op == "opposite") return opposite_ring(base);
  if (op == "trivial_extension") {
    const BimoduleSpec m = j.contains("module") ? build_module(get_obj(j, "module"), base, base, opts)
                                                : regular_bimodule(base);
    return trivial_extension(base, m, opts);
  }
  throw RingError("recipe: unknown op '" + op + "'");
}

MoritaContextSpec build_context_recipe(const Json& j, const ConstructOptions& opts) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw RingError("context recipe: expected an object with a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "generalized_matrix") {
    const FiniteRing base = build_recipe(get_obj(j, "base"), opts);
    return generalized_matrix_context(base, static_cast<Elem>(get_size(j, "s")));
  }
  if (kind == "ideal") {
    const FiniteRing base = build_recipe(get_obj(j, "base"), opts);
    return ideal_context(base, member_set(base, get_elems(j, "n")), member_set(base, get_elems(j, "m")));
  }
  if (kind == "triangular") {
    const FiniteRing a = build_recipe(get_obj(j, "a"), opts), b = build_recipe(get_obj(j, "b"), opts);
    return triangular_context(a, build_module(get_obj(j, "module"), a, b, opts), b);
  }
  if (kind == "diagonal_block") return diagonal_block_context(build_recipe(get_obj(j, "base"), opts));
  throw RingError("context recipe: unknown kind '" + kind + "'");
}

const std::vector<CatalogEntry>& catalog_build() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog_build())
    if (e.name == name) return &e;
  return nullptr;
}

const std::vector<ContextEntry>& catalog_contexts() {
  static const std::vector<ContextEntry> entries = make_contexts();
  return entries;
}

const ContextEntry* context_find(const std::string& name) {
  for (const auto& e : catalog_contexts())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace ringlab
