#include "ringlab/io.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

namespace ringlab {

namespace {

constexpr const char* kFormat = "ringlab-ring";

std::vector<Elem> table(const Json& doc, const char* key, std::size_t n) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw RingError(std::string("ring document: missing array '") + key + "'");
  const auto& a = doc[key];
  if (a.size() != n * n)
    throw RingError(std::string("ring document: '") + key + "' has " + std::to_string(a.size()) +
                    " entries, expected " + std::to_string(n * n));
  std::vector<Elem> out;
  out.reserve(n * n);
  for (const auto& x : a) {
    if (!x.is_number_unsigned() || x.get<std::size_t>() >= n)
      throw RingError(std::string("ring document: '") + key + "' entry out of range");
    out.push_back(x.get<Elem>());
  }
  return out;
}

/// O(n^2) structural checks used when the cubic scan is skipped.
void light_checks(std::size_t n, const std::vector<Elem>& add, const std::vector<Elem>& mul, Elem one) {
  auto fail = [](const std::string& what) { throw RingError("ring document: " + what); };
  for (Elem a = 0; a < n; ++a) {
    if (add[a] != a || add[a * n] != a) fail("index 0 is not the additive identity");
    if (mul[one * n + a] != a || mul[a * n + one] != a) fail("one not identity");
    if (mul[a] != 0 || mul[a * n] != 0) fail("zero is not absorbing");
    std::vector<bool> seen(n, false);
    for (Elem b = 0; b < n; ++b) {
      if (add[a * n + b] != add[b * n + a]) fail("add-commutative");
      if (seen[add[a * n + b]]) fail("addition row is not a permutation");
      seen[add[a * n + b]] = true;
    }
  }
}

}  // namespace

Json ring_to_json(const FiniteRing& r, const Json& recipe) {
  Json doc = ring_to_json(r);
  const Json hash = doc["content_hash"];
  doc.erase("content_hash");
  doc["recipe"] = recipe;
  doc["content_hash"] = hash;
  return doc;
}

Json ring_to_json(const FiniteRing& r) {
  Json doc;
  doc["format"] = kFormat;
  doc["version"] = kRingDocumentVersion;
  doc["order"] = r.order();
  doc["add"] = std::vector<Elem>(r.add_table().begin(), r.add_table().end());
  doc["mul"] = std::vector<Elem>(r.mul_table().begin(), r.mul_table().end());
  doc["one"] = r.one();
  if (!r.labels().empty()) doc["labels"] = r.labels();
  doc["provenance"] = to_string(r.provenance());
  doc["content_hash"] = r.content_hash_hex();
  return doc;
}

LoadedRing ring_from_json(const Json& doc, const LoadOptions& opts) {
  if (!doc.is_object()) throw RingError("ring document: expected a JSON object");
  if (doc.value("format", std::string{}) != kFormat) throw RingError("ring document: wrong or missing format tag");
  if (doc.value("version", 0) != kRingDocumentVersion) throw RingError("ring document: unsupported version");
  if (!doc.contains("order") || !doc["order"].is_number_unsigned())
    throw RingError("ring document: missing order");
  const std::size_t n = doc["order"].get<std::size_t>();
  if (n == 0) throw RingError("ring document: order must be positive");
  if (n > opts.max_order)
    throw RingError("ring document: order " + std::to_string(n) + " exceeds cap " + std::to_string(opts.max_order));
  RawTables t;
  t.order = n;
  t.add = table(doc, "add", n);
  t.mul = table(doc, "mul", n);
  if (!doc.contains("one") || !doc["one"].is_number_unsigned() || doc["one"].get<std::size_t>() >= n)
    throw RingError("ring document: missing or out-of-range one");
  t.one = doc["one"].get<Elem>();
  if (doc.contains("labels")) {
    t.labels = doc["labels"].get<std::vector<std::string>>();
    if (t.labels.size() != n) throw RingError("ring document: labels must have order entries");
  }
  const std::string prov = doc.value("provenance", to_string(Provenance::RawImport));
  if (prov != to_string(Provenance::RawImport) && prov != to_string(Provenance::ConstructorBuilt))
    throw RingError("ring document: unknown provenance '" + prov + "'");

  LoadedRing out;
  if (doc.contains("recipe")) {
    ConstructOptions copts;
    copts.max_order = opts.max_order;
    FiniteRing rebuilt = build_recipe(doc["recipe"], copts);
    const FiniteRing given = FiniteRing::from_trusted_tables(n, t.add, t.mul, t.one, t.labels);
    if (!(rebuilt == given)) throw RingError("ring document: tables do not match the recipe");
    out.ring = given;
    out.full_scan = false;
    out.note = "tables verified against the recipe";
  } else if (n <= kFullScanLimit) {
    ValidateOptions v;
    v.max_order = opts.max_order;
    out.ring = ring_from_tables(t, v);
    if (prov == to_string(Provenance::ConstructorBuilt)) {
      const FiniteRing& s = out.ring;
      out.ring = FiniteRing::from_trusted_tables(n, {s.add_table().begin(), s.add_table().end()},
                                                 {s.mul_table().begin(), s.mul_table().end()}, s.one(),
                                                 s.labels(), Provenance::ConstructorBuilt);
    }
  } else if (prov == to_string(Provenance::ConstructorBuilt)) {
    light_checks(n, t.add, t.mul, t.one);
    out.ring = FiniteRing::from_trusted_tables(n, std::move(t.add), std::move(t.mul), t.one, std::move(t.labels));
    out.full_scan = false;
    out.note = "constructor provenance: accepted without the full axiom scan";
  } else {
    throw RingError("ring document: raw import of order " + std::to_string(n) + " exceeds the full-scan limit " +
                    std::to_string(kFullScanLimit));
  }
  if (doc.contains("content_hash") && doc["content_hash"] != out.ring.content_hash_hex())
    throw RingError("ring document: content_hash does not match the tables");
  return out;
}

Json to_json(const Verdict& v) {
  Json j = {{"holds", v.holds}, {"witness_fields", v.witness_fields}, {"witness", v.witness}};
  if (v.certificate)
    j["certificate"] = {
        {"kind", v.certificate->kind}, {"elements", v.certificate->elements}, {"equation", v.certificate->equation}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json classes = Json::object(), verdicts = Json::object();
  for (const auto& key : classification_keys()) {
    const auto it = r.verdicts.find(key);
    if (it == r.verdicts.end()) throw std::logic_error("classification report lacks key " + key);
    classes[key] = it->second.holds;
    verdicts[key] = to_json(it->second);
  }
  return {{"format", "ringlab-classification"}, {"version", 1},         {"ring_hash", hash_hex(r.ring_hash)},
          {"order", r.order},                   {"classes", classes}, {"verdicts", verdicts}};
}

LoadedRing load_ring_document(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw RingError("cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw RingError("ring document " + path.string() + ": " + e.what());
  }
  return ring_from_json(doc, opts);
}

FiniteRing load_ring(const std::filesystem::path& path, const LoadOptions& opts) {
  return load_ring_document(path, opts).ring;
}

void save_ring(const FiniteRing& r, const std::filesystem::path& path) {
  write_file_atomic(path, ring_to_json(r).dump() + "\n");
}

void save_ring(const FiniteRing& r, const std::filesystem::path& path, const Json& recipe) {
  write_file_atomic(path, ring_to_json(r, recipe).dump() + "\n");
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  std::random_device rd;
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot rename into " + path.string());
  }
}

}  // namespace ringlab
