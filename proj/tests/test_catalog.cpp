#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include "ringlab/cache.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/io.hpp"
#include "support/oracles.hpp"

using namespace ringlab;
namespace fs = std::filesystem;

namespace {

/// FNV-1a 64 over the little-endian bytes of order (8), add and mul entries
/// (4 each) and one (4), written out byte by byte.
std::uint64_t fnv_oracle(const FiniteRing& r) {
  std::vector<unsigned char> bytes;
  auto put = [&](std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) bytes.push_back(static_cast<unsigned char>(v >> (8 * i)));
  };
  put(r.order(), 8);
  for (Elem x : r.add_table()) put(x, 4);
  for (Elem x : r.mul_table()) put(x, 4);
  put(r.one(), 4);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) h = (h ^ b) * 0x100000001b3ull;
  return h;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ringlab-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Catalog, NamesAndOrders) {
  const std::map<std::string, std::size_t> orders = {
      {"Z2", 2},     {"Z3", 3},     {"Z4", 4},      {"Z5", 5},      {"Z6", 6},      {"Z7", 7},
      {"Z8", 8},     {"GF4", 4},    {"GF9", 9},     {"M2Z2", 16},   {"E4.6", 27},   {"T3Z2", 64},
      {"R3", 16},    {"E3.6", 128}, {"E3.9", 128},  {"G7", 64},     {"MS2Z4", 256}, {"MXZ2", 256},
      {"TZ2Z2", 4},  {"TZ4Z4", 16}, {"T2GF4F", 64}, {"SKEWGF4", 16}};
  const auto& cat = catalog_build();
  ASSERT_EQ(cat.size(), orders.size());
  for (const auto& e : cat) {
    ASSERT_TRUE(orders.count(e.name)) << e.name;
    EXPECT_EQ(e.order, orders.at(e.name)) << e.name;
    EXPECT_EQ(e.ring.order(), e.order) << e.name;
    EXPECT_EQ(e.content_hash, e.ring.content_hash()) << e.name;
    EXPECT_EQ(catalog_find(e.name), &e);
  }
  EXPECT_EQ(catalog_find("nope"), nullptr);
}

TEST(Catalog, HashesMatchIndependentFnv) {
  for (const auto& e : catalog_build()) EXPECT_EQ(fnv_oracle(e.ring), e.content_hash) << e.name;
}

TEST(Catalog, FrozenHashes) {
  // Any encoding change in a constructor moves these.
  const std::map<std::string, std::string> frozen = {
      {"Z2", "edc77c501d71c057"},   {"Z4", "ed8e9f7036d071c0"},   {"GF4", "11afa108cb5a4780"},
      {"GF9", "0fd7ef0d400ead75"},  {"M2Z2", "df05305a5348d49c"}, {"E4.6", "700b12bb1ad438ff"},
      {"E3.6", "f7ec819a4b4c48d5"}, {"E3.9", "c30a191b157dd6a4"}, {"G7", "524e6a3b03d881e5"},
      {"MS2Z4", "40fc4507a75eaadb"}, {"SKEWGF4", "ab717e8706460ae1"}};
  for (const auto& [name, hex] : frozen) EXPECT_EQ(catalog_find(name)->ring.content_hash_hex(), hex) << name;
}

TEST(Catalog, RecipesRebuildDeterministically) {
  for (const auto& e : catalog_build()) {
    const FiniteRing again = build_recipe(e.recipe);
    EXPECT_EQ(again.content_hash(), e.content_hash) << e.name;
    EXPECT_TRUE(again == e.ring) << e.name;
  }
}

TEST(Catalog, ExpectedBitsMatchClassification) {
  for (const auto& e : catalog_build()) {
    const auto rep = classification_report(e.ring);
    for (const auto& [key, bit] : e.expected) {
      ASSERT_TRUE(rep.verdicts.count(key)) << e.name << " " << key;
      EXPECT_EQ(rep.verdicts.at(key).holds, bit) << e.name << " " << key;
    }
  }
}

TEST(Catalog, StructuralIdentities) {
  using ringlab::testing::isomorphic;
  EXPECT_TRUE(catalog_find("E4.6")->ring == triangular_matrix_ring(zmod(3), 2));
  EXPECT_TRUE(catalog_find("E3.6")->ring == constant_diagonal_block(4));
  EXPECT_TRUE(catalog_find("G7")->ring == gf4_twisted_ring());
  // T(Z2, Z2) is Z2[x]/(x^2).
  EXPECT_TRUE(isomorphic(catalog_find("TZ2Z2")->ring, truncated_power_series(zmod(2), 2)));
  // The Frobenius-twisted skew series over GF(4) is not commutative.
  EXPECT_FALSE(catalog_find("SKEWGF4")->ring.is_commutative());
}

TEST(Catalog, Contexts) {
  const std::map<std::string, std::size_t> orders = {{"E3.9", 128}, {"MS2Z4", 256}, {"E2.5", 512},
                                                     {"M0Z2", 16},  {"M1Z2", 16},   {"TRIZ2Z4", 16}};
  ASSERT_EQ(catalog_contexts().size(), orders.size());
  for (const auto& c : catalog_contexts()) {
    EXPECT_TRUE(morita_violations(c.spec).empty()) << c.name;
    EXPECT_EQ(morita_ring(c.spec).order(), orders.at(c.name)) << c.name;
    EXPECT_EQ(context_find(c.name), &c);
  }
  EXPECT_TRUE(morita_ring(context_find("E3.9")->spec) == catalog_find("E3.9")->ring);
  EXPECT_TRUE(morita_ring(context_find("MS2Z4")->spec) == catalog_find("MS2Z4")->ring);
}

TEST(Recipe, Errors) {
  EXPECT_THROW(build_recipe(Json{{"op", "zmod"}}), RingError);
  EXPECT_THROW(build_recipe(Json{{"op", "zmod"}, {"n", -3}}), RingError);
  EXPECT_THROW(build_recipe(Json{{"op", "warp"}}), RingError);
  EXPECT_THROW(build_recipe(Json{{"op", "catalog"}, {"name", "nope"}}), RingError);
  EXPECT_THROW(build_recipe(Json{{"op", "galois_field"}, {"p", 4}, {"k", 1}}), RingError);
  ConstructOptions small;
  small.max_order = 100;
  EXPECT_THROW(build_recipe(Json{{"op", "matrix"}, {"base", {{"op", "zmod"}, {"n", 2}}}, {"k", 3}}, small), RingError);
  EXPECT_EQ(build_recipe(Json{{"op", "catalog"}, {"name", "E4.6"}}).order(), 27u);
}

TEST(RingDocument, RoundTripEveryEntry) {
  TempDir dir;
  for (const auto& e : catalog_build()) {
    const fs::path p = dir.path / (e.name + ".json");
    save_ring(e.ring, p);
    const LoadedRing back = load_ring_document(p);
    EXPECT_TRUE(back.ring == e.ring) << e.name;
    EXPECT_EQ(back.ring.labels(), e.ring.labels()) << e.name;
    EXPECT_TRUE(back.full_scan) << e.name;
    save_ring(e.ring, p, e.recipe);
    EXPECT_TRUE(load_ring(p) == e.ring) << e.name;
  }
}

TEST(RingDocument, Z4RoundTripTables) {
  TempDir dir;
  const auto z4 = zmod(4);
  save_ring(z4, dir.path / "z4.json");
  const auto back = load_ring(dir.path / "z4.json");
  EXPECT_TRUE(std::equal(back.add_table().begin(), back.add_table().end(), z4.add_table().begin()));
  EXPECT_TRUE(std::equal(back.mul_table().begin(), back.mul_table().end(), z4.mul_table().begin()));
  EXPECT_EQ(back.one(), 1u);
}

TEST(RingDocument, AdditionNotAGroupNamesTheWitness) {
  Json doc = ring_to_json(zmod(3));
  doc.erase("content_hash");
  doc["provenance"] = "raw-import";
  doc["add"][1 * 3 + 2] = 1;  // 1 + 2 = 1 breaks the group law
  try {
    ring_from_json(doc);
    FAIL() << "accepted a broken addition table";
  } catch (const RingError& e) {
    EXPECT_NE(std::string(e.what()).find("add"), std::string::npos) << e.what();
  }
}

TEST(RingDocument, MalformedDocuments) {
  const Json good = ring_to_json(zmod(4));
  auto with = [&](const std::function<void(Json&)>& f) {
    Json d = good;
    f(d);
    return d;
  };
  EXPECT_THROW(ring_from_json(Json::array()), RingError);
  EXPECT_THROW(ring_from_json(with([](Json& d) { d.erase("format"); })), RingError);
  EXPECT_THROW(ring_from_json(with([](Json& d) { d["version"] = 9; })), RingError);
  EXPECT_THROW(ring_from_json(with([](Json& d) { d["add"].erase(0); })), RingError);
  EXPECT_THROW(ring_from_json(with([](Json& d) { d["mul"][5] = 4; })), RingError);
  EXPECT_THROW(ring_from_json(with([](Json& d) { d["one"] = 7; })), RingError);
  EXPECT_THROW(ring_from_json(with([](Json& d) { d["labels"] = {"a"}; })), RingError);
  EXPECT_THROW(ring_from_json(with([](Json& d) { d["provenance"] = "magic"; })), RingError);
  EXPECT_THROW(ring_from_json(with([](Json& d) { d["content_hash"] = "0000000000000000"; })), RingError);
  EXPECT_THROW(ring_from_json(with([](Json& d) { d["recipe"] = {{"op", "zmod"}, {"n", 2}}; })), RingError);
  LoadOptions tiny;
  tiny.max_order = 3;
  EXPECT_THROW(ring_from_json(good, tiny), RingError);
  EXPECT_THROW(load_ring("/nonexistent/ring.json"), RingError);
}

TEST(RingDocument, LargeConstructorDocumentSkipsFullScan) {
  const FiniteRing big = zmod(1024);
  const Json doc = ring_to_json(big);
  const LoadedRing lr = ring_from_json(doc);
  EXPECT_FALSE(lr.full_scan);
  EXPECT_NE(lr.note.find("without the full axiom scan"), std::string::npos);
  EXPECT_TRUE(lr.ring == big);

  Json raw = doc;
  raw["provenance"] = "raw-import";
  EXPECT_THROW(ring_from_json(raw), RingError);

  // Light checks still catch a broken identity.
  Json broken = doc;
  broken.erase("content_hash");
  broken["one"] = 2;
  EXPECT_THROW(ring_from_json(broken), RingError);

  Json with_recipe = ring_to_json(big, Json{{"op", "zmod"}, {"n", 1024}});
  const LoadedRing rr = ring_from_json(with_recipe);
  EXPECT_FALSE(rr.full_scan);
  EXPECT_NE(rr.note.find("recipe"), std::string::npos);
}

TEST(Cache, HitIsByteIdentical) {
  TempDir dir;
  const ResultCache cache(dir.path);
  ASSERT_TRUE(cache.enabled());
  const FiniteRing r = catalog_find("E3.9")->ring;
  const CacheKey key{r.content_hash(), "classify", "{}"};
  const std::string computed = to_json(classification_report(r)).dump(2);
  EXPECT_FALSE(cache.get(key));
  cache.put(key, computed);
  const auto hit = cache.get(key);
  ASSERT_TRUE(hit);
  EXPECT_EQ(*hit, computed);
  EXPECT_EQ(*hit, to_json(classification_report(r)).dump(2));
  // Other parameters or another ring miss.
  EXPECT_FALSE(cache.get(CacheKey{r.content_hash(), "classify", "{\"x\":1}"}));
  EXPECT_FALSE(cache.get(CacheKey{r.content_hash() ^ 1, "classify", "{}"}));
}

TEST(Cache, CorruptedEntryIsEvicted) {
  TempDir dir;
  const ResultCache cache(dir.path);
  const CacheKey key{42, "op", "p"};
  cache.put(key, "value");
  const fs::path p = cache.entry_path(key);
  ASSERT_TRUE(fs::exists(p));
  std::ofstream(p, std::ios::trunc) << "{not json";
  EXPECT_FALSE(cache.get(key));
  EXPECT_FALSE(fs::exists(p));
  cache.put(key, "value");
  EXPECT_EQ(*cache.get(key), "value");
}

TEST(Cache, MismatchedKeyIsEvicted) {
  TempDir dir;
  const ResultCache cache(dir.path);
  const CacheKey a{1, "op", "p"}, b{2, "op", "p"};
  cache.put(a, "for a");
  fs::copy_file(cache.entry_path(a), cache.entry_path(b));
  EXPECT_FALSE(cache.get(b));
  EXPECT_FALSE(fs::exists(cache.entry_path(b)));
  EXPECT_EQ(*cache.get(a), "for a");
}

TEST(Cache, UnwritableDirectoryDegrades) {
  TempDir dir;
  std::ofstream(dir.path / "file") << "x";
  ::testing::internal::CaptureStderr();
  const ResultCache cache(dir.path / "file" / "sub");
  const std::string warning = ::testing::internal::GetCapturedStderr();
  EXPECT_FALSE(cache.enabled());
  EXPECT_NE(warning.find("warning"), std::string::npos);
  cache.put(CacheKey{1, "op", ""}, "v");
  EXPECT_FALSE(cache.get(CacheKey{1, "op", ""}));
  EXPECT_FALSE(ResultCache().enabled());
}

TEST(Cache, EnvironmentDirectory) {
  TempDir dir;
  ::setenv(kCacheDirEnv, dir.path.c_str(), 1);
  const ResultCache cache = ResultCache::from_environment();
  ::unsetenv(kCacheDirEnv);
  EXPECT_TRUE(cache.enabled());
  EXPECT_EQ(cache.directory(), dir.path);
}

TEST(ClassificationJson, FixedKeySet) {
  const Json doc = to_json(classification_report(catalog_find("E4.6")->ring));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc["classes"].items()) keys.push_back(k);
  std::vector<std::string> expected = classification_keys();
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(keys, expected);
  EXPECT_TRUE(doc["classes"]["J-clean-like"].get<bool>());
  EXPECT_FALSE(doc["classes"]["J-clean"].get<bool>());
  EXPECT_TRUE(doc["verdicts"]["J-clean"].contains("certificate"));
}
