#include "ringlab/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ringlab/io.hpp"

namespace ringlab {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

nlohmann::json key_json(const CacheKey& k) {
  return {{"ring", hash_hex(k.ring_hash)}, {"operation", k.operation}, {"parameters", k.parameters}};
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto probe = dir_ / ".probe";
  std::ofstream out(probe);
  if (ec || !out) {
    std::cerr << "warning: cache directory " << dir_.string() << " is not writable; caching disabled\n";
    return;
  }
  out.close();
  std::filesystem::remove(probe, ec);
  enabled_ = true;
}

ResultCache ResultCache::from_environment() {
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return ResultCache(env);
  std::error_code ec;
  auto base = std::filesystem::temp_directory_path(ec);
  if (ec) return {};
  const char* user = std::getenv("USER");
  return ResultCache(base / (std::string("ringlab-cache-") + (user ? user : "user")));
}

std::filesystem::path ResultCache::entry_path(const CacheKey& key) const {
  return dir_ / (hash_hex(key.ring_hash) + "-" + hash_hex(fnv1a(key_json(key).dump())) + ".json");
}

std::optional<std::string> ResultCache::get(const CacheKey& key) const {
  if (!enabled_) return std::nullopt;
  const auto path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  try {
    const auto doc = nlohmann::json::parse(buf.str());
    if (doc.at("key") == key_json(key) && doc.at("value").is_string()) return doc["value"].get<std::string>();
  } catch (const nlohmann::json::exception&) {
  }
  std::error_code ec;
  std::filesystem::remove(path, ec);
  return std::nullopt;
}

void ResultCache::put(const CacheKey& key, const std::string& value) const {
  if (!enabled_) return;
  const nlohmann::json doc = {{"key", key_json(key)}, {"value", value}};
  try {
    write_file_atomic(entry_path(key), doc.dump());
  } catch (const std::exception& e) {
    std::cerr << "warning: cache write failed: " << e.what() << "\n";
  }
}

}  // namespace ringlab
