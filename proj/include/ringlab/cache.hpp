#pragma once

// Content-addressed result cache. Keys are (ring content hash, operation id,
// parameter string); values are opaque serialized strings returned byte for
// byte. Entries whose stored key or ring hash disagree, or that fail to
// parse, are evicted on read.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace ringlab {

/// Environment variable naming the cache directory.
inline constexpr const char* kCacheDirEnv = "RINGLAB_CACHE_DIR";

struct CacheKey {
  std::uint64_t ring_hash = 0;
  std::string operation;
  std::string parameters;
};

class ResultCache {
 public:
  /// Disabled cache: every get misses, every put is dropped.
  ResultCache() = default;
  /// An unusable directory degrades to a disabled cache with a warning on
  /// stderr.
  explicit ResultCache(std::filesystem::path dir);

  /// $RINGLAB_CACHE_DIR if set, else a per-user directory under the system
  /// temporary path.
  static ResultCache from_environment();

  bool enabled() const { return enabled_; }
  const std::filesystem::path& directory() const { return dir_; }

  std::optional<std::string> get(const CacheKey& key) const;
  /// Atomic write; failures only warn.
  void put(const CacheKey& key, const std::string& value) const;

  std::filesystem::path entry_path(const CacheKey& key) const;

 private:
  std::filesystem::path dir_;
  bool enabled_ = false;
};

}  // namespace ringlab
