#pragma once

// Ring documents: one JSON object per ring holding full row-major tables.
//   {"format": "ringlab-ring", "version": 1, "order": n, "add": [...],
//    "mul": [...], "one": i, "labels": [...], "provenance": "...",
//    "recipe": {...}, "content_hash": "hex"}
// labels, recipe and content_hash are optional.

#include <filesystem>
#include <optional>
#include <string>

#include "ringlab/catalog.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

inline constexpr int kRingDocumentVersion = 1;

struct LoadOptions {
  std::size_t max_order = kDefaultMaxOrder;
};

struct LoadedRing {
  FiniteRing ring;
  /// False when the O(n^3) axiom scan was skipped for a large
  /// constructor-provenance document.
  bool full_scan = true;
  std::string note;
};

Json ring_to_json(const FiniteRing& r);
Json ring_to_json(const FiniteRing& r, const Json& recipe);

/// Throws RingError on malformed documents, axiom failures (with witnesses)
/// and cap violations. A recipe, if present, must rebuild the same tables.
LoadedRing ring_from_json(const Json& doc, const LoadOptions& opts = {});

LoadedRing load_ring_document(const std::filesystem::path& path, const LoadOptions& opts = {});
FiniteRing load_ring(const std::filesystem::path& path, const LoadOptions& opts = {});
/// Writes atomically (temporary file, then rename).
void save_ring(const FiniteRing& r, const std::filesystem::path& path);
void save_ring(const FiniteRing& r, const std::filesystem::path& path, const Json& recipe);

/// {"holds", "witness_fields", "witness", "certificate"?, "note"?}
Json to_json(const Verdict& v);
/// {"format": "ringlab-classification", "version", "ring_hash", "order",
///  "classes": {key: bool}, "verdicts": {key: verdict}} with the fixed key set.
Json to_json(const ClassificationReport& r);

/// Writes text atomically next to path. Throws std::runtime_error on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace ringlab
