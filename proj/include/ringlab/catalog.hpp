#pragma once

// Declarative ring recipes and the built-in catalog of named rings and
// Morita contexts. A recipe is a JSON object {"op": ..., args...}; nested
// rings appear as nested recipes. Building is deterministic.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/constructions.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

using Json = nlohmann::json;

/// Ring ops: zmod{n}, galois_field{p,k[,poly]}, matrix{base,k},
/// triangular{base,n[,alpha]}, skew_series{base,n[,alpha]}, power_series{base,n},
/// generalized_matrix{base,s}, trivial_extension{base[,module]},
/// direct_product{left,right}, opposite{base}, constant_diagonal{n},
/// gf4_twisted{}, morita{context}, catalog{name}.
/// alpha is "identity" or "frobenius".
FiniteRing build_recipe(const Json& recipe, const ConstructOptions& opts = {});

/// Context kinds: generalized_matrix{base,s}, ideal{base,n,m} (member lists),
/// triangular{a,b,module}, diagonal_block{base}.
/// Modules: {"module":"regular"}, {"module":"zero"},
/// {"module":"ideal","members":[...]},
/// {"module":"via_maps","ring":R,"to_left":[...],"to_right":[...]}.
MoritaContextSpec build_context_recipe(const Json& recipe, const ConstructOptions& opts = {});

struct CatalogEntry {
  std::string name;
  std::string description;
  Json recipe;
  /// Classification bits expected a priori, keyed like ClassificationReport.
  std::map<std::string, bool> expected;
  std::size_t order = 0;
  std::uint64_t content_hash = 0;
  FiniteRing ring;
};

struct ContextEntry {
  std::string name;
  std::string description;
  Json recipe;
  MoritaContextSpec spec;
};

/// Every named ring, in a fixed order. Built once per process.
const std::vector<CatalogEntry>& catalog_build();
const CatalogEntry* catalog_find(const std::string& name);

/// Morita contexts exercised by the transfer checks.
const std::vector<ContextEntry>& catalog_contexts();
const ContextEntry* context_find(const std::string& name);

}  // namespace ringlab
