#pragma once

// Executable theorem checks. Each check evaluates its claim by running the
// classify and radical operations on every ring involved and comparing.
// Biconditionals compare boolean sides; implications whose hypotheses fail
// report skipped. Every false side carries evidence that reverify_evidence()
// replays from the inputs alone.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/catalog.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/ideal_set.hpp"

namespace ringlab {

enum class Outcome { Pass, Fail, Skipped, Inconclusive };
std::string to_string(Outcome o);

enum class InputKind { Ring, Context, RingIdeal };
std::string to_string(InputKind k);

struct CheckInput {
  std::string name;
  InputKind kind = InputKind::Ring;
  std::optional<FiniteRing> ring;           // Ring, RingIdeal
  std::optional<MoritaContextSpec> context; // Context
  std::optional<IdealSet> ideal;            // RingIdeal (two-sided, on ring)

  static CheckInput of_ring(std::string name, FiniteRing r);
  static CheckInput of_context(std::string name, MoritaContextSpec c);
  static CheckInput of_ideal(std::string name, IdealSet i);
  /// Ring hashes: {R}, {A, B} or {R} (the ideal is recorded in the payload).
  std::vector<std::uint64_t> hashes() const;
};

struct HarnessConfig {
  std::uint64_t seed = 20240611;
  /// Subrings sampled per ring for the subring check.
  std::size_t subring_samples = 20;
  /// Rings with more than this many element pairs get a seeded pair sample.
  std::size_t pair_limit = 4096;
  /// Cap on rings the checks construct (M_(s)(R), T(R,R), contexts, ...).
  std::size_t construct_max_order = kDefaultMaxOrder;
  /// sequence_vanishing is attempted up to this order.
  std::size_t sequence_max_order = 64;
  /// 0 means std::thread::hardware_concurrency().
  std::size_t threads = 0;
  ClassifyOptions classify;
};

struct TheoremCheck {
  std::string id;
  InputKind input = InputKind::Ring;
  std::string claim;
  /// Characteristic fields of the payload beyond "claims" and "notes".
  std::vector<std::string> payload_fields;
};

/// Registered checks in table order.
const std::vector<TheoremCheck>& check_registry();
const TheoremCheck* find_check(const std::string& id);

struct VerdictReport {
  std::string check_id;
  std::string input_name;
  std::vector<std::uint64_t> input_hashes;
  Outcome verdict = Outcome::Skipped;
  /// {"claims": [{"name", "holds", "evidence"?}], "notes": [...], ...}
  Json payload;
  double wall_ms = 0;
};

/// Throws RingError for an unknown id or an input of the wrong kind.
VerdictReport run_check(const std::string& id, const CheckInput& in, const HarnessConfig& cfg = {});

/// Rebuilds the ring named by evidence["ring"] from the inputs and replays
/// the evidence. Classify certificate kinds go through reverify().
bool reverify_evidence(const CheckInput& in, const Json& evidence, const HarnessConfig& cfg = {});
/// True iff every evidence object in the payload replays.
bool reverify_payload(const CheckInput& in, const VerdictReport& rep, const HarnessConfig& cfg = {});

struct SuiteReport {
  std::vector<VerdictReport> reports;
  std::size_t passed = 0, failed = 0, skipped = 0, inconclusive = 0;
  double wall_ms = 0;
};

/// Every catalog ring, every catalog context, and each ring paired with its
/// distinct proper nonzero ideals among P, J, J^2 and, for order <= 16, all
/// two-sided ideals.
std::vector<CheckInput> suite_inputs(const std::vector<CatalogEntry>& catalog,
                                     const std::vector<ContextEntry>& contexts);

/// Runs each listed check (all if ids is empty) on every input of its kind.
/// Reports are ordered by (check table order, input order) whatever the
/// thread count.
SuiteReport run_suite(const std::vector<CheckInput>& inputs, const HarnessConfig& cfg = {},
                      const std::vector<std::string>& ids = {});
/// Catalog rings plus the catalog contexts whose recipes name only catalog rings.
SuiteReport run_suite(const std::vector<CatalogEntry>& catalog, const HarnessConfig& cfg = {},
                      const std::vector<std::string>& ids = {});

Json to_json(const VerdictReport& r, bool include_timing = true);
Json to_json(const SuiteReport& s, bool include_timing = true);

}  // namespace ringlab
