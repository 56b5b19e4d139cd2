#include "ringlab/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ringlab/cache.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/io.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

namespace {

struct Globals {
  bool no_cache = false;
  bool verbose = false;
  std::size_t max_order = kDefaultMaxOrder;
  std::uint64_t seed = HarnessConfig{}.seed;
  std::size_t threads = 0;
};

struct ResolvedRing {
  FiniteRing ring;
  std::optional<Json> recipe;
  std::string origin;
};

std::optional<Json> parse_json_text(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const Json::parse_error&) {
    return std::nullopt;
  }
}

/// A ring argument is a catalog name, a ring document or recipe file, or an
/// inline recipe.
ResolvedRing resolve_ring(const std::string& arg, const Globals& g) {
  ConstructOptions copts;
  copts.max_order = g.max_order;
  auto check_cap = [&](const FiniteRing& r) {
    if (r.order() > g.max_order)
      throw RingError("ring order " + std::to_string(r.order()) + " exceeds --max-order " +
                      std::to_string(g.max_order));
  };
  if (const CatalogEntry* e = catalog_find(arg)) {
    check_cap(e->ring);
    return {e->ring, std::optional<Json>(std::in_place, e->recipe), "catalog " + e->name};
  }
  Json doc;
  std::string origin;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    auto parsed = parse_json_text(buf.str());
    if (!parsed) throw RingError("file " + arg + " is not valid JSON");
    doc = std::move(*parsed);
    origin = "file " + arg;
  } else if (auto parsed = parse_json_text(arg); parsed && parsed->is_object()) {
    doc = std::move(*parsed);
    origin = "inline recipe";
  } else {
    throw RingError("'" + arg + "' is neither a catalog name, a file, nor a JSON recipe");
  }
  if (doc.contains("format")) {
    LoadOptions lo;
    lo.max_order = g.max_order;
    LoadedRing lr = ring_from_json(doc, lo);
    if (!lr.note.empty()) origin += " (" + lr.note + ")";
    std::optional<Json> recipe;
    if (doc.contains("recipe")) recipe = doc["recipe"];
    return {lr.ring, recipe, origin};
  }
  return {build_recipe(doc, copts), std::optional<Json>(std::in_place, doc), origin};
}

ResultCache open_cache(const Globals& g) { return g.no_cache ? ResultCache{} : ResultCache::from_environment(); }

/// Serves value from the cache or computes and stores it.
std::string cached(const Globals& g, const CacheKey& key, const std::function<std::string()>& compute,
                   std::ostream& err) {
  const ResultCache cache = open_cache(g);
  if (auto hit = cache.get(key)) {
    if (g.verbose) err << "cache: hit " << cache.entry_path(key).string() << "\n";
    return *hit;
  }
  std::string value = compute();
  cache.put(key, value);
  if (g.verbose) err << "cache: " << (cache.enabled() ? "stored " + cache.entry_path(key).string() : "disabled") << "\n";
  return value;
}

Json members_json(const FiniteRing& r, const ElementSet& s) {
  Json idx = Json::array(), labels = Json::array();
  for (Elem x : s.members()) {
    idx.push_back(x);
    labels.push_back(r.label(x));
  }
  return {{"members", idx}, {"labels", labels}, {"size", s.size()}};
}

Json ideal_json(const IdealSet& i) {
  Json j = members_json(i.ring(), i.members());
  const auto t = nilpotency_index(i);
  j["nilpotency_index"] = t ? Json(*t) : Json(nullptr);
  return j;
}

std::string radicals_document(const FiniteRing& r, bool oracle) {
  const IdealSet j = jacobson_radical(r);
  const IdealSet p = prime_radical(r);
  Json doc = {{"format", "ringlab-radicals"},
              {"version", 1},
              {"ring_hash", r.content_hash_hex()},
              {"order", r.order()},
              {"jacobson", ideal_json(j)},
              {"prime", ideal_json(p)},
              {"nilpotents", members_json(r, nil_elements(r))}};
  if (oracle) {
    Json o = Json::object();
    o["jacobson_by_definition"] = jacobson_radical_by_definition(r) == j;
    if (r.order() <= kOracleMaxOrder) {
      o["prime_radical_oracle"] = prime_radical_oracle(r) == p;
      ElementSet meet = ElementSet::full(r.order());
      for (const auto& m : maximal_right_ideals_oracle(r)) meet &= m.members();
      o["maximal_right_ideals"] = meet == j.members();
    } else {
      o["note"] = "ideal-lattice oracles run up to order " + std::to_string(kOracleMaxOrder);
    }
    bool agree = true;
    for (const auto& [k, v] : o.items())
      if (v.is_boolean()) agree &= v.get<bool>();
    o["agree"] = agree;
    doc["oracle"] = o;
  }
  return doc.dump(2) + "\n";
}

void print_ideal_line(std::ostream& out, const std::string& name, const Json& j) {
  out << std::left << std::setw(12) << name << " size " << j["size"].get<std::size_t>() << "  nilpotency index ";
  if (j.contains("nilpotency_index")) {
    if (j["nilpotency_index"].is_null())
      out << "none";
    else
      out << j["nilpotency_index"].get<std::size_t>();
  } else {
    out << "-";
  }
  out << "  {";
  bool first = true;
  for (const auto& l : j["labels"]) {
    out << (first ? "" : ", ") << l.get<std::string>();
    first = false;
  }
  out << "}\n";
}

int run_verify(const std::string& target, const std::vector<std::string>& ring_files, bool json, bool timing,
               const std::string& out_path, const Globals& g, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (target != "all") {
    if (!find_check(target)) {
      err << "error: unknown check id '" << target << "'\n";
      return kExitInvalid;
    }
    ids.push_back(target);
  }
  std::vector<CheckInput> inputs;
  if (ring_files.empty()) {
    inputs = suite_inputs(catalog_build(), catalog_contexts());
  } else {
    // Every file is validated before any check runs.
    for (const auto& f : ring_files) inputs.push_back(CheckInput::of_ring(f, resolve_ring(f, g).ring));
  }
  HarnessConfig cfg;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  cfg.construct_max_order = g.max_order;
  const SuiteReport rep = run_suite(inputs, cfg, ids);
  const Json doc = to_json(rep, timing);
  if (!out_path.empty()) write_file_atomic(out_path, doc.dump(2) + "\n");
  if (json) {
    out << doc.dump(2) << "\n";
  } else {
    std::map<std::string, std::map<Outcome, std::size_t>> per;
    std::vector<std::string> order;
    for (const auto& r : rep.reports) {
      if (!per.count(r.check_id)) order.push_back(r.check_id);
      ++per[r.check_id][r.verdict];
    }
    for (const auto& id : order) {
      auto& c = per[id];
      out << std::left << std::setw(6) << id << " pass " << c[Outcome::Pass] << "  fail " << c[Outcome::Fail]
          << "  skipped " << c[Outcome::Skipped] << "  inconclusive " << c[Outcome::Inconclusive] << "\n";
    }
    for (const auto& r : rep.reports)
      if (r.verdict == Outcome::Fail) out << "FAIL " << r.check_id << " on " << r.input_name << ": " << r.payload.dump() << "\n";
    out << "total " << rep.reports.size() << ": pass " << rep.passed << ", fail " << rep.failed << ", skipped "
        << rep.skipped << ", inconclusive " << rep.inconclusive << "\n";
  }
  return rep.failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ringlab: finite ring construction, classification and theorem checks", "ringlab"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--no-cache", g.no_cache, "Bypass the result cache");
  app.add_flag("-v,--verbose", g.verbose, "Report cache activity on stderr");
  app.add_option("--max-order", g.max_order, "Hard cap on ring order")->check(CLI::Range(1, 1 << 20));
  app.add_option("--seed", g.seed, "Seed for sampled checks (subrings, element pairs)");
  app.add_option("--threads", g.threads, "Suite worker threads (0 = hardware)");

  auto* construct = app.add_subcommand("construct", "Build a ring from a recipe and emit its document");
  std::string recipe_arg, out_file;
  construct->add_option("recipe", recipe_arg, "Recipe JSON, recipe file or catalog name")->required();
  construct->add_option("-o,--output", out_file, "Write the ring document here");

  auto* classify = app.add_subcommand("classify", "Decide every ring class with witnesses");
  std::string ring_arg;
  bool json = false;
  classify->add_option("ring", ring_arg, "Ring document, recipe or catalog name")->required();
  classify->add_flag("--json", json, "Emit the classification document");

  auto* radicals = app.add_subcommand("radicals", "Jacobson and prime radicals, nilpotent elements");
  bool oracle = false;
  radicals->add_option("ring", ring_arg, "Ring document, recipe or catalog name")->required();
  radicals->add_flag("--oracle", oracle, "Cross-check against the definition-level oracles");
  radicals->add_flag("--json", json, "Emit JSON");

  auto* decompose = app.add_subcommand("decompose", "Decompose one element");
  Elem element = 0;
  std::string mode = "potent";
  decompose->add_option("ring", ring_arg, "Ring document, recipe or catalog name")->required();
  decompose->add_option("--element", element, "Element index")->required();
  decompose->add_option("--mode", mode, "potent (a = p + w) or euw (a = eu + w)")
      ->check(CLI::IsMember({"potent", "euw"}));
  decompose->add_flag("--json", json, "Emit JSON");

  auto* verify = app.add_subcommand("verify", "Run theorem checks");
  std::string target;
  std::vector<std::string> ring_files;
  bool use_catalog = false, no_timing = false;
  std::string report_path;
  verify->add_option("check", target, "Check id or 'all'")->required();
  verify->add_flag("--catalog", use_catalog, "Run over the built-in catalog (the default)");
  verify->add_option("--ring", ring_files, "Run over these rings instead of the catalog");
  verify->add_flag("--json", json, "Emit the suite report");
  verify->add_flag("--no-timing", no_timing, "Omit wall times from the report");
  verify->add_option("-o,--output", report_path, "Write the suite report here");

  auto* catalog = app.add_subcommand("catalog", "Named rings and contexts");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog rings and contexts");
  auto* show = catalog->add_subcommand("show", "Show one entry");
  std::string entry_name;
  show->add_option("name", entry_name, "Entry name")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }
  if (use_catalog && !ring_files.empty()) {
    err << "error: --catalog and --ring are exclusive\n";
    return kExitInvalid;
  }

  try {
    if (*construct) {
      const ResolvedRing rr = resolve_ring(recipe_arg, g);
      const Json doc = rr.recipe ? ring_to_json(rr.ring, *rr.recipe) : ring_to_json(rr.ring);
      if (out_file.empty()) {
        out << doc.dump() << "\n";
      } else {
        write_file_atomic(out_file, doc.dump() + "\n");
        out << "wrote " << out_file << ": order " << rr.ring.order() << ", hash " << rr.ring.content_hash_hex()
            << "\n";
      }
      return kExitOk;
    }
    if (*classify) {
      const ResolvedRing rr = resolve_ring(ring_arg, g);
      const ClassifyOptions copts;
      const CacheKey key{rr.ring.content_hash(), "classify/v1",
                         Json{{"n_like", {copts.n_like_min, copts.n_like_max}},
                              {"quasi_duo_oracle_cap", copts.quasi_duo.oracle_cap}}
                             .dump()};
      const std::string text = cached(
          g, key, [&] { return to_json(classification_report(rr.ring, copts)).dump(2) + "\n"; }, err);
      if (json) {
        out << text;
      } else {
        const Json doc = Json::parse(text);
        out << rr.origin << ": order " << doc["order"].get<std::size_t>() << ", hash "
            << doc["ring_hash"].get<std::string>() << "\n";
        for (const auto& k : classification_keys()) {
          out << "  " << std::left << std::setw(28) << k << (doc["classes"][k].get<bool>() ? "yes" : "no");
          const auto& v = doc["verdicts"][k];
          if (v.contains("note")) out << "  (" << v["note"].get<std::string>() << ")";
          out << "\n";
        }
      }
      return kExitOk;
    }
    if (*radicals) {
      const ResolvedRing rr = resolve_ring(ring_arg, g);
      const CacheKey key{rr.ring.content_hash(), "radicals/v1", Json{{"oracle", oracle}}.dump()};
      const std::string text = cached(g, key, [&] { return radicals_document(rr.ring, oracle); }, err);
      const Json doc = Json::parse(text);
      if (json) {
        out << text;
      } else {
        out << rr.origin << ": order " << rr.ring.order() << "\n";
        print_ideal_line(out, "J(R)", doc["jacobson"]);
        print_ideal_line(out, "P(R)", doc["prime"]);
        print_ideal_line(out, "N(R)", doc["nilpotents"]);
        if (doc.contains("oracle"))
          for (const auto& [k, v] : doc["oracle"].items())
            if (k != "agree") out << "oracle " << k << ": " << (v.is_boolean() ? (v.get<bool>() ? "agrees" : "DISAGREES") : v.get<std::string>()) << "\n";
      }
      return doc.contains("oracle") && !doc["oracle"]["agree"].get<bool>() ? kExitFailed : kExitOk;
    }
    if (*decompose) {
      const ResolvedRing rr = resolve_ring(ring_arg, g);
      const FiniteRing& r = rr.ring;
      r.require_element(element);
      if (mode == "potent") {
        const PeriodicityWitness w = power_cycle(r, element);
        const PotentDecomposition d = potent_decomposition(r, element);
        if (json) {
          out << Json{{"mode", "potent"}, {"element", element}, {"p", d.p}, {"w", d.w}, {"n", w.n},
                      {"k", w.k}, {"l", w.l}, {"potency_exponent", d.potency_exponent},
                      {"nilpotency_index", d.nilpotency_index}, {"commutes", d.commutes}}
                     .dump(2)
              << "\n";
        } else {
          out << "p=" << d.p << " w=" << d.w << " n=" << w.n << "\n"
              << "  " << r.label(element) << " = " << r.label(d.p) << " + " << r.label(d.w) << "; k=" << w.k
              << " l=" << w.l << ", p^" << d.potency_exponent << " = p, w^" << d.nilpotency_index << " = 0\n";
        }
        return kExitOk;
      }
      const auto d = euw_decomposition(r, element);
      if (!d) {
        if (json)
          out << Json{{"mode", "euw"}, {"element", element}, {"decomposition", nullptr}}.dump(2) << "\n";
        else
          out << "no decomposition a = eu + w with w in P(R)\n";
        return kExitFailed;
      }
      if (json)
        out << Json{{"mode", "euw"}, {"element", element}, {"e", d->e}, {"u", d->u}, {"w", d->w}, {"m", d->m}}.dump(2)
            << "\n";
      else
        out << "e=" << d->e << " u=" << d->u << " w=" << d->w << " m=" << d->m << "\n";
      return kExitOk;
    }
    if (*verify) return run_verify(target, ring_files, json, !no_timing, report_path, g, out, err);
    if (*list) {
      for (const auto& e : catalog_build())
        out << std::left << std::setw(9) << e.name << std::right << std::setw(5) << e.order << "  "
            << hash_hex(e.content_hash) << "  " << e.description << "\n";
      for (const auto& c : catalog_contexts())
        out << std::left << std::setw(9) << c.name << std::right << std::setw(5) << "ctx" << "  " << std::setw(16)
            << "" << "  " << c.description << "\n";
      return kExitOk;
    }
    if (*show) {
      if (const CatalogEntry* e = catalog_find(entry_name)) {
        out << Json{{"name", e->name},           {"description", e->description},
                    {"order", e->order},         {"content_hash", hash_hex(e->content_hash)},
                    {"recipe", e->recipe},       {"expected", e->expected}}
                   .dump(2)
            << "\n";
        return kExitOk;
      }
      if (const ContextEntry* c = context_find(entry_name)) {
        out << Json{{"name", c->name}, {"description", c->description}, {"recipe", c->recipe}}.dump(2) << "\n";
        return kExitOk;
      }
      err << "error: no catalog entry named '" << entry_name << "'\n";
      return kExitInvalid;
    }
  } catch (const RingError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  err << app.help();
  return kExitInvalid;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace ringlab
