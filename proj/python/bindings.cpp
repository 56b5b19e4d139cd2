// JSON crosses the boundary as text; the Python package decodes it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ringlab/catalog.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/cli.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/io.hpp"
#include "ringlab/theorems.hpp"

namespace py = pybind11;
using namespace ringlab;

namespace {

std::vector<Elem> members(const IdealSet& i) { return i.members().members(); }

HarnessConfig harness(std::uint64_t seed, std::size_t threads) {
  HarnessConfig cfg;
  cfg.seed = seed;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<RingError>(m, "RingError", PyExc_ValueError);

  py::class_<FiniteRing>(m, "Ring")
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("one", &FiniteRing::one)
      .def("add", &FiniteRing::add)
      .def("mul", &FiniteRing::mul)
      .def("neg", &FiniteRing::neg)
      .def("pow", &FiniteRing::pow)
      .def("content_hash", &FiniteRing::content_hash_hex)
      .def("is_commutative", &FiniteRing::is_commutative)
      .def("__eq__", [](const FiniteRing& a, const FiniteRing& b) { return a == b; })
      .def("__len__", &FiniteRing::order)
      .def("__repr__", [](const FiniteRing& r) {
        return "<ringlab.Ring order=" + std::to_string(r.order()) + " hash=" + r.content_hash_hex() + ">";
      });

  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (const auto& e : catalog_build()) out.push_back(e.name);
    return out;
  });
  m.def("context_names", [] {
    std::vector<std::string> out;
    for (const auto& c : catalog_contexts()) out.push_back(c.name);
    return out;
  });
  m.def("catalog_ring", [](const std::string& name) {
    const auto* e = catalog_find(name);
    if (!e) throw RingError("no catalog entry '" + name + "'");
    return e->ring;
  });
  m.def("construct", [](const std::string& recipe, std::size_t max_order) {
    ConstructOptions o;
    o.max_order = max_order;
    return build_recipe(Json::parse(recipe), o);
  }, py::arg("recipe"), py::arg("max_order") = kDefaultMaxOrder);
  m.def("ring_from_document", [](const std::string& doc) { return ring_from_json(Json::parse(doc)).ring; });
  m.def("ring_to_document", [](const FiniteRing& r) { return ring_to_json(r).dump(); });

  m.def("classify", [](const FiniteRing& r) { return to_json(classification_report(r)).dump(); });
  m.def("jacobson_radical", [](const FiniteRing& r) { return members(jacobson_radical(r)); });
  m.def("prime_radical", [](const FiniteRing& r) { return members(prime_radical(r)); });
  m.def("potent_decomposition", [](const FiniteRing& r, Elem a) {
    if (a >= r.order()) throw RingError("element out of range");
    const auto d = potent_decomposition(r, a);
    return py::dict(py::arg("p") = d.p, py::arg("w") = d.w, py::arg("potency_exponent") = d.potency_exponent,
                    py::arg("nilpotency_index") = d.nilpotency_index);
  });

  m.def("check_ids", [] {
    std::vector<std::string> out;
    for (const auto& c : check_registry()) out.push_back(c.id);
    return out;
  });
  m.def("run_check", [](const std::string& id, const std::string& name, const FiniteRing& r, std::uint64_t seed) {
    return to_json(run_check(id, CheckInput::of_ring(name, r), harness(seed, 1)), false).dump();
  }, py::arg("id"), py::arg("name"), py::arg("ring"), py::arg("seed") = HarnessConfig{}.seed);
  m.def("run_catalog_suite", [](const std::vector<std::string>& ids, std::uint64_t seed, std::size_t threads) {
    py::gil_scoped_release unlocked;
    return to_json(run_suite(catalog_build(), harness(seed, threads), ids), false).dump();
  }, py::arg("ids") = std::vector<std::string>{}, py::arg("seed") = HarnessConfig{}.seed, py::arg("threads") = 0);

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
