// Python bindings: a thin, string-oriented surface over the core library.
// Graphs travel as canonical document text, chains as chain text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphex/embedding.hpp"
#include "graphex/errors.hpp"
#include "graphex/format.hpp"
#include "graphex/graph.hpp"
#include "graphex/kind.hpp"
#include "graphex/lattice.hpp"
#include "graphex/oracle.hpp"

namespace py = pybind11;
using namespace graphex;

namespace {

std::string canonical(const std::string& text) { return serialize(parse(text)); }

std::string kind_of_text(const std::string& text) { return format_kind(parse(text).kind); }

py::tuple convert_text(const std::string& text, const std::string& target_spec) {
    GraphValue g = parse(text);
    WitnessChain chain = plan_chain(g.kind, parse_kind(target_spec));
    GraphValue image = apply_chain(chain, g);
    return py::make_tuple(serialize(image), chain_to_string(chain));
}

std::string invert_text(const std::string& image_text, const std::string& chain_text) {
    return serialize(apply_chain_inverse(chain_from_string(chain_text), parse(image_text)));
}

std::string order_text(const std::string& a, const std::string& b) {
    return order_name(compare_kinds(parse_kind(a), parse_kind(b)));
}

std::string plan_text(const std::string& a, const std::string& b) {
    return chain_to_string(plan_chain(parse_kind(a), parse_kind(b)));
}

py::dict verify_family(const std::string& family, std::uint64_t fuzz,
                       std::uint64_t seed) {
    auto inst = make_instance(family, canonical_source_kind(family));
    if (!inst) throw Error("family '" + family + "' is not admissible");
    UniverseSpec spec = standard_universe(inst->source_kind);
    VerificationReport r = fuzz > 0 ? fuzz_embedding(*inst, spec, fuzz, seed)
                                    : verify_embedding(*inst, spec);
    py::dict d;
    d["embedding"] = r.embedding;
    d["universe_size"] = r.universe_size;
    d["forward_failures"] = r.forward_failures;
    d["roundtrip_failures"] = r.roundtrip_failures;
    d["injectivity_collisions"] = r.injectivity_collisions;
    d["ok"] = r.ok();
    return d;
}

}  // namespace

PYBIND11_MODULE(_graphex, m) {
    m.doc() = "graph representation toolkit: conversions, ordering, verification";

    // translators run newest-first, so the base class goes in before the
    // derived ones
    py::register_exception<Error>(m, "GraphexError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "GraphexParseError", PyExc_ValueError);
    py::register_exception<InvalidGraph>(m, "InvalidGraphError", PyExc_ValueError);
    py::register_exception<NotInImage>(m, "NotInImageError", PyExc_ValueError);
    py::register_exception<NoPath>(m, "NoPathError", PyExc_LookupError);

    m.def("canonicalize", &canonical, py::arg("text"),
          "Parse a graph document and return its canonical serialization.");
    m.def("kind_of", &kind_of_text, py::arg("text"),
          "Kind spec of a parsed document.");
    m.def("parse_kind", [](const std::string& s) { return format_kind(parse_kind(s)); },
          py::arg("spec"), "Normalize a kind spec string.");
    m.def("subkind",
          [](const std::string& a, const std::string& b) {
              return subkind(parse_kind(a), parse_kind(b));
          },
          py::arg("a"), py::arg("b"));
    m.def("convert", &convert_text, py::arg("text"), py::arg("target"),
          "Convert a graph to a target kind; returns (image_text, chain_text).");
    m.def("invert", &invert_text, py::arg("image_text"), py::arg("chain_text"),
          "Apply a chain backwards to an image graph.");
    m.def("order", &order_text, py::arg("a"), py::arg("b"),
          "Expressivity relation between two kinds.");
    m.def("plan", &plan_text, py::arg("a"), py::arg("b"),
          "Witness chain between two kinds, as chain text.");
    m.def("families", [] { return family_names(); },
          "All embedding family names.");
    m.def("verify", &verify_family, py::arg("family"), py::arg("fuzz") = 0,
          py::arg("seed") = 0,
          "Brute-force or fuzz verification of one embedding family.");
}
