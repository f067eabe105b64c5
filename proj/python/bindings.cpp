#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stellar/contraction.hpp"
#include "stellar/errors.hpp"
#include "stellar/inducedness.hpp"
#include "stellar/io.hpp"
#include "stellar/isomorphism.hpp"
#include "stellar/move_search.hpp"
#include "stellar/pair_engine.hpp"
#include "stellar/random.hpp"
#include "stellar/subdivision.hpp"

namespace py = pybind11;
using namespace stellar;

namespace {

using Labels = std::vector<std::string>;

Simplex to_simplex(const Labels& labels) {
  std::vector<Label> out;
  for (const auto& l : labels) out.push_back(Label::intern(l));
  return Simplex(std::move(out));
}

Labels from_simplex(const Simplex& s) {
  Labels out;
  for (Label v : s) out.emplace_back(v.token());
  return out;
}

std::vector<Labels> from_simplices(const std::vector<Simplex>& list) {
  std::vector<Labels> out;
  for (const auto& s : list) out.push_back(from_simplex(s));
  return out;
}

std::map<std::string, std::string> from_map(const LabelMap& m) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : m) out.emplace(k.token(), v.token());
  return out;
}

std::optional<Label> maybe_label(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return Label::intern(*s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stellar subdivisions, edge contractions and strongly induced pairs.";

  auto base = py::register_exception<Error>(m, "StellarError", PyExc_RuntimeError);
  py::register_exception<MalformedInput>(m, "MalformedInput", base.ptr());
  py::register_exception<AbsentFace>(m, "AbsentFace", base.ptr());
  py::register_exception<NotSubcomplex>(m, "NotSubcomplex", base.ptr());
  py::register_exception<NamingError>(m, "NamingError", base.ptr());
  py::register_exception<InvalidEdge>(m, "InvalidEdge", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
  py::register_exception<ScriptError>(m, "ScriptError", base.ptr());
  py::register_exception<ScriptMismatch>(m, "ScriptMismatch", base.ptr());

  py::class_<SimplicialComplex>(m, "Complex")
      .def(py::init([](const std::vector<Labels>& facets) { return SimplicialComplex::from_facets(facets); }),
           py::arg("facets") = std::vector<Labels>{})
      .def_static("from_json", [](const std::string& text) { return parse_complex_document(text).complex; })
      .def("to_json", [](const SimplicialComplex& c, const std::string& name) { return serialize_complex(c, name); },
           py::arg("name") = "")
      .def_property_readonly("facets", [](const SimplicialComplex& c) { return from_simplices(c.facets()); })
      .def_property_readonly("vertices", [](const SimplicialComplex& c) {
        Labels out;
        for (Label v : c.vertices()) out.emplace_back(v.token());
        return out;
      })
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def("faces", [](const SimplicialComplex& c, int d) { return from_simplices(c.faces(d)); })
      .def("__contains__", [](const SimplicialComplex& c, const Labels& face) { return c.contains(to_simplex(face)); })
      .def("f_vector", [](const SimplicialComplex& c) { return f_vector(c); })
      .def("euler_characteristic", [](const SimplicialComplex& c) { return euler_characteristic(c); })
      .def("is_pseudomanifold", [](const SimplicialComplex& c, int d) { return is_pseudomanifold(c, d); })
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__len__", &SimplicialComplex::num_facets)
      .def("__repr__", [](const SimplicialComplex& c) { return "Complex(" + c.to_string() + ")"; });

  py::class_<InducednessWitness>(m, "Witness")
      .def_property_readonly("verdict", [](const InducednessWitness& w) { return std::string(to_string(w.verdict)); })
      .def_property_readonly("simplex", [](const InducednessWitness& w) -> std::optional<Labels> {
        if (!w.simplex) return std::nullopt;
        return from_simplex(*w.simplex);
      })
      .def_property_readonly("intersection", [](const InducednessWitness& w) { return from_simplices(w.intersection); })
      .def("__bool__", [](const InducednessWitness& w) { return w.at_least_induced(); })
      .def("__repr__", [](const InducednessWitness& w) { return "Witness(" + w.describe() + ")"; });

  py::class_<ComplexPair>(m, "Pair")
      .def(py::init([](SimplicialComplex sub, SimplicialComplex ambient) {
             return pair_new(std::move(sub), std::move(ambient));
           }),
           py::arg("sub"), py::arg("ambient"))
      .def_property_readonly("sub", &ComplexPair::sub)
      .def_property_readonly("ambient", &ComplexPair::ambient)
      .def_property_readonly("status", &ComplexPair::status)
      .def("derive", &pair_derive)
      .def("biased", &pair_biased)
      .def("subdivide_edge", [](const ComplexPair& p, const Labels& e, const std::string& label) {
        return pair_subdivide_edge(p, to_simplex(e), Label::intern(label));
      })
      .def("contract_edge", [](const ComplexPair& p, const Labels& e, std::optional<std::string> survivor) {
        return pair_contract_edge(p, to_simplex(e), maybe_label(survivor));
      }, py::arg("edge"), py::arg("survivor") = std::nullopt);

  m.def("star", [](const SimplicialComplex& c, const Labels& s) { return star(c, to_simplex(s)); });
  m.def("link", [](const SimplicialComplex& c, const Labels& s) { return link(c, to_simplex(s)); });
  m.def("is_subcomplex", &is_subcomplex);
  m.def("isomorphism", [](const SimplicialComplex& a, const SimplicialComplex& b)
            -> std::optional<std::map<std::string, std::string>> {
    auto found = isomorphism(a, b);
    if (!found) return std::nullopt;
    return from_map(*found);
  });

  m.def("missing_simplices", [](const SimplicialComplex& c, std::optional<int> max_dim) {
    return from_simplices(missing_simplices(c, max_dim));
  }, py::arg("complex"), py::arg("max_dim") = std::nullopt);
  m.def("is_induced", &is_induced);
  m.def("is_strongly_induced", &is_strongly_induced);

  m.def("stellar_subdivide", [](const SimplicialComplex& c, const Labels& face, const std::string& label) {
    return stellar_subdivide(c, to_simplex(face), Label::intern(label));
  });
  m.def("edge_subdivide", [](const SimplicialComplex& c, const Labels& edge, const std::string& label) {
    return edge_subdivide(c, to_simplex(edge), Label::intern(label));
  });
  m.def("derived_subdivision", [](const SimplicialComplex& c, std::optional<int> round) {
    return derived_subdivision(c, round).first;
  }, py::arg("complex"), py::arg("round") = std::nullopt);
  m.def("biased_derived_subdivision", [](const SimplicialComplex& sub, const SimplicialComplex& ambient,
                                         std::optional<int> round) {
    return biased_derived_subdivision(sub, ambient, round).first;
  }, py::arg("sub"), py::arg("ambient"), py::arg("round") = std::nullopt);

  m.def("is_valid_edge", [](const SimplicialComplex& c, const Labels& e) { return is_valid_edge(c, to_simplex(e)); });
  m.def("link_condition", [](const SimplicialComplex& c, const Labels& e) { return link_condition(c, to_simplex(e)); });
  m.def("contract_edge", [](const SimplicialComplex& c, const Labels& e, std::optional<std::string> survivor) {
    return contract_edge(c, to_simplex(e), maybe_label(survivor));
  }, py::arg("complex"), py::arg("edge"), py::arg("survivor") = std::nullopt);

  m.def("pipeline_run", [](const SimplicialComplex& ambient, const SimplicialComplex& sub,
                           const SimplicialComplex& target, const std::string& script) {
    auto result = pipeline_run(ambient, sub, target, parse_script(script));
    return py::make_tuple(result.ambient, serialize_report(result.report));
  }, py::arg("ambient"), py::arg("sub"), py::arg("target"), py::arg("script"),
        "Returns (final ambient, report as JSON text). `script` is a script document.");

  m.def("search_script", [](const SimplicialComplex& from, const SimplicialComplex& to, std::size_t max_depth,
                            std::size_t max_vertices) -> std::optional<std::string> {
    auto found = search_script(from, to, SearchLimits{max_depth, max_vertices});
    if (!found) return std::nullopt;
    return serialize_script(*found);
  }, py::arg("source"), py::arg("target"), py::arg("max_depth") = 4, py::arg("max_vertices") = 10);
  m.def("verify_script", [](const SimplicialComplex& from, const std::string& script, const SimplicialComplex& to) {
    return verify_script(from, parse_script(script), to);
  }, py::arg("source"), py::arg("script"), py::arg("target"));

  m.def("random_complex", [](std::size_t n, int max_dim, double density, std::uint64_t seed) {
    return random_complex(RandomSpec{n, max_dim, density, seed});
  }, py::arg("n_vertices") = 6, py::arg("max_dim") = 2, py::arg("density") = 0.5, py::arg("seed") = 0);
  m.def("random_induced_pair", [](std::size_t n, int max_dim, double density, std::uint64_t seed) {
    return random_induced_pair(RandomSpec{n, max_dim, density, seed});
  }, py::arg("n_vertices") = 6, py::arg("max_dim") = 2, py::arg("density") = 0.5, py::arg("seed") = 0);
}
