#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "affweyl/error.hpp"
#include "affweyl/resolution.hpp"
#include "affweyl/schubert.hpp"
#include "affweyl/serialize.hpp"

namespace py = pybind11;
using namespace affweyl;

namespace {

Facet to_facet(const std::vector<int>& nodes) { return Facet::from_nodes(nodes); }

std::vector<std::vector<Int>> matrix_rows(const IntMatrix& m) {
  std::vector<std::vector<Int>> rows(m.size(), std::vector<Int>(m.size()));
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) rows[r][c] = m(r, c);
  return rows;
}

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_affweyl, m) {
  m.doc() = "Affine Weyl group combinatorics";

  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Element>(m, "Element")
      .def_property_readonly("translation", [](const Element& x) { return x.translation; })
      .def_property_readonly("finite", [](const Element& x) { return matrix_rows(x.finite); })
      .def_property_readonly("omega", [](const Element& x) { return x.omega; })
      .def(py::self == py::self)
      .def("__hash__", [](const Element& x) { return ElementHash{}(x); });

  py::class_<AffineWeyl>(m, "AffineWeyl")
      .def(py::init([](const std::string& type, int rank) {
             if (type.size() != 1) throw InvalidArgument("type must be a single letter");
             return AffineWeyl(CartanDatum::build(type[0], rank));
           }),
           py::arg("type"), py::arg("rank"))
      .def_property_readonly("rank", &AffineWeyl::rank)
      .def_property_readonly("type", [](const AffineWeyl& g) { return std::string(1, g.datum().letter()); })
      .def_property_readonly("positive_roots", [](const AffineWeyl& g) { return g.datum().positive_roots(); })
      .def_property_readonly("two_rho", [](const AffineWeyl& g) { return g.datum().two_rho(); })
      .def("identity", &AffineWeyl::identity)
      .def("simple_reflection", &AffineWeyl::simple_reflection)
      .def("from_word", &AffineWeyl::from_word)
      .def("from_translation", &AffineWeyl::from_translation)
      .def("from_parts",
           [](const AffineWeyl& g, Coweight lambda, const std::vector<std::vector<Int>>& rows, NodePerm omega) {
             return g.from_parts(std::move(lambda), IntMatrix(rows), std::move(omega));
           },
           py::arg("translation"), py::arg("finite"), py::arg("omega") = NodePerm{})
      .def("parse", [](const AffineWeyl& g, const std::string& s) { return parse_element(g, s); })
      .def("format", [](const AffineWeyl& g, const Element& x) { return format_element(g, x); })
      .def("multiply", &AffineWeyl::multiply)
      .def("inverse", &AffineWeyl::inverse)
      .def("length", &AffineWeyl::length)
      .def("reduced_word", &AffineWeyl::reduced_word)
      .def("descents",
           [](const AffineWeyl& g, const Element& x, const std::string& side) {
             if (side != "left" && side != "right") throw InvalidArgument("side must be 'left' or 'right'");
             return g.descents(x, side == "left" ? Side::Left : Side::Right);
           },
           py::arg("x"), py::arg("side") = "right")
      .def("bruhat_leq", &AffineWeyl::bruhat_leq);

  m.def("min_right_rep", [](const AffineWeyl& g, const Element& w, const std::vector<int>& f) {
    return min_right_rep(g, w, to_facet(f));
  });
  m.def("min_left_rep", [](const AffineWeyl& g, const Element& w, const std::vector<int>& f) {
    return min_left_rep(g, w, to_facet(f));
  });
  m.def("maxmin_rep", [](const AffineWeyl& g, const Element& w, const std::vector<int>& l, const std::vector<int>& r) {
    return maxmin_rep(g, w, to_facet(l), to_facet(r));
  });
  m.def("waldspurger_length",
        [](const AffineWeyl& g, const Element& w, const std::vector<int>& l, const std::vector<int>& r) {
          return waldspurger_length(g, w, to_facet(l), to_facet(r));
        });
  m.def("enumerate_reps", [](const AffineWeyl& g, const std::vector<int>& l, const std::vector<int>& r, int bound) {
    return enumerate_reps(g, to_facet(l), to_facet(r), bound);
  });
  m.def("schubert_dim", [](const AffineWeyl& g, const Element& w, const std::vector<int>& l, const std::vector<int>& r) {
    return schubert_dim(g, w, to_facet(l), to_facet(r));
  });
  m.def("strata", [](const AffineWeyl& g, const Element& w, const std::vector<int>& l, const std::vector<int>& r) {
    return to_python(strata_to_json(g, strata(g, w, to_facet(l), to_facet(r))));
  });
  m.def("strata_dot", [](const AffineWeyl& g, const Element& w, const std::vector<int>& l, const std::vector<int>& r) {
    return strata_to_dot(g, strata(g, w, to_facet(l), to_facet(r)));
  });
  m.def("antidominant_rep", [](const AffineWeyl& g, const Coweight& mu) { return antidominant_rep(g.datum(), mu); });
  m.def("antidominance_leq", [](const AffineWeyl& g, const Coweight& a, const Coweight& b) {
    return antidominance_leq(g.datum(), a, b);
  });
  m.def("special_dim", [](const AffineWeyl& g, const Coweight& mu) { return special_dim(g.datum(), mu); });
  m.def("resolve", [](const AffineWeyl& g, const Element& w, const std::vector<int>& f) {
    return to_python(resolution_to_json(g, resolutive_sequence(g, w, to_facet(f))));
  });
  m.def("unitary_example", [](int mm, int p) { return to_python(unitary_to_json(unitary_example(mm, p))); });
}
