#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rahp/andreev.hpp"
#include "rahp/bounds.hpp"
#include "rahp/closed_volumes.hpp"
#include "rahp/generators.hpp"
#include "rahp/harness.hpp"
#include "rahp/polytope_io.hpp"
#include "rahp/report.hpp"
#include "rahp/surgery.hpp"

namespace py = pybind11;
using namespace rahp;

namespace {

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.numerator(), r.denominator());
}

py::dict profile_dict(const CombinatorialPolytope& p) {
  const auto prof = profile(p);
  py::dict d;
  d["V"] = prof.vertices;
  d["E"] = prof.edges;
  d["F"] = prof.faces;
  d["V_inf"] = prof.ideal_vertices;
  d["V_F"] = prof.finite_vertices;
  d["overfull"] = prof.overfull_vertices;
  d["p"] = prof.face_degrees;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Combinatorics and volume bounds of right-angled hyperbolic polyhedra";

  py::register_exception<InvalidPolytope>(m, "InvalidPolytope", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ErrBoundedValue>(m, "ErrBoundedValue")
      .def_readonly("value", &ErrBoundedValue::value)
      .def_readonly("abs_err", &ErrBoundedValue::abs_err)
      .def("contains", &ErrBoundedValue::contains)
      .def("__float__", [](const ErrBoundedValue& v) { return v.value; })
      .def("__repr__", [](const ErrBoundedValue& v) {
        return format_number(v.value) + " +- " + format_number(v.abs_err);
      });

  py::class_<CombinatorialPolytope>(m, "Polytope")
      .def(py::init<std::string, std::vector<Face>>(), py::arg("name"), py::arg("faces"))
      .def_property_readonly("name", &CombinatorialPolytope::name)
      .def_property_readonly("faces", &CombinatorialPolytope::faces)
      .def_property_readonly("vertex_count", &CombinatorialPolytope::vertex_count)
      .def_property_readonly("face_count", &CombinatorialPolytope::face_count)
      .def_property_readonly("valid", &CombinatorialPolytope::valid)
      .def("violations",
           [](const CombinatorialPolytope& p) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& v : p.validation().violations) out.emplace_back(v.invariant, v.detail);
             return out;
           })
      .def("profile", &profile_dict)
      .def("face_neighbours", [](const CombinatorialPolytope& p, FaceId f) { return face_neighbours(p, f); })
      .def("quasi_adjacent_count", [](const CombinatorialPolytope& p, VertexId v) { return quasi_adjacent_count(p, v); })
      .def("avg_face_neighbours", [](const CombinatorialPolytope& p) { return fraction(avg_face_neighbours(p)); })
      .def("avg_quasi_adjacent", [](const CombinatorialPolytope& p) { return fraction(avg_quasi_adjacent(p)); })
      .def("avg_quasi_incident", [](const CombinatorialPolytope& p) { return fraction(avg_quasi_incident(p)); })
      .def("serialize", [](const CombinatorialPolytope& p) { return serialize(p); })
      .def("__repr__", [](const CombinatorialPolytope& p) {
        return "<Polytope " + p.name() + " V=" + std::to_string(p.vertex_count()) + " F=" +
               std::to_string(p.face_count()) + ">";
      });

  m.def("parse", &parse_polytopes, py::arg("text"));
  m.def("antiprism", &antiprism, py::arg("n"));
  m.def("loebell", &loebell, py::arg("n"));
  m.def("prism", &prism, py::arg("n"));
  m.def("tetrahedron", &tetrahedron);
  m.def("octahedron_chain", [](int depth) { return octahedron_chain(depth).polytopes; }, py::arg("depth"));
  m.def("double_along_face", &double_along_face, py::arg("polytope"), py::arg("face"));

  m.def(
      "classify",
      [](const CombinatorialPolytope& p) {
        const auto cls = classify(p);
        py::dict d;
        d["kind"] = to_string(cls.kind);
        d["witness"] = cls.witness ? py::cast(cls.witness->describe()) : py::none();
        d["witness_kind"] = cls.witness ? py::cast(to_string(cls.witness->kind)) : py::none();
        return d;
      },
      py::arg("polytope"));

  m.def("lobachevsky", [](double x) { return lobachevsky(Angle{x}); }, py::arg("x"));
  m.def("v8", &v8);
  m.def("v3", &v3);
  m.def("vol_antiprism", &vol_antiprism, py::arg("n"));
  m.def("vol_loebell", &vol_loebell, py::arg("n"));

  m.def(
      "bounds",
      [](const CombinatorialPolytope& p) {
        const auto report = bound_report(p);
        py::dict entries;
        for (const auto& e : report.entries) {
          if (e.applicable) entries[bound_info(e.id).key] = *e.value;
        }
        py::dict d;
        d["class"] = to_string(report.realizability);
        d["entries"] = entries;
        d["best_upper"] = report.best_upper ? py::cast(bound_info(report.entries[*report.best_upper].id).key)
                                            : py::none();
        d["best_lower"] = report.best_lower ? py::cast(bound_info(report.entries[*report.best_lower].id).key)
                                            : py::none();
        return d;
      },
      py::arg("polytope"));

  m.def(
      "verify",
      [](const std::string& suite) {
        std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
        for (const auto& r : run_suite(catalog(suite_from_string(suite)))) {
          out.emplace_back(r.claim, r.entry, to_string(r.verdict), r.witness);
        }
        return out;
      },
      py::arg("suite") = "all");
}
