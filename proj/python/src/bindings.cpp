// Python bindings. Reports cross the boundary as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gradalg/algebra_file.hpp"
#include "gradalg/azumaya.hpp"
#include "gradalg/certificate.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/corpus.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/graded_module.hpp"
#include "gradalg/k_zero.hpp"

namespace py = pybind11;
using namespace gradalg;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

GradeGroup make_group(std::size_t free_rank, std::vector<long> torsion) { return GradeGroup(free_rank, std::move(torsion)); }

// An int for rank-one groups, otherwise a sequence of ints.
GroupElement make_degree(const GradeGroup& g, const py::handle& d) {
  if (py::isinstance<py::int_>(d)) return g.element({d.cast<long>()});
  return g.element(d.cast<std::vector<long>>());
}

std::vector<GroupElement> make_shifts(const GradeGroup& g, const py::iterable& shifts) {
  std::vector<GroupElement> out;
  for (auto s : shifts) out.push_back(make_degree(g, s));
  return out;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["verdict"] = to_string(v.truth);
  d["reason"] = v.reason;
  d["certificate"] = to_py(v.certificate);
  return d;
}

mpq_class make_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("cannot read rational '" + s + "'");
  q.canonicalize();
  return q;
}

EnumerationOptions enum_opts(std::uint64_t max_enum) {
  EnumerationOptions o;
  o.max_enum = max_enum;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with group-graded algebras";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<StructuralError>(m, "StructuralError", error.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", error.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<FactorizationCapError>(m, "FactorizationCapError", error.ptr());
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", error.ptr());

  py::class_<GradeGroup>(m, "GradeGroup")
      .def(py::init(&make_group), py::arg("free_rank") = 0, py::arg("torsion") = std::vector<long>{})
      .def_static("cyclic", &GradeGroup::cyclic)
      .def_property_readonly("rank", &GradeGroup::rank)
      .def_property_readonly("is_finite", &GradeGroup::is_finite)
      .def("__repr__", [](const GradeGroup& g) { return "GradeGroup(" + g.describe() + ")"; });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("cyclic", &FiniteGroup::cyclic)
      .def_static("dihedral", &FiniteGroup::dihedral, "Dihedral group of order 2n")
      .def_static("symmetric", &FiniteGroup::symmetric)
      .def_static("alternating", &FiniteGroup::alternating)
      .def_static("quaternion8", &FiniteGroup::quaternion8)
      .def_static("direct_product", &FiniteGroup::direct_product)
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "FiniteGroup(" + g.name() + ")"; });

  py::class_<GradedAlgebra>(m, "Algebra")
      .def_property_readonly("dim", &GradedAlgebra::dim)
      .def_property_readonly("field", [](const GradedAlgebra& a) { return a.field().name(); })
      .def_property_readonly("group", &GradedAlgebra::group)
      .def_property_readonly("degrees",
                             [](const GradedAlgebra& a) {
                               std::vector<std::string> out;
                               for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.group().format(a.degree(i)));
                               return out;
                             })
      .def_property_readonly("provenance", [](const GradedAlgebra& a) { return to_py(a.provenance()); })
      .def("to_json", [](const GradedAlgebra& a) { return to_py(to_json(a)); })
      .def_static("from_json", [](const py::object& o) { return from_json(from_py(o)); })
      .def("same_table", &GradedAlgebra::same_table)
      .def("__repr__", [](const GradedAlgebra& a) {
        return "Algebra(dim=" + std::to_string(a.dim()) + ", field=" + a.field().name() +
               ", group=" + a.group().describe() + ")";
      });

  m.def("parse", &parse, py::arg("text"));
  m.def("emit", &emit, py::arg("algebra"));
  m.def("load", &load_algebra, py::arg("path"));
  m.def("save", &save_algebra, py::arg("algebra"), py::arg("path"));
  m.def("validate", [](const GradedAlgebra& a) {
    auto r = validate(a);
    py::dict d;
    d["ok"] = r.ok;
    d["violation"] = r.violation;
    d["message"] = r.message;
    return d;
  });

  m.def(
      "group_algebra", [](const GradeGroup& g, const std::string& k) { return group_algebra(field_from_name(k), g); },
      py::arg("group"), py::arg("field") = "Q");
  m.def(
      "group_algebra", [](const FiniteGroup& g, const std::string& k) { return group_algebra(field_from_name(k), g); },
      py::arg("group"), py::arg("field") = "Q");
  m.def(
      "quaternion_algebra",
      [](const std::string& a, const std::string& b, const std::string& k) {
        return quaternion_algebra(field_from_name(k), make_rational(a), make_rational(b));
      },
      py::arg("a"), py::arg("b"), py::arg("field") = "Q", "Quaternion algebra (a, b / k); a and b as strings like \"-1\" or \"1/2\"");
  m.def(
      "matrix_shift",
      [](const GradedAlgebra& a, const py::iterable& shifts) { return matrix_shift(a, make_shifts(a.group(), shifts)); },
      py::arg("algebra"), py::arg("shifts"));
  m.def("tensor_product", &tensor_product);
  m.def("tensor_product_over_base", &tensor_product_over_base);
  m.def("opposite", &opposite);
  m.def("corpus_instance", &corpus_instance, py::arg("name"));
  m.def("corpus_names", [] {
    std::vector<std::string> out;
    for (const auto& e : standard_corpus()) out.push_back(e.name);
    return out;
  });

  m.def(
      "is_graded_simple", [](const GradedAlgebra& a) { return verdict_dict(is_graded_simple(a)); }, py::arg("algebra"));
  m.def(
      "is_graded_division_ring",
      [](const GradedAlgebra& a, std::uint64_t n) { return verdict_dict(is_graded_division_ring(a, enum_opts(n))); },
      py::arg("algebra"), py::arg("max_enum") = 200000);
  m.def(
      "is_graded_field",
      [](const GradedAlgebra& a, std::uint64_t n) { return verdict_dict(is_graded_field(a, enum_opts(n))); },
      py::arg("algebra"), py::arg("max_enum") = 200000);
  m.def(
      "is_graded_central_simple",
      [](const GradedAlgebra& a, std::uint64_t n) { return verdict_dict(is_graded_central_simple(a, enum_opts(n))); },
      py::arg("algebra"), py::arg("max_enum") = 200000);
  m.def(
      "is_strongly_graded", [](const GradedAlgebra& a) { return verdict_dict(is_strongly_graded(a)); },
      py::arg("algebra"));
  m.def(
      "is_graded_azumaya",
      [](const GradedAlgebra& a) {
        auto r = is_graded_azumaya(a);
        py::dict d = to_py(r.to_json(a.group()));
        d["verdict"] = to_string(r.verdict);
        d["certificate"] = to_py(azumaya_certificate(r));
        return d;
      },
      py::arg("algebra"));

  m.def("k0_ungraded", [](const GradedAlgebra& a) { return to_py(k0_ungraded(a).to_json()); });
  m.def(
      "k0gr", [](const GradedAlgebra& a, const std::string& r) { return to_py(k0gr(a, route_from_string(r)).to_json()); },
      py::arg("algebra"), py::arg("route") = "auto");
  m.def(
      "k0gr_map",
      [](const GradedAlgebra& a, const std::string& r) {
        auto map = k0gr_map(a, route_from_string(r));
        py::dict d = to_py(map.to_json());
        d["certificate"] = to_py(smith_certificate(map.matrix));
        return d;
      },
      py::arg("algebra"), py::arg("route") = "auto");
  m.def(
      "torsion_check",
      [](const GradedAlgebra& a, const std::string& r) {
        return to_py(torsion_check(a, route_from_string(r)).to_json(a.group()));
      },
      py::arg("algebra"), py::arg("route") = "auto");
  m.def(
      "dfunctor_check",
      [](const GradedAlgebra& a, const py::iterable& shifts, const std::string& r) {
        return to_py(dfunctor_axiom_suite(a, make_shifts(a.group(), shifts), route_from_string(r)).to_json());
      },
      py::arg("algebra"), py::arg("shifts"), py::arg("route") = "auto");
  m.def(
      "morita_check",
      [](const GradedAlgebra& a, const py::iterable& shifts) {
        return to_py(verify_morita_identities(a, make_shifts(a.group(), shifts)).to_json());
      },
      py::arg("algebra"), py::arg("shifts"));
  m.def(
      "verify_certificate",
      [](const GradedAlgebra& a, const py::object& cert) { return to_py(verify_certificate(a, from_py(cert)).to_json()); },
      py::arg("algebra"), py::arg("certificate"));
  m.def(
      "demeyer_janusz",
      [](const FiniteGroup& g, const std::string& k) { return to_py(demeyer_janusz(field_from_name(k), g).to_json()); },
      py::arg("group"), py::arg("field") = "Q");
}
