#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gen32/constructions.hpp"
#include "gen32/elements.hpp"
#include "gen32/errors.hpp"
#include "gen32/report.hpp"
#include "gen32/transitivity.hpp"
#include "gen32/verify.hpp"

namespace py = pybind11;
using namespace gen32;

namespace {

PermGroup make_group(std::size_t degree, const std::vector<std::vector<Point>>& gens) {
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.emplace_back(g);
  return PermGroup(degree, std::move(perms));
}

std::vector<std::vector<Point>> images(const std::vector<Perm>& ps) {
  std::vector<std::vector<Point>> out;
  for (const auto& p : ps) out.push_back(p.images());
  return out;
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_gen32, m) {
  m.doc() = "permutation and matrix group checks";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<Indeterminate>(m, "Indeterminate", PyExc_RuntimeError);

  py::class_<Perm>(m, "Perm")
      .def(py::init<std::vector<Point>>())
      .def("images", &Perm::images)
      .def("order", &Perm::order)
      .def("inverse", &Perm::inverse)
      .def("__mul__", &Perm::operator*)
      .def("__call__", &Perm::operator())
      .def("__eq__", &Perm::operator==)
      .def("__hash__", &Perm::hash)
      .def("__repr__", [](const Perm& p) { return "Perm(" + p.to_string() + ")"; });

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init(&make_group), py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("generators", [](const PermGroup& g) { return images(g.generators()); })
      .def("order", &PermGroup::order)
      .def("contains", [](const PermGroup& g, const std::vector<Point>& x) { return g.contains(Perm(x)); })
      .def("orbits", [](const PermGroup& g) { return orbits(g); })
      .def("is_transitive", [](const PermGroup& g) { return is_transitive(g); })
      .def("point_stabilizer", [](const PermGroup& g, Point a) { return point_stabilizer(g, a); })
      .def("rank", [](const PermGroup& g) { return rank(g); })
      .def("is_primitive", [](const PermGroup& g) { return is_primitive(g); })
      .def("is_three_halves", [](const PermGroup& g) { return is_three_halves(g); })
      .def("is_two_transitive", [](const PermGroup& g) { return is_two_transitive(g); })
      .def("is_frobenius", [](const PermGroup& g) { return is_frobenius(g); })
      .def("conjugacy_class_reps", [](const PermGroup& g) { return images(conjugacy_class_reps(g)); });

  py::class_<MatrixGroup>(m, "MatrixGroup")
      .def_property_readonly("dim", &MatrixGroup::dim)
      .def_property_readonly("q", [](const MatrixGroup& g) { return g.field().order(); })
      .def("order", [](const MatrixGroup& g) { return group_order(g); })
      .def("is_irreducible", [](const MatrixGroup& g) { return is_irreducible(g); })
      .def("perm_group", [](const MatrixGroup& g, bool nonzero) {
        return to_perm_group(g, nonzero ? VectorDomain::Nonzero : VectorDomain::All);
      }, py::arg("nonzero") = true);

  m.def("s0_group", &s0_group, py::arg("q"));
  m.def("sl2", &sl2, py::arg("p"));
  m.def("sl2_twisted_check", &sl2_twisted_check, py::arg("p"));
  m.def("table1_matrix_group", &table1_matrix_group, py::arg("i"));
  m.def("table2_matrix_group", &table2_matrix_group, py::arg("i"));
  m.def("affine_group", &affine_group, py::arg("g0"));
  m.def("z_group", [](std::uint32_t mm, std::uint32_t n, std::uint32_t r) { return z_group({mm, n, r}); },
        py::arg("m"), py::arg("n"), py::arg("r"));
  m.def("agl1", &agl1, py::arg("q"));
  m.def("symmetric_group", &symmetric_group, py::arg("n"));
  m.def("cyclic_group", &cyclic_group, py::arg("n"));
  m.def("dicyclic_group", &dicyclic_group, py::arg("n"));
  m.def("read_matrix_group_file", &read_matrix_group_file, py::arg("path"));

  m.def("d_exact", [](const PermGroup& g, std::uint64_t budget) {
    DSearchOptions o;
    o.budget = budget;
    return json_to_py(to_json(d_exact(g, o)));
  }, py::arg("g"), py::arg("budget") = kDefaultBudget);
  m.def("d_affine", [](const MatrixGroup& g0, std::uint64_t budget) {
    DSearchOptions o;
    o.budget = budget;
    return json_to_py(to_json(d_affine(g0, o)));
  }, py::arg("g0"), py::arg("budget") = kDefaultBudget);
  m.def("d_lower_bound_abelian", &d_lower_bound_abelian, py::arg("g"));
  m.def("all_abelian_subgroups_cyclic", &all_abelian_subgroups_cyclic, py::arg("g"));

  m.def("analyze", [](const PermGroup& g, const std::string& name, std::uint64_t budget) {
    DSearchOptions o;
    o.budget = budget;
    return json_to_py(to_json(analyze(name, g, o)));
  }, py::arg("g"), py::arg("name") = "group", py::arg("budget") = kDefaultBudget);

  m.def("reproduce", [](const std::string& suite, std::vector<std::uint32_t> qs, std::uint64_t budget,
                        unsigned jobs) {
    VerifyOptions o;
    o.budget = budget;
    o.jobs = jobs;
    if (qs.empty()) qs = default_lemma7_qs();
    std::vector<ClaimVerdict> vs;
    {
      py::gil_scoped_release release;
      vs = run_suite(suite, o, qs);
    }
    return json_to_py(verdicts_json(suite, vs));
  }, py::arg("suite") = "all", py::arg("q") = std::vector<std::uint32_t>{}, py::arg("budget") = kDefaultBudget,
        py::arg("jobs") = 1);
  m.def("suite_names", &suite_names);
}
