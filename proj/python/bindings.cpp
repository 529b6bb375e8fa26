#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prym/covering.hpp"
#include "prym/error.hpp"
#include "prym/fixed_points.hpp"
#include "prym/prym_report.hpp"
#include "prym/report_io.hpp"

namespace py = pybind11;
using namespace prym;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

py::object fraction(const Rational& value) {
  return py::module_::import("fractions").attr("Fraction")(to_string(value));
}

Rational rational(const py::handle& value) {
  const auto f = py::module_::import("fractions").attr("Fraction")(value);
  return Rational(py::str(f).cast<std::string>());
}

IntMatrix matrix_from(const Rows& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ValidationError("matrix: expected a square matrix");
    for (std::size_t j = 0; j < rows.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return m;
}

py::dict fiber_dict(const SpecialFiberModel& fiber) {
  py::list classes;
  for (const auto& c : fiber.classes) classes.append(c.members);
  py::dict out;
  out["model"] = std::string(model_name(fiber.model));
  out["classes"] = classes;
  out["indices"] = fiber.indices();
  out["w_contribution"] = fiber.w_contribution;
  return out;
}

std::string render(Scenario scenario, const std::optional<std::string>& model) {
  if (model) scenario.model = parse_selection(*model);
  return dump(report_to_json(assemble(scenario), scenario.model));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks of the Prym-Tyurin criterion";
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("compose", [](const std::vector<int>& a, const std::vector<int>& b) {
    return compose(Permutation(a), Permutation(b)).images();
  }, py::arg("a"), py::arg("b"), "a after b, both as 1-based image lists");
  m.def("cycle_type", [](const std::vector<int>& p) { return cycle_type(Permutation(p)).parts; });
  m.def("induced_subset_action", [](const std::vector<int>& p, int k) {
    return induced_subset_action(Permutation(p), k).images();
  }, py::arg("perm"), py::arg("k"));
  m.def("orbits", [](int degree, const std::vector<std::vector<int>>& gens) {
    std::vector<Permutation> perms(gens.begin(), gens.end());
    return orbits(degree, perms);
  }, py::arg("degree"), py::arg("generators"));

  m.def("ramification_degree", [](int degree, const std::vector<std::vector<int>>& fibers, std::int64_t simple) {
    CoveringData cover{degree, 0, {}, simple};
    for (const auto& f : fibers) cover.special_fibers.push_back(make_cycle_type(f));
    return ramification_degree(cover);
  }, py::arg("degree"), py::arg("special_fibers"), py::arg("simple_extra") = 0);
  m.def("riemann_hurwitz_genus", &riemann_hurwitz_genus, py::arg("degree"), py::arg("base_genus"), py::arg("w"));

  m.def("subset_matrix", [](int n) { return build_subset_matrix(n).matrix.rows(); }, py::arg("n"));
  m.def("grid_matrix", [](int size) { return build_grid_matrix(size).matrix.rows(); }, py::arg("m"));
  m.def("discover_identity", [](const Rows& rows) -> py::object {
    const auto id = discover_identity(matrix_from(rows));
    if (!id) return py::none();
    py::dict out;
    out["a"] = fraction(id->a);
    out["b"] = fraction(id->b);
    out["c"] = fraction(id->c);
    out["unique"] = id->unique;
    return out;
  }, py::arg("matrix"));
  m.def("verify_identity", [](const Rows& rows, const py::object& a, const py::object& b, const py::object& c) {
    return verify_identity(matrix_from(rows), rational(a), rational(b), rational(c)).holds;
  }, py::arg("matrix"), py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("exponent", [](const py::object& a, const py::object& b, const py::object& c) {
    const auto r = exponent_from_identity(QuadraticIdentity{rational(a), rational(b), rational(c), true});
    py::dict out;
    out["ok"] = r.ok;
    out["q"] = r.ok ? py::object(py::int_(r.q)) : py::object(py::none());
    out["diagnostic"] = r.diagnostic;
    return out;
  }, py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("merged_fiber", [](int n, const std::vector<std::vector<int>>& blocks) {
    return fiber_dict(subset_fiber(n, SheetPartition::from_blocks(n + 2, blocks), FiberModel::merged));
  }, py::arg("n"), py::arg("blocks"));
  m.def("orbit_fiber", [](int n, const std::vector<int>& perm) {
    return fiber_dict(orbit_fiber(n, Permutation(perm)));
  }, py::arg("n"), py::arg("perm"));

  m.def("run_scenario_json", [](const std::string& text, const std::optional<std::string>& model) {
    return render(scenario_from_json(nlohmann::json::parse(text)), model);
  }, py::arg("scenario"), py::arg("model") = py::none());
  m.def("pn_case_json", [](int n, std::int64_t gx, const std::optional<std::string>& model) {
    return render(pn_case(n, gx), model);
  }, py::arg("n"), py::arg("gx"), py::arg("model") = py::none());
  m.def("hyperelliptic_json", [](std::int64_t g, const std::optional<std::string>& model) {
    return render(hyperelliptic(g), model);
  }, py::arg("g"), py::arg("model") = py::none());
  m.def("identity_report_json", [](const std::string& kind, int parameter) {
    if (kind != "subset" && kind != "grid") throw ValidationError("kind: expected \"subset\" or \"grid\"");
    const auto k = kind == "subset" ? CorrespondenceKind::subset : CorrespondenceKind::grid;
    return dump(identity_to_json(identity_report(k, parameter)));
  }, py::arg("kind"), py::arg("parameter"));
}
