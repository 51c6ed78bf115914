#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trotter/error_bounds.hpp"
#include "trotter/errors.hpp"
#include "trotter/io.hpp"
#include "trotter/local_observables.hpp"
#include "trotter/product_formula.hpp"
#include "trotter/qmc_bounds.hpp"
#include "trotter/resource_planner.hpp"

namespace py = pybind11;
using namespace trotter;

namespace {

// artifacts cross the boundary as JSON text; the python side parses them
std::string dump(const json& j) { return j.dump(); }

PlanParams params_from(const py::dict& d) {
  PlanParams q;
  for (auto [k, v] : d) {
    std::string key = py::str(k);
    if (key == "n") q.n = v.cast<double>();
    else if (key == "t") q.t = v.cast<double>();
    else if (key == "eps") q.eps = v.cast<double>();
    else if (key == "p") q.p = v.cast<int>();
    else if (key == "alpha") q.alpha = v.cast<double>();
    else if (key == "d") q.d = v.cast<int>();
    else if (key == "k") q.k = v.cast<int>();
    else if (key == "induced_norm") q.induced_norm = v.cast<double>();
    else if (key == "one_norm") q.one_norm = v.cast<double>();
    else if (key == "h_b") q.h_b = v.cast<double>();
    else if (key == "d_prime") q.d_prime = v.cast<double>();
    else if (key == "cc") q.cc = v.cast<double>();
    else throw input_error("unknown plan parameter '" + key + "'");
  }
  return q;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<contract_error>(m, "ContractError", PyExc_RuntimeError);
  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);

  py::class_<PauliSum>(m, "PauliSum")
      .def(py::init<int>())
      .def_static("parse", &PauliSum::parse)
      .def_static("single", &PauliSum::single, py::arg("n"), py::arg("q"), py::arg("op"), py::arg("c") = cplx(1.0))
      .def_property_readonly("n", &PauliSum::n)
      .def("__len__", &PauliSum::size)
      .def("__str__", &PauliSum::to_string)
      .def("__repr__", [](const PauliSum& s) { return "PauliSum(" + s.to_string() + ")"; })
      .def("coefficient", [](const PauliSum& s, const std::string& label) {
        PauliSum one = PauliSum::parse(label);
        if (one.size() != 1) throw input_error("expected a single Pauli string");
        return s.coefficient(one.terms()[0].x, one.terms()[0].z) / one.terms()[0].c;
      })
      .def("to_dense", [](const PauliSum& s) { return to_dense(s); })
      .def("is_hermitian", [](const PauliSum& s) { return is_hermitian(s); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * cplx())
      .def(cplx() * py::self)
      .def("__matmul__", [](const PauliSum& a, const PauliSum& b) { return product(a, b); });

  m.def("commutator", &commutator);
  m.def("nested_commutator", &nested_commutator);
  m.def("support", &support);

  py::class_<GroupedHamiltonian>(m, "GroupedHamiltonian")
      .def_readonly("n", &GroupedHamiltonian::n)
      .def_property_readonly("gamma", [](const GroupedHamiltonian& h) { return h.gamma(); })
      .def("total", &GroupedHamiltonian::total)
      .def("summands", &GroupedHamiltonian::summands)
      .def("to_json", [](const GroupedHamiltonian& h) { return dump(hamiltonian_to_json(h)); })
      .def_static("from_json", [](const std::string& s) { return hamiltonian_from_json(json::parse(s)); });

  m.def("heisenberg_chain", py::overload_cast<int, std::uint64_t>(&heisenberg_chain), py::arg("n"), py::arg("seed"));
  m.def("power_law_heisenberg", py::overload_cast<int, double, std::uint64_t>(&power_law_heisenberg), py::arg("n"),
        py::arg("alpha"), py::arg("seed"));
  m.def("random_fields", &random_fields);
  m.def(
      "group_terms",
      [](const GroupedHamiltonian& h, const std::string& how) { return group_terms(h, parse_grouping(how)); },
      py::arg("h"), py::arg("grouping"));

  m.def("suzuki_u", &suzuki_u);
  m.def("stage_count", &stage_count);
  m.def("one_norm_bound", &one_norm_bound, py::arg("group_norms"), py::arg("stages"), py::arg("p"), py::arg("t"),
        py::arg("anti_hermitian") = true);
  m.def(
      "alpha_tilde",
      [](const GroupedHamiltonian& h, int p, const std::string& mode) {
        return alpha_tilde(h, p, parse_norm_mode(mode)).value;
      },
      py::arg("h"), py::arg("p"), py::arg("mode") = "dense-exact");
  m.def("comm_trotter_number", &comm_trotter_number, py::arg("alpha_tilde"), py::arg("p"), py::arg("t"),
        py::arg("eps"), py::arg("prefactor") = 1.0);
  m.def(
      "fourth_order_bound",
      [](const GroupedHamiltonian& h, double t, const std::string& mode) {
        return dump(bound_report_to_json(fourth_order_bound(h, t, parse_norm_mode(mode))));
      },
      py::arg("h"), py::arg("t") = 1.0, py::arg("mode") = "cluster");
  m.def("bound_trotter_number", py::overload_cast<double, int, double, double, long>(&bound_trotter_number),
        py::arg("c"), py::arg("p"), py::arg("t"), py::arg("eps"), py::arg("r_cap") = 1000000000L);
  m.def(
      "empirical_trotter_number",
      [](const GroupedHamiltonian& h, int p, double t, double eps) {
        FormulaSchedule s = formula_for_order(p, h.gamma());
        Evolver ev(h, TimeMode::real_time);
        SearchOptions o;
        o.start = extrapolated_start(ev, s, t, eps);
        return empirical_trotter_number(ev, s, t, eps, o).r;
      },
      py::arg("h"), py::arg("p"), py::arg("t"), py::arg("eps"));
  m.def(
      "empirical_error",
      [](const GroupedHamiltonian& h, int p, double t, long r) {
        Evolver ev(h, TimeMode::real_time);
        return empirical_error(ev, formula_for_order(p, h.gamma()).sequence(), t, r);
      },
      py::arg("h"), py::arg("p"), py::arg("t"), py::arg("r"));

  m.def(
      "tfim_trotter_number",
      [](const PauliSum& a, const PauliSum& b, double t, double eps) {
        return dump(qmc_plan_to_json(tfim_trotter_number(a, b, t, eps)));
      },
      py::arg("a"), py::arg("b"), py::arg("t"), py::arg("eps"));
  m.def(
      "ferromagnet_trotter_number",
      [](int n, double beta, double eps, double c) {
        return dump(qmc_plan_to_json(ferromagnet_trotter_number(n, beta, eps, c)));
      },
      py::arg("n"), py::arg("beta"), py::arg("eps"), py::arg("c") = 1.0);
  m.def("matchgate", [](char kind, double param) { return matchgate(kind, param); });

  m.def(
      "plan",
      [](const std::string& model, const py::dict& params) {
        return dump(plan_to_json(plan(parse_plan_model(model), params_from(params))));
      },
      py::arg("model"), py::arg("params"));
  m.def(
      "light_cone_plan",
      [](double alpha, int d, int p, double t, double eps, double x0) {
        return dump(light_cone_plan_to_json(light_cone_planner(alpha, d, p, t, eps, x0)));
      },
      py::arg("alpha"), py::arg("d"), py::arg("p"), py::arg("t"), py::arg("eps"), py::arg("x0") = 0.0);
}
