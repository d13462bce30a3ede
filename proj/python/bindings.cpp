#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rcthyper/hypergeometric.hpp"
#include "rcthyper/inequality_lab.hpp"
#include "rcthyper/rct_transforms.hpp"
#include "rcthyper/regions.hpp"
#include "rcthyper/special_core.hpp"

namespace py = pybind11;
using namespace rcthyper;

namespace {

ClaimId claim_from(const std::string& name) {
  const auto id = parse_claim(name);
  if (!id) throw py::value_error("unknown claim '" + name + "'");
  return *id;
}

Quotient quotient_from(const std::string& which) {
  if (which == "f") return Quotient::f;
  if (which == "g") return Quotient::g;
  throw py::value_error("which must be 'f' or 'g'");
}

}  // namespace

PYBIND11_MODULE(rcthyper, m) {
  m.doc() = "Zero-balanced Gauss hypergeometric functions, the cubic transformation and inequality checks";

  py::register_exception<MixedPatternError>(m, "MixedPatternError", PyExc_RuntimeError);

  py::class_<Params>(m, "Params")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &Params::a)
      .def_property_readonly("b", &Params::b)
      .def("__repr__", [](const Params& p) {
        return "Params(" + py::repr(py::float_(p.a())).cast<std::string>() + ", " +
               py::repr(py::float_(p.b())).cast<std::string>() + ")";
      });

  py::enum_<Method>(m, "Method")
      .value("direct_series", Method::direct_series)
      .value("log_connection", Method::log_connection)
      .value("terminal_limit", Method::terminal_limit);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("abs_err_estimate", &EvalResult::abs_err_estimate)
      .def_readonly("method", &EvalResult::method)
      .def_readonly("converged", &EvalResult::converged)
      .def_readonly("terms", &EvalResult::terms);

  m.def("log_gamma", &log_gamma, py::arg("z"));
  m.def("digamma", &digamma, py::arg("z"));
  m.def("beta", [](double a, double b) { return beta(Params(a, b)); }, py::arg("a"), py::arg("b"));
  m.def("r_constant", [](double a, double b) { return r_constant(Params(a, b)); }, py::arg("a"), py::arg("b"));
  m.def("pochhammer", &pochhammer, py::arg("a"), py::arg("n"));

  m.def(
      "hyp2f1",
      [](double a, double b, double c, double x) { return hyp2f1(HypParams(a, b, c), x); },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), "F(a,b;c;x) for x in [0,1)");
  m.def(
      "hyp2f1_complement",
      [](double a, double b, double c, double one_minus_x) {
        return hyp2f1(HypParams(a, b, c), UnitArg::from_complement(one_minus_x));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("one_minus_x"),
      "F(a,b;c;1-w) given w = 1-x, accurate when x rounds to 1");
  m.def(
      "hyp2f1_derivative",
      [](double a, double b, double c, double x) { return hyp2f1_derivative(HypParams(a, b, c), x); },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));

  m.def("cubic_forward", &cubic_forward, py::arg("r"));
  m.def("cubic_complement", &cubic_complement, py::arg("r"));
  m.def("z_of_r", &z_of_r, py::arg("r"));
  m.def("verify_rct1", [](const std::vector<double>& g) { return verify_rct1(g); }, py::arg("r_grid"));
  m.def("verify_rct2", [](const std::vector<double>& g) { return verify_rct2(g); }, py::arg("r_grid"));
  m.def("verify_landen", [](const std::vector<double>& g, int which) { return verify_landen(g, which); },
        py::arg("r_grid"), py::arg("which"));
  m.def("verify_differentiated_rct", [](const std::vector<double>& g) { return verify_differentiated_rct(g); },
        py::arg("r_grid"));

  py::class_<RegionLabel>(m, "RegionLabel")
      .def_readonly("in_d1", &RegionLabel::in_d1)
      .def_readonly("in_d2", &RegionLabel::in_d2)
      .def_readonly("in_d3", &RegionLabel::in_d3)
      .def_readonly("in_d4", &RegionLabel::in_d4)
      .def_readonly("in_d5", &RegionLabel::in_d5)
      .def_readonly("in_d6", &RegionLabel::in_d6)
      .def_readonly("is_equality_point", &RegionLabel::is_equality_point)
      .def("__str__", &RegionLabel::to_string);
  m.def("classify", [](double a, double b, double eps) { return classify(Params(a, b), eps); },
        py::arg("a"), py::arg("b"), py::arg("eps") = 0.0);
  m.def("h_sequence", [](double a, double b, long n) { return h_sequence(Params(a, b), n); },
        py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("h_star_sequence", [](double a, double b, long n) { return h_star_sequence(Params(a, b), n); },
        py::arg("a"), py::arg("b"), py::arg("n"));

  py::class_<ScanReport>(m, "ScanReport")
      .def_readonly("params", &ScanReport::params)
      .def_readonly("region", &ScanReport::region)
      .def_property_readonly("claim", [](const ScanReport& r) { return std::string(to_string(r.claim)); })
      .def_readonly("applicable", &ScanReport::applicable)
      .def_readonly("holds", &ScanReport::holds)
      .def_readonly("expects_violation", &ScanReport::expects_violation)
      .def_readonly("region_consistent", &ScanReport::region_consistent)
      .def_readonly("boundary", &ScanReport::boundary)
      .def_readonly("worst_r", &ScanReport::worst_r)
      .def_readonly("worst_margin", &ScanReport::worst_margin)
      .def_readonly("best_r", &ScanReport::best_r)
      .def_readonly("best_margin", &ScanReport::best_margin)
      .def_readonly("n_samples", &ScanReport::n_samples);

  py::class_<TurningPoint>(m, "TurningPoint")
      .def_readonly("r0", &TurningPoint::r0)
      .def_readonly("lo", &TurningPoint::lo)
      .def_readonly("hi", &TurningPoint::hi)
      .def_property_readonly("kind", [](const TurningPoint& t) { return std::string(to_string(t.kind)); })
      .def_readonly("derivative_residual", &TurningPoint::derivative_residual);

  m.def("default_r_grid", &default_r_grid, py::arg("n") = 200);
  m.def("quotient_f", [](double a, double b, double r) { return quotient_f(Params(a, b), r); },
        py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("quotient_g", [](double a, double b, double r) { return quotient_g(Params(a, b), r); },
        py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("j_function", [](double a, double b, double r) { return j_function(Params(a, b), r); },
        py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("j_limit", [](double a, double b) { return j_limit(Params(a, b)); }, py::arg("a"), py::arg("b"));
  m.def(
      "verify_theorem",
      [](const std::string& claim, double a, double b, std::optional<std::vector<double>> grid, double tol) {
        const Params p(a, b);
        const ClaimId id = claim_from(claim);
        return grid ? verify_theorem(id, p, *grid, tol) : verify_theorem(id, p, tol);
      },
      py::arg("claim"), py::arg("a"), py::arg("b"), py::arg("grid") = py::none(), py::arg("tol") = kMarginTol);
  m.def(
      "find_turning_point",
      [](double a, double b, const std::string& which) { return find_turning_point(Params(a, b), quotient_from(which)); },
      py::arg("a"), py::arg("b"), py::arg("which") = "f");
  m.def("sequence_trend", [](const std::vector<double>& seq) { return std::string(to_string(sequence_trend(seq))); },
        py::arg("seq"));
  m.def("coefficient_ratio_f", [](double a, double b, long n) { return coefficient_ratio_f(Params(a, b), n); },
        py::arg("a"), py::arg("b"), py::arg("n_max"));
  m.def("coefficient_ratio_g", [](double a, double b, long n) { return coefficient_ratio_g(Params(a, b), n); },
        py::arg("a"), py::arg("b"), py::arg("n_max"));
}
