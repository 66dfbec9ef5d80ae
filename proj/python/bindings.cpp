#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdyn/cli.hpp"
#include "qdyn/dynamics.hpp"
#include "qdyn/error.hpp"
#include "qdyn/parse.hpp"

namespace py = pybind11;
using namespace qdyn;

namespace {

std::vector<std::string> coord_strs(const auto& e) {
  std::vector<std::string> out;
  for (const Scalar& c : e.coords()) out.push_back(c.str());
  return out;
}

py::dict class_dict(const ConjClass& c) {
  py::dict d;
  d["T"] = c.trace_str();
  d["N"] = c.norm_str();
  d["central"] = c.central;
  d["exact"] = c.exact;
  return d;
}

py::dict solution_dict(const ClassSolution& s) {
  py::dict d;
  d["variant"] = kind_name(s.kind);
  d["class"] = class_dict(s.cls);
  if (s.point) {
    d["point"] = s.point->str();
    d["coordinates"] = coord_strs(*s.point);
  }
  if (s.approx_point) {
    d["point"] = s.approx_point->str();
    d["coordinates"] = s.approx_point->coord_strs();
    d["residual"] = s.residual;
  }
  if (!s.report.empty()) d["report"] = s.report;
  return d;
}

py::dict roots_dict(const RootsResult& r) {
  py::dict d;
  d["companion"] = r.companion.str();
  py::list classes, result;
  for (const auto& c : r.extraction.classes) classes.append(class_dict(c));
  for (const auto& s : r.solutions) result.append(solution_dict(s));
  d["classes"] = classes;
  if (!r.extraction.unresolved.is_constant()) d["unresolved_factor"] = r.extraction.unresolved.str();
  d["result"] = result;
  return d;
}

SolveMode parse_mode(const std::string& mode) {
  if (mode == "exact") return SolveMode::Exact;
  if (mode == "numeric") return SolveMode::Numeric;
  throw std::invalid_argument("mode must be 'exact' or 'numeric'");
}

NumericOptions numeric_options(unsigned precision, double tolerance) {
  NumericOptions o;
  o.precision_bits = precision;
  o.tolerance = tolerance;
  return o;
}

py::dict verdict_dict(const PeriodicVerdict& v) {
  py::dict d;
  d["r"] = v.r;
  d["status"] = status_name(v.status);
  if (v.status == PeriodicVerdict::Status::RefutedAt) d["n"] = v.refuted_at;
  d["r_fixed"] = v.r_fixed;
  d["value_at_r"] = v.value_at_r;
  if (v.non_commuting_t) d["non_commuting_t"] = *v.non_commuting_t;
  d["checks"] = v.checks;
  d["note"] = v.note;
  return d;
}

template <class E>
void bind_element(py::module_& m, const char* name) {
  py::class_<E>(m, name)
      .def("__str__", &E::str)
      .def("__repr__", [name](const E& e) { return std::string(name) + "(" + e.str() + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("conj", &E::conj)
      .def("inv", &E::inv)
      .def("trace", [](const E& e) { return e.trace().str(); })
      .def("norm", [](const E& e) { return e.norm().str(); })
      .def("coords", [](const E& e) { return coord_strs(e); })
      .def("is_zero", &E::is_zero)
      .def("commutes", [](const E& a, const E& b) { return commutes(a, b); });
}

template <class E>
void bind_poly(py::module_& m, const char* name) {
  using P = Poly<E>;
  py::class_<P>(m, name)
      .def("__str__", &P::str)
      .def("__repr__", [name](const P& p) { return std::string(name) + "(" + p.str() + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def_property_readonly("degree", &P::degree)
      .def("coeffs", [](const P& p) { return p.coeffs(); })
      .def("__call__", [](const P& p, const E& x) { return peval(p, x); })
      .def("compose", [](const P& f, const P& g) { return pcompose(f, g); })
      .def("power", [](const P& f, unsigned t) { return ppow(f, t); })
      .def("iterate", [](const P& f, unsigned n, std::size_t cap) { return iterate_compose(f, n, cap); },
           py::arg("n"), py::arg("degree_cap") = kDefaultDegreeCap)
      .def("star_eval", [](const P& f, const E& x, unsigned n) { return star_eval(f, x, n); })
      .def(
          "orbit",
          [](const P& f, const E& x, unsigned n_max, const std::string& semantics, std::size_t cap) {
            Semantics s = semantics == "compose" ? Semantics::Compose : Semantics::Eval;
            if (semantics != "compose" && semantics != "eval") {
              throw std::invalid_argument("semantics must be 'eval' or 'compose'");
            }
            auto rep = orbit(f, x, n_max, s, cap);
            return py::make_tuple(rep.points, rep.commutes_with_start);
          },
          py::arg("point"), py::arg("n_max") = 4, py::arg("semantics") = "eval",
          py::arg("degree_cap") = kDefaultDegreeCap)
      .def(
          "certify_periodic",
          [](const P& f, const E& x, unsigned r, unsigned n_max, std::size_t cap) {
            return verdict_dict(certify_periodic(f, x, r, n_max, cap));
          },
          py::arg("point"), py::arg("r"), py::arg("n_max") = 4, py::arg("degree_cap") = kDefaultDegreeCap);
}

}  // namespace

PYBIND11_MODULE(_qdyn, m) {
  m.doc() = "Exact dynamics of left polynomials over quaternion and octonion algebras";

  py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  bind_element<Quaternion>(m, "Quaternion");
  bind_element<Octonion>(m, "Octonion");
  bind_poly<Quaternion>(m, "QuatPoly");
  bind_poly<Octonion>(m, "OctPoly");

  py::class_<AlgebraDecl>(m, "Algebra")
      .def(py::init([](const std::string& text) { return AlgebraDecl::parse(text); }),
           py::arg("text") = "quat:-1,-1@Q")
      .def("__str__", &AlgebraDecl::str)
      .def("__repr__", [](const AlgebraDecl& a) { return "Algebra('" + a.str() + "')"; })
      .def_property_readonly("is_octonion", &AlgebraDecl::is_oct)
      .def("element",
           [](const AlgebraDecl& a, const std::string& text) -> py::object {
             if (a.is_oct()) return py::cast(parse_octonion(text, a.oct));
             return py::cast(parse_quaternion(text, a.quat));
           })
      .def("poly", [](const AlgebraDecl& a, const std::string& text) -> py::object {
        if (a.is_oct()) return py::cast(parse_oct_poly(text, a.oct));
        return py::cast(parse_quat_poly(text, a.quat));
      });

  m.def("companion", [](const QuatPoly& g) { return companion(g).str(); });
  m.def(
      "roots",
      [](const QuatPoly& g, const std::string& mode, unsigned precision, double tolerance) {
        return roots_dict(roots(g, parse_mode(mode), numeric_options(precision, tolerance)));
      },
      py::arg("poly"), py::arg("mode") = "exact", py::arg("precision") = 128, py::arg("tolerance") = 1e-9);
  m.def(
      "fixed_points",
      [](const QuatPoly& f, const std::string& mode, unsigned precision, double tolerance) {
        return roots_dict(fixed_points(f, parse_mode(mode), numeric_options(precision, tolerance)));
      },
      py::arg("poly"), py::arg("mode") = "exact", py::arg("precision") = 128, py::arg("tolerance") = 1e-9);
  m.def(
      "octonion_fixed_check",
      [](const OctPoly& f, const Octonion& x, unsigned n_max, std::size_t cap) {
        auto rep = octonion_fixed_check(f, x, n_max, cap);
        py::dict d;
        d["fixed"] = rep.fixed;
        d["values"] = rep.values;
        d["checks"] = rep.checks;
        d["first_failure"] = rep.first_failure ? py::cast(*rep.first_failure) : py::none();
        d["note"] = rep.note;
        return d;
      },
      py::arg("poly"), py::arg("point"), py::arg("n_max") = 4, py::arg("degree_cap") = kDefaultDegreeCap);
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        CliResult r = run_cli(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), "Run one CLI command line; returns (exit_code, stdout, stderr).");
}
