#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "theta/bounds.hpp"
#include "theta/errors.hpp"
#include "theta/lambertw.hpp"
#include "theta/thetapoly.hpp"
#include "theta/trinomial.hpp"
#include "theta/verify.hpp"

namespace py = pybind11;

namespace {

// Coefficients lowest degree first, as Python ints of any size.
py::list to_python(const theta::IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) {
    const std::string digits = c.str();
    out.append(py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10)));
  }
  return out;
}

theta::PathLengths paths_of(const std::vector<int>& s) { return theta::PathLengths(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chromatic polynomials and chromatic-root bounds of generalized theta graphs";

  py::register_exception<theta::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<theta::ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<theta::BudgetExceeded>(m, "BudgetExceeded", PyExc_ValueError);
  py::register_exception<theta::InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);
  py::register_exception<theta::CertificateViolation>(m, "CertificateViolation", PyExc_ArithmeticError);

  m.def("chromatic_polynomial", [](const std::vector<int>& s) { return to_python(theta::chromatic_polynomial(paths_of(s))); },
        py::arg("paths"), "Coefficients of the chromatic polynomial in z, lowest degree first.");
  m.def("f_polynomial", [](const std::vector<int>& s) { return to_python(theta::f_polynomial(paths_of(s))); },
        py::arg("paths"));
  m.def("phi_polynomial", [](const std::vector<int>& s) { return to_python(theta::phi_polynomial(paths_of(s))); },
        py::arg("paths"));
  m.def("h_polynomial", [](const std::vector<int>& s) { return to_python(theta::h_polynomial(paths_of(s))); },
        py::arg("paths"));
  m.def("htilde_polynomial", [](const std::vector<int>& s) { return to_python(theta::htilde_polynomial(paths_of(s))); },
        py::arg("paths"));
  m.def("brute_force_chromatic", [](const std::vector<int>& s, int z) { return theta::brute_force_chromatic(paths_of(s), z); },
        py::arg("paths"), py::arg("z"));

  py::class_<theta::BoundReport>(m, "BoundReport")
      .def_property_readonly("paths", [](const theta::BoundReport& r) {
        return std::vector<int>(r.paths.lengths().begin(), r.paths.lengths().end());
      })
      .def_readonly("rho", &theta::BoundReport::rho)
      .def_readonly("r", &theta::BoundReport::r)
      .def_readonly("rtilde", &theta::BoundReport::rtilde)
      .def_readonly("calR", &theta::BoundReport::calR)
      .def("__repr__", [](const theta::BoundReport& r) {
        return "BoundReport(paths=" + r.paths.to_string() + ", rho=" + std::to_string(r.rho) +
               ", r=" + std::to_string(r.r) + ", rtilde=" + std::to_string(r.rtilde) +
               ", calR=" + std::to_string(r.calR) + ")";
      });

  m.def("rho", [](const std::vector<int>& s) { return theta::rho(paths_of(s)); }, py::arg("paths"));
  m.def("bound_report", [](const std::vector<int>& s, double tol) { return theta::bound_report(paths_of(s), tol); },
        py::arg("paths"), py::arg("tolerance") = theta::kDefaultRootTolerance);
  m.def("calR", [](const std::vector<int>& s) { return theta::calR(paths_of(s)); }, py::arg("paths"));
  m.def("calR_2k", &theta::calR_2k, py::arg("k"));

  m.def("lambert_w", [](theta::Complex x, int branch) { return theta::w_complex(x, branch).value; },
        py::arg("x"), py::arg("branch") = 0);

  m.def("k2k_chromatic_roots", [](int k) { return theta::k2k_chromatic_roots(k).roots.roots; }, py::arg("k"),
        "The k nontrivial chromatic roots of K_{2,k}.");
  m.def("xi_solve", [](theta::Complex v, theta::Complex tau) { return theta::xi_solve(v, tau); }, py::arg("v"),
        py::arg("tau"));
  m.def("asymptotic_root", [](int k, double theta_arg, int branch) {
        const auto s = theta::asymptotic_root(k, theta_arg, branch);
        py::dict d;
        d["w"] = s.w;
        d["tau"] = s.tau;
        d["v"] = s.v;
        d["xi"] = s.xi;
        d["z_pred"] = s.z_pred;
        d["z_exact"] = s.z_exact;
        d["rel_error"] = s.rel_error;
        d["xi_ratio"] = s.xi_ratio;
        return d;
      },
      py::arg("k"), py::arg("theta"), py::arg("branch") = 0);

  m.def("verify_theorem_k", [](int k) {
        const auto cert = theta::verify_theorem_k(k);
        py::list comps;
        for (const auto& c : cert.comparisons) comps.append(py::make_tuple(c.label, c.lhs, c.rhs, c.holds));
        return py::make_tuple(cert.overall, comps);
      },
      py::arg("k"), "(overall, [(label, lhs, rhs, holds), ...])");
  m.def("reproduce_table1", [] {
    py::list rows;
    for (const auto& c : theta::reproduce_table1())
      rows.append(py::make_tuple(c.row.paths, c.computed, c.row.printed, c.ok));
    return rows;
  }, "[(paths, computed BoundReport, printed values, ok), ...]");
}
