#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biortho/audit.hpp"
#include "biortho/errors.hpp"
#include "biortho/families.hpp"
#include "biortho/fourier.hpp"
#include "biortho/inner.hpp"
#include "biortho/transforms.hpp"

namespace py = pybind11;
using namespace biortho;

namespace {

// Accepts int, str ("7/2", "0.25") or fractions.Fraction.
Rational to_rational(const py::handle& obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

py::object to_fraction(const Rational& r) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.numerator_string())), py::int_(py::str(r.denominator_string())));
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Polynomial family_poly(const std::string& family, long n, const py::object& p, const py::object& q, long upsilon,
                       const py::object& gamma) {
  const Rational pr = to_rational(p), qr = to_rational(q);
  switch (parse_family(family)) {
    case FamilyId::M: return make_M(ParamSet::make(pr, qr, upsilon, n), n);
    case FamilyId::MFrak: return make_Mfrak(ParamSet::make(pr, qr, upsilon, n), n);
    case FamilyId::KonhauserZ: return make_konhauser_Z(to_rational(gamma), upsilon, n);
    case FamilyId::KonhauserY: return make_konhauser_Y(to_rational(gamma), upsilon, n);
    case FamilyId::JacobiJ: return make_jacobi_J(pr, qr, upsilon, n);
    case FamilyId::JacobiK: return make_jacobi_K(pr, qr, upsilon, n);
    case FamilyId::ClassicM: return make_classic_M(pr, qr, n);
  }
  throw ConstraintError("unknown family");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact finite biorthogonal polynomial pairs and identity audits";

  py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
  py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);
  py::register_exception<DivergentMoment>(m, "DivergentMoment", PyExc_ArithmeticError);

  m.def(
      "coeffs",
      [](const std::string& family, long n, const py::object& p, const py::object& q, long upsilon,
         const py::object& gamma) {
        const Polynomial f = family_poly(family, n, p, q, upsilon, gamma);
        py::list out;
        for (long k = 0; k <= f.degree(); ++k) out.append(to_fraction(f.coeff(k)));
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("p") = 0, py::arg("q") = 0, py::arg("upsilon") = 1,
      py::arg("gamma") = 0, "Exact coefficients in ascending degree as Fractions.");

  m.def(
      "evaluate",
      [](const std::string& family, long n, double x, const py::object& p, const py::object& q, long upsilon,
         const py::object& gamma) { return family_poly(family, n, p, q, upsilon, gamma).eval(x); },
      py::arg("family"), py::arg("n"), py::arg("x"), py::arg("p") = 0, py::arg("q") = 0, py::arg("upsilon") = 1,
      py::arg("gamma") = 0);

  m.def(
      "inner_M",
      [](const py::object& p, const py::object& q, long upsilon, long n, long mm) {
        const Rational pr = to_rational(p), qr = to_rational(q);
        const ParamSet ps = ParamSet::make(pr, qr, upsilon, std::max(n, mm));
        const InnerValue v = inner(WeightSpec::m_weight(pr, qr), make_M(ps, n), make_Mfrak(ps, mm));
        py::dict d;
        d["normalized"] = to_fraction(v.normalized);
        d["mass"] = v.mass.symbol;
        d["value"] = v.absolute() ? to_fraction(*v.absolute()) : py::object(py::none());
        return d;
      },
      py::arg("p"), py::arg("q"), py::arg("upsilon"), py::arg("n"), py::arg("m"),
      "<M_n, Mfrak_m> against x^q (1+x)^-(p+q); value is None when the mass is irrational.");

  m.def(
      "laplace",
      [](const py::object& p, const py::object& q, long upsilon, long n, const py::object& w, const py::object& alpha,
         const std::string& variant) {
        const ParamSet ps{to_rational(p), to_rational(q), upsilon, n};
        if (const auto why = ps.violation(); !why.empty()) throw ConstraintError(why);
        if (variant != "printed" && variant != "corrected") throw ConstraintError("variant is printed or corrected");
        const auto v = laplace_closed_form(ps, n, to_rational(w), to_rational(alpha),
                                           variant == "printed" ? Variant::Printed : Variant::Corrected);
        py::dict d;
        d["coefficient"] = to_fraction(v.coefficient);
        d["exact"] = v.exact ? to_fraction(*v.exact) : py::object(py::none());
        d["value"] = v.value;
        d["factor"] = v.factor_symbol;
        return d;
      },
      py::arg("p"), py::arg("q"), py::arg("upsilon"), py::arg("n"), py::arg("w") = 1, py::arg("alpha") = 1,
      py::arg("variant") = "corrected");

  m.def(
      "fourier_check",
      [](const py::object& g1, const py::object& g2, const py::object& l1, const py::object& l2, long upsilon, long n,
         long mm, const std::string& phi) {
        const auto fp = FourierParams::make(to_rational(g1), to_rational(g2), to_rational(l1), to_rational(l2), upsilon);
        ResidualReport rep;
        {
          py::gil_scoped_release release;
          rep = verify_parseval_pair(fp, n, mm, Normalization::TwoPi,
                                     phi == "printed" ? PhiForm::Printed : PhiForm::Repaired);
        }
        return json_to_py(report_json(rep));
      },
      py::arg("gamma1"), py::arg("gamma2"), py::arg("lambda1"), py::arg("lambda2"), py::arg("upsilon") = 1,
      py::arg("n") = 0, py::arg("m") = 0, py::arg("phi") = "repaired");

  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : claim_registry()) ids.push_back(c.id);
    return ids;
  });

  m.def(
      "verify",
      [](const std::vector<std::string>& claims, std::uint64_t seed, long n_max, long trials) {
        AuditRun run;
        {
          py::gil_scoped_release release;
          run = run_audit(claims, AuditConfig{seed, n_max, trials});
        }
        py::dict d;
        d["drift"] = run.drift;
        d["report"] = json_to_py(run.json);
        return d;
      },
      py::arg("claims") = std::vector<std::string>{"all"}, py::arg("seed") = 7, py::arg("n_max") = 4,
      py::arg("trials") = 50, "Runs the audit; report is the same document the CLI prints.");
}
