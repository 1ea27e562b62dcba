#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "biortho/audit.hpp"
#include "biortho/errors.hpp"
#include "biortho/families.hpp"
#include "biortho/fourier.hpp"
#include "biortho/inner.hpp"
#include "biortho/report.hpp"
#include "biortho/transforms.hpp"

namespace biortho::cli {

namespace {

using nlohmann::json;

// Rational-valued flags are collected as strings and parsed exactly.
struct Params {
  std::string p = "0", q = "0", gamma = "0", w = "1", alpha = "1";
  long upsilon = 1;
  long n = 0;
  long m = 0;
};

void add_family_params(CLI::App* sub, Params& ps) {
  sub->add_option("--p", ps.p, "parameter p (integer, a/b or decimal)");
  sub->add_option("--q", ps.q, "parameter q");
  sub->add_option("--gamma", ps.gamma, "Konhauser parameter");
  sub->add_option("--upsilon", ps.upsilon, "positive integer upsilon");
  sub->add_option("--n", ps.n, "degree index")->required();
}

Polynomial build(FamilyId family, const Params& ps) {
  const Rational p = Rational::parse(ps.p), q = Rational::parse(ps.q);
  switch (family) {
    case FamilyId::M: return make_M(ParamSet::make(p, q, ps.upsilon, ps.n), ps.n);
    case FamilyId::MFrak: return make_Mfrak(ParamSet::make(p, q, ps.upsilon, ps.n), ps.n);
    case FamilyId::KonhauserZ: return make_konhauser_Z(Rational::parse(ps.gamma), ps.upsilon, ps.n);
    case FamilyId::KonhauserY: return make_konhauser_Y(Rational::parse(ps.gamma), ps.upsilon, ps.n);
    case FamilyId::JacobiJ: return make_jacobi_J(p, q, ps.upsilon, ps.n);
    case FamilyId::JacobiK: return make_jacobi_K(p, q, ps.upsilon, ps.n);
    case FamilyId::ClassicM: return make_classic_M(p, q, ps.n);
  }
  throw ConstraintError("unknown family");
}

json doc(const std::string& kind, json payload) {
  return {{"schema_version", 1}, {"kind", kind}, {"payload", std::move(payload)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int fail(std::ostream& out, std::ostream& err, int code, const std::string& kind, const std::string& message) {
  emit(out, {{"schema_version", 1}, {"error", {{"kind", kind}, {"message", message}}}});
  err << "biortho: " << message << '\n';
  return code;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BIORTHO_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConstraintError(std::string("BIORTHO_SEED is not an unsigned integer: ") + env);
    }
  }
  return AuditConfig{}.seed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and audit of finite biorthogonal polynomial pairs", "biortho"};
  app.require_subcommand(1);

  Params ps;
  std::string family_name_arg = "M";
  std::string format = "json";

  auto* coeffs = app.add_subcommand("coeffs", "exact coefficients in ascending degree");
  coeffs->add_option("--family", family_name_arg, "M, Mfrak, Z, Y, J, K or classic");
  add_family_params(coeffs, ps);
  coeffs->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string x_text;
  auto* eval = app.add_subcommand("eval", "evaluate a family member at x");
  eval->add_option("--family", family_name_arg, "family name");
  add_family_params(eval, ps);
  eval->add_option("--x", x_text, "evaluation point")->required();

  auto* inner_cmd = app.add_subcommand("inner", "<M_n, Mfrak_m> against x^q (1+x)^-(p+q)");
  inner_cmd->add_option("--p", ps.p)->required();
  inner_cmd->add_option("--q", ps.q)->required();
  inner_cmd->add_option("--upsilon", ps.upsilon);
  inner_cmd->add_option("--n", ps.n)->required();
  inner_cmd->add_option("--m", ps.m)->required();

  auto* transform = app.add_subcommand("transform", "Laplace and fractional transforms of M_n");
  transform->require_subcommand(1);
  std::string variant = "corrected";
  auto* laplace = transform->add_subcommand("laplace", "closed-form Laplace transform");
  add_family_params(laplace, ps);
  laplace->add_option("--w", ps.w);
  laplace->add_option("--alpha", ps.alpha);
  laplace->add_option("--variant", variant)->check(CLI::IsMember({"printed", "corrected"}));
  bool quadrature = false;
  laplace->add_flag("--quadrature", quadrature, "also compare against adaptive quadrature");

  std::string kind = "integral", order_text = "1/2", endpoint = "0";
  auto* frac = transform->add_subcommand("fractional", "Riemann-Liouville integral or derivative");
  add_family_params(frac, ps);
  frac->add_option("--w", ps.w);
  frac->add_option("--kind", kind)->check(CLI::IsMember({"integral", "derivative"}));
  frac->add_option("--order", order_text, "mu for integrals, lambda for derivatives");
  frac->add_option("--a", endpoint, "left endpoint");

  std::string g1 = "1", g2 = "1", l1 = "1", l2 = "1", norm = "2pi", phi = "repaired";
  auto* fourier = app.add_subcommand("fourier-check", "Fourier biorthogonality integral");
  fourier->add_option("--gamma1", g1);
  fourier->add_option("--gamma2", g2);
  fourier->add_option("--lambda1", l1);
  fourier->add_option("--lambda2", l2);
  fourier->add_option("--upsilon", ps.upsilon);
  fourier->add_option("--n", ps.n);
  fourier->add_option("--m", ps.m);
  fourier->add_option("--normalization", norm)->check(CLI::IsMember({"2pi", "2pi*i"}));
  fourier->add_option("--phi", phi)->check(CLI::IsMember({"printed", "repaired"}));

  std::vector<std::string> claims{"all"};
  std::optional<std::uint64_t> seed;
  AuditConfig config;
  std::string report_path;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run identity audits");
  verify->add_option("--claims", claims, "claim ids, comma separated, or all")->delimiter(',');
  verify->add_option("--seed", seed, "sampling seed (default: BIORTHO_SEED or 7)");
  verify->add_option("--n-max", config.n_max);
  verify->add_option("--trials", config.trials);
  verify->add_option("--report", report_path, "also write the JSON report here");
  verify->add_flag("--list", list, "print the claim ids with their expected verdicts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(out, err, kUsage, "usage", e.what());
  }

  try {
    if (coeffs->parsed()) {
      const Polynomial f = build(parse_family(family_name_arg), ps);
      if (format == "csv") {
        out << "degree,num,den\n";
        for (long k = 0; k <= f.degree(); ++k) {
          const Rational c = f.coeff(k);
          out << k << ',' << c.numerator_string() << ',' << c.denominator_string() << '\n';
        }
      } else {
        json coeff_list = json::array();
        for (long k = 0; k <= f.degree(); ++k) coeff_list.push_back(rational_json(f.coeff(k)));
        emit(out, doc("coefficients", coeff_list));
      }
      return kOk;
    }

    if (eval->parsed()) {
      const Polynomial f = build(parse_family(family_name_arg), ps);
      const Rational x = Rational::parse(x_text);
      // strtod rounds to nearest; the rational conversion would truncate
      const double xd = x_text.find('/') == std::string::npos ? std::strtod(x_text.c_str(), nullptr) : x.to_double();
      json j = doc("scalar", format_double(f.eval(xd)));
      j["exact"] = rational_json(f(x));
      emit(out, j);
      return kOk;
    }

    if (inner_cmd->parsed()) {
      const Rational p = Rational::parse(ps.p), q = Rational::parse(ps.q);
      const ParamSet params = ParamSet::make(p, q, ps.upsilon, std::max(ps.n, ps.m));
      const InnerValue v = inner(WeightSpec::m_weight(p, q), make_M(params, ps.n), make_Mfrak(params, ps.m));
      json j;
      if (const auto abs = v.absolute()) {
        j = doc("scalar", rational_json(*abs));
      } else {
        j = doc("scalar", nullptr);
        j["value"] = format_double(v.normalized.to_double() * v.mass.approx);
      }
      j["normalized"] = rational_json(v.normalized);
      j["mass"] = v.mass.symbol;
      emit(out, j);
      return kOk;
    }

    if (laplace->parsed()) {
      const ParamSet params{Rational::parse(ps.p), Rational::parse(ps.q), ps.upsilon, ps.n};
      if (const auto why = params.violation(); !why.empty()) throw ConstraintError(why);
      const Rational w = Rational::parse(ps.w), alpha = Rational::parse(ps.alpha);
      const LaplaceValue v =
          laplace_closed_form(params, ps.n, w, alpha, variant == "printed" ? Variant::Printed : Variant::Corrected);
      json j = doc("scalar", v.exact ? rational_json(*v.exact) : json(nullptr));
      j["coefficient"] = rational_json(v.coefficient);
      j["factor"] = v.factor_symbol;
      j["value"] = format_double(v.value);
      if (quadrature) {
        const QuadratureCheck qc = laplace_quadrature_check(params, ps.n, w, alpha);
        j["quadrature"] = {{"numeric", format_double(qc.numeric)},
                           {"relative_residual", format_double(qc.relative_residual)},
                           {"cutoff", format_double(qc.cutoff)},
                           {"panels", qc.panels}};
      }
      emit(out, j);
      return kOk;
    }

    if (frac->parsed()) {
      const ParamSet params{Rational::parse(ps.p), Rational::parse(ps.q), ps.upsilon, ps.n};
      if (const auto why = params.violation(); !why.empty()) throw ConstraintError(why);
      const Rational order = Rational::parse(order_text), a = Rational::parse(endpoint);
      const FracOrder op = kind == "integral" ? FracOrder::integral(order, a) : FracOrder::derivative(order, a);
      const FracShift s = fractional_shift(params, ps.n, op, Rational::parse(ps.w));
      json ratios = json::array();
      for (const auto& r : s.coefficient_ratios) ratios.push_back(rational_json(r));
      json j = doc("report", report_json(s.report));
      j["new_q"] = rational_json(s.new_q);
      j["prefactor"] = s.prefactor_exact ? rational_json(*s.prefactor_exact) : json(s.prefactor_symbol);
      j["coefficient_ratios"] = ratios;
      emit(out, j);
      return s.report.passed() ? kOk : kDrift;
    }

    if (fourier->parsed()) {
      const auto fp = FourierParams::make(Rational::parse(g1), Rational::parse(g2), Rational::parse(l1),
                                          Rational::parse(l2), ps.upsilon);
      const ResidualReport r =
          verify_parseval_pair(fp, ps.n, ps.m, norm == "2pi" ? Normalization::TwoPi : Normalization::TwoPiI,
                               phi == "printed" ? PhiForm::Printed : PhiForm::Repaired);
      emit(out, doc("report", report_json(r)));
      return kOk;
    }

    if (verify->parsed()) {
      if (list) {
        json j = json::array();
        for (const auto& c : claim_registry()) {
          j.push_back({{"id", c.id}, {"expected", expectation_name(c.expect)}, {"summary", c.summary}});
        }
        emit(out, doc("claims", j));
        return kOk;
      }
      config.seed = seed ? *seed : default_seed();
      for (const auto& id : claims) {
        if (id != "all") find_claim(id);
      }
      const AuditRun run = run_audit(claims, config);
      const std::string text = run.json.dump(2);
      if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw ConstraintError("cannot write report to " + report_path);
        f << text << '\n';
      }
      out << text << '\n';
      for (const auto& o : run.outcomes) {
        err << o.report.id << ": " << verdict_name(o.report.verdict) << " (expected "
            << expectation_name(o.expect) << ")" << (o.drift ? "  DRIFT" : "") << '\n';
      }
      return run.drift ? kDrift : kOk;
    }
  } catch (const NonConvergence& e) {
    return fail(out, err, kNonConvergence, "non_convergence", e.what());
  } catch (const ConstraintError& e) {
    return fail(out, err, kUsage, "constraint", e.what());
  } catch (const PoleError& e) {
    return fail(out, err, kUsage, "pole", e.what());
  } catch (const DivergentMoment& e) {
    return fail(out, err, kUsage, "divergent_moment", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(out, err, kUsage, "invalid_argument", e.what());
  } catch (const std::domain_error& e) {
    return fail(out, err, kUsage, "domain", e.what());
  }
  return kUsage;
}

}  // namespace biortho::cli
