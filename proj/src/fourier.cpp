#include "biortho/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "biortho/errors.hpp"
#include "biortho/quadrature.hpp"

namespace biortho {

FourierParams FourierParams::make(const Rational& g1, const Rational& g2, const Rational& l1, const Rational& l2,
                                  long upsilon) {
  if (g1.sign() <= 0 || g2.sign() <= 0 || l1.sign() <= 0 || l2.sign() <= 0) {
    throw ConstraintError("gamma1, gamma2, lambda1, lambda2 must all be positive");
  }
  if (upsilon < 1) throw ConstraintError("upsilon must be a positive integer");
  return {g1, g2, l1, l2, upsilon};
}

void FourierParams::require_degree(long n) const {
  if (n < 0) throw ConstraintError("degree must be nonnegative");
  if (g2 + l1 <= Rational(n + upsilon * n)) {
    throw ConstraintError("need gamma2 + lambda1 > n + upsilon*n, got " + (g2 + l1).to_string() + " at n=" +
                          std::to_string(n));
  }
}

std::string_view phi_form_name(PhiForm f) { return f == PhiForm::Printed ? "printed" : "repaired"; }
std::string_view normalization_name(Normalization n) { return n == Normalization::TwoPi ? "2pi" : "2pi*i"; }

namespace {

std::vector<ComplexF> block(long v, ComplexF g) {
  std::vector<ComplexF> out;
  for (long i = 0; i < v; ++i) out.push_back((g + static_cast<double>(i)) / static_cast<double>(v));
  return out;
}

// Denominator parameter b with (b)_j = 0 for some j <= n.
bool hits_pole(ComplexF b, long n) {
  if (std::abs(b.imag()) > 1e-12) return false;
  const double r = std::round(b.real());
  return r <= 0.0 && -r < static_cast<double>(n) && std::abs(b.real() - r) <= 1e-12;
}

ComplexF to_c(const Rational& r) { return {r.to_double(), 0.0}; }

}  // namespace

ComplexF eval_phi(const FourierParams& fp, long n, ComplexF z, PhiForm form) {
  if (n < 0) throw ConstraintError("degree must be nonnegative");
  const long v = fp.upsilon;
  std::vector<ComplexF> num{ComplexF(static_cast<double>(-n), 0.0)};
  for (auto b : block(v, to_c(Rational(n) - fp.g2 - fp.l1))) num.push_back(b);
  if (form == PhiForm::Repaired) {
    for (auto b : block(v, to_c(fp.g1) - z)) num.push_back(b);
  }
  std::vector<ComplexF> den = block(v, to_c(fp.g1 + fp.l2));
  for (auto b : block(v, 1.0 - to_c(fp.g2) - z)) den.push_back(b);
  for (auto b : den) {
    if (hits_pole(b, n)) throw PoleError("denominator parameter of phi is a nonpositive integer within range");
  }

  ComplexF sum = 0.0;
  ComplexF term = 1.0;
  for (long j = 0; j <= n; ++j) {
    sum += term;
    for (auto a : num) term *= a + static_cast<double>(j);
    for (auto b : den) term /= b + static_cast<double>(j);
    term /= static_cast<double>(j + 1);
  }
  return sum;
}

ComplexF eval_chi(const FourierParams& fp, long n, ComplexF z) {
  if (n < 0) throw ConstraintError("degree must be nonnegative");
  const ComplexF pre = pochhammer(1.0 - to_c(fp.l1) - z, n);
  if (hits_pole(1.0 - to_c(fp.l1) - z, n) || pre == 0.0) throw PoleError("(1 - lambda1 - z)_n vanishes");
  const Rational base = fp.l1 + fp.l2 - Rational(n);
  if (base.is_nonpositive_integer() && -base.to_long() < n) throw PoleError("(lambda1 + lambda2 - n)_r vanishes");

  const double v = static_cast<double>(fp.upsilon);
  const double s_all = (fp.g1 + fp.g2 + fp.l1 + fp.l2).to_double();
  const double g1l2 = (fp.g1 + fp.l2).to_double();
  ComplexF total = 0.0;
  for (long r = 0; r <= n; ++r) {
    double inner = 0.0;
    double c = 1.0;  // (-r)_s / s!
    for (long s = 0; s <= r; ++s) {
      inner += c * pochhammer(ComplexF((s + g1l2) / v, 0.0), n).real();
      c *= static_cast<double>(s - r) / static_cast<double>(s + 1);
    }
    const ComplexF outer = pochhammer(ComplexF(s_all - n, 0.0), r) * pochhammer(to_c(fp.l2) - z, r) /
                           (pochhammer(to_c(base), r) * factorial(r).to_double());
    total += outer * inner;
  }
  return total / pre;
}

ComplexF fourier_weight(const FourierParams& fp, double x) {
  const ComplexF ix(0.0, x);
  return std::exp(log_gamma_complex(to_c(fp.g1) - ix) + log_gamma_complex(to_c(fp.g2) + ix) +
                  log_gamma_complex(to_c(fp.l1) - ix) + log_gamma_complex(to_c(fp.l2) + ix));
}

double fourier_closed_form(const FourierParams& fp, long n) {
  const Rational s = fp.g1 + fp.g2 + fp.l1 + fp.l2;
  const Rational den = (fp.g2 + fp.l1 - Rational(n + fp.upsilon * n)) * pochhammer(Rational(1) - fp.l1 - fp.l2, n) *
                       pochhammer(-fp.g2 - fp.l1, n);
  if (den.is_zero()) throw PoleError("closed form denominator vanishes");
  const Rational ratio = factorial(n) * pochhammer(Rational(1) - s, n) / den;
  auto lg = [](const Rational& a) { return std::lgamma(a.to_double()); };
  // 2 pi B(g1+g2, l1+l2) Gamma(g1+l2) Gamma(g2+l1+1)
  const double mass = 2.0 * std::numbers::pi *
                      std::exp(lg(fp.g1 + fp.g2) + lg(fp.l1 + fp.l2) - lg(s) + lg(fp.g1 + fp.l2) +
                               lg(fp.g2 + fp.l1 + Rational(1)));
  return ratio.to_double() * mass;
}

FourierIntegral fourier_integral(const FourierParams& fp, long n, long m, PhiForm form, double tail_tol,
                                 double cutoff_override) {
  fp.require_degree(std::max(n, m));
  auto f = [&](double x) {
    return fourier_weight(fp, x) * eval_phi(fp, n, ComplexF(0.0, x), form) * eval_chi(fp, m, ComplexF(0.0, -x));
  };
  const double s = (fp.g1 + fp.g2 + fp.l1 + fp.l2).to_double();
  const double scale = std::max({std::abs(fourier_closed_form(fp, 0)), std::abs(fourier_closed_form(fp, n)),
                                 std::abs(fourier_closed_form(fp, m))});

  double X = cutoff_override;
  if (X <= 0.0) {
    // Past X the integrand behaves like x^(S-2) e^(-2 pi x) times a slowly
    // varying factor, so the tail is about |f(X)| / (2 pi - (S-2)/X) per side.
    X = 4.0;
    for (;;) {
      const double rate = 2.0 * std::numbers::pi - std::max(s - 2.0, 0.0) / X;
      if (rate > 0.0) {
        const double amp = std::abs(fourier_weight(fp, X)) *
                           std::max(1.0, std::abs(eval_phi(fp, n, ComplexF(0.0, X), form) *
                                                  eval_chi(fp, m, ComplexF(0.0, -X))));
        if (8.0 * amp / rate < tail_tol * scale) break;
      }
      X *= 2.0;
      if (X > 4096.0) throw NonConvergence("Fourier tail cutoff did not settle");
    }
  }
  QuadratureStats stats;
  FourierIntegral out;
  out.value = integrate_gk<ComplexF>(f, -X, X, 1e-13 * scale, 32, &stats);
  out.cutoff = X;
  out.panels = stats.panels;
  return out;
}

ResidualReport verify_parseval_pair(const FourierParams& fp, long n, long m, Normalization norm, PhiForm form) {
  fp.require_degree(std::max(n, m));
  ResidualReport rep;
  rep.id = "fourier-parseval";
  rep.variant = std::string(phi_form_name(form));
  rep.mode = Mode::NumericSeries;
  rep.tolerance = 1e-6;
  rep.add_sample(sample({{"gamma1", fp.g1},
                         {"gamma2", fp.g2},
                         {"lambda1", fp.l1},
                         {"lambda2", fp.l2},
                         {"upsilon", Rational(fp.upsilon)},
                         {"n", Rational(n)},
                         {"m", Rational(m)}}));

  const FourierIntegral I = fourier_integral(fp, n, m, form);
  const double scale = std::max({std::abs(fourier_closed_form(fp, 0)), std::abs(fourier_closed_form(fp, n)),
                                 std::abs(fourier_closed_form(fp, m))});
  const double closed = n == m ? fourier_closed_form(fp, n) : 0.0;
  const ComplexF want_2pi(closed, 0.0);
  const ComplexF want_2pii(0.0, closed);
  const double r_2pi = std::abs(I.value - want_2pi) / scale;
  const double r_2pii = std::abs(I.value - want_2pii) / scale;
  const double r = norm == Normalization::TwoPi ? r_2pi : r_2pii;
  rep.residual = r;
  rep.verdict = r <= rep.tolerance ? Verdict::Pass : Verdict::Fail;
  rep.note("normalization " + std::string(normalization_name(norm)));
  rep.note("integral " + format_double(I.value.real()) + " + " + format_double(I.value.imag()) + "i over [-" +
           format_double(I.cutoff) + ", " + format_double(I.cutoff) + "] with " + std::to_string(I.panels) +
           " panels");
  rep.note("relative residual with 2pi: " + format_double(r_2pi) + ", with 2pi*i: " + format_double(r_2pii));
  if (n == m && closed != 0.0 && r_2pii > rep.tolerance && r_2pi <= rep.tolerance) {
    rep.note("the 2pi*i normalization is off by a factor of i");
  }
  return rep;
}

}  // namespace biortho
