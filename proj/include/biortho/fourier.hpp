#pragma once

#include <string_view>

#include "biortho/rational.hpp"
#include "biortho/report.hpp"
#include "biortho/scalar.hpp"

namespace biortho {

struct FourierParams {
  Rational g1, g2, l1, l2;
  long upsilon = 1;

  /// Throws ConstraintError unless all four parameters are positive and v >= 1.
  static FourierParams make(const Rational& g1, const Rational& g2, const Rational& l1, const Rational& l2,
                            long upsilon);
  /// Throws ConstraintError unless g2 + l1 > n + v n.
  void require_degree(long n) const;
};

/// PRINTED is the terminating F[-n, D(v, n-g2-l1); D(v, g1+l2), D(v, 1-g2-z); 1].
/// REPAIRED adds the numerator block D(v, g1-z); only that form is
/// biorthogonal to chi for n >= 1.
enum class PhiForm { Printed, Repaired };
enum class Normalization { TwoPi, TwoPiI };

std::string_view phi_form_name(PhiForm f);
std::string_view normalization_name(Normalization n);

ComplexF eval_phi(const FourierParams& fp, long n, ComplexF z, PhiForm form = PhiForm::Printed);

/// chi_n(z) = 1/(1-l1-z)_n sum_r (S-n)_r (l2-z)_r / ((l1+l2-n)_r r!)
///            * sum_s (-r)_s / s! ((s+g1+l2)/v)_n,   S = g1+g2+l1+l2.
/// Throws PoleError when (1-l1-z)_n or (l1+l2-n)_r vanishes.
ComplexF eval_chi(const FourierParams& fp, long n, ComplexF z);

/// Gamma(g1-ix) Gamma(g2+ix) Gamma(l1-ix) Gamma(l2+ix).
ComplexF fourier_weight(const FourierParams& fp, double x);

/// Closed form of the integral of weight * phi_n(ix) chi_n(-ix) over the
/// real line with the 2 pi normalization (multiply by i for the other).
double fourier_closed_form(const FourierParams& fp, long n);

struct FourierIntegral {
  ComplexF value;
  double cutoff = 0.0;
  long panels = 0;
};

/// Integral of weight * phi_n(ix) chi_m(-ix) over [-X, X], with X doubled
/// until the Stirling envelope of the tail falls below tail_tol * scale.
FourierIntegral fourier_integral(const FourierParams& fp, long n, long m, PhiForm form, double tail_tol = 1e-12,
                                 double cutoff_override = 0.0);

/// Compares the integral with delta_nm times the closed form under the given
/// normalization. Relative residual against the largest of the weight mass and
/// the two diagonal values; PASS at 1e-6.
ResidualReport verify_parseval_pair(const FourierParams& fp, long n, long m, Normalization norm,
                                    PhiForm form = PhiForm::Repaired);

}  // namespace biortho
