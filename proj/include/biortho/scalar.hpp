#pragma once

#include <complex>
#include <vector>

#include "biortho/errors.hpp"
#include "biortho/rational.hpp"

namespace biortho {

using ComplexF = std::complex<double>;

/// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, long k);

/// n! as an exact rational.
Rational factorial(long n);

/// Generalized binomial C(a, j) = (-1)^j (-a)_j / j! for rational a, j >= 0.
Rational binomial(const Rational& a, long j);

/// The block gamma/v, (gamma+1)/v, ..., (gamma+v-1)/v.
/// Satisfies v^(v k) * prod_i (block_i)_k = (gamma)_(v k).
std::vector<Rational> delta_params(long upsilon, const Rational& gamma);

/// Gamma(a + k) / Gamma(a) for integer k of either sign, as a Pochhammer
/// product or its reciprocal. Throws PoleError if a or a + k is a pole.
Rational gamma_ratio(const Rational& a, long k);

/// B(a + j, b + k) / B(a, b), reduced to Pochhammer ratios. No Gamma
/// function is ever evaluated. Throws PoleError when a shifted Gamma argument
/// is a nonpositive integer.
Rational beta_moment_ratio(const Rational& a, const Rational& b, long j, long k);

/// Principal branch of log Gamma(z).
///
/// Re(z) >= 1/2 uses the Lanczos approximation with g = 7 and the nine
/// Godfrey coefficients (see scalar.cpp); Re(z) < 1/2 goes through the
/// reflection formula. The imaginary part is aligned with the branch that
/// satisfies log Gamma(z+1) = log Gamma(z) + log z with principal logs.
/// Throws PoleError at z = 0, -1, -2, ...
ComplexF log_gamma_complex(ComplexF z);

/// Complex rising factorial by direct product.
ComplexF pochhammer(ComplexF a, long k);

}  // namespace biortho
