#pragma once

#include "rcthyper/params.hpp"

namespace rcthyper {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286;

/// ln 27, the value of R(1/3, 2/3).
inline constexpr double kLog27 = 3.2958368660043291;

/// ln Gamma(z) as a value with its sign; only z > 0 is supported, so the
/// sign is always +1.
struct GammaValue {
  double log_gamma;
  int sign = 1;
};

/// Natural log of Gamma(z) for finite z > 0. Throws DomainError otherwise.
double log_gamma(double z);

GammaValue gamma_value(double z);

/// Digamma Psi(z) = d/dz ln Gamma(z) for finite z > 0.
double digamma(double z);

/// Beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b).
double beta(const Params& p);

/// R(a,b) = -Psi(a) - Psi(b) - 2*gamma; the constant term of the
/// logarithmic expansion of F(a,b;a+b;x) at x = 1.
double r_constant(const Params& p);

}  // namespace rcthyper
