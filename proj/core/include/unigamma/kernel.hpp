#pragma once

// Pointwise integrands on the vertical contour w = sigma + i t.
//
// Every integrand is assembled in log space: the exponent
// a * Log(w) + w^2 is formed first (in extended precision) and a single
// complex exponential is taken at the end. Large |t| or large |Re z| therefore
// never overflows an intermediate power.

#include <complex>

#include "unigamma/types.hpp"

namespace unigamma {

/// w^a = exp(a Log w) on the principal branch. Requires Re(w) > 0, so
/// arg(w) lies strictly inside (-pi/2, pi/2) and the cut is never approached.
Complex principal_power(Complex w, Complex a);

/// w^(1-2z) e^(w^2) at w = sigma + i t.
Complex g_integrand(Complex z, double sigma, double t);

/// w^(1-2z) e^(w^2) * 2 Log(w): the integrand of -G'(z). log(w^2) is taken as
/// 2 Log(w), never Log(w^2).
Complex g_log_integrand(Complex z, double sigma, double t);

/// Both of the above from one exponential.
struct GIntegrandPair {
  Complex value;
  Complex log_weighted;
};
GIntegrandPair g_integrand_pair(Complex z, double sigma, double t);

/// The same values before rounding to double. Near zeros of G the nodes are
/// many orders larger than the sum, and the quadrature sums these instead.
using WideComplex = std::complex<long double>;
WideComplex g_integrand_wide(Complex z, double sigma, double t);
struct GIntegrandPairWide {
  WideComplex value;
  WideComplex log_weighted;
};
GIntegrandPairWide g_integrand_pair_wide(Complex z, double sigma, double t);

/// w^(-z) e^w at w = sigma + i t (classical Laplace integrand).
Complex laplace_integrand(Complex z, double sigma, double t);

/// w^(-y) e^(w^2 / 2) at w = sigma + i t (Gaussian absolute-moment kernel).
Complex gaussian_moment_integrand(Complex y, double sigma, double t);

/// w^(-y) e^(w^2) at w = r e^(i theta), r > 0, |theta| <= pi/2.
/// Used on the arcs and imaginary-axis rays of the closed contour, where
/// Re(w) may be zero; arg(w) is taken as theta itself.
Complex loop_integrand_polar(Complex y, double r, double theta);

/// Upper bound on |w^(1-2z) e^(w^2)| at w = sigma + i t:
/// (sigma^2+t^2)^((1-2 Re z)/2) e^(pi |Im z|) e^(sigma^2 - t^2).
double g_majorant(Complex z, double sigma, double t);

}  // namespace unigamma
