#include "unigamma/kernel.hpp"

#include <cmath>
#include <string>

namespace unigamma {

namespace {

using Wide = long double;

struct LogW {
  Wide modulus_log;  // ln|w|
  Wide arg;          // arg(w)
};

// Principal Log of sigma + i t for sigma > 0.
LogW log_vertical(double sigma, double t) {
  const Wide s = sigma;
  const Wide u = t;
  return {std::log(std::hypot(s, u)), std::atan2(u, s)};
}

WideComplex wide(Complex z) { return {z.real(), z.imag()}; }

// exp(a * Log(w) + c * w^2) with w = sigma + i t.
WideComplex assemble(WideComplex a, const LogW& lw, double sigma, double t, Wide c) {
  const Wide s = sigma;
  const Wide u = t;
  const Wide re = a.real() * lw.modulus_log - a.imag() * lw.arg + c * (s * s - u * u);
  const Wide im = a.real() * lw.arg + a.imag() * lw.modulus_log + c * (2 * s * u);
  const Wide mag = std::exp(re);
  return {mag * std::cos(im), mag * std::sin(im)};
}

Complex narrow(WideComplex v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

void require_contour(double sigma, double t) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("contour abscissa sigma must be positive and finite, got " +
                      std::to_string(sigma));
  }
  if (!std::isfinite(t)) throw DomainError("contour parameter t must be finite");
}

}  // namespace

void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw DomainError(std::string(what) + " must be finite");
}

Complex sin_pi(Complex z) {
  // Reduce Re(z) to [-1, 1); fmod is exact.
  double x = std::fmod(z.real(), 2.0);
  if (x >= 1.0) x -= 2.0;
  if (x < -1.0) x += 2.0;
  const double y = z.imag();
  const double pi = std::numbers::pi;
  double s;
  double c;
  if (x == 0.0 || x == -1.0) {
    s = 0.0;
    c = x == 0.0 ? 1.0 : -1.0;
  } else if (x == 0.5 || x == -0.5) {
    s = x > 0 ? 1.0 : -1.0;
    c = 0.0;
  } else {
    s = std::sin(pi * x);
    c = std::cos(pi * x);
  }
  return {s * std::cosh(pi * y), c * std::sinh(pi * y)};
}

long nearest_nonpositive_integer(Complex z) noexcept {
  const double r = std::round(z.real());
  return r > 0.0 ? 0L : static_cast<long>(r);
}

Complex principal_power(Complex w, Complex a) {
  require_finite(w, "base w");
  require_finite(a, "exponent a");
  if (!(w.real() > 0.0)) {
    throw DomainError("principal_power requires Re(w) > 0 (branch cut hazard)");
  }
  const LogW lw = log_vertical(w.real(), w.imag());
  return narrow(assemble(wide(a), lw, w.real(), w.imag(), 0.0L));
}

WideComplex g_integrand_wide(Complex z, double sigma, double t) {
  require_contour(sigma, t);
  const LogW lw = log_vertical(sigma, t);
  return assemble(WideComplex(1) - 2.0L * wide(z), lw, sigma, t, 1.0L);
}

GIntegrandPairWide g_integrand_pair_wide(Complex z, double sigma, double t) {
  require_contour(sigma, t);
  const LogW lw = log_vertical(sigma, t);
  const WideComplex v = assemble(WideComplex(1) - 2.0L * wide(z), lw, sigma, t, 1.0L);
  const WideComplex two_log_w(2 * lw.modulus_log, 2 * lw.arg);
  return {v, v * two_log_w};
}

Complex g_integrand(Complex z, double sigma, double t) {
  return narrow(g_integrand_wide(z, sigma, t));
}

Complex g_log_integrand(Complex z, double sigma, double t) {
  return narrow(g_integrand_pair_wide(z, sigma, t).log_weighted);
}

GIntegrandPair g_integrand_pair(Complex z, double sigma, double t) {
  const GIntegrandPairWide p = g_integrand_pair_wide(z, sigma, t);
  return {narrow(p.value), narrow(p.log_weighted)};
}

Complex laplace_integrand(Complex z, double sigma, double t) {
  require_contour(sigma, t);
  const LogW lw = log_vertical(sigma, t);
  // e^w contributes sigma + i t to the exponent; fold it in via c = 0.
  WideComplex e = assemble(-wide(z), lw, sigma, t, 0.0L);
  const Wide mag = std::exp(static_cast<Wide>(sigma));
  const Wide u = t;
  return narrow(e * WideComplex(mag * std::cos(u), mag * std::sin(u)));
}

Complex gaussian_moment_integrand(Complex y, double sigma, double t) {
  require_contour(sigma, t);
  const LogW lw = log_vertical(sigma, t);
  return narrow(assemble(-wide(y), lw, sigma, t, 0.5L));
}

Complex loop_integrand_polar(Complex y, double r, double theta) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("polar radius must be positive");
  if (!(std::abs(theta) <= std::numbers::pi / 2)) {
    throw DomainError("polar angle must lie in [-pi/2, pi/2]");
  }
  const Wide rr = r;
  const Wide th = theta;
  const WideComplex a = -wide(y);
  // a * (ln r + i theta) + r^2 e^(2 i theta)
  const Wide lr = std::log(rr);
  const Wide re = a.real() * lr - a.imag() * th + rr * rr * std::cos(2 * th);
  const Wide im = a.real() * th + a.imag() * lr + rr * rr * std::sin(2 * th);
  const Wide mag = std::exp(re);
  return narrow(WideComplex(mag * std::cos(im), mag * std::sin(im)));
}

double g_majorant(Complex z, double sigma, double t) {
  const double p = (1.0 - 2.0 * z.real()) / 2.0;
  const double log_m = p * std::log(sigma * sigma + t * t) +
                       std::numbers::pi * std::abs(z.imag()) + sigma * sigma - t * t;
  return std::exp(log_m);
}

}  // namespace unigamma
