#include "unigamma/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace unigamma {

void ContourSpec::validate() const {
  auto fail = [](const std::string& msg) { throw SpecError("invalid ContourSpec: " + msg); };
  if (!(sigma > 0.0 && sigma <= kMaxSigma)) {
    std::ostringstream os;
    os << "sigma must lie in (0, " << kMaxSigma << "], got " << sigma;
    fail(os.str());
  }
  if (!(half_width >= sigma) || !std::isfinite(half_width)) fail("half_width must be >= sigma");
  if (!(step > 0.0 && step <= half_width)) fail("step must lie in (0, half_width]");
  if (!(tol > 0.0) || !std::isfinite(tol)) fail("tol must be positive");
  if (!(rel_tol >= 0.0) || !std::isfinite(rel_tol)) fail("rel_tol must be nonnegative");
  if (max_refinements < 1) fail("max_refinements must be >= 1");
}

namespace detail {

void throw_non_finite(double node) {
  std::ostringstream os;
  os.precision(17);
  os << "non-finite integrand value at node " << node;
  throw QuadratureError(os.str(), node);
}

}  // namespace detail

double TailMajorant::log_value(double sigma, double t) const {
  const double r2 = sigma * sigma + t * t;
  return log_scale + power * std::log(r2) + rate * (sigma * sigma - t * t);
}

double TailMajorant::log_tail_bound(double sigma, double half_width) const {
  // For t >= T, ln(1 + u) <= u gives
  //   m(t) / m(T) <= exp(-(rate - q)(t^2 - T^2)) <= exp(-2T(rate - q)(t - T)),
  // with q = max(power, 0) / (sigma^2 + T^2). Integrating and doubling for
  // both tails: 2 m(T) / (2T (rate - q)).
  const double T = half_width;
  const double q = std::max(power, 0.0) / (sigma * sigma + T * T);
  const double decay = rate - q;
  if (!(decay > 0.0) || !(T > 0.0)) return std::numeric_limits<double>::infinity();
  return log_value(sigma, T) - std::log(T * decay);
}

TailMajorant g_tail_majorant(Complex z, bool log_weighted) {
  TailMajorant m;
  m.power = (1.0 - 2.0 * z.real()) / 2.0;
  m.log_scale = std::numbers::pi * std::abs(z.imag());
  m.rate = 1.0;
  if (log_weighted) {
    // |2 Log w| <= ln|w|^2 + pi <= (2/e + pi) |w|  for |w| >= 1.
    m.power += 0.5;
    m.log_scale += std::log(2.0 / std::numbers::e + std::numbers::pi);
  }
  return m;
}

Truncation select_truncation(const TailMajorant& majorant, double sigma, double tol) {
  if (!(tol > 0.0)) throw SpecError("select_truncation: tol must be positive");
  if (!(sigma > 0.0)) throw SpecError("select_truncation: sigma must be positive");
  const double target = std::log(tol / 4.0);
  const double start = std::ceil((sigma + 3.0) / kTruncationGrid) * kTruncationGrid;
  for (double T = start; T <= kTruncationCap; T += kTruncationGrid) {
    const double lb = majorant.log_tail_bound(sigma, T);
    if (lb <= target) return {T, std::exp(lb), false};
  }
  return {kTruncationCap, std::exp(majorant.log_tail_bound(sigma, kTruncationCap)), true};
}

Truncation select_truncation(Complex z, double sigma, double tol) {
  require_finite(z, "z");
  return select_truncation(g_tail_majorant(z), sigma, tol);
}

double initial_step(Complex z) { return std::min(0.25, 1.0 / (1.0 + std::abs(z.imag()))); }

}  // namespace unigamma
