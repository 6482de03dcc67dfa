#pragma once

// Trapezoid quadrature for integrals along vertical lines w = sigma + i t.
//
// The integrands are analytic in a strip around the real t axis and decay
// like e^(-t^2), so the composite trapezoid rule converges exponentially in
// 1/h. Truncation of the infinite range is chosen from a rigorous bound on the
// integrand's tail; the discretization error is estimated from successive
// step halvings (nodes of the coarser rule are reused).

#include <array>
#include <cmath>
#include <algorithm>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <limits>
#include <string>
#include <vector>

#include "unigamma/types.hpp"

namespace unigamma {

/// Quadrature configuration for one line integral.
struct ContourSpec {
  double sigma = 1.0;       ///< contour abscissa, 0 < sigma <= kMaxSigma
  double half_width = 8.0;  ///< truncation T: integrate over [-T, T]
  double step = 0.25;       ///< initial trapezoid step h0
  double tol = 1e-10;       ///< absolute tolerance on the sum
  double rel_tol = 1e-12;   ///< relative tolerance, scaled by |sum|; 0 disables
  int max_refinements = 12;

  static constexpr double kMaxSigma = 8.0;

  /// Throws SpecError when an invariant is violated.
  void validate() const;
};

struct QuadratureResult {
  Complex value;
  double err_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
  double step = 0.0;      ///< finest step actually used
  double tol_used = 0.0;  ///< max(tol, rel_tol |value|, rounding floor) at termination
  double max_abs_integrand = 0.0;
  std::vector<double> refinement_history;  ///< |S_h - S_{h/2}| per halving
};

/// Neumaier-compensated complex accumulator. Order of additions fixes the
/// result bit for bit.
template <class Real>
class BasicCompensatedSum {
 public:
  using value_type = std::complex<Real>;
  void add(value_type x) noexcept {
    add_part(re_, re_c_, x.real());
    add_part(im_, im_c_, x.imag());
  }
  value_type value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(Real& sum, Real& comp, Real x) noexcept {
    const Real t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  Real re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

using CompensatedSum = BasicCompensatedSum<double>;

namespace detail {

template <std::size_t N>
struct IntervalResult {
  std::array<Complex, N> values{};
  std::array<double, N> err{};
  std::array<double, N> tol_used{};
  std::vector<double> history;  // max over components, per halving
  long evaluations = 0;
  bool converged = false;
  double step = 0.0;
  double max_abs = 0.0;
  std::array<double, N> component_max_abs{};
  std::array<double, N> noise_floor{};
};

[[noreturn]] void throw_non_finite(double node);

// Composite trapezoid on [a, b] with halving refinement. `f` maps a node to
// std::array<std::complex<Real>, N> (Real = double or long double; sums are
// carried in Real). All components share the node set and the run stops only
// when every component meets max(tol, rel_tol |S|, u h sqrt(sum |f|^2)). The
// last term bounds the random walk of per-node errors in h sum f, with u the
// relative accuracy of a node; differences below it are noise, not
// discretization error.
//
// `slope_jump` = f'(b) - f'(a) enables the first Euler-Maclaurin endpoint
// correction, -h^2/12 (f'(b) - f'(a)), for integrands that are not negligible
// at the ends of a finite interval.
// Double nodes are limited by their final rounding. Long double nodes carry
// the error of an exponential whose argument reaches a few tens, so a few tens
// of ulps (measured: under 16 at the zeros z = -9, -10, -12).
template <class Real>
inline constexpr Real node_accuracy = std::is_same_v<Real, double>
                                          ? std::numeric_limits<double>::epsilon()
                                          : 32 * std::numeric_limits<Real>::epsilon();

template <std::size_t N, class F>
IntervalResult<N> trapezoid_interval(F&& f, double a, double b, double h0,
                                     double tol, double rel_tol, int max_refinements,
                                     const std::array<Complex, N>& slope_jump = {}) {
  using Value = typename std::invoke_result_t<F&, double>::value_type;
  using Real = typename Value::value_type;
  static_assert(std::is_floating_point_v<Real>);

  IntervalResult<N> out;
  const double length = b - a;
  long n = std::max(1L, static_cast<long>(std::ceil(length / h0 - 1e-12)));
  double h = length / static_cast<double>(n);

  std::array<BasicCompensatedSum<Real>, N> raw;  // sum of f at all nodes, endpoints halved
  std::array<long double, N> sum_sq{};
  auto eval = [&](double x) {
    auto v = f(x);
    ++out.evaluations;
    for (std::size_t k = 0; k < N; ++k) {
      if (!std::isfinite(v[k].real()) || !std::isfinite(v[k].imag())) throw_non_finite(x);
      const long double m = std::abs(std::complex<long double>(v[k]));
      out.component_max_abs[k] =
          std::max(out.component_max_abs[k], static_cast<double>(m));
      sum_sq[k] += m * m;
    }
    return v;
  };

  {
    const auto fa = eval(a);
    const auto fb = eval(b);
    for (std::size_t k = 0; k < N; ++k) raw[k].add(Real(0.5) * (fa[k] + fb[k]));
    for (long i = 1; i < n; ++i) {
      const auto v = eval(a + static_cast<double>(i) * h);
      for (std::size_t k = 0; k < N; ++k) raw[k].add(v[k]);
    }
  }
  auto level_sum = [&](std::size_t k) {
    const Value jump(slope_jump[k].real(), slope_jump[k].imag());
    const Value s = Real(h) * raw[k].value() - Real(h * h / 12.0) * jump;
    return Complex(static_cast<double>(s.real()), static_cast<double>(s.imag()));
  };
  std::array<Complex, N> prev;
  for (std::size_t k = 0; k < N; ++k) prev[k] = level_sum(k);

  for (int level = 1; level <= max_refinements; ++level) {
    const double half = 0.5 * h;
    for (long i = 0; i < n; ++i) {
      const auto v = eval(a + (static_cast<double>(i) + 0.5) * h);
      for (std::size_t k = 0; k < N; ++k) raw[k].add(v[k]);
    }
    n *= 2;
    h = half;

    bool all_ok = true;
    double worst = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
      const Complex cur = level_sum(k);
      const double diff = std::abs(cur - prev[k]);
      out.noise_floor[k] =
          static_cast<double>(node_accuracy<Real> * h * std::sqrt(sum_sq[k]));
      // A difference inside the noise says nothing about the error below it.
      out.err[k] = std::max(diff, out.noise_floor[k]);
      out.tol_used[k] = std::max({tol, rel_tol * std::abs(cur), out.noise_floor[k]});
      worst = std::max(worst, diff);
      if (!(out.err[k] <= out.tol_used[k])) all_ok = false;
      prev[k] = cur;
    }
    out.history.push_back(worst);
    if (all_ok) {
      out.converged = true;
      break;
    }
  }
  out.values = prev;
  out.step = h;
  for (double m : out.component_max_abs) out.max_abs = std::max(out.max_abs, m);
  return out;
}

}  // namespace detail

/// Bound on an integrand's modulus along the line:
///   m(t) = exp(log_scale) (sigma^2 + t^2)^power exp(rate (sigma^2 - t^2)).
struct TailMajorant {
  double power = 0.0;
  double log_scale = 0.0;
  double rate = 1.0;

  double log_value(double sigma, double t) const;
  /// Natural log of a rigorous upper bound on the two tails
  /// int_{|t| > T} m(t) dt. +inf when the bound does not apply at this T.
  double log_tail_bound(double sigma, double half_width) const;
};

/// Majorant of |w^(1-2z) e^(w^2)|, optionally times |2 Log w|.
TailMajorant g_tail_majorant(Complex z, bool log_weighted = false);

struct Truncation {
  double half_width = 0.0;
  double tail_bound = 0.0;
  bool cap_reached = false;
};

inline constexpr double kTruncationGrid = 0.5;
inline constexpr double kTruncationCap = 200.0;

/// Smallest T on a 0.5 grid with T >= sigma + 3 whose two-sided tail bound
/// is at most tol / 4. Returns T = 200 with cap_reached set if none is found.
Truncation select_truncation(const TailMajorant& majorant, double sigma, double tol);
Truncation select_truncation(Complex z, double sigma, double tol);

/// Initial step policy: min(0.25, 1 / (1 + |Im z|)).
double initial_step(Complex z);

/// Integrates f(t) over [-T, T] with the spec's step, tolerance and
/// refinement limit. f returns std::complex<double> or std::complex<long double>;
/// the sum is carried in that type.
template <class F>
QuadratureResult trapezoid_line(F&& f, const ContourSpec& spec) {
  spec.validate();
  auto r = detail::trapezoid_interval<1>(
      [&](double t) { return std::array{f(t)}; }, -spec.half_width,
      spec.half_width, spec.step, spec.tol, spec.rel_tol, spec.max_refinements);
  QuadratureResult q;
  q.value = r.values[0];
  q.err_estimate = r.err[0];
  q.evaluations = r.evaluations;
  q.converged = r.converged;
  q.step = r.step;
  q.tol_used = r.tol_used[0];
  q.max_abs_integrand = r.max_abs;
  q.refinement_history = std::move(r.history);
  return q;
}

/// Two integrals over the same node set; refinement continues until both
/// converge. f returns a std::array of two complex values.
template <class F>
std::array<QuadratureResult, 2> trapezoid_line_pair(F&& f, const ContourSpec& spec) {
  spec.validate();
  auto r = detail::trapezoid_interval<2>(std::forward<F>(f), -spec.half_width,
                                         spec.half_width, spec.step, spec.tol,
                                         spec.rel_tol, spec.max_refinements);
  std::array<QuadratureResult, 2> out;
  for (std::size_t k = 0; k < 2; ++k) {
    out[k].value = r.values[k];
    out[k].err_estimate = r.err[k];
    out[k].evaluations = r.evaluations;
    out[k].converged = r.converged;
    out[k].step = r.step;
    out[k].tol_used = r.tol_used[k];
    out[k].max_abs_integrand = r.component_max_abs[k];
    out[k].refinement_history = r.history;
  }
  return out;
}

}  // namespace unigamma
