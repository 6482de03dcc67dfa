#include "unigamma/contour.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "unigamma/kernel.hpp"

namespace unigamma {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kHalfPi = std::numbers::pi / 2;

QuadratureResult to_result(const detail::IntervalResult<1>& r, Complex factor) {
  QuadratureResult q;
  q.value = factor * r.values[0];
  q.err_estimate = std::abs(factor) * r.err[0];
  q.evaluations = r.evaluations;
  q.converged = r.converged;
  q.step = r.step;
  q.tol_used = std::abs(factor) * r.tol_used[0];
  q.max_abs_integrand = r.max_abs;
  q.refinement_history = r.history;
  return q;
}

template <class F>
detail::IntervalResult<1> run(F&& f, double a, double b, double h0, const ContourSpec& spec,
                              Complex slope_jump) {
  return detail::trapezoid_interval<1>(
      [&](double x) { return std::array{f(x)}; }, a, b, h0, spec.tol,
      spec.rel_tol, spec.max_refinements, {slope_jump});
}

// f(w) = w^(-y) e^(w^2) at w = r e^(i theta), and its w-derivative
// f'(w) = f(w) (2w - y/w).
struct PointValue {
  Complex w;
  Complex f;
  Complex df;
};

PointValue at_polar(Complex y, double r, double theta) {
  const Complex w = std::polar(r, theta);
  const Complex f = loop_integrand_polar(y, r, theta);
  return {w, f, f * (2.0 * w - y / w)};
}

// Integral over r in [0, R] of w^(-y) e^(w^2) with w = r e^(i theta), via
// r = R e^(-u). The factor r^(-i Im y) then oscillates at the fixed rate Im y
// in u instead of piling up at the origin, and the integrand decays like
// e^(-u (1 - Re y)). The range is cut at U with a tail bound under tol / 16:
// |e^(w^2)| <= 1 on the imaginary axis, so |F(u)| <= e^(theta Im y) r^(1 - Re y).
detail::IntervalResult<1> ray_integral(Complex y, double theta, double big_r,
                                       const ContourSpec& spec) {
  const double decay = 1.0 - y.real();
  const double log_prefactor = theta * y.imag() + decay * std::log(big_r) - std::log(decay);
  const double u_max = std::max(std::log(big_r) + 1.0,
                                (log_prefactor - std::log(spec.tol / 16.0)) / decay);
  const double h0 = std::min(0.25, spec.step);
  auto integrand = [&](double u) -> Complex {
    const double r = big_r * std::exp(-u);
    return loop_integrand_polar(y, r, theta) * r;
  };
  // F(u) = g(r) r with g(r) = f(r e^(i theta)), so F' = -r (g + r g'), g' = f' e^(i theta).
  auto slope = [&](double u) {
    const PointValue p = at_polar(y, big_r * std::exp(-u), theta);
    const double r = std::abs(p.w);
    return -r * (p.f + r * p.df * std::polar(1.0, theta));
  };
  return run(integrand, 0.0, u_max, h0, spec, slope(u_max) - slope(0.0));
}

QuadratureResult integrate_segment_impl(Complex y, Segment path, const ContourSpec& spec) {
  const PolarCorner corner = corner_polar(spec.sigma, spec.half_width);
  const double R = corner.radius;
  const double Theta = corner.angle;

  switch (path) {
    case Segment::AB: {
      // dw = i dt
      const Complex z = (y + 1.0) / 2.0;
      const double sigma = spec.sigma;
      // d/dt f(sigma + it) = i f'(w)
      auto slope = [&](double t) {
        const Complex w{sigma, t};
        return Complex(0.0, 1.0) * g_integrand(z, sigma, t) * (2.0 * w - y / w);
      };
      const double T = spec.half_width;
      auto r = run([&](double t) { return g_integrand(z, sigma, t); }, -T, T, spec.step, spec,
                   slope(T) - slope(-T));
      return to_result(r, kI);
    }
    case Segment::BC:
    case Segment::EA: {
      // w = R e^(i theta), dw = i R e^(i theta) d theta
      const double lo = path == Segment::BC ? Theta : -kHalfPi;
      const double hi = path == Segment::BC ? kHalfPi : -Theta;
      const double h0 = std::min(0.25, spec.step / R);
      // F(theta) = f(w) i w, F' = -w f (2 w^2 - y + 1)
      auto slope = [&](double theta) {
        const PointValue p = at_polar(y, R, theta);
        return -p.w * p.f * (2.0 * p.w * p.w - y + 1.0);
      };
      auto r = run(
          [&](double theta) {
            const Complex dw = kI * R * std::polar(1.0, theta);
            return loop_integrand_polar(y, R, theta) * dw;
          },
          lo, hi, h0, spec, slope(hi) - slope(lo));
      return to_result(r, 1.0);
    }
    case Segment::CD:
    case Segment::DE: {
      if (y.real() > 0.0) {
        throw DomainError(
            "ray through the origin requires Re(y) <= 0 (integrable endpoint at w = 0)");
      }
      // C->D: w = i r, r from R down to 0, dw = i dr  =>  -i * int_0^R
      // D->E: w = -i r, r from 0 up to R, dw = -i dr =>  -i * int_0^R
      const double theta = path == Segment::CD ? kHalfPi : -kHalfPi;
      auto r = ray_integral(y, theta, R, spec);
      return to_result(r, -kI);
    }
  }
  throw DomainError("unknown segment");
}

}  // namespace

std::string_view segment_name(Segment s) noexcept {
  switch (s) {
    case Segment::AB: return "AB";
    case Segment::BC: return "BC";
    case Segment::CD: return "CD";
    case Segment::DE: return "DE";
    case Segment::EA: return "EA";
  }
  return "?";
}

PolarCorner corner_polar(double sigma, double half_width) {
  const double R = std::hypot(half_width, sigma);
  return {R, std::acos(sigma / R)};
}

QuadratureResult integrate_segment(Complex y, Segment path, const ContourSpec& spec) {
  require_finite(y, "y");
  spec.validate();
  try {
    return integrate_segment_impl(y, path, spec);
  } catch (const QuadratureError& e) {
    throw QuadratureError("segment " + std::string(segment_name(path)) + ": " + e.what(),
                          e.node());
  }
}

double ContourLoopReport::magnitude() const noexcept {
  return std::abs(i_ab) + std::abs(i_bc) + std::abs(i_cd) + std::abs(i_de) + std::abs(i_ea);
}

ContourLoopReport contour_loop(Complex y, const ContourSpec& spec) {
  require_finite(y, "y");
  if (y.real() > 0.0) {
    throw DomainError("contour_loop requires Re(y) <= 0 for analyticity inside the contour");
  }
  spec.validate();

  ContourLoopReport rep;
  const PolarCorner corner = corner_polar(spec.sigma, spec.half_width);
  rep.big_r = corner.radius;
  rep.big_theta = corner.angle;

  constexpr std::array<Segment, 5> order{Segment::AB, Segment::BC, Segment::CD, Segment::DE,
                                         Segment::EA};
  std::array<Complex*, 5> slots{&rep.i_ab, &rep.i_bc, &rep.i_cd, &rep.i_de, &rep.i_ea};
  rep.converged = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const QuadratureResult q = integrate_segment(y, order[k], spec);
    *slots[k] = q.value;
    rep.err_estimates[k] = q.err_estimate;
    rep.converged = rep.converged && q.converged;
  }
  rep.loop_sum = rep.i_ab + rep.i_bc + rep.i_cd + rep.i_de + rep.i_ea;
  return rep;
}

}  // namespace unigamma
