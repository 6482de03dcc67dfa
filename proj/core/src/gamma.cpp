#include "unigamma/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "unigamma/kernel.hpp"

namespace unigamma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Tail share of the tolerance; the rest goes to discretization.
constexpr double kTailShare = 0.25;

struct Resolved {
  ContourSpec spec;
  double tail_bound = 0.0;
  bool capped = false;
};

Resolved resolve(Complex z, const SpecOverrides& o, bool log_weighted) {
  require_finite(z, "z");
  Resolved r;
  ContourSpec& s = r.spec;
  s.sigma = o.sigma.value_or(kDefaultSigma);
  s.tol = o.tol.value_or(kDefaultTol);
  s.rel_tol = o.rel_tol.value_or(kDefaultRelTol);
  s.max_refinements = o.max_refinements.value_or(kDefaultMaxRefinements);
  if (!(s.sigma > 0.0 && s.sigma <= ContourSpec::kMaxSigma)) {
    std::ostringstream os;
    os << "sigma must lie in (0, " << ContourSpec::kMaxSigma << "] (e^(sigma^2) overflow), got "
       << s.sigma;
    throw SpecError(os.str());
  }
  if (!(s.tol > 0.0)) throw SpecError("tol must be positive");

  const TailMajorant maj = g_tail_majorant(z, log_weighted);
  if (o.half_width) {
    s.half_width = *o.half_width;
    r.tail_bound = std::exp(maj.log_tail_bound(s.sigma, s.half_width));
  } else {
    const Truncation t = select_truncation(maj, s.sigma, s.tol);
    s.half_width = t.half_width;
    r.tail_bound = t.tail_bound;
    r.capped = t.cap_reached;
  }
  s.step = o.step.value_or(initial_step(z));
  s.validate();
  return r;
}

ContourSpec discretization_spec(const ContourSpec& s) {
  ContourSpec q = s;
  q.tol = (1.0 - kTailShare) * s.tol;
  return q;
}

// For |Im z| beyond the accuracy box the integrand carries e^(pi |Im z|) while
// the result does not; if rounding of the largest node already exceeds the
// requested tolerance the value cannot be trusted.
bool cancellation_ok(Complex z, const QuadratureResult& q, const ContourSpec& spec) {
  if (std::abs(z.imag()) <= kCancellationImLimit) return true;
  const double requested = std::max(spec.tol, spec.rel_tol * std::abs(q.value));
  return q.max_abs_integrand * kEps <= requested;
}

EvalResult finish(Complex z, const Resolved& r, const QuadratureResult& q, Complex scale) {
  EvalResult out;
  out.z = z;
  out.value = scale * q.value;
  out.err_estimate = std::abs(scale) * (q.err_estimate + r.tail_bound);
  out.spec_used = r.spec;
  out.spec_used.step = q.step;
  out.evaluations = q.evaluations;
  out.truncation_capped = r.capped;
  out.converged = q.converged && !r.capped && cancellation_ok(z, q, r.spec);
  return out;
}

QuadratureResult g_quadrature(Complex z, const ContourSpec& spec) {
  const double sigma = spec.sigma;
  return trapezoid_line([&](double t) { return g_integrand_wide(z, sigma, t); },
                        discretization_spec(spec));
}

[[noreturn]] void throw_pole(const char* fn, Complex z, double magnitude) {
  const long pole = nearest_nonpositive_integer(z);
  std::ostringstream os;
  os.precision(17);
  os << fn << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag()
     << "i): too close to the pole at z = " << pole << " (|G(z)| = " << magnitude << ")";
  throw PoleError(os.str(), pole);
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
template <int N>
struct GaussLegendre {
  std::array<double, N> x{};
  std::array<double, N> w{};

  GaussLegendre() {
    for (int i = 0; i < (N + 1) / 2; ++i) {
      double z = std::cos(kPi * (i + 0.75) / (N + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = 0.0;
        for (int j = 1; j <= N; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
        }
        dp = N * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = -z;
      x[N - 1 - i] = z;
      w[i] = w[N - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const GaussLegendre<20>& gauss20() {
  static const GaussLegendre<20> rule;
  return rule;
}

// Composite Gauss-Legendre over [-T, T] with panels of width `panel`.
Complex laplace_panels(Complex z, double sigma, double T, double panel, long& evals) {
  const auto& gl = gauss20();
  const long n = static_cast<long>(std::llround(2.0 * T / panel));
  const double half = 0.5 * panel;
  CompensatedSum sum;
  for (long p = 0; p < n; ++p) {
    const double mid = -T + (static_cast<double>(p) + 0.5) * panel;
    for (int k = 0; k < 20; ++k) {
      const double t = mid + half * gl.x[k];
      const Complex v = laplace_integrand(z, sigma, t);
      if (!is_finite(v)) detail::throw_non_finite(t);
      sum.add(gl.w[k] * v);
      ++evals;
    }
  }
  return half * sum.value();
}

struct TailSeries {
  Complex value;
  double remainder;
};

// F(w) = e^w w^(-z) sum_k (z)_k w^(-k), an asymptotic antiderivative of
// w^(-z) e^w; the series is cut at its smallest term.
TailSeries laplace_antiderivative(Complex z, Complex w) {
  const Complex lead = std::exp(w - z * std::log(w));
  Complex term = 1.0;
  Complex sum = 0.0;
  double last = std::abs(term);
  for (int k = 0; k < 400; ++k) {
    sum += term;
    const Complex next = term * (z + static_cast<double>(k)) / w;
    const double mag = std::abs(next);
    if (mag > last || mag <= kEps * 1e-2 * std::abs(sum)) {
      last = mag;
      break;
    }
    term = next;
    last = mag;
  }
  return {lead * sum, std::abs(lead) * last};
}

}  // namespace

ContourSpec resolve_spec(Complex z, const SpecOverrides& overrides, bool log_weighted) {
  return resolve(z, overrides, log_weighted).spec;
}

EvalResult g_integral(Complex z, const SpecOverrides& overrides) {
  const Resolved r = resolve(z, overrides, false);
  return finish(z, r, g_quadrature(z, r.spec), 1.0);
}

EvalResult g_tilde(Complex y, const SpecOverrides& overrides) {
  require_finite(y, "y");
  EvalResult out = g_integral((y + 1.0) / 2.0, overrides);
  out.z = y;
  return out;
}

EvalResult recip_gamma(Complex z, const SpecOverrides& overrides) {
  const Resolved r = resolve(z, overrides, false);
  return finish(z, r, g_quadrature(z, r.spec), 1.0 / kPi);
}

EvalResult gamma(Complex z, const SpecOverrides& overrides) {
  EvalResult g = g_integral(z, overrides);
  const double mag = std::abs(g.value);
  if (mag < std::max(kPoleTol, g.err_estimate)) throw_pole("gamma", z, mag);
  EvalResult out = g;
  out.value = kPi / g.value;
  // d(pi/G) = -pi/G^2 dG
  out.err_estimate = kPi * g.err_estimate / (mag * mag);
  return out;
}

EvalResult gamma_sin_pi(Complex z, const SpecOverrides& overrides) {
  require_finite(z, "z");
  EvalResult out = g_integral(1.0 - z, overrides);
  out.z = z;
  return out;
}

EvalResult digamma(Complex z, const SpecOverrides& overrides) {
  // Truncate for the heavier (log-weighted) integrand; both share the nodes.
  const Resolved r = resolve(z, overrides, true);
  const double sigma = r.spec.sigma;
  const auto pair = trapezoid_line_pair(
      [&](double t) {
        const GIntegrandPairWide p = g_integrand_pair_wide(z, sigma, t);
        return std::array<WideComplex, 2>{p.log_weighted, p.value};
      },
      discretization_spec(r.spec));
  const QuadratureResult& num = pair[0];
  const QuadratureResult& den = pair[1];

  const double den_mag = std::abs(den.value);
  const double den_err = den.err_estimate + r.tail_bound;
  if (den_mag < std::max(kPoleTol, den_err)) throw_pole("digamma", z, den_mag);

  EvalResult out;
  out.z = z;
  out.value = num.value / den.value;
  const double num_err = num.err_estimate + r.tail_bound;
  out.err_estimate = (num_err + std::abs(out.value) * den_err) / den_mag;
  out.spec_used = r.spec;
  out.spec_used.step = den.step;
  out.evaluations = den.evaluations;
  out.truncation_capped = r.capped;
  out.converged = num.converged && den.converged && !r.capped &&
                  cancellation_ok(z, num, r.spec) && cancellation_ok(z, den, r.spec);
  return out;
}

EvalResult euler_mascheroni(const SpecOverrides& overrides) {
  const Complex one{1.0, 0.0};
  const Resolved r = resolve(one, overrides, true);
  const double sigma = r.spec.sigma;
  const QuadratureResult q = trapezoid_line(
      [&](double t) { return g_integrand_pair_wide(one, sigma, t).log_weighted; }, discretization_spec(r.spec));
  EvalResult out = finish(one, r, q, -1.0 / kPi);
  out.z = one;
  return out;
}

EvalResult laplace_recip_gamma(Complex z, const SpecOverrides& overrides) {
  require_finite(z, "z");
  if (!(z.real() > 0.0)) {
    throw DomainError(
        "laplace_recip_gamma: the Laplace integral represents 1/Gamma(z) only for Re(z) > 0");
  }
  ContourSpec s;
  s.sigma = overrides.sigma.value_or(kDefaultSigma);
  s.tol = overrides.tol.value_or(kDefaultTol);
  s.rel_tol = overrides.rel_tol.value_or(kDefaultRelTol);
  s.max_refinements = overrides.max_refinements.value_or(kDefaultMaxRefinements);
  // |w^-z e^w| decays only like |t|^(-Re z): the tails are not negligible at
  // any practical T and are added analytically; T only has to make the
  // asymptotic tail expansion converge.
  s.half_width = overrides.half_width.value_or(std::ceil(100.0 + 4.0 * std::abs(z)));
  s.step = overrides.step.value_or(0.5);
  s.validate();

  const double T = s.half_width;
  const Complex upper_w{s.sigma, T};
  const Complex lower_w{s.sigma, -T};
  // int_T^inf f dt = i F(sigma + iT);  int_-inf^-T f dt = -i F(sigma - iT)
  const TailSeries up = laplace_antiderivative(z, upper_w);
  const TailSeries lo = laplace_antiderivative(z, lower_w);
  const Complex tails = Complex(0.0, 1.0) * up.value - Complex(0.0, 1.0) * lo.value;
  const double tail_err = up.remainder + lo.remainder;

  long evals = 0;
  double panel = s.step;
  Complex prev = laplace_panels(z, s.sigma, T, panel, evals);
  Complex cur = prev;
  double diff = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int level = 1; level <= s.max_refinements; ++level) {
    panel *= 0.5;
    cur = laplace_panels(z, s.sigma, T, panel, evals);
    diff = std::abs(cur - prev);
    prev = cur;
    if (diff <= std::max(s.tol, s.rel_tol * std::abs(cur + tails))) {
      converged = true;
      break;
    }
  }

  EvalResult out;
  out.z = z;
  out.value = (cur + tails) / (2.0 * kPi);
  out.err_estimate = (diff + tail_err) / (2.0 * kPi);
  out.spec_used = s;
  out.spec_used.step = panel;
  out.evaluations = evals;
  out.converged = converged;
  return out;
}

}  // namespace unigamma
