#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "unigamma/gamma.hpp"
#include "unigamma/kernel.hpp"
#include "unigamma/oracle.hpp"

namespace unigamma {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey, g = 607/128, n = 15.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoef{
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

[[noreturn]] void oracle_pole(const char* fn, Complex z) {
  std::ostringstream os;
  os << fn << ": pole at z = " << z.real();
  throw PoleError(os.str(), nearest_nonpositive_integer(z));
}

// log Gamma(z) for Re(z) >= 1/2 (principal-ish branch; only exp() of it is used).
Complex lanczos_log_gamma_right(Complex z) {
  const Complex x = z - 1.0;
  Complex a = kLanczosCoef[0];
  for (std::size_t k = 1; k < kLanczosCoef.size(); ++k) a += kLanczosCoef[k] / (x + static_cast<double>(k));
  const Complex t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

Complex lanczos_gamma(Complex z) {
  require_finite(z, "z");
  if (is_nonpositive_integer(z)) oracle_pole("lanczos_gamma", z);
  if (z.real() < 0.5) {
    return kPi / (sin_pi(z) * std::exp(lanczos_log_gamma_right(1.0 - z)));
  }
  return std::exp(lanczos_log_gamma_right(z));
}

Complex oracle_recip_gamma(Complex z) {
  require_finite(z, "z");
  if (is_nonpositive_integer(z)) return {0.0, 0.0};
  if (z.real() < 0.5) {
    return sin_pi(z) * std::exp(lanczos_log_gamma_right(1.0 - z)) / kPi;
  }
  return std::exp(-lanczos_log_gamma_right(z));
}

Complex oracle_digamma(Complex z) {
  require_finite(z, "z");
  if (is_nonpositive_integer(z)) oracle_pole("oracle_digamma", z);
  // psi(z) = psi(z + n) - sum_{k<n} 1/(z + k)
  Complex shift = 0.0;
  while (z.real() <= 10.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  // psi(z) ~ ln z - 1/(2z) - sum B_2k / (2k z^2k)
  static constexpr std::array<double, 9> b2k{1.0 / 6,          -1.0 / 30,    1.0 / 42,
                                             -1.0 / 30,        5.0 / 66,     -691.0 / 2730,
                                             7.0 / 6,          -3617.0 / 510, 43867.0 / 798};
  const Complex inv2 = 1.0 / (z * z);
  Complex power = inv2;
  Complex series = 0.0;
  for (std::size_t k = 0; k < b2k.size(); ++k) {
    const double two_k = 2.0 * static_cast<double>(k + 1);
    series += b2k[k] / two_k * power;
    power *= inv2;
  }
  return shift + std::log(z) - 0.5 / z - series;
}

QuadratureResult gaussian_moment_integral(Complex y, const ContourSpec& spec) {
  require_finite(y, "y");
  TailMajorant maj;
  maj.power = -y.real() / 2.0;
  maj.log_scale = kPi * std::abs(y.imag()) / 2.0;
  maj.rate = 0.5;
  ContourSpec s = spec;
  s.half_width = select_truncation(maj, spec.sigma, spec.tol).half_width;
  s.step = std::min(spec.step, initial_step(y));
  const double sigma = s.sigma;
  return trapezoid_line([&](double t) { return gaussian_moment_integrand(y, sigma, t); }, s);
}

OracleReport gaussian_moment_check(Complex y, const ContourSpec& spec, double threshold) {
  require_finite(y, "y");
  if (!(y.real() > 0.0)) throw DomainError("gaussian_moment_check requires Re(y) > 0");

  OracleReport rep;
  rep.check_name = "gaussian_moment";
  rep.points_tested = 1;
  rep.worst_point = y;
  rep.threshold = threshold;

  const Complex oracle =
      std::exp((y - 1.0) / 2.0 * std::log(2.0)) * lanczos_gamma(y / 2.0) / std::sqrt(kPi);

  SpecOverrides o;
  o.sigma = spec.sigma;
  o.tol = spec.tol;
  o.rel_tol = spec.rel_tol;
  o.max_refinements = spec.max_refinements;
  const EvalResult g = g_integral(y, o);
  const QuadratureResult m = gaussian_moment_integral(y, spec);
  // Gamma(y)/pi * int = int / G(y)
  const Complex contour = m.value / g.value;

  rep.max_abs_err = std::abs(contour - oracle);
  rep.max_rel_err = rep.max_abs_err / std::abs(oracle);
  rep.all_converged = g.converged && m.converged;
  rep.passed = rep.max_rel_err <= threshold;
  return rep;
}

}  // namespace unigamma
