#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "support.hpp"
#include "unigamma/kernel.hpp"

using namespace unigamma;

namespace {
constexpr double kE = std::numbers::e;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("principal_power: worked values") {
  CHECK_NEAR_ABS(principal_power(1.0, {-3.7, 2.0}), Complex(1.0, 0.0), 1e-15);
  CHECK_NEAR_ABS(principal_power({1.0, 1.0}, 2.0), Complex(0.0, 2.0), 1e-15);
  // 0.5 exp(i ln 2)
  const Complex expected = 0.5 * std::polar(1.0, std::log(2.0));
  CHECK_NEAR_REL(principal_power(2.0, {-1.0, 1.0}), expected, 1e-15);
  // 0.5 (cos ln 2 + i sin ln 2)
  CHECK_NEAR_ABS(principal_power(2.0, {-1.0, 1.0}), Complex(0.384619, 0.319481), 1e-6);
}

TEST_CASE("principal_power: branch and input checks") {
  CHECK_THROWS_AS(principal_power({0.0, 1.0}, 0.5), DomainError);
  CHECK_THROWS_AS(principal_power({-1.0, 0.0}, 0.5), DomainError);
  CHECK_THROWS_AS(principal_power({kNaN, 0.0}, 0.5), DomainError);
  CHECK_THROWS_AS(principal_power(1.0, {kInf, 0.0}), DomainError);
  // Just right of the cut the argument stays inside (-pi/2, pi/2).
  const Complex w{1e-300, -1.0};
  const Complex v = principal_power(w, {0.0, 1.0});  // exp(-arg w)
  CHECK(std::abs(v) == doctest::Approx(std::exp(std::numbers::pi / 2)).epsilon(1e-14));
}

TEST_CASE("principal_power: w^a w^-a = 1") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(0.01, 10.0);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  std::uniform_real_distribution<double> ex(-6.0, 6.0);
  for (int k = 0; k < 2000; ++k) {
    const Complex w{re(rng), im(rng)};
    const Complex a{ex(rng), ex(rng)};
    const Complex p = principal_power(w, a) * principal_power(w, -a);
    INFO("w = " << test::show(w) << ", a = " << test::show(a));
    CHECK(std::abs(p - 1.0) <= 4 * std::numeric_limits<double>::epsilon());
  }
}

TEST_CASE("g_integrand: worked values") {
  CHECK_NEAR_REL(g_integrand(1.0, 1.0, 0.0), Complex(kE, 0.0), 1e-15);
  CHECK_NEAR_REL(g_integrand(0.5, 1.0, 0.0), Complex(kE, 0.0), 1e-15);
  const Complex expected = Complex(1.0, 1.0) * std::polar(1.0, 2.0);
  CHECK_NEAR_REL(g_integrand(0.0, 1.0, 1.0), expected, 1e-15);
  // (cos 2 - sin 2) + i (cos 2 + sin 2)
  CHECK_NEAR_ABS(g_integrand(0.0, 1.0, 1.0), Complex(-1.325444, 0.493151), 1e-6);
}

TEST_CASE("g_integrand: rejects a bad contour") {
  CHECK_THROWS_AS(g_integrand(1.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(g_integrand(1.0, -1.0, 0.0), DomainError);
  CHECK_THROWS_AS(g_integrand(1.0, 1.0, kNaN), DomainError);
}

TEST_CASE("g_log_integrand: worked values") {
  CHECK(std::abs(g_log_integrand(1.0, 1.0, 0.0)) == 0.0);
  CHECK(std::abs(g_log_integrand(0.5, 1.0, 0.0)) == 0.0);
  const double expected = 0.5 * std::exp(4.0) * 2.0 * std::log(2.0);
  CHECK_NEAR_REL(g_log_integrand(1.0, 2.0, 0.0), Complex(expected, 0.0), 1e-15);
  CHECK(expected == doctest::Approx(37.846).epsilon(1e-4));
}

TEST_CASE("g_log_integrand = g_integrand * 2 Log w") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> zr(-10.0, 10.0);
  std::uniform_real_distribution<double> tt(-8.0, 8.0);
  std::uniform_real_distribution<double> ss(0.2, 3.0);
  for (int k = 0; k < 500; ++k) {
    const Complex z{zr(rng), zr(rng)};
    const double sigma = ss(rng);
    const double t = tt(rng);
    const Complex w{sigma, t};
    CHECK_NEAR_REL(g_log_integrand(z, sigma, t), g_integrand(z, sigma, t) * 2.0 * std::log(w),
                   1e-14);
    const GIntegrandPair p = g_integrand_pair(z, sigma, t);
    CHECK(p.value == g_integrand(z, sigma, t));
    CHECK(p.log_weighted == g_log_integrand(z, sigma, t));
  }
}

TEST_CASE("g_integrand: conjugate symmetry") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> zr(-15.0, 15.0);
  std::uniform_real_distribution<double> tt(-10.0, 10.0);
  for (int k = 0; k < 500; ++k) {
    const Complex z{zr(rng), zr(rng)};
    const double t = tt(rng);
    CHECK_NEAR_REL(g_integrand(std::conj(z), 1.0, -t), std::conj(g_integrand(z, 1.0, t)), 1e-15);
  }
}

TEST_CASE("g_integrand: decay bound") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> zr(-15.0, 15.0);
  std::uniform_real_distribution<double> tt(-30.0, 30.0);
  std::uniform_real_distribution<double> ss(0.1, 4.0);
  for (int k = 0; k < 5000; ++k) {
    const Complex z{zr(rng), zr(rng)};
    const double sigma = ss(rng);
    const double t = tt(rng);
    const double v = std::abs(g_integrand(z, sigma, t));
    const double bound = g_majorant(z, sigma, t);
    INFO("z = " << test::show(z) << " sigma = " << sigma << " t = " << t);
    CHECK(v <= bound * (1 + 1e-13));
  }
}

TEST_CASE("g_integrand: large |t| and |Re z| do not overflow") {
  const Complex v = g_integrand({-15.0, 0.0}, 1.0, 40.0);
  CHECK(is_finite(v));
  CHECK(std::abs(v) < 1e-300);
  CHECK(is_finite(g_integrand({15.0, 15.0}, 0.01, 0.0)));
}

TEST_CASE("g_integrand_wide agrees with the double version") {
  const Complex z{-3.25, 1.5};
  for (double t = -5.0; t <= 5.0; t += 0.37) {
    const WideComplex w = g_integrand_wide(z, 1.0, t);
    const Complex d = g_integrand(z, 1.0, t);
    CHECK(static_cast<double>(w.real()) == d.real());
    CHECK(static_cast<double>(w.imag()) == d.imag());
  }
}

TEST_CASE("laplace_integrand: worked values") {
  CHECK_NEAR_REL(laplace_integrand(1.0, 1.0, 0.0), Complex(kE, 0.0), 1e-15);
  CHECK_NEAR_REL(laplace_integrand(2.0, 1.0, 0.0), Complex(kE, 0.0), 1e-15);
  const double pi = std::numbers::pi;
  const Complex expected = -kE * Complex(1.0, -pi) / (1.0 + pi * pi);
  CHECK_NEAR_REL(laplace_integrand(1.0, 1.0, pi), expected, 1e-15);
  // -e / (1 + pi^2) = -0.250081, e pi / (1 + pi^2) = 0.785653
  CHECK_NEAR_ABS(laplace_integrand(1.0, 1.0, pi), Complex(-0.250081, 0.785653), 1e-6);
}

TEST_CASE("gaussian_moment_integrand and loop_integrand_polar") {
  // w = 1: w^-y e^(w^2/2) = e^(1/2)
  CHECK_NEAR_REL(gaussian_moment_integrand({2.5, -1.0}, 1.0, 0.0),
                 Complex(std::exp(0.5), 0.0), 1e-15);
  // On Re w > 0 the polar form equals the line form with y = 2z - 1.
  const Complex z{0.3, -1.2};
  const Complex y = 2.0 * z - 1.0;
  const Complex w{1.0, 2.0};
  CHECK_NEAR_REL(loop_integrand_polar(y, std::abs(w), std::arg(w)), g_integrand(z, 1.0, 2.0),
                 1e-14);
  // Imaginary axis: |e^(w^2)| = e^(-r^2).
  CHECK(std::abs(loop_integrand_polar(0.0, 3.0, std::numbers::pi / 2)) ==
        doctest::Approx(std::exp(-9.0)).epsilon(1e-14));
  CHECK_THROWS_AS(loop_integrand_polar(0.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(loop_integrand_polar(0.0, 1.0, 2.0), DomainError);
}

TEST_CASE("sin_pi: exact zeros and reduction") {
  for (int n = -20; n <= 20; ++n) {
    CHECK(sin_pi(static_cast<double>(n)) == Complex(0.0, 0.0));
  }
  CHECK(sin_pi(0.5).real() == 1.0);
  CHECK(sin_pi(-0.5).real() == -1.0);
  CHECK_NEAR_REL(sin_pi({1e6 + 0.25, 0.0}), Complex(std::sqrt(0.5), 0.0), 1e-15);
  CHECK_NEAR_REL(sin_pi({0.3, 0.7}), std::sin(std::numbers::pi * Complex(0.3, 0.7)), 1e-15);
}
