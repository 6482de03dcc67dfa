#include <cmath>
#include <limits>
#include <numbers>

#include "support.hpp"
#include "unigamma/gamma.hpp"
#include "unigamma/kernel.hpp"
#include "unigamma/oracle.hpp"
#include "unigamma/quadrature.hpp"

using namespace unigamma;

namespace {

constexpr double kPi = std::numbers::pi;

ContourSpec line_spec(Complex z, double sigma = 1.0, double tol = 1e-12) {
  ContourSpec s;
  s.sigma = sigma;
  s.tol = tol;
  s.half_width = select_truncation(z, sigma, tol).half_width;
  s.step = initial_step(z);
  return s;
}

QuadratureResult g_line(Complex z, const ContourSpec& s) {
  return trapezoid_line([&](double t) { return g_integrand(z, s.sigma, t); }, s);
}

}  // namespace

TEST_CASE("ContourSpec::validate") {
  ContourSpec s;
  CHECK_NOTHROW(s.validate());
  auto bad = [](auto mutate) {
    ContourSpec c;
    mutate(c);
    CHECK_THROWS_AS(c.validate(), SpecError);
  };
  bad([](ContourSpec& c) { c.sigma = 0.0; });
  bad([](ContourSpec& c) { c.sigma = 8.5; });
  bad([](ContourSpec& c) { c.half_width = 0.5; });
  bad([](ContourSpec& c) { c.step = 0.0; });
  bad([](ContourSpec& c) { c.step = 20.0; });
  bad([](ContourSpec& c) { c.tol = 0.0; });
  bad([](ContourSpec& c) { c.rel_tol = -1.0; });
  bad([](ContourSpec& c) { c.max_refinements = 0; });
}

TEST_CASE("CompensatedSum recovers what naive summation loses") {
  CompensatedSum s;
  s.add(1.0);
  for (int k = 0; k < 1000; ++k) s.add(1e-16);
  s.add(-1.0);
  CHECK(s.value().real() == doctest::Approx(1e-13).epsilon(1e-12));
}

TEST_CASE("trapezoid_line: Gaussian integral, G(0) and G(1)") {
  const ContourSpec half = line_spec(0.5);
  const QuadratureResult a = g_line(0.5, half);
  CHECK(a.converged);
  CHECK_NEAR_ABS(a.value, Complex(std::sqrt(kPi), 0.0), 1e-12);

  const QuadratureResult b = g_line(0.0, line_spec(0.0));
  CHECK(b.converged);
  CHECK(std::abs(b.value) <= 1e-12);

  const QuadratureResult c = g_line(1.0, line_spec(1.0));
  CHECK(c.converged);
  CHECK_NEAR_ABS(c.value, Complex(kPi, 0.0), 1e-12);
}

TEST_CASE("trapezoid_line: result invariants") {
  for (Complex z : {Complex(0.5, 0.0), Complex(-2.5, 1.0), Complex(3.0, -4.0)}) {
    const QuadratureResult q = g_line(z, line_spec(z));
    CHECK(q.evaluations >= 3);
    CHECK(q.err_estimate >= 0.0);
    CHECK(q.converged);
    CHECK(q.err_estimate <= q.tol_used);
    CHECK(q.tol_used >= 1e-12);
    CHECK(q.step < initial_step(z));
  }
}

TEST_CASE("trapezoid_line: non-convergence is reported, not thrown") {
  ContourSpec s = line_spec({2.0, 10.0});
  s.step = 1.0;
  s.max_refinements = 1;
  const QuadratureResult q = g_line({2.0, 10.0}, s);
  CHECK_FALSE(q.converged);
  CHECK(is_finite(q.value));
  CHECK(q.refinement_history.size() == 1);
}

TEST_CASE("trapezoid_line: non-finite node is a hard error naming the node") {
  ContourSpec s;
  s.half_width = 4.0;
  s.step = 0.5;
  try {
    trapezoid_line(
        [](double t) {
          return t == 1.0 ? Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)
                          : Complex(std::exp(-t * t), 0.0);
        },
        s);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.node() == 1.0);
  }
}

TEST_CASE("trapezoid_line: summation is deterministic") {
  const Complex z{-1.75, 2.25};
  const ContourSpec s = line_spec(z);
  const QuadratureResult a = g_line(z, s);
  const QuadratureResult b = g_line(z, s);
  CHECK(a.value.real() == b.value.real());
  CHECK(a.value.imag() == b.value.imag());
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("trapezoid_line_pair shares nodes") {
  const Complex z{1.5, 0.5};
  const ContourSpec s = line_spec(z);
  const auto pair = trapezoid_line_pair(
      [&](double t) {
        const GIntegrandPair p = g_integrand_pair(z, 1.0, t);
        return std::array<Complex, 2>{p.value, p.log_weighted};
      },
      s);
  CHECK(pair[0].evaluations == pair[1].evaluations);
  CHECK(pair[0].step == pair[1].step);
  const QuadratureResult single = g_line(z, s);
  CHECK_NEAR_REL(pair[0].value, single.value, 1e-13);
}

TEST_CASE("select_truncation: inverting the bound at its own value") {
  const TailMajorant m = g_tail_majorant(0.5);
  const double tail5 = std::exp(m.log_tail_bound(1.0, 5.0));
  const Truncation t = select_truncation(0.5, 1.0, 4.0 * tail5 * (1 + 1e-12));
  CHECK(t.half_width == 5.0);
  CHECK_FALSE(t.cap_reached);
}

TEST_CASE("select_truncation: z = 1/2 and z = -5 at tol 1e-12") {
  const Truncation half = select_truncation(0.5, 1.0, 1e-12);
  // ln(4/tol) = 29.0; e^(1 - T^2) / T <= tol/4 first holds on the grid at 5.5.
  CHECK(half.half_width == 5.5);
  CHECK(half.tail_bound <= 0.25e-12);
  const Truncation minus5 = select_truncation(-5.0, 1.0, 1e-12);
  CHECK(minus5.half_width > half.half_width);
  CHECK(minus5.tail_bound <= 0.25e-12);
}

TEST_CASE("select_truncation: the tail bound dominates the true tail") {
  for (Complex z : {Complex(0.5, 0.0), Complex(-5.0, 0.0), Complex(3.0, 7.0), Complex(-10.0, -4.0)}) {
    for (bool log_weighted : {false, true}) {
      const double sigma = 1.0;
      const Truncation tr = select_truncation(g_tail_majorant(z, log_weighted), sigma, 1e-10);
      // Midpoint sum of the actual integrand modulus beyond T (both tails).
      const double T = tr.half_width;
      const double h = 1e-3;
      double tail = 0.0;
      for (double t = T + h / 2; t < T + 15.0; t += h) {
        for (double s : {t, -t}) {
          const double v = log_weighted ? std::abs(g_log_integrand(z, sigma, s))
                                        : std::abs(g_integrand(z, sigma, s));
          tail += v * h;
        }
      }
      INFO("z = " << test::show(z) << " log_weighted = " << log_weighted);
      CHECK(tail <= tr.tail_bound);
    }
  }
}

TEST_CASE("select_truncation: cap") {
  const Truncation t = select_truncation(1.0, 1.0, 1e-300);
  CHECK(t.half_width <= kTruncationCap);
  CHECK_THROWS_AS(select_truncation(1.0, 1.0, 0.0), SpecError);
  TailMajorant never;
  never.rate = 0.0;
  const Truncation c = select_truncation(never, 1.0, 1e-10);
  CHECK(c.cap_reached);
  CHECK(c.half_width == kTruncationCap);
}

TEST_CASE("initial_step policy") {
  CHECK(initial_step(0.0) == 0.25);
  CHECK(initial_step({0.0, 3.0}) == 0.25);
  CHECK(initial_step({0.0, 9.0}) == doctest::Approx(0.1));
  CHECK(initial_step({5.0, -19.0}) == doctest::Approx(0.05));
}

TEST_CASE("sigma invariance on the 50-point set") {
  for (Complex z : sigma_invariance_points()) {
    Complex v[3];
    const double sigmas[3] = {0.5, 1.0, 2.0};
    for (int k = 0; k < 3; ++k) {
      const ContourSpec s = resolve_spec(z, {.sigma = sigmas[k]});
      v[k] = g_line(z, s).value;
    }
    double diff = 0.0;
    double mag = 0.0;
    for (int i = 0; i < 3; ++i) {
      mag = std::max(mag, std::abs(v[i]));
      for (int j = i + 1; j < 3; ++j) diff = std::max(diff, std::abs(v[i] - v[j]));
    }
    INFO("z = " << test::show(z) << " diff = " << diff << " mag = " << mag);
    CHECK(diff <= std::max(1e-12, 1e-10 * mag));
  }
}

TEST_CASE("refinement monotonicity on the default grid (sigma = 1)") {
  for (Complex z : default_grid()) {
    const ContourSpec s = resolve_spec(z, {});
    const QuadratureResult q =
        trapezoid_line([&](double t) { return g_integrand_wide(z, 1.0, t); }, s);
    const auto& h = q.refinement_history;
    for (std::size_t k = 1; k < h.size(); ++k) {
      INFO("z = " << test::show(z) << " level " << k);
      CHECK(h[k] <= h[k - 1]);
    }
  }
}

TEST_CASE("rounding floor: zeros of G converge at modest cost") {
  for (double x : {-5.0, -8.0, -10.0, -12.0}) {
    const ContourSpec s = resolve_spec(x, {});
    const QuadratureResult q =
        trapezoid_line([&](double t) { return g_integrand_wide(x, 1.0, t); }, s);
    INFO("z = " << x);
    CHECK(q.converged);
    CHECK(q.evaluations < 2000);
    CHECK(std::abs(q.value) <= q.tol_used + 1e-9);
  }
}
