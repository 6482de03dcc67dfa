#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "unigamma/contour.hpp"
#include "unigamma/gamma.hpp"
#include "unigamma/oracle.hpp"

namespace unigamma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Accumulates one check's per-point outcomes.
class Tally {
 public:
  Tally(std::string name, double threshold) {
    rep_.check_name = std::move(name);
    rep_.threshold = threshold;
  }

  // err is compared against allowed; rel is informational (nan if not relative).
  void record(Complex z, double abs_err, double rel_err, double allowed, bool converged) {
    ++rep_.points_tested;
    rep_.max_abs_err = std::max(rep_.max_abs_err, abs_err);
    if (std::isfinite(rel_err)) rep_.max_rel_err = std::max(rep_.max_rel_err, rel_err);
    rep_.all_converged = rep_.all_converged && converged;
    const double normalized = abs_err / allowed;
    if (!(normalized <= 1.0)) rep_.passed = false;
    if (!(normalized <= worst_)) {
      worst_ = std::isnan(normalized) ? kInf : normalized;
      rep_.worst_point = z;
    }
  }

  void failure(Complex z) {
    ++rep_.points_tested;
    rep_.passed = false;
    rep_.all_converged = false;
    rep_.max_abs_err = kInf;
    rep_.max_rel_err = kInf;
    worst_ = kInf;
    rep_.worst_point = z;
  }

  // Evaluates one point; library errors become failed points.
  void guarded(Complex z, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error&) {
      failure(z);
    }
  }

  OracleReport report() && {
    if (rep_.points_tested == 0) rep_.passed = true;
    return std::move(rep_);
  }

 private:
  OracleReport rep_;
  double worst_ = -1.0;
};

bool is_integer(Complex z) { return z.imag() == 0.0 && std::floor(z.real()) == z.real(); }

double rel(double abs_err, Complex ref) {
  const double m = std::abs(ref);
  return m > 0.0 ? abs_err / m : std::numeric_limits<double>::quiet_NaN();
}

OracleReport check_recip_gamma(const std::vector<Complex>& grid, const Thresholds& th) {
  Tally t("recip_gamma", th.recip_gamma_rel);
  for (Complex z : grid) {
    t.guarded(z, [&] {
      const EvalResult e = recip_gamma(z);
      const Complex o = oracle_recip_gamma(z);
      const double err = std::abs(e.value - o);
      const bool relative = std::abs(o) > th.recip_gamma_small;
      const double allowed = relative ? th.recip_gamma_rel * std::abs(o) : th.recip_gamma_abs;
      t.record(z, err, relative ? rel(err, o) : std::nan(""), allowed, e.converged);
    });
  }
  return std::move(t).report();
}

OracleReport check_gamma_sin_pi(const std::vector<Complex>& grid, const Thresholds& th) {
  Tally t("gamma_sin_pi", th.gamma_sin_pi_rel);
  for (Complex z : grid) {
    t.guarded(z, [&] {
      const EvalResult e = gamma_sin_pi(z);
      if (is_integer(z) && z.real() > 0.0) {
        // sin(pi z) vanishes, Gamma is finite.
        const double err = std::abs(e.value);
        t.record(z, err, std::nan(""), th.gamma_sin_pi_abs, e.converged);
        return;
      }
      // At 0, -1, -2, ... the product is the removable limit pi / Gamma(1 - z).
      const Complex o = is_integer(z) ? kPi * oracle_recip_gamma(1.0 - z)
                                      : lanczos_gamma(z) * sin_pi(z);
      const double err = std::abs(e.value - o);
      t.record(z, err, rel(err, o), th.gamma_sin_pi_rel * std::abs(o), e.converged);
    });
  }
  return std::move(t).report();
}

OracleReport check_reflection(const std::vector<Complex>& grid, const Thresholds& th) {
  Tally t("reflection", th.reflection);
  for (Complex z : grid) {
    t.guarded(z, [&] {
      const EvalResult a = g_integral(z);
      const EvalResult b = g_integral(1.0 - z);
      const Complex ref = kPi * sin_pi(z);
      const double err = std::abs(a.value * b.value - ref);
      const double scale = 1.0 + std::abs(ref);
      t.record(z, err, err / scale, th.reflection * scale, a.converged && b.converged);
    });
  }
  return std::move(t).report();
}

OracleReport check_duplication(const std::vector<Complex>& grid, const Thresholds& th) {
  Tally t("duplication", th.duplication);
  for (Complex y : grid) {
    t.guarded(y, [&] {
      const EvalResult a = g_tilde(y);
      const EvalResult b = g_tilde(y + 1.0);
      const EvalResult c = g_tilde(2.0 * y + 1.0);
      const Complex lhs = a.value * b.value;
      const Complex rhs = std::sqrt(kPi) * std::exp(y * std::log(2.0)) * c.value;
      const double err = std::abs(lhs - rhs);
      const double scale = 1.0 + std::abs(rhs);
      t.record(y, err, err / scale, th.duplication * scale,
               a.converged && b.converged && c.converged);
    });
  }
  return std::move(t).report();
}

OracleReport check_contour_loop(const std::vector<Complex>& grid, const Thresholds& th) {
  Tally t("contour_loop", th.contour_loop);
  ContourSpec spec;
  spec.sigma = 1.0;
  spec.half_width = 8.0;
  spec.tol = 1e-12;
  for (Complex z : grid) {
    const Complex y = 2.0 * z - 1.0;
    if (y.real() > 0.0) continue;  // Cauchy's theorem needs Re(y) <= 0
    t.guarded(z, [&] {
      const ContourLoopReport r = contour_loop(y, spec);
      const double err = std::abs(r.loop_sum);
      const double scale = 1.0 + r.magnitude();
      t.record(z, err, err / scale, th.contour_loop * scale, r.converged);
    });
  }
  return std::move(t).report();
}

OracleReport check_gaussian_moment(const std::vector<Complex>& grid, const Thresholds& th) {
  Tally t("gaussian_moment", th.gaussian_moment);
  ContourSpec spec;
  for (Complex y : grid) {
    if (!(y.real() > 0.0)) continue;
    t.guarded(y, [&] {
      const OracleReport r = gaussian_moment_check(y, spec, th.gaussian_moment);
      const Complex oracle = std::exp((y - 1.0) / 2.0 * std::log(2.0)) *
                             lanczos_gamma(y / 2.0) / std::sqrt(kPi);
      t.record(y, r.max_abs_err, r.max_rel_err, th.gaussian_moment * std::abs(oracle),
               r.all_converged);
    });
  }
  return std::move(t).report();
}

OracleReport check_digamma(const std::vector<Complex>& grid, const Thresholds& th) {
  Tally t("digamma", th.digamma_rel);
  for (Complex z : grid) {
    if (is_nonpositive_integer(z)) continue;
    t.guarded(z, [&] {
      const EvalResult e = digamma(z);
      const Complex o = oracle_digamma(z);
      const double err = std::abs(e.value - o);
      t.record(z, err, rel(err, o), th.digamma_rel * std::max(1.0, std::abs(o)), e.converged);
    });
  }
  return std::move(t).report();
}

OracleReport check_sigma_invariance(const std::vector<Complex>& grid, const Thresholds& th) {
  Tally t("sigma_invariance", th.sigma_invariance_rel);
  constexpr std::array<double, 3> sigmas{0.5, 1.0, 2.0};
  for (Complex z : grid) {
    t.guarded(z, [&] {
      std::array<Complex, 3> v;
      bool conv = true;
      for (std::size_t k = 0; k < sigmas.size(); ++k) {
        SpecOverrides o;
        o.sigma = sigmas[k];
        const EvalResult e = g_integral(z, o);
        v[k] = e.value;
        conv = conv && e.converged;
      }
      double diff = 0.0;
      double mag = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        mag = std::max(mag, std::abs(v[i]));
        for (std::size_t j = i + 1; j < v.size(); ++j) diff = std::max(diff, std::abs(v[i] - v[j]));
      }
      const double allowed = std::max(th.sigma_invariance_abs, th.sigma_invariance_rel * mag);
      t.record(z, diff, mag > 0.0 ? diff / mag : std::nan(""), allowed, conv);
    });
  }
  return std::move(t).report();
}

}  // namespace

Thresholds Thresholds::uniform(double value) {
  Thresholds t;
  t.recip_gamma_rel = t.recip_gamma_abs = value;
  t.gamma_sin_pi_rel = t.gamma_sin_pi_abs = value;
  t.reflection = t.duplication = t.contour_loop = value;
  t.gaussian_moment = t.digamma_rel = value;
  t.sigma_invariance_rel = t.sigma_invariance_abs = value;
  return t;
}

std::vector<Complex> default_grid() {
  std::vector<Complex> grid;
  grid.reserve(441);
  for (int n = -10; n <= 10; ++n) {
    for (int m = -10; m <= 10; ++m) grid.emplace_back(m / 2.0, n / 2.0);
  }
  return grid;
}

std::vector<Complex> sigma_invariance_points() {
  const std::vector<Complex> grid = default_grid();
  std::vector<Complex> pts;
  for (std::size_t k = 0; k < grid.size(); k += 9) pts.push_back(grid[k]);
  pts.emplace_back(0.25, 1.0 / 3.0);
  return pts;
}

std::vector<OracleReport> run_identity_suite(const std::vector<Complex>& grid,
                                             const Thresholds& th,
                                             const std::optional<std::string>& only) {
  using Check = OracleReport (*)(const std::vector<Complex>&, const Thresholds&);
  const std::array<std::pair<const char*, Check>, 8> checks{{
      {"recip_gamma", check_recip_gamma},
      {"gamma_sin_pi", check_gamma_sin_pi},
      {"reflection", check_reflection},
      {"duplication", check_duplication},
      {"contour_loop", check_contour_loop},
      {"gaussian_moment", check_gaussian_moment},
      {"digamma", check_digamma},
      {"sigma_invariance", check_sigma_invariance},
  }};
  std::vector<OracleReport> out;
  for (const auto& [name, fn] : checks) {
    if (only && *only != name) continue;
    out.push_back(fn(grid, th));
  }
  return out;
}

}  // namespace unigamma
