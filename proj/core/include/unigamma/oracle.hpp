#pragma once

// Reference implementations used to judge the contour engine, and the
// identity suite that drives them.
//
// lanczos_gamma and oracle_digamma share nothing with the contour code except
// the Complex type. The Lanczos coefficients are Godfrey's g = 607/128,
// 15-term set (the one used by many C and Python gamma routines); measured
// relative error is below 2e-14 on |Re z|, |Im z| <= 15.

#include <optional>
#include <string>
#include <vector>

#include "unigamma/quadrature.hpp"

namespace unigamma {

/// Gamma(z) by the Lanczos approximation, with reflection for Re(z) < 1/2.
/// Throws PoleError at 0, -1, -2, ...
Complex lanczos_gamma(Complex z);

/// 1/Gamma(z) from the same approximation; exactly zero at nonpositive integers.
Complex oracle_recip_gamma(Complex z);

/// psi(z) by upward recurrence to Re z > 10 and the Stirling-type series.
/// Throws PoleError at 0, -1, -2, ...
Complex oracle_digamma(Complex z);

struct OracleReport {
  std::string check_name;
  long points_tested = 0;
  double max_rel_err = 0.0;
  double max_abs_err = 0.0;
  bool passed = true;
  Complex worst_point;
  /// False when any engine evaluation behind the check reported non-convergence.
  bool all_converged = true;
  /// Declared threshold (interpretation depends on the check).
  double threshold = 0.0;
};

/// E|X|^(y-1) for X ~ N(0,1) two ways: 2^((y-1)/2) Gamma(y/2) / sqrt(pi) with
/// the oracle Gamma, against (1 / G(y)) int e^(w^2/2) w^(-y) dt with the
/// contour engine only. Requires Re(y) > 0.
OracleReport gaussian_moment_check(Complex y, const ContourSpec& spec,
                                   double threshold = 1e-8);

/// Contour value of int w^(-y) e^(w^2 / 2) dt with its own truncation.
QuadratureResult gaussian_moment_integral(Complex y, const ContourSpec& spec);

struct Thresholds {
  double recip_gamma_rel = 1e-9;
  double recip_gamma_abs = 1e-10;
  double recip_gamma_small = 1e-6;  ///< below |1/Gamma| this, use the absolute test
  double gamma_sin_pi_rel = 1e-9;
  double gamma_sin_pi_abs = 1e-10;
  double reflection = 1e-9;
  double duplication = 1e-9;
  double contour_loop = 1e-8;
  double gaussian_moment = 1e-8;
  double digamma_rel = 1e-8;
  double sigma_invariance_rel = 1e-10;
  double sigma_invariance_abs = 1e-12;

  /// Every threshold replaced by `value`.
  static Thresholds uniform(double value);
};

inline const std::vector<std::string>& identity_check_names() {
  static const std::vector<std::string> names{
      "recip_gamma",     "gamma_sin_pi", "reflection", "duplication",
      "contour_loop",    "gaussian_moment", "digamma", "sigma_invariance"};
  return names;
}

/// z = m/2 + (n/2) i for m, n in [-10, 10]: 441 points.
std::vector<Complex> default_grid();

/// Every 9th point of the default grid (49 points) plus z = 1/4 + i/3.
std::vector<Complex> sigma_invariance_points();

/// One report per identity. Failures are reported, never thrown. `only`
/// restricts the run to one check name.
std::vector<OracleReport> run_identity_suite(const std::vector<Complex>& grid,
                                             const Thresholds& thresholds = {},
                                             const std::optional<std::string>& only = {});

}  // namespace unigamma
