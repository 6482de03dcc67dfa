#pragma once

// Gamma-family functions from one contour integral,
//
//   G(z) = int_{-inf}^{inf} w^(1-2z) e^(w^2) dt,   w = sigma + i t, sigma > 0,
//
// which is entire in z and independent of sigma:
//
//   1 / Gamma(z)          = G(z) / pi
//   Gamma(z) sin(pi z)    = G(1 - z)
//   psi(z)                = int w^(1-2z) e^(w^2) log(w^2) dt / G(z)
//   Euler's gamma         = -(1/pi) int w^(-1) e^(w^2) log(w^2) dt
//
// Sign chain for the digamma function: G'(z) = -int w^(1-2z) e^(w^2) log(w^2) dt,
// so psi(z) = -G'(z) / G(z) is the ratio of the two integrals with a plus sign,
// and psi(1) = -gamma. Both routes are exposed and agree.
//
// Accuracy: about 1e-9 relative (absolute near zeros of G) for
// Re z in [-15, 15], |Im z| <= 15 with the default sigma = 1. Outside that box
// the integrand grows like e^(pi |Im z|) while the result does not, and the
// converged flag is the only guarantee.

#include <optional>

#include "unigamma/quadrature.hpp"

namespace unigamma {

inline constexpr double kDefaultSigma = 1.0;
inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kDefaultRelTol = 1e-12;
inline constexpr int kDefaultMaxRefinements = 12;
inline constexpr double kPoleTol = 1e-12;
/// Beyond this |Im z| the cancellation estimate can clear the converged flag.
inline constexpr double kCancellationImLimit = 30.0;

/// Per-call replacements for the default quadrature policy. half_width and
/// step default to select_truncation and initial_step.
struct SpecOverrides {
  std::optional<double> sigma;
  std::optional<double> half_width;
  std::optional<double> step;
  std::optional<double> tol;
  std::optional<double> rel_tol;
  std::optional<int> max_refinements;
};

struct EvalResult {
  Complex z;
  Complex value;
  double err_estimate = 0.0;
  ContourSpec spec_used;  ///< sigma, T, finest h actually used
  bool converged = false;
  long evaluations = 0;
  bool truncation_capped = false;
};

/// G(z), defined for every finite z with no case split.
EvalResult g_integral(Complex z, const SpecOverrides& overrides = {});

/// G~(y) = int w^(-y) e^(w^2) dt = G((y + 1) / 2).
EvalResult g_tilde(Complex y, const SpecOverrides& overrides = {});

/// 1 / Gamma(z) = G(z) / pi. Entire: zero at 0, -1, -2, ...
EvalResult recip_gamma(Complex z, const SpecOverrides& overrides = {});

/// Gamma(z) = pi / G(z). Throws PoleError when |G(z)| is below
/// max(kPoleTol, its own error estimate).
EvalResult gamma(Complex z, const SpecOverrides& overrides = {});

/// Gamma(z) sin(pi z) = G(1 - z). Entire.
EvalResult gamma_sin_pi(Complex z, const SpecOverrides& overrides = {});

/// psi(z) as a ratio of two integrals over one shared node set.
/// Throws PoleError near 0, -1, -2, ...
EvalResult digamma(Complex z, const SpecOverrides& overrides = {});

/// Euler-Mascheroni constant from the log-weighted integral at z = 1.
EvalResult euler_mascheroni(const SpecOverrides& overrides = {});

/// Classical Laplace integral 1/Gamma(z) = (1/2pi) int w^(-z) e^w dt, valid
/// only for Re(z) > 0. The integrand decays like |t|^(-Re z), so the finite
/// part is done with composite Gauss-Legendre panels and the tails with an
/// integration-by-parts expansion. Throws DomainError for Re(z) <= 0.
EvalResult laplace_recip_gamma(Complex z, const SpecOverrides& overrides = {});

/// Resolves overrides for the G integrand at z (sigma, T, h0, tolerances).
ContourSpec resolve_spec(Complex z, const SpecOverrides& overrides, bool log_weighted = false);

}  // namespace unigamma
