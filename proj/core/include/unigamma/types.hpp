#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace unigamma {

/// Universal scalar of the engine. Both parts must be finite at API boundaries.
using Complex = std::complex<double>;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (non-finite value, Re(w) <= 0,
/// Laplace integral with Re(z) <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid quadrature configuration.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A node evaluation produced a non-finite value.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double node)
      : Error(what), node_(node) {}
  double node() const noexcept { return node_; }

 private:
  double node_;
};

/// Gamma or digamma requested too close to a nonpositive integer.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, long nearest_pole)
      : Error(what), nearest_pole_(nearest_pole) {}
  long nearest_pole() const noexcept { return nearest_pole_; }

 private:
  long nearest_pole_;
};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws DomainError naming `what` if `z` has a NaN or infinite part.
void require_finite(Complex z, const char* what);

/// sin(pi z) with exact reduction of Re(z) modulo 2, so integer and
/// half-integer real parts give exact zeros and unit magnitudes.
Complex sin_pi(Complex z);

/// True if z is exactly 0, -1, -2, ...
inline bool is_nonpositive_integer(Complex z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

/// The nonpositive integer nearest to z (0 when Re z > 0).
long nearest_nonpositive_integer(Complex z) noexcept;

}  // namespace unigamma
