#pragma once

// The closed contour A -> B -> C -> D -> E -> A for f(y, w) = w^(-y) e^(w^2):
//
//   A = sigma - iT,  B = sigma + iT       vertical line Re(w) = sigma
//   B -> C                               arc |w| = R from Theta to pi/2
//   C = iR -> D = 0 -> E = -iR           along the imaginary axis
//   E -> A                               arc |w| = R from -pi/2 to -Theta
//
// with R = sqrt(T^2 + sigma^2) and Theta = arccos(sigma / R). For Re(y) <= 0
// the integrand is analytic inside and the five pieces sum to zero.

#include <array>
#include <string_view>

#include "unigamma/quadrature.hpp"

namespace unigamma {

enum class Segment { AB, BC, CD, DE, EA };

std::string_view segment_name(Segment s) noexcept;

/// Polar coordinates (R, Theta) of the corner B = sigma + iT.
struct PolarCorner {
  double radius;
  double angle;
};
PolarCorner corner_polar(double sigma, double half_width);

/// Path integral of w^(-y) e^(w^2) dw along one segment, using the segment's
/// own parametrization and the spec's refinement policy. The rays C->D and
/// D->E require Re(y) <= 0 (integrable endpoint at the origin).
QuadratureResult integrate_segment(Complex y, Segment path, const ContourSpec& spec);

struct ContourLoopReport {
  Complex i_ab, i_bc, i_cd, i_de, i_ea;
  Complex loop_sum;  ///< i_ab + i_bc + i_cd + i_de + i_ea
  double big_r = 0.0;
  double big_theta = 0.0;
  std::array<double, 5> err_estimates{};
  bool converged = false;

  /// Sum of segment moduli, the natural scale for the residual.
  double magnitude() const noexcept;
};

/// All five segment integrals and their sum. Requires Re(y) <= 0.
ContourLoopReport contour_loop(Complex y, const ContourSpec& spec);

}  // namespace unigamma
