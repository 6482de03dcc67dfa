#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include <doctest.h>

#include "unigamma/types.hpp"

namespace unigamma::test {

inline std::string show(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (std::signbit(z.imag()) ? "" : "+") << z.imag() << "i";
  return os.str();
}

inline double rel_diff(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace unigamma::test

// |a - b| <= tol, with both values in the failure message.
#define CHECK_NEAR_ABS(a, b, tol)                                                          \
  do {                                                                                     \
    const ::unigamma::Complex ug_a_ = (a);                                                 \
    const ::unigamma::Complex ug_b_ = (b);                                                 \
    INFO("lhs = " << ::unigamma::test::show(ug_a_) << ", rhs = " << ::unigamma::test::show(ug_b_) \
                  << ", |diff| = " << std::abs(ug_a_ - ug_b_));                            \
    CHECK(std::abs(ug_a_ - ug_b_) <= (tol));                                               \
  } while (0)

// |a - b| <= tol * max(|a|, |b|).
#define CHECK_NEAR_REL(a, b, tol)                                                          \
  do {                                                                                     \
    const ::unigamma::Complex ug_a_ = (a);                                                 \
    const ::unigamma::Complex ug_b_ = (b);                                                 \
    INFO("lhs = " << ::unigamma::test::show(ug_a_) << ", rhs = " << ::unigamma::test::show(ug_b_) \
                  << ", rel = " << ::unigamma::test::rel_diff(ug_a_, ug_b_));              \
    CHECK(::unigamma::test::rel_diff(ug_a_, ug_b_) <= (tol));                              \
  } while (0)
