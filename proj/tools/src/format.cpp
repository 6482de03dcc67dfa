#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include <fmt/format.h>

#include "unigamma/cli.hpp"

namespace unigamma::cli {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw UsageError("cannot parse complex number '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw UsageError("empty complex number");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // The sign that starts the imaginary part: the last + or - that is neither
  // leading nor an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? "" : body.substr(0, split);
  const std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  double im;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_text, text);
  }
  const double re = re_text.empty() ? 0.0 : parse_real(re_text, text);
  return {re, im};
}

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

std::string format_complex(Complex z) {
  const double im = z.imag();
  const bool negative = std::signbit(im) && !std::isnan(im);
  return format_number(z.real()) + (negative ? "-" : "+") + format_number(std::abs(im)) + "i";
}

}  // namespace unigamma::cli
