#include "mtc/phase.hpp"

#include <charconv>
#include <numbers>
#include <stdexcept>

namespace mtc {

Rational frac_part(const Rational& q) {
  const auto num = q.numerator();
  const auto den = q.denominator();
  auto r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

bool is_integer(const Rational& q) { return q.denominator() == 1; }

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("malformed rational: '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const auto den = parse_int(std::string_view(text).substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(parse_int(std::string_view(text).substr(0, slash)), den);
}

std::complex<double> RationalPhase::value() const {
  const double angle = 2.0 * std::numbers::pi * boost::rational_cast<double>(turns_);
  return std::polar(1.0, angle);
}

}  // namespace mtc
