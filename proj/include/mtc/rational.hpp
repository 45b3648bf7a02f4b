#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace mtc {

/// Exact rational number, always stored in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// Representative of q mod 1 in [0, 1).
Rational frac_part(const Rational& q);

bool is_integer(const Rational& q);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Inverse of to_string. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace mtc
