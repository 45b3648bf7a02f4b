#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "mtc/rational.hpp"

namespace mtc {

/// The unit complex number exp(2πi·q) for a rational q, stored as q mod 1.
///
/// Multiplication of phases is addition of turns, so equality tests between
/// twists, characters and bihomomorphism values are exact.
class RationalPhase {
 public:
  RationalPhase() = default;
  explicit RationalPhase(const Rational& turns) : turns_(frac_part(turns)) {}

  static RationalPhase one() { return RationalPhase(); }

  /// q in [0, 1).
  const Rational& turns() const { return turns_; }
  bool is_one() const { return turns_.numerator() == 0; }

  RationalPhase operator*(const RationalPhase& other) const {
    return RationalPhase(turns_ + other.turns_);
  }
  RationalPhase& operator*=(const RationalPhase& other) {
    turns_ = frac_part(turns_ + other.turns_);
    return *this;
  }
  RationalPhase inverse() const { return RationalPhase(-turns_); }
  RationalPhase pow(std::int64_t e) const { return RationalPhase(turns_ * e); }

  std::complex<double> value() const;
  std::string to_string() const { return mtc::to_string(turns_); }

  bool operator==(const RationalPhase&) const = default;

 private:
  Rational turns_{0};
};

}  // namespace mtc
