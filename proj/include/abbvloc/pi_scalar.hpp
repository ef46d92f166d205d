#pragma once

#include <string>

#include "abbvloc/rational.hpp"

namespace abbvloc {

/// An exact value coeff * pi^pi_power. Zero always has pi_power 0.
class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(Rational coeff, long pi_power = 0);  // NOLINT(google-explicit-constructor)

  static PiScalar pi(long power = 1) { return PiScalar(Rational(1), power); }
  static PiScalar two_pi() { return PiScalar(Rational(2), 1); }

  const Rational& coeff() const { return coeff_; }
  long pi_power() const { return pi_power_; }
  bool is_zero() const { return coeff_ == 0; }

  /// Addition requires equal pi powers unless one side is zero; otherwise
  /// throws MixedPiPowers.
  PiScalar& operator+=(const PiScalar& rhs);
  PiScalar& operator-=(const PiScalar& rhs);
  PiScalar& operator*=(const PiScalar& rhs);
  PiScalar& operator/=(const PiScalar& rhs);

  friend PiScalar operator+(PiScalar lhs, const PiScalar& rhs) { return lhs += rhs; }
  friend PiScalar operator-(PiScalar lhs, const PiScalar& rhs) { return lhs -= rhs; }
  friend PiScalar operator*(PiScalar lhs, const PiScalar& rhs) { return lhs *= rhs; }
  friend PiScalar operator/(PiScalar lhs, const PiScalar& rhs) { return lhs /= rhs; }
  PiScalar operator-() const { return PiScalar(-coeff_, pi_power_); }

  friend bool operator==(const PiScalar& a, const PiScalar& b) {
    return a.coeff_ == b.coeff_ && a.pi_power_ == b.pi_power_;
  }

  PiScalar pow(long exponent) const;

  /// "p/q * pi^e"
  std::string to_string() const;

  /// Display-only decimal expansion with `digits` significant digits.
  std::string to_decimal(int digits = 12) const;

 private:
  void canonicalize();

  Rational coeff_{0};
  long pi_power_ = 0;
};

}  // namespace abbvloc
