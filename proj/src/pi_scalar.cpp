#include "abbvloc/pi_scalar.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <iomanip>
#include <sstream>

#include "abbvloc/error.hpp"

namespace abbvloc {

PiScalar::PiScalar(Rational coeff, long pi_power) : coeff_(std::move(coeff)), pi_power_(pi_power) {
  canonicalize();
}

void PiScalar::canonicalize() {
  coeff_.canonicalize();
  if (coeff_ == 0) pi_power_ = 0;
}

PiScalar& PiScalar::operator+=(const PiScalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (pi_power_ != rhs.pi_power_)
    fail(ErrorKind::MixedPiPowers, "cannot add " + to_string() + " and " + rhs.to_string());
  coeff_ += rhs.coeff_;
  canonicalize();
  return *this;
}

PiScalar& PiScalar::operator-=(const PiScalar& rhs) { return *this += -rhs; }

PiScalar& PiScalar::operator*=(const PiScalar& rhs) {
  coeff_ *= rhs.coeff_;
  pi_power_ += rhs.pi_power_;
  canonicalize();
  return *this;
}

PiScalar& PiScalar::operator/=(const PiScalar& rhs) {
  if (rhs.is_zero()) fail(ErrorKind::PoleAtSample, "division by zero PiScalar");
  coeff_ /= rhs.coeff_;
  pi_power_ -= rhs.pi_power_;
  canonicalize();
  return *this;
}

PiScalar PiScalar::pow(long exponent) const {
  return PiScalar(power(coeff_, exponent), pi_power_ * exponent);
}

std::string PiScalar::to_string() const {
  return abbvloc::to_string(coeff_) + " * pi^" + std::to_string(pi_power_);
}

std::string PiScalar::to_decimal(int digits) const {
  using Float = boost::multiprecision::cpp_dec_float_50;
  Float value = Float(coeff_.get_num().get_str()) / Float(coeff_.get_den().get_str());
  value *= boost::multiprecision::pow(boost::math::constants::pi<Float>(), pi_power_);
  std::ostringstream out;
  out << std::setprecision(digits) << value;
  return out.str();
}

}  // namespace abbvloc
