#include "algvec/complex_rational.hpp"

#include <ostream>

#include "algvec/errors.hpp"

namespace algvec {

ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexRational ComplexRational::inverse() const {
  if (is_zero()) throw DivisionByZero{};
  Rational norm = re_ * re_ + im_ * im_;
  Rational scale = norm.inverse();
  return {re_ * scale, -(im_ * scale)};
}

std::string ComplexRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag = im_.to_string() + "i";
  if (re_.is_zero()) return imag;
  if (im_.numerator() < 0) return re_.to_string() + imag;
  return re_.to_string() + "+" + imag;
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
  return os << z.to_string();
}

}  // namespace algvec
