#include "algvec/rational.hpp"

#include <ostream>
#include <utility>

#include "algvec/errors.hpp"

namespace algvec {

namespace {

using Integer = Rational::Integer;

// Divides num/den by their gcd and moves the sign onto the numerator.
void normalize(Integer& num, Integer& den) {
  if (den.is_zero()) throw DivisionByZero{};
  if (num.is_zero()) {
    den = 1;
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Integer g = boost::multiprecision::gcd(num, den);
  if (g != 1) {
    num /= g;
    den /= g;
  }
}

}  // namespace

Rational::Rational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize(num_, den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero{};
  if (num_ < 0) return Rational{Integer{-den_}, Integer{-num_}, reduced_t{}};
  return Rational{den_, num_, reduced_t{}};
}

Rational Rational::operator-() const {
  return Rational{Integer{-num_}, den_, reduced_t{}};
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == 1 && b.den_ == 1)
    return Rational{Integer{a.num_ + b.num_}, Integer{1}, Rational::reduced_t{}};
  if (a.den_ == b.den_) return Rational{Integer{a.num_ + b.num_}, a.den_};
  return Rational{Integer{a.num_ * b.den_ + b.num_ * a.den_},
                  Integer{a.den_ * b.den_}};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational{};
  if (a.den_ == 1 && b.den_ == 1)
    return Rational{Integer{a.num_ * b.num_}, Integer{1}, Rational::reduced_t{}};
  // Cross-reduce first so the products stay small.
  Integer g1 = boost::multiprecision::gcd(a.num_, b.den_);
  Integer g2 = boost::multiprecision::gcd(b.num_, a.den_);
  return Rational{Integer{(a.num_ / g1) * (b.num_ / g2)},
                  Integer{(a.den_ / g2) * (b.den_ / g1)}, Rational::reduced_t{}};
}

Rational operator/(const Rational& a, const Rational& b) {
  return a * b.inverse();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
  return boost::multiprecision::cpp_rational{num_, den_}.convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace algvec
