#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "algvec/field.hpp"

namespace algvec {

/**
 * Exact rational number with arbitrary-precision numerator and denominator.
 *
 * Always stored in lowest terms: gcd(|num|, den) == 1, den > 0, and zero is
 * 0/1. Canonical storage makes equality structural.
 */
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;

  template <std::integral T>
  Rational(T value) : num_(value) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(Integer value) : num_(std::move(value)) {}

  /// Throws DivisionByZero when `den` is zero.
  Rational(Integer num, Integer den);

  static Rational zero() { return Rational{}; }
  static Rational one() { return Rational{1}; }

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational inverse() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// `p` for integers, `p/q` otherwise.
  std::string to_string() const;

  double to_double() const;

 private:
  struct reduced_t {};
  Rational(Integer num, Integer den, reduced_t)
      : num_(std::move(num)), den_(std::move(den)) {}

  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

static_assert(Field<Rational>);

}  // namespace algvec
