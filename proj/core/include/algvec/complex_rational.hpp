#pragma once

#include <iosfwd>
#include <string>

#include "algvec/field.hpp"
#include "algvec/rational.hpp"

namespace algvec {

/// Gaussian rationals re + im·i, both parts canonical rationals.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(Rational re, Rational im = Rational{})  // NOLINT
      : re_(std::move(re)), im_(std::move(im)) {}

  template <std::integral T>
  ComplexRational(T re) : re_(re) {}  // NOLINT

  static ComplexRational zero() { return ComplexRational{}; }
  static ComplexRational one() { return ComplexRational{Rational::one()}; }

  const Rational& real() const noexcept { return re_; }
  const Rational& imag() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  /// (a - bi) / (a² + b²); throws DivisionByZero on zero.
  ComplexRational inverse() const;

  ComplexRational operator-() const { return {-re_, -im_}; }
  friend ComplexRational operator+(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend ComplexRational operator-(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend ComplexRational operator*(const ComplexRational& a,
                                   const ComplexRational& b);

  friend bool operator==(const ComplexRational&,
                         const ComplexRational&) = default;

  /// `a/b`, `c/di` or `a/b+c/di`; zero prints as `0`.
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

static_assert(Field<ComplexRational>);

}  // namespace algvec
