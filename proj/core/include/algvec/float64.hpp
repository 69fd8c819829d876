#pragma once

#include <compare>
#include <iosfwd>

#include "algvec/field.hpp"

namespace algvec {

/**
 * Binary64 field element. Construction rejects NaN and infinities, so an
 * overflowing operation throws NonFiniteValue instead of producing inf.
 *
 * is_zero() is an exact comparison with 0.0; there is no tolerance inside
 * the field. Use prune_below() on a vector to drop tiny coefficients.
 * Associativity and distributivity only hold up to rounding.
 */
class Float64 {
 public:
  constexpr Float64() = default;
  explicit Float64(double value);

  static Float64 zero() { return Float64{}; }
  static Float64 one() { return Float64{1.0}; }

  double value() const noexcept { return value_; }
  double magnitude() const noexcept { return value_ < 0 ? -value_ : value_; }
  bool is_zero() const noexcept { return value_ == 0.0; }

  Float64 inverse() const;

  Float64 operator-() const { return Float64{-value_}; }
  friend Float64 operator+(Float64 a, Float64 b) {
    return Float64{a.value_ + b.value_};
  }
  friend Float64 operator-(Float64 a, Float64 b) {
    return Float64{a.value_ - b.value_};
  }
  friend Float64 operator*(Float64 a, Float64 b) {
    return Float64{a.value_ * b.value_};
  }

  // -0.0 == 0.0, matching is_zero().
  friend bool operator==(Float64 a, Float64 b) { return a.value_ == b.value_; }
  friend std::partial_ordering operator<=>(Float64 a, Float64 b) {
    return a.value_ <=> b.value_;
  }

 private:
  double value_ = 0.0;
};

template <>
struct field_traits<Float64> {
  static constexpr bool exact = false;
};

std::ostream& operator<<(std::ostream& os, Float64 x);

static_assert(Field<Float64>);

}  // namespace algvec
