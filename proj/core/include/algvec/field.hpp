#pragma once

#include <concepts>

namespace algvec {

/**
 * Scalar domain of a vector space.
 *
 * A model supplies the two identities, the field operations and an exact
 * zero test. Values are immutable; every operation returns a new value.
 * `inverse()` throws DivisionByZero on the additive identity.
 *
 * The concept is purely syntactic. Whether the axioms actually hold is
 * checked by the property suites (exactly for Rational and ComplexRational;
 * Float64 only satisfies them up to rounding).
 */
template <class F>
concept Field = std::regular<F> && requires(const F a, const F b) {
  { F::zero() } -> std::same_as<F>;
  { F::one() } -> std::same_as<F>;
  { a + b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.inverse() } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
};

/// Specialize with `exact = false` for fields whose arithmetic rounds.
template <class F>
struct field_traits {
  static constexpr bool exact = true;
};

template <class F>
inline constexpr bool is_exact_field_v = field_traits<F>::exact;

// Free-function spellings of the field operations.

template <Field F>
F add(const F& a, const F& b) {
  return a + b;
}

template <Field F>
F mul(const F& a, const F& b) {
  return a * b;
}

template <Field F>
F neg(const F& a) {
  return -a;
}

template <Field F>
F inv(const F& a) {
  return a.inverse();
}

template <Field F>
bool is_zero(const F& a) {
  return a.is_zero();
}

}  // namespace algvec
