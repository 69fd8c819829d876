#pragma once

// Random inputs for the property suites. Label pools are small on purpose so
// that independently drawn supports overlap and coefficient ranges are small
// so that shared labels cancel often.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <random>
#include <string>

#include "algvec/complex_rational.hpp"
#include "algvec/float64.hpp"
#include "algvec/index.hpp"
#include "algvec/rational.hpp"
#include "algvec/vector.hpp"

namespace algvec::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

template <class T>
struct Arbitrary;

template <>
struct Arbitrary<IntIndex> {
  static IntIndex draw(Rng& rng) { return IntIndex{uniform(rng, 1, 24)}; }
};

template <>
struct Arbitrary<TextIndex> {
  // Strings of length 1..3 over {a, b, c}: 39 labels, prefixes included.
  static TextIndex draw(Rng& rng) {
    std::string s(static_cast<std::size_t>(uniform(rng, 1, 3)), 'a');
    for (char& c : s) c = static_cast<char>('a' + uniform(rng, 0, 2));
    return TextIndex{s};
  }
};

template <>
struct Arbitrary<RealIndex> {
  static RealIndex draw(Rng& rng) {
    return RealIndex{static_cast<double>(uniform(rng, -12, 12)) / 4.0};
  }
};

template <>
struct Arbitrary<ComplexIndex> {
  // Real parts repeat across labels so the imaginary tie-break is exercised.
  static ComplexIndex draw(Rng& rng) {
    static const std::array<double, 4> re = {-1.0, 0.0, std::sqrt(15.0), 4.0};
    return ComplexIndex{re[static_cast<std::size_t>(uniform(rng, 0, 3))],
                        static_cast<double>(uniform(rng, -2, 2))};
  }
};

template <>
struct Arbitrary<Rational> {
  static Rational draw(Rng& rng) {
    return Rational{Rational::Integer{uniform(rng, -6, 6)},
                    Rational::Integer{uniform(rng, 1, 4)}};
  }
};

template <>
struct Arbitrary<ComplexRational> {
  static ComplexRational draw(Rng& rng) {
    // Purely real values half the time, so complex and real parts both cancel.
    Rational re = Arbitrary<Rational>::draw(rng);
    Rational im = uniform(rng, 0, 1) ? Arbitrary<Rational>::draw(rng) : Rational{};
    return ComplexRational{re, im};
  }
};

template <>
struct Arbitrary<Float64> {
  // Small integers: float arithmetic on them is exact.
  static Float64 draw(Rng& rng) {
    return Float64{static_cast<double>(uniform(rng, -6, 6))};
  }
};

template <class F>
F draw_nonzero(Rng& rng) {
  for (;;) {
    F x = Arbitrary<F>::draw(rng);
    if (!x.is_zero()) return x;
  }
}

/// Any finite double, drawn by bit pattern (all magnitudes, subnormals too).
inline double any_finite_double(Rng& rng) {
  for (;;) {
    std::uint64_t bits = rng();
    double x;
    std::memcpy(&x, &bits, sizeof x);
    if (std::isfinite(x)) return x;
  }
}

/// from_pairs of up to `max_pairs` random pairs (duplicates and zeros included).
template <OrderedIndex I, Field F>
AlgebraicVector<I, F> random_vector(Rng& rng, std::size_t max_pairs = 8) {
  IndexedCoefficients<I, F> pairs;
  const auto n = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_pairs)));
  for (std::size_t k = 0; k < n; ++k)
    pairs.emplace_back(Arbitrary<I>::draw(rng), Arbitrary<F>::draw(rng));
  return AlgebraicVector<I, F>::from_pairs(std::move(pairs));
}

/// A vector sharing labels with `v`, with some of them set to cancel v's
/// coefficient exactly.
template <OrderedIndex I, Field F>
AlgebraicVector<I, F> overlapping_vector(Rng& rng, const AlgebraicVector<I, F>& v,
                                         std::size_t max_extra = 4) {
  IndexedCoefficients<I, F> pairs;
  for (std::size_t k = 0; k < v.support_size(); ++k) {
    switch (uniform(rng, 0, 2)) {
      case 0: pairs.emplace_back(v.support()[k], -v.coefficients()[k]); break;
      case 1: pairs.emplace_back(v.support()[k], Arbitrary<F>::draw(rng)); break;
      default: break;
    }
  }
  const auto extra = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_extra)));
  for (std::size_t k = 0; k < extra; ++k)
    pairs.emplace_back(Arbitrary<I>::draw(rng), Arbitrary<F>::draw(rng));
  return AlgebraicVector<I, F>::from_pairs(std::move(pairs));
}

}  // namespace algvec::testing
