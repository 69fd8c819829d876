#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace algvec {

/**
 * Basis label type. Labels are only compared, never combined, so any type
 * with a strict total order (consistent with ==) will do.
 */
template <class I>
concept OrderedIndex = std::regular<I> && requires(const I a, const I b) {
  { a <=> b } -> std::same_as<std::strong_ordering>;
};

enum class IndexKind { Int, Text, Real, Complex };

std::string_view to_string(IndexKind kind);

class IntIndex {
 public:
  constexpr IntIndex() = default;
  constexpr IntIndex(std::int64_t value) : value_(value) {}  // NOLINT

  constexpr std::int64_t value() const noexcept { return value_; }

  friend constexpr bool operator==(IntIndex, IntIndex) = default;
  friend constexpr std::strong_ordering operator<=>(IntIndex, IntIndex) = default;

 private:
  std::int64_t value_ = 0;
};

class TextIndex {
 public:
  TextIndex() = default;
  TextIndex(std::string value) : value_(std::move(value)) {}  // NOLINT
  TextIndex(const char* value) : value_(value) {}            // NOLINT

  const std::string& value() const noexcept { return value_; }

  friend bool operator==(const TextIndex&, const TextIndex&) = default;
  friend std::strong_ordering operator<=>(const TextIndex& a,
                                          const TextIndex& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

 private:
  std::string value_;
};

/// Finite binary64 label. -0.0 is stored as 0.0 so that == is bitwise.
class RealIndex {
 public:
  RealIndex() = default;
  RealIndex(double value);  // NOLINT

  double value() const noexcept { return value_; }

  friend bool operator==(RealIndex, RealIndex) = default;
  friend std::strong_ordering operator<=>(RealIndex a, RealIndex b);

 private:
  double value_ = 0.0;
};

/// Complex label ordered lexicographically: real part first, then imaginary.
/// The order ignores the ring structure of C; labels are never multiplied.
class ComplexIndex {
 public:
  ComplexIndex() = default;
  ComplexIndex(double re, double im = 0.0);  // NOLINT

  double real() const noexcept { return re_.value(); }
  double imag() const noexcept { return im_.value(); }

  friend bool operator==(const ComplexIndex&, const ComplexIndex&) = default;
  friend std::strong_ordering operator<=>(const ComplexIndex& a,
                                          const ComplexIndex& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

 private:
  RealIndex re_;
  RealIndex im_;
};

static_assert(OrderedIndex<IntIndex>);
static_assert(OrderedIndex<TextIndex>);
static_assert(OrderedIndex<RealIndex>);
static_assert(OrderedIndex<ComplexIndex>);

template <class I>
struct index_kind_of;
template <>
struct index_kind_of<IntIndex> {
  static constexpr IndexKind value = IndexKind::Int;
};
template <>
struct index_kind_of<TextIndex> {
  static constexpr IndexKind value = IndexKind::Text;
};
template <>
struct index_kind_of<RealIndex> {
  static constexpr IndexKind value = IndexKind::Real;
};
template <>
struct index_kind_of<ComplexIndex> {
  static constexpr IndexKind value = IndexKind::Complex;
};

/// A label whose kind is only known at run time (e.g. read from text).
using IndexLabel = std::variant<IntIndex, TextIndex, RealIndex, ComplexIndex>;

IndexKind kind_of(const IndexLabel& label);

/// Throws IncompatibleIndexKind when the labels are of different kinds.
std::strong_ordering compare(const IndexLabel& a, const IndexLabel& b);

template <OrderedIndex I>
std::strong_ordering compare(const I& a, const I& b) {
  return a <=> b;
}

std::ostream& operator<<(std::ostream& os, IntIndex i);
std::ostream& operator<<(std::ostream& os, const TextIndex& i);
std::ostream& operator<<(std::ostream& os, RealIndex i);
std::ostream& operator<<(std::ostream& os, const ComplexIndex& i);

}  // namespace algvec
