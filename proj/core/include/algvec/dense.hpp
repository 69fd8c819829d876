#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algvec/errors.hpp"
#include "algvec/field.hpp"
#include "algvec/index.hpp"
#include "algvec/op_counter.hpp"
#include "algvec/vector.hpp"

namespace algvec {

/**
 * Coordinate tuple (x_1, ..., x_N) of a finite-dimensional space with the
 * standard basis ordered 1..N. Zeros are stored explicitly.
 *
 * This is the classical side of the E ≅ E_B correspondence and serves as an
 * independent oracle for AlgebraicVector arithmetic.
 */
template <Field F>
class DenseVector {
 public:
  /// Throws DimensionMismatch when `entries` is empty.
  explicit DenseVector(std::vector<F> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
      throw DimensionMismatch("dense vectors need a positive dimension");
  }

  static DenseVector zeros(std::size_t dim) {
    return DenseVector{std::vector<F>(dim, F::zero())};
  }

  std::size_t dim() const noexcept { return entries_.size(); }
  std::span<const F> entries() const noexcept { return entries_; }

  /// 1-based coordinate access, matching the basis labels.
  const F& coordinate(std::size_t label) const { return entries_.at(label - 1); }

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

 private:
  std::vector<F> entries_;
};

/// Entry i is coefficient_or_zero(v, i). Throws OutOfRangeIndex when some
/// support label lies outside 1..dim.
template <Field F>
DenseVector<F> to_dense(const AlgebraicVector<IntIndex, F>& v, std::size_t dim) {
  if (dim == 0) throw DimensionMismatch("dense vectors need a positive dimension");
  std::vector<F> entries(dim, F::zero());
  const auto support = v.support();
  const auto coefficients = v.coefficients();
  for (std::size_t k = 0; k < support.size(); ++k) {
    const std::int64_t label = support[k].value();
    if (label < 1 || static_cast<std::uint64_t>(label) > dim)
      throw OutOfRangeIndex("label " + std::to_string(label) +
                            " outside 1.." + std::to_string(dim));
    entries[static_cast<std::size_t>(label - 1)] = coefficients[k];
  }
  return DenseVector<F>{std::move(entries)};
}

template <Field F>
AlgebraicVector<IntIndex, F> from_dense(const DenseVector<F>& d) {
  std::vector<IntIndex> support;
  std::vector<F> coefficients;
  const auto entries = d.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].is_zero()) continue;
    support.emplace_back(static_cast<std::int64_t>(k + 1));
    coefficients.push_back(entries[k]);
  }
  return detail::VectorAccess::adopt(std::move(support), std::move(coefficients));
}

template <Field F, OpCounting C>
DenseVector<F> dense_add(const DenseVector<F>& a, const DenseVector<F>& b,
                         C& counter) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("dense_add: dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  const auto x = a.entries();
  const auto y = b.entries();
  std::vector<F> out;
  out.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    counter.touch();
    counter.add();
    out.push_back(x[k] + y[k]);
  }
  return DenseVector<F>{std::move(out)};
}

template <Field F>
DenseVector<F> dense_add(const DenseVector<F>& a, const DenseVector<F>& b) {
  NoCount none;
  return dense_add(a, b, none);
}

template <Field F, OpCounting C>
DenseVector<F> dense_scalar_mul(const F& kappa, const DenseVector<F>& a,
                                C& counter) {
  std::vector<F> out;
  out.reserve(a.dim());
  for (const F& x : a.entries()) {
    counter.touch();
    counter.mul();
    out.push_back(kappa * x);
  }
  return DenseVector<F>{std::move(out)};
}

template <Field F>
DenseVector<F> dense_scalar_mul(const F& kappa, const DenseVector<F>& a) {
  NoCount none;
  return dense_scalar_mul(kappa, a, none);
}

template <Field F>
std::ostream& operator<<(std::ostream& os, const DenseVector<F>& d) {
  os << '[';
  for (std::size_t k = 0; k < d.dim(); ++k) os << (k ? "," : "") << d.entries()[k];
  return os << ']';
}

}  // namespace algvec
