#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "algvec/errors.hpp"
#include "algvec/field.hpp"
#include "algvec/index.hpp"
#include "algvec/op_counter.hpp"

namespace algvec {

/// Unordered (label, coefficient) pairs; duplicates and zeros allowed.
template <OrderedIndex I, Field F>
using IndexedCoefficients = std::vector<std::pair<I, F>>;

namespace detail {
struct VectorAccess;
}

/**
 * Sparse vector in canonical (support, coefficients) form.
 *
 * Invariants, established by every constructor and preserved by every
 * operation:
 *  - the support is strictly increasing;
 *  - no coefficient is zero;
 *  - support and coefficients have the same length;
 *  - the zero vector is the pair of empty sequences.
 *
 * Canonical storage makes == structural. Vectors are immutable values; every
 * operation returns a new vector.
 */
template <OrderedIndex I, Field F>
class AlgebraicVector {
 public:
  using index_type = I;
  using scalar_type = F;

  AlgebraicVector() = default;

  static AlgebraicVector zero() { return {}; }

  /// e_label = ({label}, 1).
  static AlgebraicVector basis(I label) {
    return AlgebraicVector{{std::move(label)}, {F::one()}};
  }

  /// Sorts by label, sums duplicate labels and drops zero coefficients.
  static AlgebraicVector from_pairs(IndexedCoefficients<I, F> pairs) {
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<I> support;
    std::vector<F> coefficients;
    support.reserve(pairs.size());
    coefficients.reserve(pairs.size());
    for (std::size_t k = 0; k < pairs.size();) {
      F sum = std::move(pairs[k].second);
      std::size_t next = k + 1;
      while (next < pairs.size() && pairs[next].first == pairs[k].first) {
        sum = sum + pairs[next].second;
        ++next;
      }
      if (!sum.is_zero()) {
        support.push_back(std::move(pairs[k].first));
        coefficients.push_back(std::move(sum));
      }
      k = next;
    }
    return AlgebraicVector{std::move(support), std::move(coefficients)};
  }

  /// Adopts sequences that must already be canonical; throws
  /// IncompatibleInput otherwise.
  static AlgebraicVector from_canonical(std::vector<I> support,
                                        std::vector<F> coefficients) {
    AlgebraicVector v{std::move(support), std::move(coefficients)};
    if (!v.is_canonical())
      throw IncompatibleInput("support/coefficients are not in canonical form");
    return v;
  }

  /// L_v, ascending. Empty for the zero vector.
  std::span<const I> support() const noexcept { return support_; }
  std::span<const F> coefficients() const noexcept { return coefficients_; }

  std::size_t support_size() const noexcept { return support_.size(); }
  bool is_zero() const noexcept { return support_.empty(); }

  /// The coefficient at `label`, or nullopt when `label` is off the support.
  /// The zero vector has no components at all.
  std::optional<F> component(const I& label) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), label);
    if (it == support_.end() || !(*it == label)) return std::nullopt;
    return coefficients_[static_cast<std::size_t>(it - support_.begin())];
  }

  F coefficient_or_zero(const I& label) const {
    return component(label).value_or(F::zero());
  }

  /// Re-checks the class invariants (used by fuzz tests).
  bool is_canonical() const {
    if (support_.size() != coefficients_.size()) return false;
    for (std::size_t k = 1; k < support_.size(); ++k)
      if (!(support_[k - 1] < support_[k])) return false;
    return std::none_of(coefficients_.begin(), coefficients_.end(),
                        [](const F& c) { return c.is_zero(); });
  }

  friend bool operator==(const AlgebraicVector&, const AlgebraicVector&) = default;

 private:
  friend struct detail::VectorAccess;

  AlgebraicVector(std::vector<I> support, std::vector<F> coefficients)
      : support_(std::move(support)), coefficients_(std::move(coefficients)) {}

  std::vector<I> support_;
  std::vector<F> coefficients_;
};

namespace detail {

struct VectorAccess {
  template <OrderedIndex I, Field F>
  static AlgebraicVector<I, F> adopt(std::vector<I> support,
                                     std::vector<F> coefficients) {
    return AlgebraicVector<I, F>{std::move(support), std::move(coefficients)};
  }
};

}  // namespace detail

template <OrderedIndex I, Field F>
AlgebraicVector<I, F> zero_vector() {
  return AlgebraicVector<I, F>::zero();
}

template <Field F, OrderedIndex I>
AlgebraicVector<I, F> basis_vector(I label) {
  return AlgebraicVector<I, F>::basis(std::move(label));
}

template <OrderedIndex I, Field F>
AlgebraicVector<I, F> from_pairs(IndexedCoefficients<I, F> pairs) {
  return AlgebraicVector<I, F>::from_pairs(std::move(pairs));
}

template <OrderedIndex I, Field F>
std::span<const I> index_set(const AlgebraicVector<I, F>& v) {
  return v.support();
}

template <OrderedIndex I, Field F>
std::optional<F> component(const AlgebraicVector<I, F>& v, const I& label) {
  return v.component(label);
}

template <OrderedIndex I, Field F>
F coefficient_or_zero(const AlgebraicVector<I, F>& v, const I& label) {
  return v.coefficient_or_zero(label);
}

template <OrderedIndex I, Field F>
std::size_t support_size(const AlgebraicVector<I, F>& v) {
  return v.support_size();
}

template <OrderedIndex I, Field F>
bool equals(const AlgebraicVector<I, F>& v, const AlgebraicVector<I, F>& w) {
  return v == w;
}

/**
 * kappa * v. Zero when kappa is zero or v is the zero vector; otherwise the
 * support is unchanged (a field has no zero divisors).
 */
template <OrderedIndex I, Field F, OpCounting C>
AlgebraicVector<I, F> scalar_mul(const F& kappa, const AlgebraicVector<I, F>& v,
                                 C& counter) {
  if (kappa.is_zero() || v.is_zero()) return {};
  const auto coefficients = v.coefficients();
  std::vector<F> scaled;
  scaled.reserve(coefficients.size());
  for (const F& c : coefficients) {
    counter.touch();
    counter.mul();
    scaled.push_back(kappa * c);
  }
  return detail::VectorAccess::adopt(
      std::vector<I>(v.support().begin(), v.support().end()), std::move(scaled));
}

template <OrderedIndex I, Field F>
AlgebraicVector<I, F> scalar_mul(const F& kappa, const AlgebraicVector<I, F>& v) {
  NoCount none;
  return scalar_mul(kappa, v, none);
}

/**
 * v + w by one ordered merge of the two supports.
 *
 * Labels present in only one operand are copied; shared labels are summed and
 * dropped when the sum is zero (the cancellation set 0_vw). Each visited
 * label counts once as touched, so entries_touched == |L_v ∪ L_w|.
 */
template <OrderedIndex I, Field F, OpCounting C>
AlgebraicVector<I, F> add(const AlgebraicVector<I, F>& v,
                          const AlgebraicVector<I, F>& w, C& counter) {
  const auto vs = v.support();
  const auto vc = v.coefficients();
  const auto ws = w.support();
  const auto wc = w.coefficients();

  std::vector<I> support;
  std::vector<F> coefficients;
  support.reserve(vs.size() + ws.size());
  coefficients.reserve(vs.size() + ws.size());

  std::size_t i = 0;
  std::size_t j = 0;
  while (i < vs.size() && j < ws.size()) {
    counter.touch();
    const auto order = vs[i] <=> ws[j];
    if (order < 0) {
      support.push_back(vs[i]);
      coefficients.push_back(vc[i]);
      ++i;
    } else if (order > 0) {
      support.push_back(ws[j]);
      coefficients.push_back(wc[j]);
      ++j;
    } else {
      counter.add();
      F sum = vc[i] + wc[j];
      if (!sum.is_zero()) {
        support.push_back(vs[i]);
        coefficients.push_back(std::move(sum));
      }
      ++i;
      ++j;
    }
  }
  for (; i < vs.size(); ++i) {
    counter.touch();
    support.push_back(vs[i]);
    coefficients.push_back(vc[i]);
  }
  for (; j < ws.size(); ++j) {
    counter.touch();
    support.push_back(ws[j]);
    coefficients.push_back(wc[j]);
  }
  return detail::VectorAccess::adopt(std::move(support), std::move(coefficients));
}

template <OrderedIndex I, Field F>
AlgebraicVector<I, F> add(const AlgebraicVector<I, F>& v,
                          const AlgebraicVector<I, F>& w) {
  NoCount none;
  return add(v, w, none);
}

/// -v == (-1) * v.
template <OrderedIndex I, Field F>
AlgebraicVector<I, F> neg(const AlgebraicVector<I, F>& v) {
  return scalar_mul(-F::one(), v);
}

template <OrderedIndex I, Field F>
AlgebraicVector<I, F> sub(const AlgebraicVector<I, F>& v,
                          const AlgebraicVector<I, F>& w) {
  return add(v, scalar_mul(-F::one(), w));
}

/// Σ alpha_i e_i folded with add(); the empty sum is the zero vector.
template <OrderedIndex I, Field F>
AlgebraicVector<I, F> einstein_expand(const IndexedCoefficients<I, F>& pairs) {
  AlgebraicVector<I, F> sum;
  for (const auto& [label, alpha] : pairs)
    sum = add(sum, scalar_mul(alpha, AlgebraicVector<I, F>::basis(label)));
  return sum;
}

template <class F>
concept MagnitudeField = Field<F> && requires(const F x) {
  { x.magnitude() } -> std::convertible_to<double>;
};

/**
 * Drops coefficients with magnitude <= tol. Only meaningful for rounding
 * fields: throws ExactFieldPrune for exact ones, IncompatibleInput on a
 * negative tolerance.
 */
template <OrderedIndex I, Field F>
AlgebraicVector<I, F> prune_below([[maybe_unused]] const AlgebraicVector<I, F>& v,
                                  [[maybe_unused]] double tol) {
  if constexpr (is_exact_field_v<F> || !MagnitudeField<F>) {
    throw ExactFieldPrune{};
  } else {
    if (!(tol >= 0.0)) throw IncompatibleInput("prune tolerance must be >= 0");
    std::vector<I> support;
    std::vector<F> coefficients;
    const auto vs = v.support();
    const auto vc = v.coefficients();
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (static_cast<double>(vc[k].magnitude()) <= tol) continue;
      support.push_back(vs[k]);
      coefficients.push_back(vc[k]);
    }
    return detail::VectorAccess::adopt(std::move(support),
                                       std::move(coefficients));
  }
}

template <OrderedIndex I, Field F>
AlgebraicVector<I, F> operator+(const AlgebraicVector<I, F>& v,
                                const AlgebraicVector<I, F>& w) {
  return add(v, w);
}

template <OrderedIndex I, Field F>
AlgebraicVector<I, F> operator-(const AlgebraicVector<I, F>& v,
                                const AlgebraicVector<I, F>& w) {
  return sub(v, w);
}

template <OrderedIndex I, Field F>
AlgebraicVector<I, F> operator-(const AlgebraicVector<I, F>& v) {
  return neg(v);
}

template <OrderedIndex I, Field F>
AlgebraicVector<I, F> operator*(const F& kappa, const AlgebraicVector<I, F>& v) {
  return scalar_mul(kappa, v);
}

/// Debug form `({l1,l2},(c1,c2))`; see io.hpp for the file format.
template <OrderedIndex I, Field F>
std::ostream& operator<<(std::ostream& os, const AlgebraicVector<I, F>& v) {
  os << "({";
  for (std::size_t k = 0; k < v.support_size(); ++k)
    os << (k ? "," : "") << v.support()[k];
  os << "},(";
  for (std::size_t k = 0; k < v.support_size(); ++k)
    os << (k ? "," : "") << v.coefficients()[k];
  return os << "))";
}

}  // namespace algvec
