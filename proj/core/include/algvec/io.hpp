#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algvec/complex_rational.hpp"
#include "algvec/dense.hpp"
#include "algvec/errors.hpp"
#include "algvec/float64.hpp"
#include "algvec/index.hpp"
#include "algvec/rational.hpp"
#include "algvec/vector.hpp"

// Text format, one vector per line:
//
//   line  := "zero" | pair (" " pair)*
//   pair  := index ":" coeff
//
// Labels: int `15`, text `"abc"` (with \" and \\ escapes), real `3.5`,
// complex `3.5+2i`. Coefficients: rational `p/q` or `p`, f64 decimal or
// scientific, complex rational `a/b+c/di` with either part optional.
// Dense vectors: `[c1,c2,...,cN]`.
//
// The formatter always emits canonical text; the parser accepts any order and
// duplicates and canonicalizes them, with a warning on the diagnostic stream.

namespace algvec {

enum class FieldKind { Rational, Float64, ComplexRational };

std::string_view to_string(FieldKind kind);
std::optional<IndexKind> parse_index_kind(std::string_view name);
std::optional<FieldKind> parse_field_kind(std::string_view name);

template <class F>
struct field_kind_of;
template <>
struct field_kind_of<Rational> {
  static constexpr FieldKind value = FieldKind::Rational;
};
template <>
struct field_kind_of<Float64> {
  static constexpr FieldKind value = FieldKind::Float64;
};
template <>
struct field_kind_of<ComplexRational> {
  static constexpr FieldKind value = FieldKind::ComplexRational;
};

/// 1-based position of a token within a document. line 0: no document.
struct TextPos {
  std::size_t line = 0;
  std::size_t column = 1;
};

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

std::string format_label(IntIndex label);
std::string format_label(const TextIndex& label);
std::string format_label(RealIndex label);
std::string format_label(const ComplexIndex& label);

std::string format_scalar(const Rational& x);
std::string format_scalar(Float64 x);
std::string format_scalar(const ComplexRational& x);

/**
 * Parses one complete label or coefficient token of type T. Throws
 * SyntaxError, or IncompatibleInput when the token is well-formed for a
 * different label kind or field.
 *
 * Specialized for the four label types and the three field types.
 */
template <class T>
T parse_token(std::string_view token, TextPos at = {});

template <>
IntIndex parse_token<IntIndex>(std::string_view, TextPos);
template <>
TextIndex parse_token<TextIndex>(std::string_view, TextPos);
template <>
RealIndex parse_token<RealIndex>(std::string_view, TextPos);
template <>
ComplexIndex parse_token<ComplexIndex>(std::string_view, TextPos);
template <>
Rational parse_token<Rational>(std::string_view, TextPos);
template <>
Float64 parse_token<Float64>(std::string_view, TextPos);
template <>
ComplexRational parse_token<ComplexRational>(std::string_view, TextPos);

/// A label token split out of a line, still unparsed.
struct RawPair {
  std::string_view label;
  TextPos label_pos;
  std::string_view coefficient;
  TextPos coefficient_pos;
};

/// Splits a vector line into raw pairs; nullopt for the `zero` literal.
std::optional<std::vector<RawPair>> split_pairs(std::string_view line,
                                                std::size_t line_number);

/// Diagnostic sink for parser warnings; null discards them.
struct ParseContext {
  std::size_t line = 0;
  std::ostream* diagnostics = nullptr;
};

void warn(const ParseContext& ctx, std::string_view message);

template <OrderedIndex I, Field F>
std::string format_vector(const AlgebraicVector<I, F>& v) {
  if (v.is_zero()) return "zero";
  std::string out;
  const auto support = v.support();
  const auto coefficients = v.coefficients();
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (k) out += ' ';
    out += format_label(support[k]);
    out += ':';
    out += format_scalar(coefficients[k]);
  }
  return out;
}

template <OrderedIndex I, Field F>
AlgebraicVector<I, F> parse_vector(std::string_view line, ParseContext ctx = {}) {
  auto raw = split_pairs(line, ctx.line);
  if (!raw) return {};

  IndexedCoefficients<I, F> pairs;
  pairs.reserve(raw->size());
  for (const RawPair& p : *raw)
    pairs.emplace_back(parse_token<I>(p.label, p.label_pos),
                       parse_token<F>(p.coefficient, p.coefficient_pos));

  bool ordered = true;
  bool has_zero = false;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k && !(pairs[k - 1].first < pairs[k].first)) ordered = false;
    if (pairs[k].second.is_zero()) has_zero = true;
  }
  if (!ordered) warn(ctx, "indexes out of order or repeated; canonicalized");
  if (has_zero) warn(ctx, "zero coefficients dropped");
  return AlgebraicVector<I, F>::from_pairs(std::move(pairs));
}

template <Field F>
std::string format_dense(const DenseVector<F>& d) {
  std::string out = "[";
  for (std::size_t k = 0; k < d.dim(); ++k) {
    if (k) out += ',';
    out += format_scalar(d.entries()[k]);
  }
  out += ']';
  return out;
}

/// Splits `[a,b,...]` into entry tokens. Throws SyntaxError.
std::vector<std::pair<std::string_view, TextPos>> split_dense(
    std::string_view line, std::size_t line_number);

template <Field F>
DenseVector<F> parse_dense(std::string_view line, ParseContext ctx = {}) {
  std::vector<F> entries;
  for (const auto& [token, pos] : split_dense(line, ctx.line))
    entries.push_back(parse_token<F>(token, pos));
  return DenseVector<F>{std::move(entries)};
}

/// A whole file: one vector per line, all of one label kind and field.
template <OrderedIndex I, Field F>
struct VectorDocument {
  static constexpr IndexKind index_kind = index_kind_of<I>::value;
  static constexpr FieldKind field_kind = field_kind_of<F>::value;

  std::vector<AlgebraicVector<I, F>> vectors;
};

/// Reads every line of `in`, reporting lines as 1-based. A trailing '\r' is
/// ignored; an empty line is a syntax error (write `zero` instead).
std::vector<std::string> read_lines(std::istream& in);

template <OrderedIndex I, Field F>
VectorDocument<I, F> read_document(std::istream& in,
                                   std::ostream* diagnostics = nullptr) {
  VectorDocument<I, F> doc;
  std::size_t line_number = 0;
  for (const std::string& line : read_lines(in)) {
    ++line_number;
    doc.vectors.push_back(
        parse_vector<I, F>(line, ParseContext{line_number, diagnostics}));
  }
  return doc;
}

template <OrderedIndex I, Field F>
void write_document(std::ostream& out, const VectorDocument<I, F>& doc) {
  for (const auto& v : doc.vectors) out << format_vector(v) << '\n';
}

/// Calls fn.template operator()<I, F>() for the label type and field type
/// named by the runtime tags.
template <class Fn>
decltype(auto) dispatch(IndexKind index_kind, FieldKind field_kind, Fn&& fn) {
  auto with_index = [&]<class I>() -> decltype(auto) {
    switch (field_kind) {
      case FieldKind::Float64: return fn.template operator()<I, Float64>();
      case FieldKind::ComplexRational:
        return fn.template operator()<I, ComplexRational>();
      case FieldKind::Rational: break;
    }
    return fn.template operator()<I, Rational>();
  };
  switch (index_kind) {
    case IndexKind::Text: return with_index.template operator()<TextIndex>();
    case IndexKind::Real: return with_index.template operator()<RealIndex>();
    case IndexKind::Complex: return with_index.template operator()<ComplexIndex>();
    case IndexKind::Int: break;
  }
  return with_index.template operator()<IntIndex>();
}

}  // namespace algvec
