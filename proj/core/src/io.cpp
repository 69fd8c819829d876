#include "algvec/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <system_error>

namespace algvec {

std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::Rational: return "rational";
    case FieldKind::Float64: return "f64";
    case FieldKind::ComplexRational: return "complex-rational";
  }
  return "unknown";
}

std::optional<IndexKind> parse_index_kind(std::string_view name) {
  for (IndexKind k : {IndexKind::Int, IndexKind::Text, IndexKind::Real,
                      IndexKind::Complex})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::optional<FieldKind> parse_field_kind(std::string_view name) {
  for (FieldKind k :
       {FieldKind::Rational, FieldKind::Float64, FieldKind::ComplexRational})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::string format_label(IntIndex label) { return std::to_string(label.value()); }

std::string format_label(const TextIndex& label) {
  std::string out = "\"";
  for (char c : label.value()) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_label(RealIndex label) { return format_double(label.value()); }

std::string format_label(const ComplexIndex& label) {
  std::string im = format_double(label.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(label.real()) + im + "i";
}

std::string format_scalar(const Rational& x) { return x.to_string(); }
std::string format_scalar(Float64 x) { return format_double(x.value()); }
std::string format_scalar(const ComplexRational& x) { return x.to_string(); }

void warn(const ParseContext& ctx, std::string_view message) {
  if (!ctx.diagnostics) return;
  if (ctx.line) *ctx.diagnostics << "line " << ctx.line << ": ";
  *ctx.diagnostics << "warning: " << message << '\n';
}

namespace {

[[noreturn]] void fail(std::string_view message, TextPos at,
                       std::size_t offset = 0) {
  throw SyntaxError(std::string(message), at.line, at.column + offset);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of an integer literal `-?[0-9]+` at the start of s, or 0.
std::size_t scan_integer(std::string_view s) {
  std::size_t n = 0;
  if (n < s.size() && s[n] == '-') ++n;
  std::size_t digits = n;
  while (n < s.size() && is_digit(s[n])) ++n;
  return n > digits ? n : 0;
}

// Scans `-?digits(/digits)?`; returns the literal's length, 0 when absent.
std::size_t scan_rational(std::string_view s) {
  std::size_t n = scan_integer(s);
  if (n == 0) return 0;
  if (n < s.size() && s[n] == '/') {
    std::size_t d = n + 1;
    while (d < s.size() && is_digit(s[d])) ++d;
    if (d > n + 1) n = d;
  }
  return n;
}

Rational make_rational(std::string_view literal, TextPos at, std::size_t offset) {
  auto slash = literal.find('/');
  Rational::Integer num{std::string(literal.substr(0, slash))};
  if (slash == std::string_view::npos) return Rational{std::move(num)};
  Rational::Integer den{std::string(literal.substr(slash + 1))};
  if (den.is_zero()) fail("zero denominator", at, offset + slash + 1);
  return Rational{std::move(num), std::move(den)};
}

// Scans a finite double at the start of s (optional leading '+' not allowed).
std::size_t scan_double(std::string_view s, double& out) {
  if (s.empty()) return 0;
  // from_chars would accept "inf"/"nan"; labels and f64 values must be finite.
  char first = s.front() == '-' && s.size() > 1 ? s[1] : s.front();
  if (!is_digit(first) && first != '.') return 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out,
                                   std::chars_format::general);
  if (ec != std::errc{} || !std::isfinite(out)) return 0;
  return static_cast<std::size_t>(ptr - s.data());
}

std::optional<IntIndex> try_int(std::string_view s) {
  std::int64_t value = 0;
  if (scan_integer(s) != s.size() || s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return IntIndex{value};
}

std::optional<TextIndex> try_text(std::string_view s) {
  if (s.size() < 2 || s.front() != '"' || s.back() != '"') return std::nullopt;
  std::string value;
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    char c = s[k];
    if (c == '\\') {
      if (k + 2 >= s.size()) return std::nullopt;
      c = s[++k];
      if (c != '"' && c != '\\') return std::nullopt;
    } else if (c == '"') {
      return std::nullopt;
    }
    value += c;
  }
  return TextIndex{std::move(value)};
}

std::optional<double> try_real(std::string_view s) {
  double value = 0;
  if (s.empty() || scan_double(s, value) != s.size()) return std::nullopt;
  return value;
}

// `a`, `bi`, `a+bi` or `a-bi` with double parts.
std::optional<ComplexIndex> try_complex(std::string_view s) {
  double re = 0;
  std::size_t n = scan_double(s, re);
  if (n == 0) return std::nullopt;
  if (n == s.size()) return ComplexIndex{re, 0.0};
  if (s[n] == 'i' && n + 1 == s.size()) return ComplexIndex{0.0, re};
  if (s[n] != '+' && s[n] != '-') return std::nullopt;
  std::size_t start = s[n] == '+' ? n + 1 : n;
  double im = 0;
  std::size_t m = scan_double(s.substr(start), im);
  if (m == 0 || start + m + 1 != s.size() || s.back() != 'i') return std::nullopt;
  return ComplexIndex{re, im};
}

bool is_rational_literal(std::string_view s) {
  return !s.empty() && scan_rational(s) == s.size();
}

// `a`, `bi`, `a+bi`, `a-bi` with rational parts: (end of real part, start of
// imaginary part) or nullopt.
struct ComplexSplit {
  std::string_view re;
  std::size_t re_offset = 0;
  std::string_view im;
  std::size_t im_offset = 0;
};

std::optional<ComplexSplit> split_complex_rational(std::string_view s) {
  std::size_t n = scan_rational(s);
  if (n == 0) return std::nullopt;
  if (n == s.size()) return ComplexSplit{s, 0, {}, 0};
  if (s[n] == 'i' && n + 1 == s.size()) return ComplexSplit{{}, 0, s.substr(0, n), 0};
  if (s[n] != '+' && s[n] != '-') return std::nullopt;
  std::size_t start = s[n] == '+' ? n + 1 : n;
  std::size_t m = scan_rational(s.substr(start));
  if (m == 0 || start + m + 1 != s.size() || s.back() != 'i') return std::nullopt;
  return ComplexSplit{s.substr(0, n), 0, s.substr(start, m), start};
}

// Which other label kind would have accepted the token, for error messages.
std::optional<IndexKind> sniff_label(std::string_view s) {
  if (try_int(s)) return IndexKind::Int;
  if (try_text(s)) return IndexKind::Text;
  if (try_real(s)) return IndexKind::Real;
  if (try_complex(s)) return IndexKind::Complex;
  return std::nullopt;
}

std::optional<FieldKind> sniff_field(std::string_view s) {
  if (is_rational_literal(s)) return FieldKind::Rational;
  if (try_real(s)) return FieldKind::Float64;
  if (split_complex_rational(s)) return FieldKind::ComplexRational;
  return std::nullopt;
}

[[noreturn]] void reject_label(std::string_view token, IndexKind expected,
                               TextPos at) {
  if (auto other = sniff_label(token)) {
    throw IncompatibleInput(
        (at.line ? "line " + std::to_string(at.line) + ", " : std::string{}) +
        "column " + std::to_string(at.column) + ": label `" +
        std::string(token) + "` has kind " + std::string(to_string(*other)) +
        ", expected " + std::string(to_string(expected)));
  }
  fail("malformed " + std::string(to_string(expected)) + " label `" +
           std::string(token) + "`",
       at);
}

[[noreturn]] void reject_scalar(std::string_view token, FieldKind expected,
                                TextPos at) {
  if (auto other = sniff_field(token)) {
    throw IncompatibleInput(
        (at.line ? "line " + std::to_string(at.line) + ", " : std::string{}) +
        "column " + std::to_string(at.column) + ": coefficient `" +
        std::string(token) + "` belongs to field " +
        std::string(to_string(*other)) + ", expected " +
        std::string(to_string(expected)));
  }
  fail("malformed " + std::string(to_string(expected)) + " coefficient `" +
           std::string(token) + "`",
       at);
}

}  // namespace

template <>
IntIndex parse_token<IntIndex>(std::string_view token, TextPos at) {
  if (auto v = try_int(token)) return *v;
  if (!token.empty() && scan_integer(token) == token.size())
    fail("int label out of 64-bit range", at);
  reject_label(token, IndexKind::Int, at);
}

template <>
TextIndex parse_token<TextIndex>(std::string_view token, TextPos at) {
  if (auto v = try_text(token)) return *v;
  reject_label(token, IndexKind::Text, at);
}

template <>
RealIndex parse_token<RealIndex>(std::string_view token, TextPos at) {
  if (auto v = try_real(token)) return RealIndex{*v};
  reject_label(token, IndexKind::Real, at);
}

template <>
ComplexIndex parse_token<ComplexIndex>(std::string_view token, TextPos at) {
  if (auto v = try_complex(token)) return *v;
  reject_label(token, IndexKind::Complex, at);
}

template <>
Rational parse_token<Rational>(std::string_view token, TextPos at) {
  if (is_rational_literal(token)) return make_rational(token, at, 0);
  reject_scalar(token, FieldKind::Rational, at);
}

template <>
Float64 parse_token<Float64>(std::string_view token, TextPos at) {
  if (auto v = try_real(token)) return Float64{*v};
  reject_scalar(token, FieldKind::Float64, at);
}

template <>
ComplexRational parse_token<ComplexRational>(std::string_view token, TextPos at) {
  auto split = split_complex_rational(token);
  if (!split) reject_scalar(token, FieldKind::ComplexRational, at);
  Rational re = split->re.empty() ? Rational{}
                                  : make_rational(split->re, at, split->re_offset);
  Rational im = split->im.empty() ? Rational{}
                                  : make_rational(split->im, at, split->im_offset);
  return ComplexRational{std::move(re), std::move(im)};
}

std::optional<std::vector<RawPair>> split_pairs(std::string_view line,
                                                std::size_t line_number) {
  auto pos = [line_number](std::size_t offset) {
    return TextPos{line_number, offset + 1};
  };
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };

  std::size_t k = 0;
  auto skip_space = [&] {
    while (k < line.size() && is_space(line[k])) ++k;
  };

  skip_space();
  std::size_t last = line.size();
  while (last > k && is_space(line[last - 1])) --last;
  if (k == last) fail("empty line (the zero vector is written `zero`)", pos(k));
  if (line.substr(k, last - k) == "zero") return std::nullopt;

  std::vector<RawPair> pairs;
  while (k < last) {
    RawPair p;
    std::size_t begin = k;
    if (line[k] == '"') {
      ++k;
      while (k < last && line[k] != '"') k += line[k] == '\\' ? 2 : 1;
      if (k >= last) fail("unterminated quoted label", pos(begin));
      ++k;
    } else {
      while (k < last && line[k] != ':' && !is_space(line[k])) ++k;
    }
    if (k == begin) fail("expected an index label", pos(k));
    p.label = line.substr(begin, k - begin);
    p.label_pos = pos(begin);

    if (k >= last || line[k] != ':') fail("expected `:` after index label", pos(k));
    ++k;

    begin = k;
    while (k < last && !is_space(line[k])) ++k;
    if (k == begin) fail("expected a coefficient after `:`", pos(k));
    p.coefficient = line.substr(begin, k - begin);
    p.coefficient_pos = pos(begin);
    pairs.push_back(p);

    skip_space();
  }
  return pairs;
}

std::vector<std::pair<std::string_view, TextPos>> split_dense(
    std::string_view line, std::size_t line_number) {
  auto pos = [line_number](std::size_t offset) {
    return TextPos{line_number, offset + 1};
  };
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };

  std::size_t first = 0;
  while (first < line.size() && is_space(line[first])) ++first;
  std::size_t last = line.size();
  while (last > first && is_space(line[last - 1])) --last;
  if (first == last || line[first] != '[') fail("expected `[`", pos(first));
  if (line[last - 1] != ']') fail("expected `]`", pos(last));

  std::vector<std::pair<std::string_view, TextPos>> entries;
  std::size_t k = first + 1;
  const std::size_t close = last - 1;
  if (k == close) fail("dense vector needs at least one entry", pos(k));
  while (true) {
    while (k < close && is_space(line[k])) ++k;
    std::size_t begin = k;
    while (k < close && line[k] != ',' && !is_space(line[k])) ++k;
    if (k == begin) fail("expected an entry", pos(k));
    entries.emplace_back(line.substr(begin, k - begin), pos(begin));
    while (k < close && is_space(line[k])) ++k;
    if (k == close) break;
    if (line[k] != ',') fail("expected `,` or `]`", pos(k));
    ++k;
  }
  return entries;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace algvec
