#include "algvec/index.hpp"

#include <cmath>
#include <ostream>

#include "algvec/errors.hpp"

namespace algvec {

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::Int: return "int";
    case IndexKind::Text: return "text";
    case IndexKind::Real: return "real";
    case IndexKind::Complex: return "complex";
  }
  return "unknown";
}

RealIndex::RealIndex(double value) : value_(value == 0.0 ? 0.0 : value) {
  if (!std::isfinite(value))
    throw NonFiniteValue("real index labels must be finite");
}

std::strong_ordering operator<=>(RealIndex a, RealIndex b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ComplexIndex::ComplexIndex(double re, double im) : re_(re), im_(im) {}

IndexKind kind_of(const IndexLabel& label) {
  return static_cast<IndexKind>(label.index());
}

std::strong_ordering compare(const IndexLabel& a, const IndexLabel& b) {
  if (a.index() != b.index())
    throw IncompatibleIndexKind(std::string("cannot compare ") +
                                std::string(to_string(kind_of(a))) +
                                " label with " +
                                std::string(to_string(kind_of(b))) + " label");
  return std::visit(
      [&b](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return lhs <=> std::get<T>(b);
      },
      a);
}

std::ostream& operator<<(std::ostream& os, IntIndex i) { return os << i.value(); }
std::ostream& operator<<(std::ostream& os, const TextIndex& i) {
  return os << '"' << i.value() << '"';
}
std::ostream& operator<<(std::ostream& os, RealIndex i) { return os << i.value(); }
std::ostream& operator<<(std::ostream& os, const ComplexIndex& i) {
  return os << i.real() << (std::signbit(i.imag()) ? "" : "+") << i.imag()
            << 'i';
}

}  // namespace algvec
