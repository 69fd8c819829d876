#include "algvec/float64.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "algvec/errors.hpp"

namespace algvec {

Float64::Float64(double value) : value_(value) {
  if (!std::isfinite(value))
    throw NonFiniteValue("non-finite float field element: " +
                         std::to_string(value));
}

Float64 Float64::inverse() const {
  if (is_zero()) throw DivisionByZero{};
  return Float64{1.0 / value_};
}

std::ostream& operator<<(std::ostream& os, Float64 x) {
  return os << x.value();
}

}  // namespace algvec
