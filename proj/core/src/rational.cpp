#include "borderidx/rational.hpp"

#include <stdexcept>

namespace borderidx {

Rational parse_rational(const std::string& text) {
  mpq_class value;
  if (value.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  return value.get_str();
}

}  // namespace borderidx
