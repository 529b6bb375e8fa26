#include "prym/rational.hpp"

#include <limits>

namespace prym {

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

std::optional<std::int64_t> to_int64(const Rational& value) {
  if (!is_integer(value)) return std::nullopt;
  const auto num = boost::multiprecision::numerator(value);
  if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return num.convert_to<std::int64_t>();
}

}  // namespace prym
