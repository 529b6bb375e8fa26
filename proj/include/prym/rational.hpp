#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace prym {

using Rational = boost::multiprecision::cpp_rational;

// "p" when integral, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

// The value as an int64 when integral and in range.
std::optional<std::int64_t> to_int64(const Rational& value);

}  // namespace prym
