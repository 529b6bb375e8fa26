#pragma once

#include <stdexcept>
#include <string>

namespace prym {

// Malformed input: bad degrees, labels that do not form a bijection or a
// partition, infeasible branch data, non-integral genus.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Internal consistency check that failed on well-formed input, e.g. a class
// action that depends on the chosen representative.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace prym
