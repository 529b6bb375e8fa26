#include "prym/covering.hpp"

#include <string>

#include "prym/error.hpp"

namespace prym {

void validate_branch_fiber(const CycleType& fiber, int degree) {
  if (fiber.degree() != degree) {
    throw ValidationError("branch fiber parts sum to " + std::to_string(fiber.degree()) +
                          ", covering degree is " + std::to_string(degree));
  }
  if (fiber.is_trivial()) {
    throw ValidationError("branch fiber with all parts equal to 1 is unbranched");
  }
}

void validate(const CoveringData& covering) {
  if (covering.degree < 1) throw ValidationError("covering degree must be positive");
  if (covering.base_genus < 0) throw ValidationError("base genus must be non-negative");
  if (covering.simple_extra < 0) throw ValidationError("simple branch point count is negative");
  if (covering.simple_extra > 0 && covering.degree < 2) {
    throw ValidationError("a degree-1 covering has no simple branch points");
  }
  for (const auto& fiber : covering.special_fibers) validate_branch_fiber(fiber, covering.degree);
}

std::int64_t ramification_degree(const CoveringData& covering) {
  validate(covering);
  std::int64_t w = covering.simple_extra;
  for (const auto& fiber : covering.special_fibers) w += fiber.ramification();
  return w;
}

std::int64_t riemann_hurwitz_genus(std::int64_t degree, std::int64_t base_genus, std::int64_t w) {
  if (degree < 1) throw ValidationError("covering degree must be positive");
  if (base_genus < 0) throw ValidationError("base genus must be non-negative");
  if (w < 0) throw ValidationError("ramification degree must be non-negative");
  const std::int64_t euler = degree * (2 * base_genus - 2) + w;  // = 2g - 2
  const auto scenario = "degree " + std::to_string(degree) + ", base genus " +
                        std::to_string(base_genus) + ", w = " + std::to_string(w);
  if (euler % 2 != 0) {
    throw ValidationError("Riemann-Hurwitz parity failure (" + scenario +
                          "): 2g - 2 = " + std::to_string(euler) + " is odd");
  }
  if (euler < -2) {
    throw ValidationError("Riemann-Hurwitz gives negative genus (" + scenario + ")");
  }
  return euler / 2 + 1;
}

std::int64_t required_ramification(std::int64_t degree, std::int64_t base_genus,
                                   std::int64_t upstairs_genus) {
  if (upstairs_genus < 0) throw ValidationError("upstairs genus must be non-negative");
  return (2 * upstairs_genus - 2) - degree * (2 * base_genus - 2);
}

std::int64_t simple_budget(const CoveringData& covering, std::int64_t upstairs_genus) {
  CoveringData specials = covering;
  specials.simple_extra = 0;
  const std::int64_t special_w = ramification_degree(specials);
  const std::int64_t total =
      required_ramification(covering.degree, covering.base_genus, upstairs_genus);
  const std::int64_t extra = total - special_w;
  if (extra < 0) {
    throw ValidationError("infeasible scenario: special fibers contribute w = " +
                          std::to_string(special_w) + " but upstairs genus " +
                          std::to_string(upstairs_genus) + " allows only " +
                          std::to_string(total));
  }
  if (extra > 0 && covering.degree < 2) {
    throw ValidationError("infeasible scenario: degree-1 covering cannot be branched");
  }
  return extra;
}

}  // namespace prym
