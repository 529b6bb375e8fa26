#pragma once

#include <cstdint>
#include <vector>

#include "prym/permutation.hpp"

namespace prym {

// Branch data of a covering. Branch points are anonymous; only the local
// monodromy profile of each one matters.
struct CoveringData {
  int degree = 1;
  std::int64_t base_genus = 0;
  std::vector<CycleType> special_fibers;
  // Additional branch points with profile {2,1,...,1}.
  std::int64_t simple_extra = 0;
};

// Throws ValidationError if a fiber's parts do not sum to the degree or the
// fiber is unbranched.
void validate_branch_fiber(const CycleType& fiber, int degree);
void validate(const CoveringData& covering);

// w = Σ over branch points of Σ (part - 1).
std::int64_t ramification_degree(const CoveringData& covering);

// g with 2g - 2 = degree (2 base_genus - 2) + w. Throws ValidationError on a
// parity failure or a negative genus.
std::int64_t riemann_hurwitz_genus(std::int64_t degree, std::int64_t base_genus, std::int64_t w);

// Ramification degree a covering needs for the given upstairs genus.
std::int64_t required_ramification(std::int64_t degree, std::int64_t base_genus,
                                   std::int64_t upstairs_genus);

// Number of simple branch points to add to the special fibers of `covering`
// so that the total ramification matches `upstairs_genus`. The
// `simple_extra` field of the input is ignored. Throws ValidationError when
// the special fibers already exceed the budget.
std::int64_t simple_budget(const CoveringData& covering, std::int64_t upstairs_genus);

}  // namespace prym
