#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace prym {

// Bijection of {0..degree-1}. External I/O (constructor from images,
// images(), to_string()) uses 1-based labels.
class Permutation {
 public:
  Permutation() = default;

  // One-line notation with 1-based images; throws ValidationError unless the
  // images form a bijection of 1..images.size().
  explicit Permutation(const std::vector<int>& images_one_based);

  static Permutation identity(int degree);

  // Product of the given cycles (1-based labels). Cycles must be disjoint.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(map_.size()); }

  // 0-based application.
  int operator()(int point) const { return map_[static_cast<std::size_t>(point)]; }

  std::vector<int> images() const;
  const std::vector<int>& zero_based() const { return map_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Disjoint cycle notation, e.g. "(1 2)(3 4)"; "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  static Permutation from_zero_based(std::vector<int> map);
  std::vector<int> map_;
};

// (a ∘ b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);

struct CycleType {
  std::vector<int> parts;  // descending

  int degree() const;
  // Σ (part - 1): the contribution of one branch point to the ramification degree.
  std::int64_t ramification() const;
  bool is_trivial() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

// Validates a multiset of positive parts and sorts it descending.
CycleType make_cycle_type(std::vector<int> parts);

CycleType cycle_type(const Permutation& p);

// Cycles of p as 0-based point lists, each starting at its least point,
// ordered by that point.
std::vector<std::vector<int>> cycles(const Permutation& p);

// Orbits (0-based, sorted) of the group generated by `generators` acting on
// {0..degree-1}, found by breadth-first closure. With no generators every
// point is its own orbit.
std::vector<std::vector<int>> orbits(int degree, std::span<const Permutation> generators);

bool is_transitive(int degree, std::span<const Permutation> generators);

// ---------------------------------------------------------------------------
// k-subsets of {0..universe-1} in colexicographic order.
//
// The colex rank of {c_0 < c_1 < ... < c_{k-1}} is Σ_i C(c_i, i+1). All fiber
// indices reported anywhere in the library use this order.

std::uint64_t binomial(int n, int k);

using SubsetMask = std::uint32_t;
inline constexpr int kMaxUniverse = 32;

struct SubsetIndex {
  int size = 0;
  int universe = 0;
  std::uint64_t rank = 0;
};

SubsetIndex rank_subset(int universe, std::span<const int> elements);
std::vector<int> unrank_subset(const SubsetIndex& index);

SubsetMask to_mask(std::span<const int> elements);
std::vector<int> from_mask(SubsetMask mask);

// All k-subsets of {0..universe-1} as bit masks, in colex order; the position
// in the returned vector is the colex rank.
std::vector<SubsetMask> all_subsets(int universe, int k);

// Permutation of degree C(degree(p), k) sending the subset of rank r to the
// rank of its elementwise image.
Permutation induced_subset_action(const Permutation& p, int k);

}  // namespace prym
