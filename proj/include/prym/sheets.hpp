#pragma once

#include <vector>

#include "prym/permutation.hpp"

namespace prym {

// A partition of the sheet labels of a covering fiber: the sheets that come
// together over a branch point. Stored 0-based with blocks sorted internally
// and ordered by their least label.
class SheetPartition {
 public:
  SheetPartition() = default;

  // Blocks given with 1-based labels; must partition 1..degree.
  static SheetPartition from_blocks(int degree, const std::vector<std::vector<int>>& blocks);
  // Canonical partition of a profile: consecutive labels, largest block first.
  // {2,2,1} gives {1,2},{3,4},{5}.
  static SheetPartition from_profile(const CycleType& profile);
  // Cycles of the local monodromy.
  static SheetPartition from_permutation(const Permutation& local);
  static SheetPartition discrete(int degree);

  int degree() const { return static_cast<int>(block_of_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int label) const { return block_of_[static_cast<std::size_t>(label)]; }

  CycleType profile() const;
  // Product of the block cycles, each block cycled in increasing order.
  Permutation monodromy() const;
  bool is_discrete() const;
  // Blocks as 1-based label lists.
  std::vector<std::vector<int>> one_based() const;

  friend bool operator==(const SheetPartition&, const SheetPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

}  // namespace prym
