#include "prym/sheets.hpp"

#include <algorithm>
#include <string>

#include "prym/error.hpp"

namespace prym {

SheetPartition SheetPartition::from_blocks(int degree, const std::vector<std::vector<int>>& blocks) {
  if (degree < 1) throw ValidationError("partition degree must be positive");
  SheetPartition p;
  p.block_of_.assign(static_cast<std::size_t>(degree), -1);
  for (const auto& block : blocks) {
    if (block.empty()) throw ValidationError("partition has an empty block");
    std::vector<int> zero;
    for (int label : block) {
      if (label < 1 || label > degree) {
        throw ValidationError("partition label " + std::to_string(label) + " outside 1.." +
                              std::to_string(degree));
      }
      if (p.block_of_[label - 1] >= 0) {
        throw ValidationError("partition label " + std::to_string(label) + " appears twice");
      }
      p.block_of_[label - 1] = 0;
      zero.push_back(label - 1);
    }
    std::sort(zero.begin(), zero.end());
    p.blocks_.push_back(std::move(zero));
  }
  for (int label = 0; label < degree; ++label) {
    if (p.block_of_[label] < 0) {
      throw ValidationError("partition misses label " + std::to_string(label + 1));
    }
  }
  std::sort(p.blocks_.begin(), p.blocks_.end());
  for (std::size_t b = 0; b < p.blocks_.size(); ++b) {
    for (int label : p.blocks_[b]) p.block_of_[label] = static_cast<int>(b);
  }
  return p;
}

SheetPartition SheetPartition::from_profile(const CycleType& profile) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int part : profile.parts) {
    std::vector<int> block;
    for (int i = 0; i < part; ++i) block.push_back(next++);
    blocks.push_back(std::move(block));
  }
  return from_blocks(profile.degree(), blocks);
}

SheetPartition SheetPartition::from_permutation(const Permutation& local) {
  std::vector<std::vector<int>> blocks;
  for (auto cycle : cycles(local)) {
    for (int& label : cycle) ++label;
    blocks.push_back(std::move(cycle));
  }
  return from_blocks(local.degree(), blocks);
}

SheetPartition SheetPartition::discrete(int degree) {
  std::vector<std::vector<int>> blocks;
  for (int label = 1; label <= degree; ++label) blocks.push_back({label});
  return from_blocks(degree, blocks);
}

CycleType SheetPartition::profile() const {
  std::vector<int> parts;
  for (const auto& block : blocks_) parts.push_back(static_cast<int>(block.size()));
  return make_cycle_type(std::move(parts));
}

Permutation SheetPartition::monodromy() const { return Permutation::from_cycles(degree(), one_based()); }

bool SheetPartition::is_discrete() const { return blocks_.size() == block_of_.size(); }

std::vector<std::vector<int>> SheetPartition::one_based() const {
  std::vector<std::vector<int>> out;
  for (const auto& block : blocks_) {
    std::vector<int> labels;
    for (int label : block) labels.push_back(label + 1);
    out.push_back(std::move(labels));
  }
  return out;
}

}  // namespace prym
