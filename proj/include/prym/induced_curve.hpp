#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "prym/permutation.hpp"
#include "prym/scenario.hpp"
#include "prym/sheets.hpp"

namespace prym {

// A point of the induced curve over a special branch point, as a set of
// points of the generic fiber that come together there.
struct FiberClass {
  std::vector<int> members;         // generic-fiber point indices, ascending
  std::vector<int> block_multiset;  // image in the symmetric product (merged model only)

  int index() const { return static_cast<int>(members.size()); }
};

struct SpecialFiberModel {
  FiberModel model = FiberModel::merged;
  int fiber_size = 0;
  std::vector<FiberClass> classes;  // ordered by least member
  std::int64_t w_contribution = 0;  // Σ (index - 1)

  std::vector<int> class_of_point() const;
  std::vector<int> indices() const;  // class sizes, descending
};

// Subset kind. Generic-fiber points are the n-subsets of the n+2 sheets,
// indexed by colex rank.

// Groups the n-subsets by the multiset of blocks their elements fall in.
std::vector<FiberClass> merged_fiber(int n, const SheetPartition& identification);

// Cycles of the local monodromy induced on n-subsets.
SpecialFiberModel orbit_fiber(int n, const Permutation& local_monodromy);

// Either model; the orbit model uses identification.monodromy().
SpecialFiberModel subset_fiber(int n, const SheetPartition& identification, FiberModel model);

// Grid kind. Generic-fiber points are pairs (i, j) of an x-side sheet i and a
// y-side sheet j, indexed i * m + j. A fiber over a branch point of the
// degree m covering identifies x-side sheets (rows) or y-side sheets
// (columns); a fiber over a Weierstrass point exchanges the two sides.
struct GridFiber {
  SheetPartition rows;
  SheetPartition cols;
  bool swap = false;
};

Permutation grid_monodromy(int m, const GridFiber& fiber);
SpecialFiberModel grid_fiber(int m, const GridFiber& fiber, FiberModel model);

// A run of `count` branch points of the induced covering sharing one local
// picture.
struct FiberGroup {
  std::string label;
  std::int64_t count = 1;
  std::variant<SheetPartition, GridFiber> fiber;
};

struct CurveLayout {
  CorrespondenceKind kind = CorrespondenceKind::subset;
  int parameter = 2;   // n (subset) or m (grid)
  int fiber_size = 0;  // degree of the induced covering over P^1
  std::vector<FiberGroup> groups;
  // Ramification degree of the base covering: w_f of X -> P^1 (subset) or of
  // the hyperelliptic map (grid).
  std::int64_t base_w = 0;
  std::int64_t simple_extra = 0;  // subset kind only
};

CurveLayout curve_layout(const Scenario& scenario);
SpecialFiberModel fiber_model(const CurveLayout& layout, const FiberGroup& group, FiberModel model);

struct CurveGenus {
  std::int64_t degree = 0;  // of the induced covering
  std::int64_t w = 0;       // its ramification degree
  std::int64_t genus = 0;
};

CurveGenus curve_genus(const Scenario& scenario, FiberModel model);

struct IrreducibilityResult {
  bool transitive = false;
  bool synthesized = false;  // generators derived from branch data, not supplied
  std::size_t generator_count = 0;
  std::size_t orbit_count = 0;
};

// Transitivity of the monodromy of the induced covering: for the subset kind
// the action of the supplied (or synthesized) S_{n+2} generators on
// n-subsets; for the grid kind the supplied generators on the 9 points.
IrreducibilityResult irreducibility_check(const Scenario& scenario);

}  // namespace prym
