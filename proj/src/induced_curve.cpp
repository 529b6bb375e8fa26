#include "prym/induced_curve.hpp"

#include <algorithm>
#include <map>

#include "prym/covering.hpp"
#include "prym/error.hpp"

namespace prym {

namespace {

constexpr int kGridSize = 3;

SpecialFiberModel finish(FiberModel model, int fiber_size, std::vector<FiberClass> classes) {
  std::sort(classes.begin(), classes.end(),
            [](const FiberClass& a, const FiberClass& b) { return a.members.front() < b.members.front(); });
  SpecialFiberModel out{model, fiber_size, std::move(classes), 0};
  for (const auto& c : out.classes) out.w_contribution += c.index() - 1;
  return out;
}

SpecialFiberModel orbits_of(FiberModel model, const Permutation& induced) {
  std::vector<FiberClass> classes;
  const Permutation gens[] = {induced};
  for (auto& orbit : orbits(induced.degree(), gens)) classes.push_back(FiberClass{std::move(orbit), {}});
  return finish(model, induced.degree(), std::move(classes));
}

SpecialFiberModel group_by_key(int fiber_size, const std::vector<std::vector<int>>& keys) {
  std::map<std::vector<int>, std::vector<int>> grouped;
  for (int point = 0; point < fiber_size; ++point) grouped[keys[point]].push_back(point);
  std::vector<FiberClass> classes;
  for (auto& [key, members] : grouped) classes.push_back(FiberClass{std::move(members), key});
  return finish(FiberModel::merged, fiber_size, std::move(classes));
}

void check_subset_fiber(int n, int degree) {
  if (n < 1) throw ValidationError("subset size must be positive");
  if (degree != n + 2) {
    throw ValidationError("fiber of degree " + std::to_string(degree) + " does not match n + 2 = " +
                          std::to_string(n + 2));
  }
}

}  // namespace

std::vector<int> SpecialFiberModel::class_of_point() const {
  std::vector<int> out(static_cast<std::size_t>(fiber_size), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int point : classes[c].members) out[point] = static_cast<int>(c);
  }
  return out;
}

std::vector<int> SpecialFiberModel::indices() const {
  std::vector<int> out;
  for (const auto& c : classes) out.push_back(c.index());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<FiberClass> merged_fiber(int n, const SheetPartition& identification) {
  check_subset_fiber(n, identification.degree());
  const auto subsets = all_subsets(n + 2, n);
  std::vector<std::vector<int>> keys;
  keys.reserve(subsets.size());
  for (SubsetMask mask : subsets) {
    std::vector<int> key;
    for (int label : from_mask(mask)) key.push_back(identification.block_of(label));
    std::sort(key.begin(), key.end());
    keys.push_back(std::move(key));
  }
  return group_by_key(static_cast<int>(subsets.size()), keys).classes;
}

SpecialFiberModel orbit_fiber(int n, const Permutation& local_monodromy) {
  check_subset_fiber(n, local_monodromy.degree());
  return orbits_of(FiberModel::orbit, induced_subset_action(local_monodromy, n));
}

SpecialFiberModel subset_fiber(int n, const SheetPartition& identification, FiberModel model) {
  if (model == FiberModel::orbit) return orbit_fiber(n, identification.monodromy());
  auto classes = merged_fiber(n, identification);
  return finish(FiberModel::merged, static_cast<int>(binomial(n + 2, n)), std::move(classes));
}

Permutation grid_monodromy(int m, const GridFiber& fiber) {
  if (fiber.rows.degree() != m || fiber.cols.degree() != m) {
    throw ValidationError("grid fiber partitions must have " + std::to_string(m) + " labels");
  }
  if (fiber.swap && !(fiber.rows.is_discrete() && fiber.cols.is_discrete())) {
    throw ValidationError("a side-exchanging grid fiber must have discrete row and column partitions");
  }
  const Permutation sigma = fiber.rows.monodromy();
  const Permutation tau = fiber.cols.monodromy();
  std::vector<int> images(static_cast<std::size_t>(m * m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      images[i * m + j] = (fiber.swap ? j * m + i : sigma(i) * m + tau(j)) + 1;
    }
  }
  return Permutation(images);
}

SpecialFiberModel grid_fiber(int m, const GridFiber& fiber, FiberModel model) {
  const Permutation local = grid_monodromy(m, fiber);  // validates
  if (model == FiberModel::orbit) return orbits_of(FiberModel::orbit, local);
  std::vector<std::vector<int>> keys;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // x-side symbols 0..m-1, y-side symbols m..2m-1; over a Weierstrass
      // point both sides draw from the same sheets.
      std::vector<int> key = fiber.swap
                                 ? std::vector<int>{std::min(i, j), std::max(i, j)}
                                 : std::vector<int>{fiber.rows.block_of(i), m + fiber.cols.block_of(j)};
      keys.push_back(std::move(key));
    }
  }
  return group_by_key(m * m, keys);
}

CurveLayout curve_layout(const Scenario& scenario) {
  validate(scenario);
  CurveLayout layout;
  if (const auto* s = std::get_if<SubsetScenario>(&scenario.body)) {
    layout.kind = CorrespondenceKind::subset;
    layout.parameter = s->n;
    layout.fiber_size = static_cast<int>(binomial(s->n + 2, s->n));
    CoveringData covering{s->n + 2, 0, {}, 0};
    for (std::size_t i = 0; i < s->special_fibers.size(); ++i) {
      covering.special_fibers.push_back(s->special_fibers[i].profile());
      layout.groups.push_back(FiberGroup{"special[" + std::to_string(i) + "]", 1, s->special_fibers[i]});
    }
    layout.simple_extra = simple_budget(covering, s->upstairs_genus);
    layout.base_w = required_ramification(s->n + 2, 0, s->upstairs_genus);
    if (layout.simple_extra > 0) {
      std::vector<int> simple(static_cast<std::size_t>(s->n + 1), 1);
      simple.front() = 2;
      layout.groups.push_back(FiberGroup{"simple", layout.simple_extra,
                                         SheetPartition::from_profile(make_cycle_type(simple))});
    }
    return layout;
  }
  const auto& g = std::get<GridScenario>(scenario.body);
  layout.kind = CorrespondenceKind::grid;
  layout.parameter = kGridSize;
  layout.fiber_size = kGridSize * kGridSize;
  layout.base_w = required_ramification(2, 0, g.base_genus);  // 2g + 2 Weierstrass points
  const auto branch_rows = SheetPartition::from_blocks(kGridSize, {{1, 2}, {3}});
  const auto discrete = SheetPartition::discrete(kGridSize);
  layout.groups.push_back(FiberGroup{"branch[0]", 1, GridFiber{branch_rows, discrete, false}});
  layout.groups.push_back(FiberGroup{"branch[1]", 1, GridFiber{branch_rows, discrete, false}});
  layout.groups.push_back(FiberGroup{"weierstrass", layout.base_w, GridFiber{discrete, discrete, true}});
  return layout;
}

SpecialFiberModel fiber_model(const CurveLayout& layout, const FiberGroup& group, FiberModel model) {
  if (layout.kind == CorrespondenceKind::subset) {
    return subset_fiber(layout.parameter, std::get<SheetPartition>(group.fiber), model);
  }
  return grid_fiber(layout.parameter, std::get<GridFiber>(group.fiber), model);
}

CurveGenus curve_genus(const Scenario& scenario, FiberModel model) {
  const auto layout = curve_layout(scenario);
  CurveGenus out;
  out.degree = layout.fiber_size;
  for (const auto& group : layout.groups) {
    out.w += group.count * fiber_model(layout, group, model).w_contribution;
  }
  out.genus = riemann_hurwitz_genus(out.degree, 0, out.w);
  return out;
}

IrreducibilityResult irreducibility_check(const Scenario& scenario) {
  const auto layout = curve_layout(scenario);
  IrreducibilityResult out;
  std::vector<Permutation> generators;
  int points = layout.fiber_size;
  if (const auto* s = std::get_if<SubsetScenario>(&scenario.body)) {
    std::vector<Permutation> sheet_generators;
    if (s->monodromy) {
      sheet_generators = *s->monodromy;
    } else {
      out.synthesized = true;
      for (const auto& fiber : s->special_fibers) sheet_generators.push_back(fiber.monodromy());
      // one transposition per simple branch point; labels cycle through the
      // adjacent pairs, which already generate S_{n+2}
      const std::int64_t distinct = std::min<std::int64_t>(layout.simple_extra, s->n + 1);
      for (int k = 1; k <= distinct; ++k) {
        sheet_generators.push_back(Permutation::from_cycles(s->n + 2, {{k, k + 1}}));
      }
    }
    for (const auto& g : sheet_generators) generators.push_back(induced_subset_action(g, s->n));
  } else {
    const auto& g = std::get<GridScenario>(scenario.body);
    if (g.monodromy) {
      generators = *g.monodromy;
    } else {
      out.synthesized = true;
      // branch points of the degree 3 covering, labelled so the two local
      // transpositions differ, and one Weierstrass exchange
      const auto discrete = SheetPartition::discrete(kGridSize);
      generators.push_back(grid_monodromy(
          kGridSize, GridFiber{SheetPartition::from_blocks(kGridSize, {{1, 2}, {3}}), discrete, false}));
      generators.push_back(grid_monodromy(
          kGridSize, GridFiber{SheetPartition::from_blocks(kGridSize, {{1}, {2, 3}}), discrete, false}));
      generators.push_back(grid_monodromy(kGridSize, GridFiber{discrete, discrete, true}));
    }
  }
  out.generator_count = generators.size();
  out.orbit_count = orbits(points, generators).size();
  out.transitive = out.orbit_count == 1;
  return out;
}

}  // namespace prym
