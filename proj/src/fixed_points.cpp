#include "prym/fixed_points.hpp"

#include <algorithm>
#include <functional>

#include "prym/error.hpp"

namespace prym {

namespace {

std::vector<ClassMultiplicity> push_down(const IntMatrix& d, int point, const std::vector<int>& class_of,
                                         std::size_t class_count) {
  std::vector<std::int64_t> counts(class_count, 0);
  for (int target = 0; target < d.size(); ++target) counts[class_of[target]] += d(point, target);
  std::vector<ClassMultiplicity> out;
  for (std::size_t c = 0; c < class_count; ++c) {
    if (counts[c] != 0) out.push_back(ClassMultiplicity{static_cast<int>(c), counts[c]});
  }
  return out;
}

bool same_action(const std::vector<ClassMultiplicity>& a, const std::vector<ClassMultiplicity>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    return x.cls == y.cls && x.multiplicity == y.multiplicity;
  });
}

}  // namespace

std::int64_t SpecialFiberCorrespondence::multiplicity(int from, int to) const {
  for (const auto& entry : action[static_cast<std::size_t>(from)]) {
    if (entry.cls == to) return entry.multiplicity;
  }
  return 0;
}

SpecialFiberCorrespondence special_fiber_action(const FiberCorrespondence& generic, SpecialFiberModel fiber) {
  if (fiber.fiber_size != generic.size()) {
    throw ValidationError("fiber model has " + std::to_string(fiber.fiber_size) +
                          " points, correspondence acts on " + std::to_string(generic.size()));
  }
  const auto class_of = fiber.class_of_point();
  SpecialFiberCorrespondence out;
  out.bidegree = generic.bidegree;
  for (std::size_t c = 0; c < fiber.classes.size(); ++c) {
    const auto& members = fiber.classes[c].members;
    auto action = push_down(generic.matrix, members.front(), class_of, fiber.classes.size());
    for (std::size_t r = 1; r < members.size(); ++r) {
      if (!same_action(action, push_down(generic.matrix, members[r], class_of, fiber.classes.size()))) {
        throw ConsistencyError("class action depends on the representative: points " +
                               std::to_string(members.front()) + " and " + std::to_string(members[r]) +
                               " of class " + std::to_string(c));
      }
    }
    std::int64_t total = 0;
    for (const auto& entry : action) total += entry.multiplicity;
    if (total != generic.bidegree) throw ConsistencyError("class action does not have degree d");
    out.action.push_back(std::move(action));
  }
  out.fiber = std::move(fiber);
  return out;
}

SpecialFiberCorrespondence special_fiber_action(CorrespondenceKind kind, int parameter,
                                                const std::variant<SheetPartition, GridFiber>& identification,
                                                FiberModel model) {
  const auto generic = build_correspondence(kind, parameter);
  if (kind == CorrespondenceKind::subset) {
    const auto* partition = std::get_if<SheetPartition>(&identification);
    if (!partition) throw ValidationError("subset correspondence needs a sheet partition");
    return special_fiber_action(generic, subset_fiber(parameter, *partition, model));
  }
  const auto* grid = std::get_if<GridFiber>(&identification);
  if (!grid) throw ValidationError("grid correspondence needs row and column partitions");
  return special_fiber_action(generic, grid_fiber(parameter, *grid, model));
}

ScenarioFibers scenario_fibers(const Scenario& scenario, FiberModel model) {
  ScenarioFibers out;
  out.layout = curve_layout(scenario);
  out.generic = build_correspondence(out.layout.kind, out.layout.parameter);
  check_invariants(out.generic);
  out.model = model;
  for (const auto& group : out.layout.groups) {
    out.fibers.push_back(special_fiber_action(out.generic, fiber_model(out.layout, group, model)));
  }
  return out;
}

FixedPointReport fixed_point_scan(const ScenarioFibers& fibers) {
  FixedPointReport report;
  for (std::size_t g = 0; g < fibers.fibers.size(); ++g) {
    const auto& fiber = fibers.fibers[g];
    for (std::size_t c = 0; c < fiber.action.size(); ++c) {
      const std::int64_t mult = fiber.multiplicity(static_cast<int>(c), static_cast<int>(c));
      if (mult == 0) continue;
      report.fixed.push_back(FixedClass{g, static_cast<int>(c), mult});
      report.delta_dot_d += fibers.layout.groups[g].count * mult;
    }
  }
  return report;
}

FixedPointReport fixed_point_scan(const Scenario& scenario, FiberModel model) {
  return fixed_point_scan(scenario_fibers(scenario, model));
}

NestingOutcome nesting_search(const FixedPointReport& report, const ScenarioFibers& fibers) {
  NestingOutcome outcome;
  if (!report.even()) {
    outcome.reason = "odd number of fixed points (" + std::to_string(report.delta_dot_d) + ")";
    return outcome;
  }
  outcome.required = report.delta_dot_d / 2;
  if (outcome.required > fibers.generic.bidegree) {
    outcome.reason = "needs " + std::to_string(outcome.required) + " points but the bidegree is " +
                     std::to_string(fibers.generic.bidegree);
    return outcome;
  }
  if (outcome.required == 0) {
    outcome.certificate = NestingCertificate{};
    return outcome;
  }
  const auto k = static_cast<std::size_t>(outcome.required);

  for (std::size_t g = 0; g < fibers.fibers.size(); ++g) {
    const auto& fiber = fibers.fibers[g];
    std::vector<int> candidates;
    for (const auto& fixed : report.fixed) {
      if (fixed.group == g && fixed.multiplicity == 1) candidates.push_back(fixed.cls);
    }
    if (candidates.size() < k) continue;

    std::vector<int> chosen;
    std::vector<bool> used(candidates.size(), false);
    const std::function<bool()> extend = [&]() -> bool {
      if (chosen.size() == k) return true;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (used[i]) continue;
        const int p = candidates[i];
        const bool nested = std::all_of(chosen.begin(), chosen.end(),
                                        [&](int earlier) { return fiber.multiplicity(p, earlier) >= 1; });
        if (!nested) continue;
        used[i] = true;
        chosen.push_back(p);
        if (extend()) return true;
        chosen.pop_back();
        used[i] = false;
      }
      return false;
    };
    if (!extend()) continue;

    NestingCertificate cert{g, chosen, {}};
    for (int from : chosen) {
      std::vector<std::int64_t> row;
      for (int to : chosen) row.push_back(fiber.multiplicity(from, to));
      cert.table.push_back(std::move(row));
    }
    outcome.certificate = std::move(cert);
    return outcome;
  }
  outcome.reason = "no fiber carries " + std::to_string(k) + " nested fixed points of multiplicity 1";
  return outcome;
}

bool recheck_certificate(const NestingCertificate& certificate, const ScenarioFibers& fibers,
                         std::string* failure) {
  const auto fail = [&](const std::string& why) {
    if (failure) *failure = why;
    return false;
  };
  if (certificate.group >= fibers.fibers.size()) return fail("certificate names an unknown fiber");
  const auto& classes = fibers.fibers[certificate.group].fiber.classes;
  const auto& d = fibers.generic.matrix;
  const auto k = certificate.points.size();
  if (static_cast<std::int64_t>(k) > fibers.generic.bidegree) return fail("more points than the bidegree");
  if (certificate.table.size() != k) return fail("multiplicity table has the wrong shape");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (certificate.points[i] == certificate.points[j]) return fail("points are not distinct");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto pi = static_cast<std::size_t>(certificate.points[i]);
    if (pi >= classes.size()) return fail("certificate names an unknown class");
    if (certificate.table[i].size() != k) return fail("multiplicity table has the wrong shape");
    for (std::size_t j = 0; j < k; ++j) {
      // multiplicity of p_j in D(p_i), counted from each representative of p_i
      const auto& target = classes[static_cast<std::size_t>(certificate.points[j])].members;
      for (int rep : classes[pi].members) {
        std::int64_t mult = 0;
        for (int t : target) mult += d(rep, t);
        if (mult != certificate.table[i][j]) {
          return fail("recorded multiplicity of point " + std::to_string(j + 1) + " in D(point " +
                      std::to_string(i + 1) + ") does not match the matrix");
        }
      }
      if (j < i && certificate.table[i][j] < 1) {
        return fail("point " + std::to_string(j + 1) + " is not in D(point " + std::to_string(i + 1) + ")");
      }
    }
    if (certificate.table[i][i] != 1) {
      return fail("point " + std::to_string(i + 1) + " does not have multiplicity 1 in its own image");
    }
  }
  return true;
}

}  // namespace prym
