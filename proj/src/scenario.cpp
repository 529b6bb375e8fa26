#include "prym/scenario.hpp"

#include <string>

#include "prym/covering.hpp"
#include "prym/error.hpp"

namespace prym {

std::string_view model_name(FiberModel model) {
  return model == FiberModel::merged ? "paper" : "monodromy";
}

FiberModel parse_model(std::string_view name) {
  if (name == "paper") return FiberModel::merged;
  if (name == "monodromy") return FiberModel::orbit;
  throw ValidationError("model: expected \"paper\" or \"monodromy\", got \"" + std::string(name) + "\"");
}

ModelSelection parse_selection(std::string_view name) {
  if (name == "paper") return ModelSelection::paper;
  if (name == "monodromy") return ModelSelection::monodromy;
  if (name == "both") return ModelSelection::both;
  throw ValidationError("model: expected paper|monodromy|both, got \"" + std::string(name) + "\"");
}

std::string_view selection_name(ModelSelection selection) {
  switch (selection) {
    case ModelSelection::paper:
      return "paper";
    case ModelSelection::monodromy:
      return "monodromy";
    case ModelSelection::both:
      break;
  }
  return "both";
}

std::vector<FiberModel> models_of(ModelSelection selection) {
  switch (selection) {
    case ModelSelection::paper:
      return {FiberModel::merged};
    case ModelSelection::monodromy:
      return {FiberModel::orbit};
    case ModelSelection::both:
      break;
  }
  return {FiberModel::merged, FiberModel::orbit};
}

Scenario pn_case(int n, std::int64_t upstairs_genus) {
  if (n < 2 || n > 4) throw ValidationError("n: builtin pn-case supports n = 2, 3, 4");
  const std::vector<int> parts = n == 4 ? std::vector<int>{2, 2, 2} : std::vector<int>{2, 2};
  std::vector<int> profile = parts;
  int covered = 2 * static_cast<int>(parts.size());
  for (; covered < n + 2; ++covered) profile.push_back(1);
  const auto fiber = SheetPartition::from_profile(make_cycle_type(profile));
  Scenario s;
  s.name = "pn-case n=" + std::to_string(n) + " g_X=" + std::to_string(upstairs_genus);
  s.body = SubsetScenario{n, upstairs_genus, {fiber, fiber}, std::nullopt};
  s.model = ModelSelection::paper;
  validate(s);
  return s;
}

Scenario hyperelliptic(std::int64_t base_genus) {
  Scenario s;
  s.name = "hyperelliptic g=" + std::to_string(base_genus);
  s.body = GridScenario{base_genus, std::nullopt};
  validate(s);
  return s;
}

namespace {

void validate_subset(const SubsetScenario& s) {
  if (s.n < 2) throw ValidationError("n: must be at least 2");
  if (s.n + 2 > kMaxUniverse) throw ValidationError("n: too large for subset indexing");
  if (s.upstairs_genus < 0) throw ValidationError("upstairs_genus: must be non-negative");
  CoveringData covering{s.n + 2, 0, {}, 0};
  for (std::size_t i = 0; i < s.special_fibers.size(); ++i) {
    const auto& fiber = s.special_fibers[i];
    const auto where = "special_fibers[" + std::to_string(i) + "]: ";
    if (fiber.degree() != s.n + 2) {
      throw ValidationError(where + "partition has " + std::to_string(fiber.degree()) +
                            " labels, expected " + std::to_string(s.n + 2));
    }
    if (fiber.is_discrete()) throw ValidationError(where + "unbranched fiber must be omitted");
    covering.special_fibers.push_back(fiber.profile());
  }
  try {
    (void)simple_budget(covering, s.upstairs_genus);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("upstairs_genus: ") + e.what());
  }
  if (s.monodromy) {
    for (std::size_t i = 0; i < s.monodromy->size(); ++i) {
      if ((*s.monodromy)[i].degree() != s.n + 2) {
        throw ValidationError("monodromy[" + std::to_string(i) + "]: degree must be " +
                              std::to_string(s.n + 2));
      }
    }
  }
}

void validate_grid(const GridScenario& s) {
  if (s.base_genus < 2) throw ValidationError("base_genus: hyperelliptic curves need genus >= 2");
  if (s.monodromy) {
    for (std::size_t i = 0; i < s.monodromy->size(); ++i) {
      if ((*s.monodromy)[i].degree() != 9) {
        throw ValidationError("monodromy[" + std::to_string(i) + "]: degree must be 9");
      }
    }
  }
}

}  // namespace

void validate(const Scenario& scenario) {
  if (const auto* subset = std::get_if<SubsetScenario>(&scenario.body)) {
    validate_subset(*subset);
  } else {
    validate_grid(std::get<GridScenario>(scenario.body));
  }
}

}  // namespace prym
