#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "prym/permutation.hpp"
#include "prym/sheets.hpp"

namespace prym {

// How the points of the induced curve over a special branch point are
// counted. `merged` identifies fiber points with equal images in the
// symmetric product; `orbit` takes the cycles of the induced local monodromy.
enum class FiberModel { merged, orbit };

std::string_view model_name(FiberModel model);  // "paper" / "monodromy"
FiberModel parse_model(std::string_view name);

enum class CorrespondenceKind { subset, grid };

enum class ModelSelection { paper, monodromy, both };
ModelSelection parse_selection(std::string_view name);
std::string_view selection_name(ModelSelection selection);
std::vector<FiberModel> models_of(ModelSelection selection);

// Degree n+2 covering X -> P^1 of genus g_X. The induced curve lives on
// n-subsets of the fibers and carries the codimension-2 subset correspondence.
struct SubsetScenario {
  int n = 2;
  std::int64_t upstairs_genus = 0;
  std::vector<SheetPartition> special_fibers;
  // Local monodromies generating the classifying map image; synthesized
  // from the branch data when absent.
  std::optional<std::vector<Permutation>> monodromy;
};

// Hyperelliptic X of genus g with a degree 3 covering of X simply branched at
// two points whose images in P^1 are distinct non-Weierstrass points. The
// induced curve is a degree 9 cover of P^1 whose fiber is a 3x3 grid.
struct GridScenario {
  std::int64_t base_genus = 3;
  std::optional<std::vector<Permutation>> monodromy;  // on the 9 grid points
};

struct Scenario {
  std::string name;
  std::variant<SubsetScenario, GridScenario> body;
  ModelSelection model = ModelSelection::paper;

  bool is_subset() const { return std::holds_alternative<SubsetScenario>(body); }
};

// Canonical scenarios behind the `builtin` commands. n = 2, 3 use two special
// fibers with profile {2,2,1,...}; n = 4 uses two fibers with {2,2,2}.
Scenario pn_case(int n, std::int64_t upstairs_genus);
Scenario hyperelliptic(std::int64_t base_genus);

// Throws ValidationError naming the offending field.
void validate(const Scenario& scenario);

}  // namespace prym
