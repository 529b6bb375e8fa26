#pragma once

#include <string>

#include <json.hpp>

#include "prym/correspondence.hpp"
#include "prym/prym_report.hpp"
#include "prym/scenario.hpp"

namespace prym {

// Scenario files.
//
//   {"kind": "subset", "n": 3, "upstairs_genus": 1,
//    "special_fibers": [[2, 2, 1], [[1, 2], [3, 4], [5]]],
//    "model": "both", "monodromy": [[2, 1, 4, 3, 5], ...], "name": "..."}
//   {"kind": "grid", "base_genus": 3}
//
// A special fiber is either a profile (descending part sizes, labelled
// consecutively) or explicit 1-based blocks. For the subset kind "degree"
// (= n + 2) may stand in for "n", and "base_genus" must be 0 if present.
// "kind" defaults to "subset". Unknown keys are rejected. Errors are
// ValidationError with the offending field named.
Scenario scenario_from_json(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);
nlohmann::json scenario_to_json(const Scenario& scenario);

// Report schema; keys are emitted in sorted order and all numbers are exact
// (integers, or "p/q" strings for non-integral rationals).
nlohmann::json report_to_json(const PrymReport& report);
nlohmann::json report_to_json(const PrymReport& report, ModelSelection selection);
std::string report_to_table(const PrymReport& report, ModelSelection selection);

// Canonical text form: two-space indentation, trailing newline.
std::string dump(const nlohmann::json& doc);

struct IdentityReport {
  FiberCorrespondence correspondence;
  std::optional<QuadraticIdentity> identity;
  IdentityCheck check;
  ExponentResult exponent;
};

IdentityReport identity_report(CorrespondenceKind kind, int parameter);
nlohmann::json identity_to_json(const IdentityReport& report);
std::string identity_to_table(const IdentityReport& report);

nlohmann::json matrix_to_json(const IntMatrix& matrix);

}  // namespace prym
