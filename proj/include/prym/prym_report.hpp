#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prym/correspondence.hpp"
#include "prym/fixed_points.hpp"
#include "prym/induced_curve.hpp"
#include "prym/rational.hpp"
#include "prym/scenario.hpp"

namespace prym {

// q * dim P = g_C - d + Δ.D / 2, solved exactly for dim P. The result may be
// non-integral; callers report that as an inconsistency. Throws
// ValidationError for q < 2, negative inputs or a negative dimension.
Rational prym_dimension(std::int64_t curve_genus, std::int64_t bidegree, std::int64_t delta_dot_d,
                        std::int64_t exponent);

// deg ε = g_C + Δ.D / 2 - 1. Throws ValidationError for an odd count.
std::int64_t epsilon_degree(std::int64_t curve_genus, std::int64_t delta_dot_d);

struct Hypotheses {
  bool quadratic_ok = false;  // identity found and factors with q >= 2
  bool fixed_even = false;    // Δ.D = 2n
  bool n_le_d = false;        // n <= d
  bool nesting_ok = false;    // certificate found and rechecked
  bool irreducible = false;   // transitive monodromy (proxy for irreducibility of C)

  bool all() const { return quadratic_ok && fixed_even && n_le_d && nesting_ok && irreducible; }
};

struct FiberSummary {
  std::string label;
  std::int64_t count = 1;
  SpecialFiberModel fiber;
  std::vector<ClassMultiplicity> fixed;  // (class, multiplicity of Q in D(Q))
};

struct ModelReport {
  FiberModel model = FiberModel::merged;
  CurveGenus curve;
  std::vector<FiberSummary> fibers;
  std::int64_t delta_dot_d = 0;
  std::optional<Rational> dim_p;  // absent when no exponent exists
  bool dim_consistent = false;    // dim P is a non-negative integer
  std::optional<std::int64_t> epsilon_degree;
  Hypotheses hypotheses;
  NestingOutcome nesting;
  bool certificate_rechecked = false;

  bool verified() const { return hypotheses.all() && dim_consistent; }
};

struct ReportNote {
  std::string kind;
  std::string text;
  std::vector<std::pair<std::string, std::string>> values;  // exact values as strings
};

struct PrymReport {
  Scenario scenario;
  CorrespondenceKind kind = CorrespondenceKind::subset;
  int parameter = 0;
  int fiber_size = 0;
  std::int64_t bidegree = 0;
  std::optional<QuadraticIdentity> identity;
  ExponentResult exponent;
  std::int64_t base_w = 0;
  std::int64_t simple_extra = 0;
  IrreducibilityResult irreducibility;
  std::vector<ModelReport> models;  // merged, then orbit
  std::vector<ReportNote> notes;

  const ModelReport& model(FiberModel which) const;
  // The model the verdict is taken from: the paper model whenever the
  // selection includes it.
  FiberModel verdict_model() const;
  bool verified() const { return model(verdict_model()).verified(); }
};

// Hypotheses recorded as assumed in every report; desk computation does not
// establish them.
const std::vector<std::string>& assumed_hypotheses();

// Runs the whole pipeline under both fiber models.
PrymReport assemble(const Scenario& scenario);

}  // namespace prym
