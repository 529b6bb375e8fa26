#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prym/correspondence.hpp"
#include "prym/induced_curve.hpp"

namespace prym {

struct ClassMultiplicity {
  int cls = 0;
  std::int64_t multiplicity = 0;
};

// The correspondence pushed down to the points of one special fiber: for each
// class Q, the divisor D(Q) as classes with multiplicities.
struct SpecialFiberCorrespondence {
  SpecialFiberModel fiber;
  std::vector<std::vector<ClassMultiplicity>> action;  // per class, ascending cls
  std::int64_t bidegree = 0;

  // Multiplicity of class `to` in D(from).
  std::int64_t multiplicity(int from, int to) const;
};

// Computes D(Q) from every representative of every class and throws
// ConsistencyError if two representatives disagree.
SpecialFiberCorrespondence special_fiber_action(const FiberCorrespondence& generic, SpecialFiberModel fiber);

SpecialFiberCorrespondence special_fiber_action(CorrespondenceKind kind, int parameter,
                                                const std::variant<SheetPartition, GridFiber>& identification,
                                                FiberModel model);

// Every branch-point group of a scenario with its class action, under one
// fiber model.
struct ScenarioFibers {
  CurveLayout layout;
  FiberCorrespondence generic;
  FiberModel model = FiberModel::merged;
  std::vector<SpecialFiberCorrespondence> fibers;  // parallel to layout.groups
};

ScenarioFibers scenario_fibers(const Scenario& scenario, FiberModel model);

struct FixedClass {
  std::size_t group = 0;  // index into layout.groups
  int cls = 0;
  std::int64_t multiplicity = 0;  // of Q in D(Q)
};

struct FixedPointReport {
  std::vector<FixedClass> fixed;  // one fiber per group, ascending (group, cls)
  // Σ over groups of count * Σ multiplicities.
  std::int64_t delta_dot_d = 0;

  bool even() const { return delta_dot_d % 2 == 0; }
};

FixedPointReport fixed_point_scan(const ScenarioFibers& fibers);
FixedPointReport fixed_point_scan(const Scenario& scenario, FiberModel model);

// Fixed points p_1..p_k on one fiber such that p_1..p_i all lie in D(p_i)
// and p_i has multiplicity exactly 1 in D(p_i).
struct NestingCertificate {
  std::size_t group = 0;
  std::vector<int> points;  // classes, in certificate order
  // table[i][j] = multiplicity of points[j] in D(points[i])
  std::vector<std::vector<std::int64_t>> table;
};

struct NestingOutcome {
  std::optional<NestingCertificate> certificate;
  std::int64_t required = 0;  // Δ.D / 2
  std::string reason;         // why no certificate, when there is none
};

// Backtracking over ordered choices of Δ.D / 2 distinct fixed points in a
// single fiber; the correspondence preserves fibers, so points from
// different fibers never meet. Returns the least certificate ordered by
// group, then lexicographically by class.
NestingOutcome nesting_search(const FixedPointReport& report, const ScenarioFibers& fibers);

// Re-derives every multiplicity of the certificate from the generic-fiber
// matrix and the class membership lists, without using the class action.
bool recheck_certificate(const NestingCertificate& certificate, const ScenarioFibers& fibers,
                         std::string* failure = nullptr);

}  // namespace prym
