#include "prym/prym_report.hpp"

#include <algorithm>

#include "prym/covering.hpp"
#include "prym/error.hpp"

namespace prym {

Rational prym_dimension(std::int64_t curve_genus, std::int64_t bidegree, std::int64_t delta_dot_d,
                        std::int64_t exponent) {
  if (exponent < 2) throw ValidationError("exponent must be at least 2, got " + std::to_string(exponent));
  if (curve_genus < 0 || bidegree < 0 || delta_dot_d < 0) {
    throw ValidationError("genus, bidegree and fixed-point count must be non-negative");
  }
  const Rational dim = (Rational(curve_genus) - bidegree + Rational(delta_dot_d, 2)) / exponent;
  if (dim < 0) throw ValidationError("trace formula gives negative dimension " + to_string(dim));
  return dim;
}

std::int64_t epsilon_degree(std::int64_t curve_genus, std::int64_t delta_dot_d) {
  if (delta_dot_d < 0 || delta_dot_d % 2 != 0) {
    throw ValidationError("deg epsilon needs an even fixed-point count, got " + std::to_string(delta_dot_d));
  }
  return curve_genus + delta_dot_d / 2 - 1;
}

const ModelReport& PrymReport::model(FiberModel which) const {
  for (const auto& m : models) {
    if (m.model == which) return m;
  }
  throw std::out_of_range("report has no such model");
}

FiberModel PrymReport::verdict_model() const {
  return scenario.model == ModelSelection::monodromy ? FiberModel::orbit : FiberModel::merged;
}

const std::vector<std::string>& assumed_hypotheses() {
  static const std::vector<std::string> assumed{
      "C is smooth",
      "C is irreducible (transitivity checked as a proxy)",
      "1 - gamma is primitive",
      "principal polarization Xi on P with i*Theta = q Xi",
      "U acts as zero on the Jacobian (it factors through Jac(P^1) = 0)",
  };
  return assumed;
}

namespace {

ModelReport run_model(const Scenario& scenario, FiberModel model, const ExponentResult& exponent,
                      const IrreducibilityResult& irreducibility) {
  ModelReport out;
  out.model = model;
  const auto fibers = scenario_fibers(scenario, model);
  out.curve = curve_genus(scenario, model);
  const auto scan = fixed_point_scan(fibers);
  out.delta_dot_d = scan.delta_dot_d;

  for (std::size_t g = 0; g < fibers.fibers.size(); ++g) {
    FiberSummary summary{fibers.layout.groups[g].label, fibers.layout.groups[g].count, fibers.fibers[g].fiber, {}};
    for (const auto& fixed : scan.fixed) {
      if (fixed.group == g) summary.fixed.push_back(ClassMultiplicity{fixed.cls, fixed.multiplicity});
    }
    out.fibers.push_back(std::move(summary));
  }

  out.hypotheses.quadratic_ok = exponent.ok;
  out.hypotheses.fixed_even = scan.even();
  out.hypotheses.n_le_d = scan.even() && scan.delta_dot_d / 2 <= fibers.generic.bidegree;
  out.hypotheses.irreducible = irreducibility.transitive;
  out.nesting = nesting_search(scan, fibers);
  if (out.nesting.certificate) {
    out.certificate_rechecked = recheck_certificate(*out.nesting.certificate, fibers);
  }
  out.hypotheses.nesting_ok = out.nesting.certificate.has_value() && out.certificate_rechecked;

  if (scan.even()) out.epsilon_degree = epsilon_degree(out.curve.genus, scan.delta_dot_d);
  if (exponent.ok) {
    const Rational numerator = Rational(out.curve.genus) - fibers.generic.bidegree + Rational(scan.delta_dot_d, 2);
    out.dim_p = numerator / exponent.q;
    out.dim_consistent = is_integer(*out.dim_p) && *out.dim_p >= 0;
  }
  return out;
}

void add_published_genus_notes(PrymReport& report) {
  const auto* s = std::get_if<SubsetScenario>(&report.scenario.body);
  if (!s) return;
  const auto& merged = report.model(FiberModel::merged);
  const std::int64_t gx = s->upstairs_genus;
  const std::int64_t n = s->n;

  std::optional<std::int64_t> published;
  std::string formula;
  if (s->special_fibers.empty()) {
    published = n * gx + n * (n + 1) / 2;
    formula = "n*g_X + n(n+1)/2";
  } else if (n == 4 && s->special_fibers.size() == 2 &&
             std::all_of(s->special_fibers.begin(), s->special_fibers.end(),
                         [](const SheetPartition& p) { return p.profile() == make_cycle_type({2, 2, 2}); })) {
    published = 4 * gx + 5;
    formula = "4*g_X + 5";
  }
  if (!published || *published == merged.curve.genus) return;

  ReportNote note{"published_genus_discrepancy",
                  "the published genus " + formula +
                      " disagrees with Riemann-Hurwitz applied to the ramification degree; "
                      "the recomputed value is used",
                  {}};
  note.values.emplace_back("published_g_C", std::to_string(*published));
  note.values.emplace_back("recomputed_g_C", std::to_string(merged.curve.genus));
  note.values.emplace_back("w", std::to_string(merged.curve.w));
  if (report.exponent.ok) {
    const Rational dim = (Rational(*published) - report.bidegree + Rational(merged.delta_dot_d, 2)) /
                         report.exponent.q;
    note.values.emplace_back("dim_P_with_published", to_string(dim));
    note.values.emplace_back("dim_P_with_published_integral", is_integer(dim) ? "true" : "false");
    note.values.emplace_back("dim_P_recomputed", merged.dim_p ? to_string(*merged.dim_p) : "none");
  }
  // 2g - 2 = deg(h) * (-2) + w must hold for the published genus too
  const std::int64_t implied_w = 2 * *published - 2 + 2 * static_cast<std::int64_t>(report.fiber_size);
  note.values.emplace_back("w_implied_by_published", std::to_string(implied_w));
  report.notes.push_back(std::move(note));
}

}  // namespace

PrymReport assemble(const Scenario& scenario) {
  validate(scenario);
  PrymReport report;
  report.scenario = scenario;
  const auto layout = curve_layout(scenario);
  report.kind = layout.kind;
  report.parameter = layout.parameter;
  report.fiber_size = layout.fiber_size;
  report.base_w = layout.base_w;
  report.simple_extra = layout.simple_extra;

  const auto generic = build_correspondence(layout.kind, layout.parameter);
  check_invariants(generic);
  report.bidegree = generic.bidegree;
  report.identity = discover_identity(generic.matrix);
  if (report.identity) {
    report.exponent = exponent_from_identity(*report.identity);
  } else {
    report.exponent = ExponentResult{false, 0, "criterion hypothesis (a) fails: no quadratic identity D^2 = aI + bD + cU"};
  }
  report.irreducibility = irreducibility_check(scenario);

  for (FiberModel model : {FiberModel::merged, FiberModel::orbit}) {
    report.models.push_back(run_model(scenario, model, report.exponent, report.irreducibility));
  }

  add_published_genus_notes(report);
  if (report.irreducibility.synthesized) {
    report.notes.push_back(ReportNote{"synthesized_monodromy",
                                      "no monodromy tuple supplied; transitivity checked on one local "
                                      "monodromy per branch point chosen from the branch data",
                                      {}});
  }
  if (const auto* g = std::get_if<GridScenario>(&scenario.body)) {
    ReportNote note{"hyperelliptic_family",
                    "informational: the construction varies in a (2g+1)-dimensional family", {}};
    note.values.emplace_back("family_dimension", std::to_string(2 * g->base_genus + 1));
    note.values.emplace_back("weierstrass_points", std::to_string(report.base_w));
    note.values.emplace_back("triple_cover_genus", std::to_string(riemann_hurwitz_genus(3, g->base_genus, 2)));
    report.notes.push_back(std::move(note));
  }
  const auto& verdict = report.model(report.verdict_model());
  if (verdict.dim_p && *verdict.dim_p == 0) {
    report.notes.push_back(ReportNote{"degenerate", "dim P = 0: the Prym-Tyurin variety is trivial", {}});
  }
  return report;
}

}  // namespace prym
