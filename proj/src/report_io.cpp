#include "prym/report_io.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "prym/error.hpp"

namespace prym {

using nlohmann::json;

namespace {

json exact(const Rational& value) {
  if (auto integral = to_int64(value)) return *integral;
  return to_string(value);
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string(key) + ": missing");
  return doc.at(key);
}

std::int64_t get_int(const json& doc, const char* key) {
  const json& value = require(doc, key);
  if (!value.is_number_integer()) throw ValidationError(std::string(key) + ": expected an integer");
  return value.get<std::int64_t>();
}

std::vector<int> int_list(const json& value, const std::string& field) {
  if (!value.is_array()) throw ValidationError(field + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& x : value) {
    if (!x.is_number_integer()) throw ValidationError(field + ": expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

SheetPartition parse_fiber(const json& value, int degree, const std::string& field) {
  if (!value.is_array() || value.empty()) throw ValidationError(field + ": expected a non-empty array");
  try {
    if (value.front().is_array()) {
      std::vector<std::vector<int>> blocks;
      for (std::size_t i = 0; i < value.size(); ++i) {
        blocks.push_back(int_list(value[i], field + "[" + std::to_string(i) + "]"));
      }
      return SheetPartition::from_blocks(degree, blocks);
    }
    const auto profile = make_cycle_type(int_list(value, field));
    if (profile.degree() != degree) {
      throw ValidationError("profile sums to " + std::to_string(profile.degree()) + ", expected " +
                            std::to_string(degree));
    }
    return SheetPartition::from_profile(profile);
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    if (what.rfind(field, 0) == 0) throw;
    throw ValidationError(field + ": " + what);
  }
}

std::optional<std::vector<Permutation>> parse_monodromy(const json& doc) {
  if (!doc.contains("monodromy")) return std::nullopt;
  const json& value = doc.at("monodromy");
  if (!value.is_array()) throw ValidationError("monodromy: expected an array of permutations");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto field = "monodromy[" + std::to_string(i) + "]";
    try {
      out.emplace_back(int_list(value[i], field));
    } catch (const ValidationError& e) {
      throw ValidationError(field + ": " + e.what());
    }
  }
  return out;
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : doc.items()) {
    if (!allowed.contains(key)) throw ValidationError(key + ": unknown field");
  }
}

std::vector<int> point_labels(CorrespondenceKind kind, int parameter, int point) {
  if (kind == CorrespondenceKind::grid) return {point / parameter + 1, point % parameter + 1};
  auto labels = unrank_subset(SubsetIndex{parameter, parameter + 2, static_cast<std::uint64_t>(point)});
  for (int& label : labels) ++label;
  return labels;
}

std::string point_name(const std::vector<int>& labels) {
  std::string out = "P{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
  return out + "}";
}

json class_json(const PrymReport& report, const FiberClass& cls, std::size_t index) {
  json members = json::array();
  for (int point : cls.members) members.push_back(point_labels(report.kind, report.parameter, point));
  json out{{"index", index},
           {"name", point_name(point_labels(report.kind, report.parameter, cls.members.front()))},
           {"size", cls.index()},
           {"members", members}};
  if (!cls.block_multiset.empty()) {
    std::vector<int> blocks;
    for (int b : cls.block_multiset) blocks.push_back(b + 1);
    out["block_multiset"] = blocks;
  }
  return out;
}

json hypotheses_json(const Hypotheses& h) {
  return json{{"quadratic_ok", h.quadratic_ok},
              {"fixed_even", h.fixed_even},
              {"n_le_d", h.n_le_d},
              {"nesting_ok", h.nesting_ok},
              {"irreducible", h.irreducible},
              {"primitivity", "unchecked"},
              {"smoothness", "unchecked"}};
}

json model_json(const PrymReport& report, const ModelReport& m) {
  json fibers = json::array();
  for (const auto& f : m.fibers) {
    json classes = json::array();
    for (std::size_t c = 0; c < f.fiber.classes.size(); ++c) classes.push_back(class_json(report, f.fiber.classes[c], c));
    json fixed = json::array();
    for (const auto& x : f.fixed) fixed.push_back(json{{"class", x.cls}, {"multiplicity", x.multiplicity}});
    fibers.push_back(json{{"label", f.label},
                          {"count", f.count},
                          {"indices", f.fiber.indices()},
                          {"w_contribution", f.fiber.w_contribution},
                          {"classes", classes},
                          {"fixed", fixed}});
  }
  json nesting{{"required", m.nesting.required}, {"certificate", nullptr}, {"reason", m.nesting.reason}};
  if (m.nesting.certificate) {
    const auto& cert = *m.nesting.certificate;
    json points = json::array();
    std::string fiber_label;
    if (!cert.points.empty()) {
      const auto& summary = m.fibers[cert.group];
      fiber_label = summary.label;
      for (int p : cert.points) points.push_back(class_json(report, summary.fiber.classes[p], p));
    }
    nesting["certificate"] = json{{"fiber", fiber_label}, {"points", points}, {"table", cert.table},
                                  {"rechecked", m.certificate_rechecked}};
  }
  return json{{"model", std::string(model_name(m.model))},
              {"degree", m.curve.degree},
              {"w", m.curve.w},
              {"g_C", m.curve.genus},
              {"delta_dot_D", m.delta_dot_d},
              {"dim_P", m.dim_p ? exact(*m.dim_p) : json(nullptr)},
              {"dim_consistent", m.dim_consistent},
              {"epsilon_degree", m.epsilon_degree ? json(*m.epsilon_degree) : json(nullptr)},
              {"hypotheses", hypotheses_json(m.hypotheses)},
              {"fibers", fibers},
              {"nesting", nesting},
              {"verified", m.verified()}};
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("scenario: expected a JSON object");
  Scenario s;
  const std::string kind = doc.value("kind", std::string("subset"));
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ValidationError("name: expected a string");
    s.name = doc.at("name").get<std::string>();
  }
  if (doc.contains("model")) {
    if (!doc.at("model").is_string()) throw ValidationError("model: expected a string");
    s.model = parse_selection(doc.at("model").get<std::string>());
  }
  if (kind == "subset") {
    reject_unknown(doc, {"kind", "name", "model", "n", "degree", "base_genus", "upstairs_genus",
                         "special_fibers", "monodromy"});
    SubsetScenario body;
    if (doc.contains("n")) {
      body.n = static_cast<int>(get_int(doc, "n"));
      if (doc.contains("degree") && get_int(doc, "degree") != body.n + 2) {
        throw ValidationError("degree: must equal n + 2");
      }
    } else if (doc.contains("degree")) {
      body.n = static_cast<int>(get_int(doc, "degree")) - 2;
    } else {
      throw ValidationError("n: missing (or give degree = n + 2)");
    }
    if (body.n < 2 || body.n + 2 > kMaxUniverse) throw ValidationError("n: must be in 2.." + std::to_string(kMaxUniverse - 2));
    if (doc.contains("base_genus") && get_int(doc, "base_genus") != 0) {
      throw ValidationError("base_genus: the subset construction is over P^1 (base_genus 0)");
    }
    body.upstairs_genus = get_int(doc, "upstairs_genus");
    const json& fibers = doc.contains("special_fibers") ? doc.at("special_fibers") : json::array();
    if (!fibers.is_array()) throw ValidationError("special_fibers: expected an array");
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      body.special_fibers.push_back(parse_fiber(fibers[i], body.n + 2, "special_fibers[" + std::to_string(i) + "]"));
    }
    body.monodromy = parse_monodromy(doc);
    s.body = std::move(body);
  } else if (kind == "grid") {
    reject_unknown(doc, {"kind", "name", "model", "base_genus", "monodromy"});
    s.body = GridScenario{get_int(doc, "base_genus"), parse_monodromy(doc)};
  } else {
    throw ValidationError("kind: expected \"subset\" or \"grid\", got \"" + kind + "\"");
  }
  if (s.name.empty()) s.name = kind + " scenario";
  validate(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read scenario file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("scenario file " + path + " is not valid JSON: " + e.what());
  }
  return scenario_from_json(doc);
}

json scenario_to_json(const Scenario& scenario) {
  json out{{"name", scenario.name}, {"model", std::string(selection_name(scenario.model))}};
  const auto monodromy_json = [](const std::optional<std::vector<Permutation>>& m) {
    json arr = json::array();
    for (const auto& p : *m) arr.push_back(p.images());
    return arr;
  };
  if (const auto* s = std::get_if<SubsetScenario>(&scenario.body)) {
    out["kind"] = "subset";
    out["n"] = s->n;
    out["upstairs_genus"] = s->upstairs_genus;
    json fibers = json::array();
    for (const auto& f : s->special_fibers) fibers.push_back(f.one_based());
    out["special_fibers"] = fibers;
    if (s->monodromy) out["monodromy"] = monodromy_json(s->monodromy);
  } else {
    const auto& g = std::get<GridScenario>(scenario.body);
    out["kind"] = "grid";
    out["base_genus"] = g.base_genus;
    if (g.monodromy) out["monodromy"] = monodromy_json(g.monodromy);
  }
  return out;
}

json report_to_json(const PrymReport& report) { return report_to_json(report, report.scenario.model); }

json report_to_json(const PrymReport& report, ModelSelection selection) {
  json models = json::array();
  for (FiberModel model : models_of(selection)) models.push_back(model_json(report, report.model(model)));

  json identity = nullptr;
  if (report.identity) {
    identity = json{{"a", exact(report.identity->a)},
                    {"b", exact(report.identity->b)},
                    {"c", exact(report.identity->c)},
                    {"unique", report.identity->unique}};
  }
  json notes = json::array();
  for (const auto& note : report.notes) {
    json values = json::object();
    for (const auto& [key, value] : note.values) values[key] = value;
    notes.push_back(json{{"kind", note.kind}, {"text", note.text}, {"values", values}});
  }

  Scenario shown = report.scenario;
  shown.model = selection;
  const FiberModel verdict_model = selection == ModelSelection::monodromy ? FiberModel::orbit : FiberModel::merged;
  const auto& verdict = report.model(verdict_model);
  return json{
      {"scenario", scenario_to_json(shown)},
      {"correspondence",
       json{{"kind", report.kind == CorrespondenceKind::subset ? "subset" : "grid"},
            {"parameter", report.parameter},
            {"fiber_size", report.fiber_size},
            {"bidegree", report.bidegree},
            {"identity", identity},
            {"q", report.exponent.ok ? json(report.exponent.q) : json(nullptr)},
            {"exponent_diagnostic", report.exponent.diagnostic}}},
      {"covering", json{{"base_w", report.base_w}, {"simple_extra", report.simple_extra}}},
      {"irreducibility", json{{"transitive", report.irreducibility.transitive},
                              {"synthesized", report.irreducibility.synthesized},
                              {"generators", report.irreducibility.generator_count},
                              {"orbits", report.irreducibility.orbit_count}}},
      {"models", models},
      {"notes", notes},
      {"assumed_hypotheses", assumed_hypotheses()},
      {"verdict",
       json{{"model", std::string(model_name(verdict_model))},
            {"combinatorial_hypotheses", verdict.verified() ? "verified" : "failed"},
            {"analytic_hypotheses", "assumed"},
            {"q", report.exponent.ok ? json(report.exponent.q) : json(nullptr)},
            {"g_C", verdict.curve.genus},
            {"dim_P", verdict.dim_p ? exact(*verdict.dim_p) : json(nullptr)}}}};
}

std::string report_to_table(const PrymReport& report, ModelSelection selection) {
  std::ostringstream out;
  const auto models = models_of(selection);
  out << "scenario  " << report.scenario.name << "\n";
  out << "kind      " << (report.kind == CorrespondenceKind::subset ? "subset" : "grid")
      << "  parameter " << report.parameter << "  fiber " << report.fiber_size << "  bidegree "
      << report.bidegree << "\n";
  if (report.identity) {
    out << "identity  D^2 = " << to_string(report.identity->a) << " I + (" << to_string(report.identity->b)
        << ") D + " << to_string(report.identity->c) << " U\n";
  }
  out << "exponent  " << (report.exponent.ok ? std::to_string(report.exponent.q) : report.exponent.diagnostic) << "\n\n";

  const auto yes_no = [](bool v) { return std::string(v ? "yes" : "NO"); };
  const auto opt = [](const auto& v) -> std::string {
    if (!v) return "-";
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, Rational>) {
      return to_string(*v);
    } else {
      return std::to_string(*v);
    }
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> rows{
      {"model", {}}, {"w", {}}, {"g_C", {}}, {"delta.D", {}}, {"dim P", {}}, {"deg eps", {}},
      {"quadratic", {}}, {"2n fixed", {}}, {"n <= d", {}}, {"nesting", {}}, {"transitive", {}},
      {"verified", {}}};
  for (FiberModel model : models) {
    const auto& m = report.model(model);
    std::vector<std::string> cells{std::string(model_name(model)),
                                   std::to_string(m.curve.w),
                                   std::to_string(m.curve.genus),
                                   std::to_string(m.delta_dot_d),
                                   opt(m.dim_p) + (m.dim_p && !m.dim_consistent ? " (!)" : ""),
                                   opt(m.epsilon_degree),
                                   yes_no(m.hypotheses.quadratic_ok),
                                   yes_no(m.hypotheses.fixed_even),
                                   yes_no(m.hypotheses.n_le_d),
                                   yes_no(m.hypotheses.nesting_ok),
                                   yes_no(m.hypotheses.irreducible),
                                   yes_no(m.verified())};
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].second.push_back(cells[r]);
  }
  for (const auto& [label, cells] : rows) {
    out << std::left << std::setw(12) << label;
    for (const auto& cell : cells) out << std::setw(14) << cell;
    out << "\n";
  }
  for (const auto& note : report.notes) {
    out << "\nnote [" << note.kind << "] " << note.text;
    for (const auto& [key, value] : note.values) out << "\n  " << key << " = " << value;
  }
  out << "\n\nassumed (not checked): ";
  for (std::size_t i = 0; i < assumed_hypotheses().size(); ++i) out << (i ? "; " : "") << assumed_hypotheses()[i];
  out << "\n";
  return out.str();
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

IdentityReport identity_report(CorrespondenceKind kind, int parameter) {
  IdentityReport out{build_correspondence(kind, parameter), std::nullopt, {}, {}};
  check_invariants(out.correspondence);
  out.identity = discover_identity(out.correspondence.matrix);
  if (out.identity) {
    out.check = verify_identity(out.correspondence.matrix, out.identity->a, out.identity->b, out.identity->c);
    out.exponent = exponent_from_identity(*out.identity);
  } else {
    out.exponent = ExponentResult{false, 0, "criterion hypothesis (a) fails: no quadratic identity D^2 = aI + bD + cU"};
  }
  return out;
}

json identity_to_json(const IdentityReport& report) {
  const auto& c = report.correspondence;
  json out{{"kind", c.kind == CorrespondenceKind::subset ? "subset" : "grid"},
           {"parameter", c.parameter},
           {"fiber_size", c.size()},
           {"bidegree", c.bidegree},
           {"verified", report.check.holds},
           {"q", report.exponent.ok ? json(report.exponent.q) : json(nullptr)},
           {"exponent_diagnostic", report.exponent.diagnostic}};
  if (report.identity) {
    out["a"] = exact(report.identity->a);
    out["b"] = exact(report.identity->b);
    out["c"] = exact(report.identity->c);
    out["unique"] = report.identity->unique;
  } else {
    out["a"] = out["b"] = out["c"] = nullptr;
  }
  return out;
}

std::string identity_to_table(const IdentityReport& report) {
  std::ostringstream out;
  const auto& c = report.correspondence;
  out << "correspondence  " << (c.kind == CorrespondenceKind::subset ? "subset n=" : "grid m=") << c.parameter
      << "  N=" << c.size() << "  bidegree " << c.bidegree << "\n";
  if (report.identity) {
    out << "identity        D^2 = " << to_string(report.identity->a) << " I + (" << to_string(report.identity->b)
        << ") D + " << to_string(report.identity->c) << " U\n";
    out << "entrywise       " << (report.check.holds ? "verified" : "FAILED") << "\n";
  } else {
    out << "identity        none\n";
  }
  out << "exponent        " << (report.exponent.ok ? std::to_string(report.exponent.q) : report.exponent.diagnostic)
      << "\n";
  return out.str();
}

json matrix_to_json(const IntMatrix& matrix) { return matrix.rows(); }

}  // namespace prym
