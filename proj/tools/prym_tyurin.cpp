// prym-tyurin: scenario runner for the Prym-Tyurin criterion checker.
//
//   prym-tyurin run <file> [--model paper|monodromy|both] [--format json|table]
//   prym-tyurin run --batch <dir> [...]
//   prym-tyurin builtin pn-case --n <2|3|4> --gx <int>
//   prym-tyurin builtin hyperelliptic --g <int>
//   prym-tyurin verify-identity --kind <subset|grid> (--n|--m) <int>
//
// Exit codes: 0 when the combinatorial hypotheses verify, 2 when one fails
// (the report is still printed), 1 on invalid input.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prym/error.hpp"
#include "prym/prym_report.hpp"
#include "prym/report_io.hpp"

namespace {

constexpr int kVerified = 0;
constexpr int kInvalid = 1;
constexpr int kHypothesisFails = 2;

bool verbose() {
  const char* env = std::getenv("PRYM_VERBOSE");
  return env && *env && std::string(env) != "0";
}

struct Output {
  std::string format = "json";
  std::optional<std::string> model;
};

struct Rendered {
  std::string text;
  nlohmann::json doc;
  int code = kVerified;
};

Rendered render(prym::Scenario scenario, const Output& output) {
  if (output.model) scenario.model = prym::parse_selection(*output.model);
  const auto start = std::chrono::steady_clock::now();
  const auto report = prym::assemble(scenario);
  if (verbose()) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    std::cerr << "[prym] " << scenario.name << ": assembled in " << elapsed.count() << " ms\n";
  }
  Rendered out;
  out.doc = prym::report_to_json(report, scenario.model);
  out.text = output.format == "table" ? prym::report_to_table(report, scenario.model) : prym::dump(out.doc);
  out.code = report.verified() ? kVerified : kHypothesisFails;
  return out;
}

int emit(const Rendered& rendered) {
  std::cout << rendered.text;
  return rendered.code;
}

int run_batch(const std::string& dir, const Output& output) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::future<Rendered>> jobs;
  for (const auto& file : files) {
    jobs.push_back(std::async(std::launch::async, [file, output] {
      return render(prym::load_scenario(file.string()), output);
    }));
  }
  int code = kVerified;
  nlohmann::json all = nlohmann::json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Rendered rendered = jobs[i].get();  // rethrows validation errors
    code = std::max(code, rendered.code);
    if (output.format == "table") {
      std::cout << "== " << files[i].filename().string() << "\n" << rendered.text << "\n";
    } else {
      all.push_back(nlohmann::json{{"file", files[i].filename().string()}, {"report", rendered.doc}});
    }
  }
  if (output.format != "table") std::cout << prym::dump(all);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of the Prym-Tyurin criterion on branched-covering constructions"};
  app.require_subcommand(1);

  Output output;
  const auto add_output = [&](CLI::App* cmd, bool with_model) {
    cmd->add_option("--format", output.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    if (with_model) {
      cmd->add_option("--model", output.model, "Fiber model(s) to report")
          ->check(CLI::IsMember({"paper", "monodromy", "both"}));
    }
  };

  auto* run = app.add_subcommand("run", "Run a scenario file");
  std::string scenario_file;
  std::string batch_dir;
  run->add_option("file", scenario_file, "Scenario JSON file");
  run->add_option("--batch", batch_dir, "Run every *.json scenario in a directory");
  add_output(run, true);

  auto* builtin = app.add_subcommand("builtin", "Run a built-in construction");
  builtin->require_subcommand(1);
  auto* pn = builtin->add_subcommand("pn-case", "Degree n+2 covering of P^1 with the subset correspondence");
  int n = 0;
  std::int64_t gx = 0;
  pn->add_option("--n", n, "Subset size n (2, 3 or 4)")->required();
  pn->add_option("--gx", gx, "Genus of X")->required();
  add_output(pn, true);
  auto* hyper = builtin->add_subcommand("hyperelliptic", "Triple cover of a hyperelliptic curve, 3x3 grid fiber");
  std::int64_t g = 0;
  hyper->add_option("--g", g, "Genus of the hyperelliptic curve")->required();
  add_output(hyper, true);

  auto* identity = app.add_subcommand("verify-identity", "Discover and verify the quadratic identity of a correspondence");
  std::string kind;
  std::optional<int> subset_n;
  std::optional<int> grid_m;
  bool show_matrix = false;
  identity->add_option("--kind", kind, "Correspondence kind")->required()->check(CLI::IsMember({"subset", "grid"}));
  identity->add_option("--n", subset_n, "Subset size (subset kind)");
  identity->add_option("--m", grid_m, "Grid side (grid kind)");
  identity->add_flag("--matrix", show_matrix, "Include the fiber matrix in JSON output");
  add_output(identity, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (*run) {
      if (!batch_dir.empty()) return run_batch(batch_dir, output);
      if (scenario_file.empty()) throw prym::ValidationError("run: give a scenario file or --batch <dir>");
      return emit(render(prym::load_scenario(scenario_file), output));
    }
    if (*pn) {
      auto scenario = prym::pn_case(n, gx);
      return emit(render(std::move(scenario), output));
    }
    if (*hyper) return emit(render(prym::hyperelliptic(g), output));
    if (*identity) {
      const auto k = kind == "subset" ? prym::CorrespondenceKind::subset : prym::CorrespondenceKind::grid;
      const auto& param = k == prym::CorrespondenceKind::subset ? subset_n : grid_m;
      if (!param) throw prym::ValidationError(kind == "subset" ? "--n: required for the subset kind" : "--m: required for the grid kind");
      const auto report = prym::identity_report(k, *param);
      if (output.format == "table") {
        std::cout << prym::identity_to_table(report);
      } else {
        auto doc = prym::identity_to_json(report);
        if (show_matrix) doc["matrix"] = prym::matrix_to_json(report.correspondence.matrix);
        std::cout << prym::dump(doc);
      }
      return report.check.holds && report.exponent.ok ? kVerified : kHypothesisFails;
    }
  } catch (const prym::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
