#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(PRYM_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string scenario(const char* name) { return std::string(PRYM_SCENARIO_DIR) + "/" + name; }
std::string data(const char* name) { return std::string(PRYM_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("verified scenarios exit 0") {
  for (const char* file : {"p2_gx2.json", "p3_gx1.json", "p4_gx2.json", "hyperelliptic_g3.json"}) {
    const auto r = run("run " + scenario(file));
    CHECK_MESSAGE(r.code == 0, file);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("verdict").at("combinatorial_hypotheses") == "verified");
  }
  CHECK(run("builtin pn-case --n 3 --gx 2").code == 0);
  CHECK(run("builtin hyperelliptic --g 4 --format table").code == 0);
  CHECK(run("verify-identity --kind subset --n 5").code == 0);
  CHECK(run("verify-identity --kind grid --m 3 --matrix").code == 0);
}

TEST_CASE("failed hypotheses exit 2 and still print the report") {
  const auto r = run("run " + data("p2_monodromy.json"));
  CHECK(r.code == 2);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("verdict").at("model") == "monodromy");
  CHECK(doc.at("verdict").at("combinatorial_hypotheses") == "failed");

  CHECK(run("builtin pn-case --n 2 --gx 2 --model monodromy").code == 2);
  CHECK(run("verify-identity --kind grid --m 4").code == 2);
}

TEST_CASE("invalid input exits 1") {
  CHECK(run("run " + data("bad_profile.json")).code == 1);
  CHECK(run("run " + data("unknown_field.json")).code == 1);
  CHECK(run("run " + data("not_json.json")).code == 1);
  CHECK(run("run " + data("missing.json")).code == 1);
  CHECK(run("builtin pn-case --n 3").code == 1);
  CHECK(run("builtin pn-case --n 7 --gx 1").code == 1);
  CHECK(run("verify-identity --kind subset").code == 1);
  CHECK(run("frobnicate").code == 1);
}

TEST_CASE("batch mode") {
  const auto r = run("run --batch " + std::string(PRYM_SCENARIO_DIR));
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 4);
  CHECK(doc.at(0).at("file") == "hyperelliptic_g3.json");
}

TEST_CASE("output is deterministic") {
  CHECK(run("builtin pn-case --n 4 --gx 3 --model both").out == run("builtin pn-case --n 4 --gx 3 --model both").out);
}
