#include "sdg/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace sdg;

namespace {

const char* kModel = R"({
  "variables": [{"id": "X1", "outcomes": ["a", "b"]}, {"id": "X2", "outcomes": ["a", "b"]}],
  "sets": {
    "D1": {"kind": "generators", "scope": ["X1"], "gambles": [["1/1", "-1/1"]]},
    "D2": {"kind": "generators", "scope": ["X2"], "gambles": [["2", "-1"]]},
    "Dbad": {"kind": "generators", "scope": ["X1"], "gambles": [["1", "-1"], ["-1", "1"]]},
    "U1": {"kind": "strict_from_credal", "scope": ["X1"], "vertices": [["1/2", "1/2"]]},
    "U2": {"kind": "strict_from_credal", "scope": ["X2"], "vertices": [["1/2", "1/2"]]},
    "M1": {"kind": "lex", "scope": ["X1"], "levels": [["1/2", "1/2"], ["1", "0"]]},
    "M2": {"kind": "lex", "scope": ["X2"], "levels": [["1/2", "1/2"], ["1", "0"]]},
    "P": {"kind": "expr", "op": "inex", "factors": ["D1", "D2"]},
    "C": {"kind": "expr", "op": "cyl_ext", "base": "D2", "scope": ["X1", "X2"]},
    "I": {"kind": "expr", "op": "irr_ext", "base": "D2", "irrelevant": ["X1"], "scope": ["X1", "X2"]}
  }
})";

struct Run {
  int code = -1;
  std::string out;
};

const std::string& model_path() {
  static const std::string path = [] {
    const std::string p = "sdg_cli_test_model.json";
    std::ofstream(p) << kModel;
    return p;
  }();
  return path;
}

Run sdg_cli(const std::string& args) {
  const std::string cmd = std::string(SDG_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Run with_model(const std::string& args) { return sdg_cli("--model " + model_path() + " " + args); }

CommandResult in_process(const std::vector<std::string>& args, bool json = false) {
  CommandOptions opts;
  opts.model_path = model_path();
  opts.json = json;
  return run_command(args, opts);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("membership of a rescaled generator") {
  const Run r = with_model("member D1 \"[2/1,-2/1]\"");
  CHECK(r.code == 0);
  CHECK(r.out == "In\n");
  const Run out = with_model("member D1 \"[-1,1]\"");
  CHECK(out.code == 1);
  CHECK(out.out == "Out\n");
}

TEST_CASE("check reports the failing combination") {
  const Run r = with_model("check Dbad");
  CHECK(r.code == 1);
  CHECK(r.out.find("fails: lambda=[1/2,1/2]") != std::string::npos);
  const Run ok = with_model("check D1");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("certificate") != std::string::npos);
}

TEST_CASE("previsions") {
  CHECK(with_model("lowprev D1 \"[0,2]\"").out.find("0") != std::string::npos);
  const CommandResult r = in_process({"lowprev", "D1", "[2,0]"}, true);
  CHECK(r.exit_code == kPass);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["lower"] == "1");
  const CommandResult c = in_process({"condlowprev", "P", "X1=b", "[3,1]"}, true);
  CHECK(c.exit_code == kPass);
}

TEST_CASE("irrelevance and independence checks") {
  CHECK(with_model("irr-check I X1 X2").code == 0);
  const Run fail = with_model("irr-check C X1 X2");
  CHECK(fail.code == 1);
  CHECK(fail.out.find("counterexample") != std::string::npos);
  CHECK(with_model("indep-check P \"X1|X2\"").code == 0);
}

TEST_CASE("non-maximality witness") {
  const CommandResult r = in_process({"witness-nonmaximal", "M1", "M2"}, true);
  CHECK(r.exit_code == kPass);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["verified"] == true);
  CHECK(j["witness"] == nlohmann::json::array({"0", "1/4", "-1/4", "0"}));
}

TEST_CASE("strong membership on the boundary is unknown") {
  CHECK(with_model("strong-member U1 U2 \"[1,-1,1,-1]\"").code == kUnknown);
  CHECK(with_model("strong-member U1 U2 \"[2,-1,1,-1]\"").code == kPass);
}

TEST_CASE("the built-in suite passes") {
  const Run r = sdg_cli("--json paper-suite");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["failed"] == 0);
  CHECK(doc["checks"].size() >= 10);
  for (const auto& c : doc["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("reports are deterministic") {
  for (const std::string args : {"check D1", "member P \"[1,-1,1,-1]\"", "--json lowprev P \"[1,2,3,4]\""}) {
    const std::string full = "--model " + model_path() + " " + args;
    CHECK(sdg_cli(full).out == sdg_cli(full).out);
  }
}

TEST_CASE("json reports") {
  const Run r = with_model("--json member D1 \"[2,-2]\"");
  const std::string opts_first = sdg_cli("--json --model " + model_path() + " member D1 \"[2,-2]\"").out;
  CHECK(r.code == 0);
  CHECK(r.out == opts_first);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "In");
  CHECK(j["gamble"] == nlohmann::json::array({"2", "-2"}));
}

TEST_CASE("errors exit with code 3") {
  CHECK(with_model("member D1 \"[1,2,3]\"").code == kError);
  CHECK(with_model("member D1 \"[0.5,1]\"").code == kError);
  CHECK(with_model("member Nope \"[1,2]\"").code == kError);
  CHECK(with_model("frobnicate").code == kError);
  CHECK(sdg_cli("member D1 \"[1,1]\"").code == kError);
  CHECK(sdg_cli("--model missing.json member D1 \"[1,1]\"").code == kError);
  CHECK(sdg_cli("").code == kError);
  const CommandResult e = in_process({"member", "D1"}, true);
  CHECK(e.exit_code == kError);
  CHECK(nlohmann::json::parse(e.output).contains("error"));
}

TEST_CASE("options after the command are passed through") {
  // "--json" is not a command option once the command has started.
  const Run r = with_model("member D1 \"[2,-2]\" --json");
  CHECK(r.code == kError);
}

TEST_CASE("describe prints the outcome order") {
  const Run r = with_model("describe C");
  CHECK(r.code == 0);
  CHECK(r.out.find("[0] ") != std::string::npos);
  CHECK(r.out.find("[3] ") != std::string::npos);
}

}  // TEST_SUITE
