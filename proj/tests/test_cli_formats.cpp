#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "cliff/expr.hpp"
#include "cliff/groups.hpp"
#include "cliff/json_io.hpp"
#include "cliff/sampling.hpp"
#include "cliff/spinors.hpp"
#include "cliff/verify.hpp"

using namespace cliff;
using nlohmann::json;

namespace {

const Signature kCl23 = Signature::cl23();

Multivector mv(const std::string& text) {
  return expr::evaluate(expr::parse(text, expr::Mode::Cl23));
}

struct CommandResult {
  int exit_code;
  std::string output;
};

// Runs the CLI binary, capturing stdout+stderr and the exit status.
CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(CLIFF_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buffer;
  while (std::fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("multivector JSON canonical form") {
  const Multivector x = mv("1/2-2*e0*e3*e4+e1");
  const json j = jsonio::multivector_to_json(x);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  // canonical order: scalar, then the vector, then the trivector
  CHECK(j[0]["blade"] == json::array());
  CHECK(j[0]["num"] == "1");
  CHECK(j[0]["den"] == "2");
  CHECK(j[1]["blade"] == json::array({1}));
  CHECK(j[1]["num"] == "1");
  CHECK(j[1]["den"] == "1");
  CHECK(j[2]["blade"] == json::array({0, 3, 4}));
  CHECK(j[2]["num"] == "-2");
  CHECK(j[2]["den"] == "1");
  CHECK(jsonio::multivector_from_json(j, kCl23) == x);

  Rng rng(kDefaultSeed);
  for (int t = 0; t < 50; ++t) {
    const Multivector m = random_multivector(kCl23, rng, 8);
    CHECK(jsonio::multivector_from_json(jsonio::multivector_to_json(m), kCl23) == m);
    // byte determinism
    CHECK(jsonio::multivector_to_json(m).dump() == jsonio::multivector_to_json(m).dump());
  }
}

TEST_CASE("orthogonal matrix JSON") {
  const auto m = groups::adjoint_matrix(mv("e0"));
  const json j = jsonio::ortho_to_json(m);
  CHECK(j["metric"] == json::array({1, -1, -1, -1, 1}));
  CHECK(j["det"] == "1");  // the adjoint action only reaches SO in odd dimension
  CHECK(j["entries"][0] == json::array({"1", "0", "0", "0", "0"}));
  CHECK(j["entries"][1] == json::array({"0", "-1", "0", "0", "0"}));
}

TEST_CASE("certificate JSON") {
  const json j = jsonio::certificate_to_json(groups::classify(mv("e0*e1")));
  CHECK(j["flags"]["in_spin"] == true);
  CHECK(j["flags"]["in_reduced_pin"] == false);
  CHECK(j["norm"]["a"] == "-1");
  CHECK(j["norm"]["b"] == "0");
  const json j2 = jsonio::certificate_to_json(groups::classify(spinors::dirac_idempotent()));
  CHECK(j2["norm"].is_null());
  CHECK(j2["flags"]["in_pin"] == false);
}

TEST_CASE("K-matrix JSON is the 4x4 re/im array") {
  const spinors::SpinorSpace space(
      spinors::Idempotent::certify(spinors::dirac_idempotent()));
  const json j =
      jsonio::kmatrix_to_json(spinors::matrix_rep(space, Multivector::pseudoscalar(kCl23)));
  REQUIRE(j.size() == 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      CHECK(j[r][c]["re"] == "0");
      CHECK(j[r][c]["im"] == (r == c ? "1" : "0"));
    }
}

TEST_CASE("verify reports are sorted, deterministic and well formed") {
  const auto report = verify::run_suite("core");
  REQUIRE(!report.checks.empty());
  for (std::size_t k = 1; k < report.checks.size(); ++k)
    CHECK(report.checks[k - 1].id < report.checks[k].id);
  CHECK(report.all_pass());
  CHECK(report.exit_code() == 0);
  const json j = verify::report_to_json(report);
  CHECK(j["suite"] == "core");
  CHECK(j["exit_code"] == 0);
  CHECK(j["checks"].size() == report.checks.size());
  // same seed, same serialized report
  CHECK(verify::report_to_json(verify::run_suite("core", 7)).dump() ==
        verify::report_to_json(verify::run_suite("core", 7)).dump());
}

TEST_CASE("cli: eval") {
  CHECK(run_cli("eval \"e2*e1\"").output == "-e1*e2\n");
  CHECK(run_cli("eval \"i*i\"").output == "-1\n");
  CHECK(run_cli("eval --algebra cl13c \"gamma0*gamma0\"").output == "1\n");
  CHECK(run_cli("eval --algebra cl13c \"gamma1*gamma2\"").output == "gamma1*gamma2\n");
  const auto idem = run_cli("eval \"1/2*(1+e1*e2*e3)*1/2*(1-e0*e3*e4)\"");
  CHECK(idem.output == "1/4-1/4*e0*e3*e4+1/4*e1*e2*e3-1/4*e0*e1*e2*e4\n");
  CHECK(idem.exit_code == 0);
  const auto js = run_cli("eval --json \"1/2\"");
  CHECK(js.output == "[{\"blade\":[],\"den\":\"2\",\"num\":\"1\"}]\n");
}

TEST_CASE("cli: parse errors exit 2 with caret diagnostics") {
  const auto bad = run_cli("eval \"e0*\"");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find('^') != std::string::npos);
  CHECK(run_cli("eval --algebra cl13c \"gamma5\"").exit_code == 2);
  CHECK(run_cli("eval \"1/0\"").exit_code == 2);
}

TEST_CASE("cli: adjoint") {
  const auto parity = run_cli("adjoint \"e1*e2*e3*e4\"");
  CHECK(parity.exit_code == 0);
  CHECK(parity.output ==
        "1 0 0 0 0\n0 -1 0 0 0\n0 0 -1 0 0\n0 0 0 -1 0\n0 0 0 0 -1\n");
  CHECK(run_cli("adjoint \"1\"").output ==
        "1 0 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 1 0\n0 0 0 0 1\n");
  // isotropic vector: exit 3
  CHECK(run_cli("adjoint \"e0+e1\"").exit_code == 3);
  // twisted action over Minkowski signature
  const auto twisted = run_cli("adjoint --twisted --signature 1,3 \"e0\"");
  CHECK(twisted.output == "-1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
  // diagram verification for a Pin(1,3) element
  const auto diag = run_cli("adjoint --signature 1,3 --check-diagram \"e0\"");
  CHECK(diag.exit_code == 0);
  CHECK(diag.output.find("diagram: commutes") != std::string::npos);
}

TEST_CASE("cli: embed and extract") {
  CHECK(run_cli("embed \"gamma1\" --kind twisted").output == "e0*e2*e3\n");
  CHECK(run_cli("embed \"gamma0\"").output == "e0\n");
  CHECK(run_cli("embed \"I\" --kind twisted").output == "e0*e1*e2*e3*e4\n");
  CHECK(run_cli("extract \"e4\"").output == "-I*gamma0*gamma1*gamma2*gamma3\n");
  CHECK(run_cli("extract \"e0*e2*e3\" --kind twisted").output == "gamma1\n");
}

TEST_CASE("cli: gamma dump") {
  const auto result = run_cli("gamma --basis dirac");
  CHECK(result.exit_code == 0);
  const json j = json::parse(result.output);
  CHECK(j["basis"] == "dirac");
  REQUIRE(j["gamma"].size() == 4);
  // gamma0 is the diagonal (1,1,-1,-1)
  CHECK(j["gamma"][0][0][0]["re"] == "1");
  CHECK(j["gamma"][0][2][2]["re"] == "-1");
  CHECK(j["gamma"][0][0][1]["re"] == "0");
}

TEST_CASE("cli: verify") {
  const auto core = run_cli("verify core");
  CHECK(core.exit_code == 0);
  CHECK(core.output.find("[PASS]") != std::string::npos);
  CHECK(core.output.find("[FAIL]") == std::string::npos);
  const auto js = run_cli("verify groups --json --seed 12345");
  CHECK(js.exit_code == 0);
  const json j = json::parse(js.output);
  CHECK(j["suite"] == "groups");
  CHECK(j["exit_code"] == 0);
}
