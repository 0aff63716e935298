#include <stdexcept>

#include "doctest.h"
#include "so41kit/driver.hpp"

using namespace so41kit;

namespace {

bool same_checks(const Report& a, const Report& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    const Check& x = a.checks[i];
    const Check& y = b.checks[i];
    if (x.name != y.name || x.pass != y.pass || x.expected != y.expected ||
        x.actual != y.actual)
      return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("driver") {

TEST_CASE("structure command emits the full pair and triple sweeps") {
  Request req;
  req.command = "check-structure";
  RunResult res = run_request(req);
  CHECK(res.report.all_pass());

  std::size_t commutators = 0, jacobi = 0;
  for (const auto& c : res.report.checks) {
    if (c.name.rfind("lie/commutator/", 0) == 0) ++commutators;
    if (c.name.rfind("lie/jacobi/", 0) == 0) ++jacobi;
  }
  CHECK(commutators == 45);
  CHECK(jacobi == 120);
  CHECK(res.header.command == "check-structure");
  CHECK_FALSE(res.header.has_lambda);
}

TEST_CASE("unknown command is rejected") {
  Request req;
  req.command = "frobnicate";
  CHECK_THROWS_AS(run_request(req), std::invalid_argument);
}

TEST_CASE("invalid parameter is rejected with the usage message") {
  Request req;
  req.command = "build";
  req.lambda1 = 0;
  req.lambda2 = 1;
  req.level = 2;
  CHECK_THROWS_WITH(run_request(req), "λ1 ≥ λ2 ≥ 0 required");
}

TEST_CASE("clifford command passes") {
  Request req;
  req.command = "check-clifford";
  RunResult res = run_request(req);
  CHECK(res.report.all_pass());
  REQUIRE(res.report.elapsed_ms.size() == 1);
  CHECK(res.report.elapsed_ms[0].first == "clifford");
}

TEST_CASE("full verification is deterministic") {
  Request req;
  req.command = "verify-all";
  req.lambda1 = 1;
  req.lambda2 = 0;
  req.level = 4;
  RunResult a = run_request(req);
  RunResult b = run_request(req);
  CHECK(a.report.all_pass());
  CHECK(same_checks(a.report, b.report));
  // Per-stage timings recorded in registry order.
  std::vector<std::string> stages;
  for (const auto& [k, v] : a.report.elapsed_ms) stages.push_back(k);
  CHECK(stages == std::vector<std::string>{"structure", "pbw", "clifford",
                                           "kmodule", "build", "module",
                                           "cohomology", "induction"});
}

TEST_CASE("report serialization shapes") {
  Request req;
  req.command = "build";
  req.lambda1 = 1;
  req.lambda2 = 0;
  req.level = 2;
  RunResult res = run_request(req);
  CHECK(res.report.all_pass());

  std::string js = report_to_json(res.header, res.report);
  CHECK(js.find("\"command\": \"build\"") != std::string::npos);
  CHECK(js.find("\"lambda\"") != std::string::npos);
  CHECK(js.find("\"checks\"") != std::string::npos);
  CHECK(js.find("\"elapsed_ms\"") != std::string::npos);

  std::string tsv = report_to_tsv(res.header, res.report);
  CHECK(tsv.find("elapsed") == std::string::npos);
  std::size_t lines = 0;
  for (char ch : tsv)
    if (ch == '\n') ++lines;
  // One header line plus one line per check.
  CHECK(lines == res.report.checks.size() + 1);
  CHECK(tsv.rfind("command\tbuild", 0) == 0);
}

}  // TEST_SUITE
