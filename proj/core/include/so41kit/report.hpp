#pragma once

#include <string>
#include <utility>
#include <vector>

namespace so41kit {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

// Accumulates named pass/fail checks; serialization lives in report.cpp so
// the JSON dependency stays private to the library.
struct Report {
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> elapsed_ms;

  void add(const std::string& name, bool pass, const std::string& expected,
           const std::string& actual) {
    checks.push_back({name, pass, expected, actual});
  }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    elapsed_ms.insert(elapsed_ms.end(), other.elapsed_ms.begin(),
                      other.elapsed_ms.end());
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct ReportHeader {
  std::string command;
  bool has_lambda = false;
  long lambda1 = 0, lambda2 = 0;
  bool has_level = false;
  int level = 0;
};

// {"command":..., "lambda":[l1,l2], "level":t, "checks":[...],
//  "elapsed_ms":{...}}; checks keep registry order.
std::string report_to_json(const ReportHeader& h, const Report& r);
// One check per row: name <TAB> status <TAB> expected <TAB> actual.
std::string report_to_tsv(const ReportHeader& h, const Report& r);

}  // namespace so41kit
