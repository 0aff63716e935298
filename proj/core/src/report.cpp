#include "so41kit/report.hpp"

#include <json.hpp>

namespace so41kit {

std::string report_to_json(const ReportHeader& h, const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = h.command;
  if (h.has_lambda) j["lambda"] = {h.lambda1, h.lambda2};
  if (h.has_level) j["level"] = h.level;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    j["checks"].push_back(cj);
  }
  nlohmann::ordered_json em;
  for (const auto& [k, v] : r.elapsed_ms) em[k] = v;
  j["elapsed_ms"] = em;
  return j.dump(2) + "\n";
}

std::string report_to_tsv(const ReportHeader& h, const Report& r) {
  std::string out;
  out += "command\t" + h.command;
  if (h.has_lambda)
    out += "\tlambda\t" + std::to_string(h.lambda1) + "," +
           std::to_string(h.lambda2);
  if (h.has_level) out += "\tlevel\t" + std::to_string(h.level);
  out += "\n";
  for (const auto& c : r.checks)
    out += c.name + "\t" + (c.pass ? "pass" : "fail") + "\t" + c.expected +
           "\t" + c.actual + "\n";
  return out;
}

}  // namespace so41kit
