#pragma once

#include <string>

#include "so41kit/report.hpp"

namespace so41kit {

// One CLI invocation: which suite to run and with what parameters.
struct Request {
  std::string command;  // check-structure, check-clifford, build,
                        // cohomology, induct, verify-all
  long lambda1 = 1;
  long lambda2 = 0;
  int level = 6;
  std::string out_file;   // build --out
  std::string cache_dir;  // module cache location, empty disables caching
};

struct RunResult {
  ReportHeader header;
  Report report;
};

// Runs the requested suites in fixed registry order and records one
// elapsed_ms entry per suite.  Throws std::invalid_argument for malformed
// parameters or an unknown command.
RunResult run_request(const Request& req);

}  // namespace so41kit
