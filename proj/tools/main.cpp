#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "so41kit/driver.hpp"
#include "so41kit/report.hpp"

using namespace so41kit;

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for discrete series of SO_e(4,1)"};
  app.require_subcommand(1);

  std::vector<long> lambda;
  int level = 6;
  std::string format = "json";
  std::string out_file;

  auto configure = [&](CLI::App* cmd, bool with_lambda) {
    if (with_lambda) {
      cmd->add_option("--lambda", lambda,
                      "highest weight parameter as L1,L2 with λ1 ≥ λ2 ≥ 0")
          ->required()
          ->delimiter(',')
          ->expected(2);
      cmd->add_option("--level", level, "truncation level t of the module");
    }
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "tsv"}));
  };

  configure(app.add_subcommand(
                "check-structure",
                "verify the bracket table, Jacobi identity, and PBW rewriting"),
            false);
  configure(app.add_subcommand(
                "check-clifford",
                "verify the Clifford algebra, spin module, and Dirac identities"),
            false);
  auto* build_cmd = app.add_subcommand(
      "build", "solve the transition scalars and verify the module truncation");
  configure(build_cmd, true);
  build_cmd->add_option("--out", out_file, "write the solved module as JSON");
  configure(app.add_subcommand(
                "cohomology",
                "compute the Dirac cohomology and verify the kernel model"),
            true);
  configure(app.add_subcommand(
                "induct",
                "verify that Dirac induction recovers the module tensor spin"),
            true);
  configure(app.add_subcommand("verify-all", "run every verification suite"),
            true);

  CLI11_PARSE(app, argc, argv);

  Request req;
  req.command = app.get_subcommands().front()->get_name();
  if (lambda.size() == 2) {
    req.lambda1 = lambda[0];
    req.lambda2 = lambda[1];
  }
  req.level = level;
  req.out_file = out_file;
  if (const char* env = std::getenv("SO41KIT_CACHE_DIR")) req.cache_dir = env;

  try {
    RunResult res = run_request(req);
    std::cout << (format == "tsv" ? report_to_tsv(res.header, res.report)
                                  : report_to_json(res.header, res.report));
    return res.report.all_pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
