#include "so41kit/driver.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "so41kit/clifford.hpp"
#include "so41kit/cohomology.hpp"
#include "so41kit/induction.hpp"
#include "so41kit/kmodule.hpp"
#include "so41kit/lie.hpp"
#include "so41kit/module.hpp"
#include "so41kit/pbw.hpp"

namespace so41kit {

namespace {

void timed(Report& into, const std::string& key,
           const std::function<Report()>& suite) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = suite();
  auto t1 = std::chrono::steady_clock::now();
  into.merge(r);
  into.elapsed_ms.emplace_back(
      key, std::chrono::duration<double, std::milli>(t1 - t0).count());
}

Report structure_suite() {
  Report r;
  r.merge(verify_structure_constants());
  r.merge(verify_jacobi());
  r.merge(verify_cartan_and_roots());
  return r;
}

Report pbw_suite() {
  Report r;
  r.merge(verify_associativity(200));
  for (int k = 1; k <= 8; ++k) r.merge(verify_f1e3_identity(k));
  r.merge(verify_ug_span(5));
  r.merge(verify_casimir_central());
  return r;
}

Report clifford_suite() {
  Report r;
  r.merge(verify_clifford_relations());
  r.merge(verify_alpha());
  r.merge(verify_operator_identities());
  r.merge(verify_casimir_k_identity());
  r.merge(cp_invariants());
  return r;
}

Report module_suite(const ModuleTruncation& mt) {
  Report r;
  r.merge(verify_dimensions(mt));
  r.merge(verify_basis_theorem(mt));
  r.merge(verify_module_axioms(mt));
  r.merge(verify_scalar_nonvanishing(mt));
  r.merge(verify_casimir_scalar(mt));
  return r;
}

Report cohomology_suite(const ModuleTruncation& mt, HDSpace& hd) {
  Report r;
  hd = compute_hd(mt, r);
  r.merge(dk_eigenvalue_check(mt, hd));
  r.merge(hp_character_check(mt.lambda));
  r.merge(xs_basis(mt, hd));
  r.merge(verify_s4_reductions(mt, hd));
  return r;
}

Report induction_suite(const ModuleTruncation& mt, const HDSpace& hd) {
  Report r;
  r.merge(verify_isomorphism(mt, hd));
  r.merge(verify_phi_identities(mt, hd));
  r.merge(verify_phi_equivariance(mt, hd));
  r.merge(verify_ak_inventory());
  return r;
}

}  // namespace

RunResult run_request(const Request& req) {
  RunResult res;
  res.header.command = req.command;
  Report& rep = res.report;

  const bool parametrized = req.command == "build" ||
                            req.command == "cohomology" ||
                            req.command == "induct" ||
                            req.command == "verify-all";
  if (parametrized) {
    res.header.has_lambda = true;
    res.header.lambda1 = req.lambda1;
    res.header.lambda2 = req.lambda2;
    res.header.has_level = true;
    res.header.level = req.level;
  }

  if (req.command == "check-structure") {
    timed(rep, "structure", structure_suite);
    timed(rep, "pbw", pbw_suite);
    return res;
  }
  if (req.command == "check-clifford") {
    timed(rep, "clifford", clifford_suite);
    return res;
  }
  if (!parametrized)
    throw std::invalid_argument("unknown command: " + req.command);

  LambdaParam lam{req.lambda1, req.lambda2};

  if (req.command == "verify-all") {
    timed(rep, "structure", structure_suite);
    timed(rep, "pbw", pbw_suite);
    timed(rep, "clifford", clifford_suite);
    timed(rep, "kmodule", verify_k_modules);
  }

  ModuleTruncation mt;
  {
    auto t0 = std::chrono::steady_clock::now();
    mt = load_or_build(lam, req.level, req.cache_dir);
    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms.emplace_back(
        "build", std::chrono::duration<double, std::milli>(t1 - t0).count());
  }

  if (req.command == "build") {
    timed(rep, "kmodule", verify_k_modules);
    timed(rep, "module", [&] { return module_suite(mt); });
    if (!req.out_file.empty()) {
      std::ofstream out(req.out_file, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + req.out_file);
      out << truncation_to_json(mt);
    }
    return res;
  }

  if (req.command == "verify-all")
    timed(rep, "module", [&] { return module_suite(mt); });

  HDSpace hd;
  if (req.command == "cohomology" || req.command == "verify-all") {
    timed(rep, "cohomology", [&] { return cohomology_suite(mt, hd); });
  } else {
    // induct: the cohomology model is a prerequisite; surface only failures
    Report scratch;
    auto t0 = std::chrono::steady_clock::now();
    hd = compute_hd(mt, scratch);
    auto t1 = std::chrono::steady_clock::now();
    for (const auto& c : scratch.checks)
      if (!c.pass) rep.checks.push_back(c);
    rep.elapsed_ms.emplace_back(
        "cohomology",
        std::chrono::duration<double, std::milli>(t1 - t0).count());
  }

  if (req.command == "induct" || req.command == "verify-all")
    timed(rep, "induction", [&] { return induction_suite(mt, hd); });
  return res;
}

}  // namespace so41kit
