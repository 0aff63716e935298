// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Criteria cover the structure table, the normal-ordering engine, the
// Clifford layer, the module construction, the kernel of the Dirac
// operator, the induction isomorphism, and reproducibility, across the
// parameter set {(1,0), (2,0), (2,1), (2,2), (3,1)} at truncation level 6.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "so41kit/cohomology.hpp"
#include "so41kit/driver.hpp"
#include "so41kit/induction.hpp"
#include "so41kit/lie.hpp"
#include "so41kit/module.hpp"
#include "so41kit/pbw.hpp"

using namespace so41kit;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(int idx, const char* name, bool ok, const Report& rep,
          const std::string& detail) {
  std::printf("criterion %d (%s): %s  %s\n", idx, name, ok ? "PASS" : "FAIL",
              detail.c_str());
  if (!ok) {
    ++g_failures;
    int shown = 0;
    for (const auto& c : rep.checks) {
      if (c.pass) continue;
      std::printf("    failing check %s: expected %s, got %s\n",
                  c.name.c_str(), c.expected.c_str(), c.actual.c_str());
      if (++shown == 5) break;
    }
  }
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

const std::vector<std::pair<long, long>> kParams = {
    {1, 0}, {2, 0}, {2, 1}, {2, 2}, {3, 1}};
constexpr int kLevel = 6;

}  // namespace

int main() {
  // 1: commutator table re-derived from the matrix realization and the
  //    Jacobi identity on all triples, within one second.
  {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = verify_structure_constants();
    Report jac = verify_jacobi();
    rep.merge(jac);
    double dt = seconds_since(t0);
    bool ok = rep.all_pass() && rep.checks.size() == 165 && dt < 1.0;
    emit(1, "structure table and jacobi", ok, rep,
         "45 commutators + 120 triples, " + fmt(dt));
  }

  // 2: normal ordering: random associativity, the F1 E3^k identities up to
  //    k = 8, and the degree-5 monomial count 3003, within one minute.
  {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = verify_associativity(200);
    for (int k = 0; k <= 8; ++k) rep.merge(verify_f1e3_identity(k));
    rep.merge(verify_ug_span(5));
    double dt = seconds_since(t0);
    bool ok = rep.all_pass() && dt < 60.0;
    emit(2, "normal ordering engine", ok, rep,
         "200 associativity triples, k <= 8 ladder, C(15,10) span, " + fmt(dt));
  }

  // 3: Clifford algebra, spin module, alpha, operator identities and the
  //    K-invariants of C(p), within five seconds.
  {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = verify_clifford_relations();
    rep.merge(verify_alpha());
    rep.merge(verify_operator_identities());
    rep.merge(verify_casimir_k_identity());
    rep.merge(cp_invariants());
    double dt = seconds_since(t0);
    bool ok = rep.all_pass() && dt < 5.0;
    emit(3, "clifford and spin layer", ok, rep, fmt(dt));
  }

  // Shared builds for criteria 4-6.
  std::vector<ModuleTruncation> built;
  built.reserve(kParams.size());
  for (auto [l1, l2] : kParams)
    built.push_back(build_truncation(LambdaParam(l1, l2), kLevel));

  // 4: module construction for every parameter: unique gauged solve,
  //    bracket axioms exact on the interior, dimension formula, word basis
  //    of full rank, nonvanishing transition scalars.
  {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    for (const auto& mt : built) {
      rep.merge(verify_dimensions(mt));
      rep.merge(verify_module_axioms(mt));
      rep.merge(verify_basis_theorem(mt));
      rep.merge(verify_scalar_nonvanishing(mt));
    }
    emit(4, "highest weight modules", rep.all_pass(), rep,
         "5 parameters at level 6, " + fmt(seconds_since(t0)));
  }

  // 5: kernel of D: one spinor K-type of dimension
  //    (lambda1+lambda2+2)(lambda1-lambda2+1), top vector proportional to w,
  //    Ker D = Ker D^2, the D_k eigenvalue, and the character match.
  std::vector<HDSpace> spaces;
  {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    bool dims_ok = true;
    for (const auto& mt : built) {
      Report one;
      HDSpace hd = compute_hd(mt, one);
      rep.merge(one);
      rep.merge(dk_eigenvalue_check(mt, hd));
      rep.merge(hp_character_check(mt.lambda));
      long want = (mt.lambda.l1 + mt.lambda.l2 + 2) *
                  (mt.lambda.l1 - mt.lambda.l2 + 1);
      dims_ok = dims_ok && hd.dim() == std::size_t(want);
      spaces.push_back(std::move(hd));
    }
    emit(5, "dirac kernel", rep.all_pass() && dims_ok, rep,
         "5 parameters, " + fmt(seconds_since(t0)));
  }

  // 6: the induction map: independent images spanning all of X (x) S, the
  //    degree-zero slice count, the exact ladder identities, equivariance,
  //    and the invariant inventory of A^K.
  {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = verify_ak_inventory();
    for (std::size_t i = 0; i < built.size(); ++i) {
      rep.merge(verify_isomorphism(built[i], spaces[i]));
      rep.merge(verify_phi_identities(built[i], spaces[i]));
      rep.merge(verify_phi_equivariance(built[i], spaces[i]));
    }
    emit(6, "induction isomorphism", rep.all_pass(), rep,
         "5 parameters, " + fmt(seconds_since(t0)));
  }

  // 7: determinism: identical reports across repeated runs and a bit-exact
  //    cache round-trip.
  {
    auto t0 = std::chrono::steady_clock::now();
    Request req;
    req.command = "verify-all";
    req.lambda1 = 1;
    req.lambda2 = 0;
    req.level = 4;
    RunResult a = run_request(req);
    RunResult b = run_request(req);
    bool same = a.report.checks.size() == b.report.checks.size();
    if (same)
      for (std::size_t i = 0; i < a.report.checks.size(); ++i) {
        const Check& x = a.report.checks[i];
        const Check& y = b.report.checks[i];
        same = same && x.name == y.name && x.pass == y.pass &&
               x.expected == y.expected && x.actual == y.actual;
      }

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("so41kit-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    ModuleTruncation m1 = load_or_build(LambdaParam(2, 1), 3, dir.string());
    ModuleTruncation m2 = load_or_build(LambdaParam(2, 1), 3, dir.string());
    bool cache_ok = truncation_to_json(m1) == truncation_to_json(m2) &&
                    truncation_to_json(m1) ==
                        truncation_to_json(build_truncation(LambdaParam(2, 1), 3));
    fs::remove_all(dir);

    bool ok = a.report.all_pass() && same && cache_ok;
    emit(7, "reproducibility", ok, a.report,
         std::string(same ? "reports identical" : "reports differ") + ", " +
             std::string(cache_ok ? "cache bit-exact" : "cache mismatch") +
             ", " + fmt(seconds_since(t0)));
  }

  if (g_failures == 0)
    std::printf("acceptance: all 7 criteria passed\n");
  else
    std::printf("acceptance: %d of 7 criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
