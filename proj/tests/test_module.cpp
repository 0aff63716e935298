#include <unistd.h>

#include <filesystem>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "so41kit/module.hpp"

using namespace so41kit;

TEST_SUITE("module") {

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(LambdaParam(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(LambdaParam(1, -1), std::invalid_argument);
  CHECK_THROWS_WITH(LambdaParam(0, 1), "λ1 ≥ λ2 ≥ 0 required");
  LambdaParam lam(1, 0);
  CHECK(lam.m0() == 3);
  CHECK(lam.n0() == 1);
}

TEST_CASE("K-type lattice of the truncation") {
  LambdaParam lam(1, 0);
  auto nodes = ktypes(lam, 2);
  // Levels 0..2 with 0 <= l <= 1: five nodes in (level, l) order.
  REQUIRE(nodes.size() == 5);
  CHECK(nodes[0] == GammaNode{0, 0});
  CHECK(nodes[1] == GammaNode{1, 0});
  CHECK(nodes[2] == GammaNode{0, 1});
  CHECK(nodes[3] == GammaNode{2, 0});
  CHECK(nodes[4] == GammaNode{1, 1});

  ModuleTruncation mt = build_truncation(lam, 2);
  CHECK(mt.label(0) == KTypeLabel{3, 1});
  CHECK(mt.label(1) == KTypeLabel{4, 2});
  CHECK(mt.label(2) == KTypeLabel{4, 0});
}

TEST_CASE("dimension formula against enumeration") {
  // Frozen values of the closed form (1/6)(n0+1)(3m0+2t+3)(t^2+3t+2).
  CHECK(zt_dimension(3, 1, 0) == 8);
  CHECK(zt_dimension(3, 1, 2) == 64);
  CHECK(zt_dimension(3, 1, 6) == 448);
  CHECK(zt_dimension(4, 2, 6) == 756);
  CHECK(zt_dimension(5, 1, 6) == 560);
  CHECK(zt_dimension(6, 0, 6) == 308);
  CHECK(zt_dimension(6, 2, 6) == 924);
  CHECK(zt_dimension(6, 2, 4) == 435);

  std::mt19937 rng(90210u);
  std::uniform_int_distribution<long> m0(2, 12), n0(0, 6);
  std::uniform_int_distribution<long> t(0, 9);
  for (int trial = 0; trial < 10; ++trial) {
    long a = m0(rng), b = n0(rng), c = t(rng);
    CHECK(st_cardinality(a, b, c) == zt_dimension(a, b, c));
  }
}

TEST_CASE("built truncation dimensions") {
  CHECK(build_truncation(LambdaParam(1, 0), 0).dim == 8);
  CHECK(build_truncation(LambdaParam(1, 0), 2).dim == 64);
  CHECK(build_truncation(LambdaParam(3, 1), 4).dim == 435);
}

TEST_CASE("transition scalars in the spanning tree gauge") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 2);
  const NodeScalars& s0 = mt.scalars[0];
  CHECK(s0[kMu] == Q(1));
  CHECK(s0[kAlpha] == Q(1, 2));
  CHECK(s0[kBeta] == Q(1));
  CHECK(s0[kGamma] == Q(-1, 8));
  CHECK(s0[kDelta] == Q(-1, 4));
  CHECK(s0[kZeta] == Q(1, 4));

  auto idx = mt.node_at(1, 0);
  REQUIRE(idx.has_value());
  const NodeScalars& s1 = mt.scalars[*idx];
  CHECK(s1[kMu] == Q(1));
  CHECK(s1[kAlpha] == Q(1, 3));
  CHECK(s1[kBeta] == Q(2, 3));
  CHECK(s1[kGamma] == Q(-1, 15));
  CHECK(s1[kDelta] == Q(-2, 15));
  CHECK(s1[kEta] == Q(-24, 5));
  CHECK(s1[kZeta] == Q(1, 5));
}

TEST_CASE("action columns and truncation overflow") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 2);
  // E3 v0 = mu v(1,0): the hwv of node (1,0), coefficient 1 in the gauge.
  ModuleVec v0{{0, Q(1)}};
  ModuleVec img = apply_gen(mt, Gen::E3, v0);
  auto n10 = mt.node_at(1, 0);
  REQUIRE(n10.has_value());
  CHECK(img == ModuleVec{{mt.basis_index(*n10, 0, 0), Q(1)}});

  // Compact generators act within a level; F1 v0 lands on f1 v0.
  CHECK(apply_gen(mt, Gen::F1, v0) == ModuleVec{{mt.basis_index(0, 1, 0), Q(1)}});

  // p-action is undefined off the end of the truncation.
  ModuleVec top{{mt.basis_index(3, 0, 0), Q(1)}};
  CHECK_THROWS_AS(apply_gen(mt, Gen::E3, top), std::runtime_error);
}

TEST_CASE("module verification suites") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 4);
  CHECK(verify_dimensions(mt).all_pass());
  CHECK(verify_basis_theorem(mt).all_pass());
  CHECK(verify_module_axioms(mt).all_pass());
  CHECK(verify_scalar_nonvanishing(mt).all_pass());

  Report cas = verify_casimir_scalar(mt);
  CHECK(cas.all_pass());
  // Independent infinitesimal character: 2(|lambda+rho|^2 - |rho|^2) = 8
  // for lambda = (1,0) with rho = (3/2, 1/2).
  const Check* c = cas.find("module/casimir-infinitesimal-character");
  REQUIRE(c != nullptr);
  CHECK(c->actual == "scalar 8");
}

TEST_CASE("casimir scalar matches the character formula across parameters") {
  for (auto [l1, l2] : {std::pair<long, long>{2, 0}, {2, 2}}) {
    ModuleTruncation mt = build_truncation(LambdaParam(l1, l2), 2);
    Report cas = verify_casimir_scalar(mt);
    CHECK(cas.all_pass());
    Q lam1 = Q(l1) + Q(3, 2), lam2 = Q(l2) + Q(1, 2);
    Q expect = 2 * (lam1 * lam1 + lam2 * lam2 - Q(9, 4) - Q(1, 4));
    const Check* c = cas.find("module/casimir-infinitesimal-character");
    REQUIRE(c != nullptr);
    CHECK(c->actual == "scalar " + q_str(expect));
  }
}

TEST_CASE("json round-trip is bit exact") {
  ModuleTruncation mt = build_truncation(LambdaParam(2, 1), 3);
  std::string text = truncation_to_json(mt);
  ModuleTruncation back = truncation_from_json(text);
  CHECK(truncation_to_json(back) == text);
  CHECK(back.dim == mt.dim);
  CHECK(back.scalars == mt.scalars);

  // The rebuilt action matches on a sample vector.
  ModuleVec v{{0, Q(1)}, {mt.basis_index(0, 1, 1), Q(-3, 7)}};
  for (Gen g : {Gen::E3, Gen::F4, Gen::F1})
    CHECK(apply_gen(mt, g, v) == apply_gen(back, g, v));
}

TEST_CASE("cache layer reuses a stored solve") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 ("so41kit-test-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  ModuleTruncation first = load_or_build(LambdaParam(1, 0), 2, dir.string());
  CHECK(fs::exists(dir));
  REQUIRE_FALSE(fs::is_empty(dir));
  ModuleTruncation second = load_or_build(LambdaParam(1, 0), 2, dir.string());
  CHECK(truncation_to_json(first) == truncation_to_json(second));
  CHECK(truncation_to_json(first) ==
        truncation_to_json(build_truncation(LambdaParam(1, 0), 2)));
  fs::remove_all(dir);
}

}  // TEST_SUITE
