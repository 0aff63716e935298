#include "doctest.h"
#include "so41kit/induction.hpp"

using namespace so41kit;

TEST_SUITE("induction") {

TEST_CASE("spanning set cardinality") {
  LambdaParam lam(1, 0);
  // Degree-zero slice: 4 blades x m0 (n0+1) ladder positions from the first
  // family plus 4 x (n0+1) from the second: 24 + 8 = 32.
  CHECK(spanning_set(lam, 0).size() == 32);
  // Each of the four blade pairs contributes dim Z_t elements.
  for (int t : {1, 2, 3})
    CHECK(spanning_set(lam, t).size() == std::size_t(4 * zt_dimension(3, 1, t)));
}

TEST_CASE("spanning set index ranges") {
  LambdaParam lam(2, 0);
  const long m0 = lam.m0(), n0 = lam.n0();
  for (const auto& e : spanning_set(lam, 2)) {
    CHECK(e.l >= 0);
    CHECK(e.l <= n0);
    if (e.group < 4) {
      CHECK(e.s >= 0);
      CHECK(e.s < m0);
    } else {
      CHECK(e.s == m0 - 1);
    }
    CHECK(ue_degree(e.u) <= 3 * e.k);
  }
}

TEST_CASE("phi on the identity element reproduces w") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 4);
  Report rep;
  HDSpace hd = compute_hd(mt, rep);
  REQUIRE(rep.all_pass());
  for (const auto& e : spanning_set(mt.lambda, 4)) {
    if (e.k == 0 && e.group == 2 && e.u == ue_one())
      CHECK(xs_equal(phi(mt, hd, e), hd.w[e.s][e.l]));
  }
}

TEST_CASE("isomorphism certificate") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 4);
  Report rep;
  HDSpace hd = compute_hd(mt, rep);
  REQUIRE(rep.all_pass());
  Report iso = verify_isomorphism(mt, hd);
  CHECK(iso.all_pass());
  const Check* c = iso.find("induction/image-independence");
  REQUIRE(c != nullptr);
  CHECK(c->actual == "rank 800");
}

TEST_CASE("ladder identities and equivariance of phi") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 4);
  Report rep;
  HDSpace hd = compute_hd(mt, rep);
  CHECK(verify_phi_identities(mt, hd).all_pass());
  CHECK(verify_phi_equivariance(mt, hd).all_pass());
}

TEST_CASE("invariant inventory of A^K") {
  Report inv = verify_ak_inventory();
  CHECK(inv.all_pass());
  CHECK(inv.find("induction/casimir-split") != nullptr);
  CHECK(inv.find("induction/ak-invariance") != nullptr);
  CHECK(inv.find("induction/anticommutator-identities") != nullptr);
}

}  // TEST_SUITE
