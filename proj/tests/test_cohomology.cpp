#include <stdexcept>

#include "doctest.h"
#include "so41kit/cohomology.hpp"

using namespace so41kit;

TEST_SUITE("cohomology") {

TEST_CASE("sparse vector arithmetic on X (x) S") {
  XSVector a{{{0, 0}, Q(1)}, {{2, 3}, Q(-2)}};
  XSVector b{{{2, 3}, Q(2)}};
  CHECK(xs_add(a, b) == XSVector{{{0, 0}, Q(1)}});
  CHECK(xs_scale(Q(0), a).empty());
  CHECK(xs_equal(a, a));
  CHECK_FALSE(xs_equal(a, b));
}

TEST_CASE("weights of basis tensors") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 4);
  // v0 (x) 1 carries the spinor highest weight (2 lambda1 + 1, 2 lambda2 + 1)
  // in doubled coordinates.
  CHECK(xs_weight2(mt, 0, 0) == std::pair<long, long>{3, 1});
  // Both terms of w[0][0] sit at that same weight.
  CHECK(xs_weight2(mt, mt.basis_index(0, 1, 0), 3) ==
        std::pair<long, long>{3, 1});
}

TEST_CASE("dirac matrix shape") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 4);
  SparseMatrix d = dirac_matrix(mt);
  CHECK(d.rows() == 4 * mt.dim);
  CHECK(d.cols() == 4 * mt.dim);
}

TEST_CASE("level floor for the kernel computation") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 3);
  Report rep;
  CHECK_THROWS_AS(compute_hd(mt, rep), std::invalid_argument);
}

TEST_CASE("kernel of D on the lowest parameter") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 4);
  Report rep;
  HDSpace hd = compute_hd(mt, rep);
  CHECK(rep.all_pass());
  REQUIRE(hd.w.size() == 3);
  REQUIRE(hd.w[0].size() == 2);
  CHECK(hd.dim() == 6);

  // w[0][0] = F1 v0 (x) E3^E4 + 2 m0 v0 (x) 1 exactly.
  XSVector want{{{mt.basis_index(0, 1, 0), 3}, Q(1)}, {{0, 0}, Q(6)}};
  CHECK(xs_equal(hd.w[0][0], want));

  // Highest weight for the diagonal k-action.
  CHECK(xs_apply_delta(mt, Gen::E1, hd.w[0][0]).empty());
  CHECK(xs_apply_delta(mt, Gen::E2, hd.w[0][0]).empty());

  // Every w[s][l] is killed by D itself.
  AElement d = build_dirac();
  for (const auto& row : hd.w)
    for (const auto& w : row) CHECK(xs_apply_a(mt, d, w).empty());
}

TEST_CASE("k-dirac eigenvalue") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 4);
  Report rep;
  HDSpace hd = compute_hd(mt, rep);
  Report dk = dk_eigenvalue_check(mt, hd);
  CHECK(dk.all_pass());
  const Check* c = dk.find("cohomology/k-dirac-eigenvalue");
  REQUIRE(c != nullptr);
  CHECK(c->expected == "-5");
}

TEST_CASE("k-dirac eigenvalue at a scalar-K-type parameter") {
  ModuleTruncation mt = build_truncation(LambdaParam(2, 2), 4);
  Report rep;
  HDSpace hd = compute_hd(mt, rep);
  CHECK(rep.all_pass());
  CHECK(hd.dim() == 6);
  Report dk = dk_eigenvalue_check(mt, hd);
  CHECK(dk.all_pass());
  CHECK(dk.find("cohomology/k-dirac-eigenvalue")->expected == "-8");
}

TEST_CASE("harish-chandra parameter matching") {
  Report hp = hp_character_check(LambdaParam(1, 0));
  CHECK(hp.all_pass());
  const Check* c = hp.find("cohomology/hp-character");
  REQUIRE(c != nullptr);
  CHECK(c->actual == "witness: identity");
  CHECK(hp_character_check(LambdaParam(3, 1)).all_pass());
}

TEST_CASE("staged word bases and reduction identities") {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), 4);
  Report rep;
  HDSpace hd = compute_hd(mt, rep);
  CHECK(xs_basis(mt, hd).all_pass());
  CHECK(verify_s4_reductions(mt, hd).all_pass());
}

}  // TEST_SUITE
