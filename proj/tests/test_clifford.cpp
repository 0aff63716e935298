#include "doctest.h"
#include "so41kit/clifford.hpp"

using namespace so41kit;

TEST_SUITE("clifford") {

TEST_CASE("defining relation xy + yx = -2B(x,y)") {
  auto anti = [](Gen x, Gen y) {
    return cliff_add(clifford_multiply(cliff_gen(x), cliff_gen(y)),
                     clifford_multiply(cliff_gen(y), cliff_gen(x)));
  };
  CHECK(anti(Gen::E3, Gen::F3) == CliffordElement{{0, Q(-2)}});
  CHECK(anti(Gen::E4, Gen::F4) == CliffordElement{{0, Q(-2)}});
  CHECK(cliff_is_zero(anti(Gen::E3, Gen::E4)));
  CHECK(cliff_is_zero(anti(Gen::E3, Gen::F4)));
  CHECK(clifford_multiply(cliff_gen(Gen::E3), cliff_gen(Gen::E3)) ==
        CliffordElement{});
  CHECK(verify_clifford_relations().all_pass());
}

TEST_CASE("spin module actions on the blade basis") {
  // Indices 0: 1, 1: E3, 2: E4, 3: E3^E4.
  SpinVector unit{Q(1), Q(0), Q(0), Q(0)};
  SpinVector e3{Q(0), Q(1), Q(0), Q(0)};
  SpinVector top{Q(0), Q(0), Q(0), Q(1)};

  CHECK(spin_action(cliff_gen(Gen::E3), unit) == e3);
  CHECK(spin_action(cliff_gen(Gen::F3), e3) ==
        SpinVector{Q(-2), Q(0), Q(0), Q(0)});
  CHECK(spin_action(cliff_gen(Gen::F4), top) ==
        SpinVector{Q(0), Q(2), Q(0), Q(0)});
  CHECK(spin_action(cliff_gen(Gen::F3), top) ==
        SpinVector{Q(0), Q(0), Q(-2), Q(0)});
  // E3 F4 annihilates 1 and the top blade.
  CliffordElement e3f4 = clifford_multiply(cliff_gen(Gen::E3), cliff_gen(Gen::F4));
  CHECK(spin_action(e3f4, unit) == SpinVector{Q(0), Q(0), Q(0), Q(0)});
  CHECK(spin_action(e3f4, top) == SpinVector{Q(0), Q(0), Q(0), Q(0)});
}

TEST_CASE("alpha values on the compact generators") {
  CliffordElement e3f4 = clifford_multiply(cliff_gen(Gen::E3), cliff_gen(Gen::F4));
  CliffordElement f3f4 = clifford_multiply(cliff_gen(Gen::F3), cliff_gen(Gen::F4));
  CHECK(alpha({{Gen::E2, Q(1)}}) == cliff_scale(Q(-1, 2), e3f4));
  CHECK(alpha({{Gen::F1, Q(1)}}) == cliff_scale(Q(1, 2), f3f4));
  CHECK_THROWS_AS(alpha({{Gen::E3, Q(1)}}), std::exception);
  CHECK(verify_alpha().all_pass());
}

TEST_CASE("alpha respects brackets") {
  LieElement e2{{Gen::E2, Q(1)}}, f2{{Gen::F2, Q(1)}};
  CliffordElement lhs = alpha(bracket(e2, f2));
  CliffordElement rhs = clifford_commutator(alpha(e2), alpha(f2));
  CHECK(lhs == rhs);
}

TEST_CASE("dirac operator identities in A") {
  AElement d = build_dirac();
  // D - (E4 x F4 + F3 x E3) = E3 x F3 + F4 x E4.
  AElement rest = a_add(d, a_scale(Q(-1), a_add(a_tensor(ue_gen(Gen::E4), cliff_gen(Gen::F4)),
                                                a_tensor(ue_gen(Gen::F3), cliff_gen(Gen::E3)))));
  AElement want = a_add(a_tensor(ue_gen(Gen::E3), cliff_gen(Gen::F3)),
                        a_tensor(ue_gen(Gen::F4), cliff_gen(Gen::E4)));
  CHECK(rest == want);
  CHECK(verify_operator_identities().all_pass());
}

TEST_CASE("casimir comparison and invariants of C(p)") {
  CHECK(verify_casimir_k_identity().all_pass());
  CliffordElement omega;
  Report rep = cp_invariants(&omega);
  CHECK(rep.all_pass());
  REQUIRE_FALSE(cliff_is_zero(omega));
  // The nonscalar invariant is normalized on the top blade E3 E4 F3 F4.
  CHECK(omega.at(kBladeE3 | kBladeE4 | kBladeF3 | kBladeF4) == Q(1));
}

TEST_CASE("diagonal embedding commutes as in k") {
  AElement h = diagonal_embed({{Gen::H1, Q(1)}, {Gen::H2, Q(1)}});
  AElement e1 = diagonal_embed({{Gen::E1, Q(1)}});
  // [h_Delta, e1_Delta] = 2 e1_Delta for the k1 triple.
  CHECK(a_commutator(h, e1) == a_scale(Q(2), e1));
}

}  // TEST_SUITE
