#include "doctest.h"
#include "so41kit/pbw.hpp"

using namespace so41kit;

namespace {

PbwExp mono(std::initializer_list<std::pair<Gen, int>> factors) {
  PbwExp e{};
  for (auto [g, p] : factors) e[gen_slot(g)] = std::uint8_t(p);
  return e;
}

}  // namespace

TEST_SUITE("pbw") {

TEST_CASE("slot order puts p before k") {
  CHECK(gen_slot(Gen::E3) == 0);
  CHECK(gen_slot(Gen::E4) == 1);
  CHECK(gen_slot(Gen::F3) == 2);
  CHECK(gen_slot(Gen::F4) == 3);
  CHECK(gen_slot(Gen::F2) == 9);
  for (int s = 0; s < kNumSlots; ++s) CHECK(gen_slot(slot_gen(s)) == s);
}

TEST_CASE("straightening single swaps") {
  // F1 E3 = E3 F1 + [F1, E3] = E3 F1 + F4.
  UEnvElement u = normalize({Gen::F1, Gen::E3});
  UEnvElement want{{mono({{Gen::E3, 1}, {Gen::F1, 1}}), Q(1)},
                   {mono({{Gen::F4, 1}}), Q(1)}};
  CHECK(u == want);

  // E3 F3 is already normal ordered.
  CHECK(normalize({Gen::E3, Gen::F3}) ==
        UEnvElement{{mono({{Gen::E3, 1}, {Gen::F3, 1}}), Q(1)}});

  // F3 E3 = E3 F3 - 2 H1.
  CHECK(normalize({Gen::F3, Gen::E3}) ==
        UEnvElement{{mono({{Gen::E3, 1}, {Gen::F3, 1}}), Q(1)},
                    {mono({{Gen::H1, 1}}), Q(-2)}});
}

TEST_CASE("adjoint action matches the bracket") {
  CHECK(adjoint_power(Gen::F2, 1, ue_gen(Gen::E3)) == ue_gen(Gen::E4));
  CHECK(ue_is_zero(ad_gen(Gen::F2, ue_gen(Gen::E4))));
  // ad is a derivation: ad(x)(uv) = ad(x)u v + u ad(x)v.
  UEnvElement u = ue_gen(Gen::E3), v = normalize({Gen::E3, Gen::F1});
  UEnvElement lhs = ad_gen(Gen::E1, multiply(u, v));
  UEnvElement rhs = ue_add(multiply(ad_gen(Gen::E1, u), v),
                           multiply(u, ad_gen(Gen::E1, v)));
  CHECK(lhs == rhs);
}

TEST_CASE("multiply and power agree") {
  UEnvElement a = ue_add(ue_gen(Gen::F1), ue_gen(Gen::E3));
  CHECK(power(a, 2) == multiply(a, a));
  CHECK(power(a, 3) == multiply(a, multiply(a, a)));
  CHECK(ue_degree(power(a, 3)) == 3);
}

TEST_CASE("associativity on random words") {
  CHECK(verify_associativity(40).all_pass());
}

TEST_CASE("straightening of F1 against powers of E3") {
  for (int k = 0; k <= 8; ++k) {
    Report rep = verify_f1e3_identity(k);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("monomial count of the filtration") {
  // Degree <= d monomials in 10 slots number C(10 + d, 10).
  CHECK(verify_ug_span(1).all_pass());
  CHECK(verify_ug_span(2).all_pass());
}

TEST_CASE("casimir element is central") {
  UEnvElement om = casimir_g();
  CHECK(ue_degree(om) == 2);
  for (Gen g : {Gen::E3, Gen::F1, Gen::H2}) {
    UEnvElement c = ue_add(multiply(om, ue_gen(g)),
                           ue_scale(Q(-1), multiply(ue_gen(g), om)));
    CHECK(ue_is_zero(c));
  }
  CHECK(verify_casimir_central().all_pass());
}

}  // TEST_SUITE
