#include "doctest.h"
#include "so41kit/lie.hpp"

using namespace so41kit;

TEST_SUITE("lie") {

TEST_CASE("bracket table spot checks") {
  // [E3, E4] = 2 E1, [E3, F3] = 2 H1: the noncompact root vectors close
  // into k with the doubled normalization of this basis.
  LieElement b = bracket_gen(Gen::E3, Gen::E4);
  REQUIRE(b.size() == 1);
  CHECK(b.at(Gen::E1) == Q(2));

  b = bracket_gen(Gen::E3, Gen::F3);
  REQUIRE(b.size() == 1);
  CHECK(b.at(Gen::H1) == Q(2));

  b = bracket_gen(Gen::F2, Gen::E3);
  REQUIRE(b.size() == 1);
  CHECK(b.at(Gen::E4) == Q(1));

  CHECK(bracket_gen(Gen::F2, Gen::E4).empty());
  CHECK(bracket_gen(Gen::H1, Gen::H2).empty());

  // Antisymmetry through the bilinear extension.
  LieElement x{{Gen::E3, Q(2)}, {Gen::F1, Q(1, 3)}};
  LieElement y{{Gen::F3, Q(1)}, {Gen::E2, Q(-5)}};
  LieElement xy = bracket(x, y);
  LieElement yx = bracket(y, x);
  CHECK(lie_add(xy, yx).empty());
}

TEST_CASE("cartan decomposition flags") {
  for (Gen g : {Gen::H1, Gen::H2, Gen::E1, Gen::E2, Gen::F1, Gen::F2})
    CHECK(is_compact(g));
  for (Gen g : {Gen::E3, Gen::E4, Gen::F3, Gen::F4})
    CHECK_FALSE(is_compact(g));
}

TEST_CASE("root weights under the Cartan pair") {
  CHECK(root_weight(Gen::E3) == std::array<long, 2>{1, 0});
  CHECK(root_weight(Gen::E4) == std::array<long, 2>{0, 1});
  CHECK(root_weight(Gen::E1) == std::array<long, 2>{1, 1});
  CHECK(root_weight(Gen::E2) == std::array<long, 2>{1, -1});
  CHECK(root_weight(Gen::F3) == std::array<long, 2>{-1, 0});
  CHECK(root_weight(Gen::H1) == std::array<long, 2>{0, 0});
}

TEST_CASE("invariant form values") {
  CHECK(invariant_form(Gen::E3, Gen::F3) == Q(1));
  CHECK(invariant_form(Gen::E4, Gen::F4) == Q(1));
  CHECK(invariant_form(Gen::H1, Gen::H1) == Q(1, 2));
  CHECK(invariant_form(Gen::H2, Gen::H2) == Q(1, 2));
  CHECK(invariant_form(Gen::H1, Gen::H2) == 0);
  // k is orthogonal to p.
  CHECK(invariant_form(Gen::E1, Gen::E3) == 0);
  CHECK(invariant_form(Gen::F2, Gen::F4) == 0);
}

TEST_CASE("rho vectors of the root datum") {
  RootDatum rd = root_datum();
  CHECK(rd.compact_positive.size() == 2);
  CHECK(rd.noncompact_positive.size() == 2);
  CHECK(rd.rho == std::array<Q, 2>{Q(3, 2), Q(1, 2)});
  CHECK(rd.rho_k == std::array<Q, 2>{Q(1), Q(0)});
  CHECK(rd.rho_n == std::array<Q, 2>{Q(1, 2), Q(1, 2)});
}

TEST_CASE("structure constants against the matrix realization") {
  Report rep = verify_structure_constants();
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 45);
}

TEST_CASE("jacobi identity on all basis triples") {
  Report rep = verify_jacobi();
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 120);
}

TEST_CASE("cartan grading and theta eigenspaces") {
  CHECK(verify_cartan_and_roots().all_pass());
}

}  // TEST_SUITE
