#include "doctest.h"
#include "so41kit/kmodule.hpp"

using namespace so41kit;

TEST_SUITE("kmodule") {

TEST_CASE("label dimensions and (a,b) coordinates") {
  KTypeLabel l{3, 1};
  CHECK(l.dim() == 8);
  CHECK(l.ab() == std::pair<Q, Q>{Q(2), Q(1)});
  CHECK(KTypeLabel{0, 0}.dim() == 1);
}

TEST_CASE("sl2 ladder coefficients") {
  // V_2 (x) V_0: E1 f1 = 1 * (2 - 1 + 1) f1^0 = 2 hwv, F1 f1^2 = 0.
  KTypeLabel l{2, 0};
  KModuleVector v{{{1, 0}, Q(1)}};
  CHECK(act_k_gen(Gen::E1, v, l) == KModuleVector{{{0, 0}, Q(2)}});
  CHECK(act_k_gen(Gen::F1, v, l) == KModuleVector{{{2, 0}, Q(1)}});
  CHECK(act_k_gen(Gen::F1, KModuleVector{{{2, 0}, Q(1)}}, l).empty());
  // H1 + H2 weight on f1^1 is n - 2i = 0.
  CHECK(act_k({{Gen::H1, Q(1)}, {Gen::H2, Q(1)}}, v, l).empty());
  CHECK_THROWS_AS(act_k_gen(Gen::E3, v, l), std::exception);
}

TEST_CASE("second factor uses the (H1 - H2) triple") {
  KTypeLabel l{0, 2};
  KModuleVector hwv{{{0, 0}, Q(1)}};
  CHECK(act_k_gen(Gen::F2, hwv, l) == KModuleVector{{{0, 1}, Q(1)}});
  CHECK(act_k({{Gen::H1, Q(1)}, {Gen::H2, Q(-1)}}, hwv, l) ==
        KModuleVector{{{0, 0}, Q(2)}});
}

TEST_CASE("clebsch-gordan decomposition") {
  auto dec = tensor_decompose(KTypeLabel{2, 0}, KTypeLabel{1, 1});
  // n runs over 3, 1 and m over 1; all multiplicities one.
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == KTypeLabel{3, 1});
  CHECK(dec[1].first == KTypeLabel{1, 1});
  for (const auto& [lbl, mult] : dec) CHECK(mult == 1);

  long total = 0;
  for (const auto& [lbl, mult] : dec) total += mult * lbl.dim();
  CHECK(total == KTypeLabel{2, 0}.dim() * KTypeLabel{1, 1}.dim());
}

TEST_CASE("highest weight vectors in a tensor product") {
  auto hwv = extract_hwv_tensor(KTypeLabel{1, 0}, KTypeLabel{1, 0},
                                KTypeLabel{0, 0});
  // V_1 (x) V_1 = V_2 + V_0 in the first factor: one invariant line.
  CHECK(hwv.size() == 1);
  CHECK(extract_hwv_tensor(KTypeLabel{1, 0}, KTypeLabel{1, 0},
                           KTypeLabel{2, 0})
            .size() == 1);
  CHECK(extract_hwv_tensor(KTypeLabel{1, 0}, KTypeLabel{1, 0},
                           KTypeLabel{1, 0})
            .empty());
}

TEST_CASE("full k-module verification suite") {
  CHECK(verify_k_modules().all_pass());
}

}  // TEST_SUITE
