#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "so41kit/lie.hpp"
#include "so41kit/rational.hpp"
#include "so41kit/report.hpp"

namespace so41kit {

// Normal order for U(g) monomials. Slots are ordered E3 < E4 < F3 < F4 <
// H1 < H2 < E1 < E2 < F1 < F2, so the noncompact generators always sit to
// the left of the compact ones.
constexpr int kNumSlots = 10;

Gen slot_gen(int slot);
int gen_slot(Gen g);

// Exponent vector in slot order; the represented monomial is the product of
// slot_gen(s)^exp[s] for s = 0..9 in increasing s.
using PbwExp = std::array<std::uint8_t, kNumSlots>;

int mono_degree(const PbwExp& m);
std::string mono_str(const PbwExp& m);

// Element of U(g) in normal-ordered form.
using UEnvElement = std::map<PbwExp, Q>;

UEnvElement ue_one();
UEnvElement ue_gen(Gen g);
UEnvElement ue_scale(const Q& c, const UEnvElement& u);
UEnvElement ue_add(const UEnvElement& a, const UEnvElement& b);
bool ue_is_zero(const UEnvElement& u);
int ue_degree(const UEnvElement& u);  // filtration degree, -1 for 0
std::string ue_str(const UEnvElement& u);

// Right multiplication by a single generator, straightened to normal order.
// Memoized on the monomial/generator pair.
UEnvElement mul_mono_gen(const PbwExp& m, Gen g);
UEnvElement mul_elem_gen(const UEnvElement& u, Gen g);

UEnvElement multiply(const UEnvElement& a, const UEnvElement& b);
UEnvElement power(const UEnvElement& a, int n);

// Straighten an arbitrary word of generators.
using Word = std::vector<Gen>;
UEnvElement normalize(const Word& w);

// ad(x)u = xu - ux and its iterates.
UEnvElement ad_gen(Gen x, const UEnvElement& u);
UEnvElement adjoint_power(Gen x, int n, const UEnvElement& u);

// Casimir element of g built from the trace form: inverts the 10x10 Gram
// matrix of B exactly and contracts the basis with its dual.
UEnvElement casimir_g();

// The straightening identity F1 E3^k = -k(k-1) E3^(k-2) E2 + k E3^(k-1) F4
// + E3^k F1, checked for one k by normalizing both sides.
Report verify_f1e3_identity(int k);

// Product associativity on random generator words (length <= 4), fixed seed.
Report verify_associativity(int triples);

// The span statement behind the induction step: elements
// x (E3F3 + E4F4)^t y with x = (ad F1)^a (ad F2)^b E3^k (a, b <= k) and y a
// monomial in U(k), total degree <= d, must span the full degree-<= d slice
// of U(g). At d = 5 there are exactly 3003 such elements and the slice has
// dimension C(15,10) = 3003.
Report verify_ug_span(int d);

// Centrality of casimir_g against all ten generators.
Report verify_casimir_central();

}  // namespace so41kit
