#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "so41kit/rational.hpp"
#include "so41kit/report.hpp"

namespace so41kit {

// The 10-element basis of g = so(5,C). H1..F2 span k (compact part, two
// commuting sl2 copies k1 = {H1+H2, E1, F1} and k2 = {H1-H2, E2, F2});
// E3, E4, F3, F4 span p.
enum class Gen : int { H1 = 0, H2, E1, E2, F1, F2, E3, E4, F3, F4 };

constexpr int kNumGen = 10;

Gen gen_of(int i);
int gen_index(Gen g);
const char* gen_name(Gen g);
bool is_compact(Gen g);  // true on k, false on p

// Sparse element of g in the basis above.
using LieElement = std::map<Gen, Q>;

LieElement lie_scale(const Q& c, const LieElement& x);
LieElement lie_add(const LieElement& x, const LieElement& y);

// Structure table bracket, bilinear extension.
LieElement bracket_gen(Gen x, Gen y);
LieElement bracket(const LieElement& x, const LieElement& y);

// 5x5 matrix realization over Q(i).
using GMat5 = std::array<std::array<GQ, 5>, 5>;
GMat5 generator_matrix(Gen g);
GMat5 mat_mul(const GMat5& a, const GMat5& b);
GMat5 mat_sub(const GMat5& a, const GMat5& b);
GQ mat_trace_product(const GMat5& a, const GMat5& b);  // tr(ab)

// Weight of a basis vector under (ad H1, ad H2).
std::array<long, 2> root_weight(Gen g);

// Invariant form B(x,y) = (1/4) tr(xy) on g, computed from the matrices.
Q invariant_form(Gen x, Gen y);

struct RootDatum {
  // (H1, H2)-coordinates; compact positive roots e1-e2 and e1+e2,
  // noncompact positive roots e1 and e2.
  std::vector<std::array<long, 2>> compact_positive;
  std::vector<std::array<long, 2>> noncompact_positive;
  std::array<Q, 2> rho, rho_k, rho_n;
};
RootDatum root_datum();

// Re-derives the full commutator table from the matrix realization (45
// unordered pairs) and compares with the stored table.
Report verify_structure_constants();

// Jacobi identity on all 120 unordered basis triples, via the stored table.
Report verify_jacobi();

// Cartan grading ([k,k] in k, [k,p] in p, [p,p] in k), theta eigenspaces
// (theta(X) = -X^T fixes k, negates p) and root/rho consistency.
Report verify_cartan_and_roots();

}  // namespace so41kit
