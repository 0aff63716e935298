#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "so41kit/lie.hpp"
#include "so41kit/pbw.hpp"
#include "so41kit/rational.hpp"
#include "so41kit/report.hpp"

namespace so41kit {

// Blade of C(p): bitmask over the ordered set {E3, E4, F3, F4}
// (bit 0 = E3, ..., bit 3 = F4); a blade is the product of its generators
// taken in ascending bit order.
using Blade = std::uint8_t;

constexpr Blade kBladeE3 = 1;
constexpr Blade kBladeE4 = 2;
constexpr Blade kBladeF3 = 4;
constexpr Blade kBladeF4 = 8;

Blade blade_of(Gen p_gen);  // throws on compact generators
std::string blade_str(Blade b);

// B restricted to p: B(E3,F3) = B(E4,F4) = 1 on the symmetric pairs, all
// other basis pairs 0 (matches (1/4)tr on the matrix realization).
Q bform_p(Gen x, Gen y);

using CliffordElement = std::map<Blade, Q>;

CliffordElement cliff_one();
CliffordElement cliff_gen(Gen p_gen);
CliffordElement cliff_scale(const Q& c, const CliffordElement& a);
CliffordElement cliff_add(const CliffordElement& a, const CliffordElement& b);
bool cliff_is_zero(const CliffordElement& a);
std::string cliff_str(const CliffordElement& a);

// Product under the relation xy + yx = -2B(x,y).
CliffordElement clifford_multiply(const CliffordElement& a,
                                  const CliffordElement& b);
CliffordElement clifford_commutator(const CliffordElement& a,
                                    const CliffordElement& b);

// Spin module S = span{1, E3, E4, E3^E4}; indices 0,1,2,3 in that order.
// E3, E4 act by exterior multiplication, F3, F4 by -2 x B-contraction.
using SpinVector = std::array<Q, 4>;

const char* spin_basis_name(int idx);
SpinVector spin_action(const CliffordElement& c, const SpinVector& s);

// Lie algebra map alpha: k -> C(p), ad followed by the standard embedding
// so(p) -> C(p): alpha(X) = -1/4 sum_j [X, b_j] d_j over the dual pairs
// (E3,F3), (F3,E3), (E4,F4), (F4,E4). Throws "not in k" on p-components.
CliffordElement alpha(const LieElement& x);

// A = U(g) (x) C(p) with the sign-free tensor product.
using AElement = std::map<std::pair<PbwExp, Blade>, Q>;

AElement a_one();
AElement a_from_ue(const UEnvElement& u);
AElement a_from_cliff(const CliffordElement& c);
AElement a_tensor(const UEnvElement& u, const CliffordElement& c);
AElement a_scale(const Q& c, const AElement& a);
AElement a_add(const AElement& a, const AElement& b);
AElement a_multiply(const AElement& a, const AElement& b);
AElement a_commutator(const AElement& a, const AElement& b);
bool a_is_zero(const AElement& a);
std::string a_str(const AElement& a);

// X_Delta = X (x) 1 + 1 (x) alpha(X) for X in k. Throws "not in k".
AElement diagonal_embed(const LieElement& x);

// D = E3(x)F3 + E4(x)F4 + F3(x)E3 + F4(x)E4.
AElement build_dirac();

// D_k = E1(x)alpha(2F1) + E2(x)alpha(2F2) + F1(x)alpha(2E1)
//     + F2(x)alpha(2E2) + (H1-H2)(x)alpha(H1-H2) + (H1+H2)(x)alpha(H1+H2).
AElement build_k_dirac();

// Omega_k = E1F1 + F1E1 + (1/2)(H1+H2)^2 + E2F2 + F2E2 + (1/2)(H1-H2)^2,
// and the same polynomial in the diagonal generators.
UEnvElement casimir_k();
AElement casimir_k_delta();

// Defining relations on all basis pairs and the module property of
// spin_action over all blade pairs.
Report verify_clifford_relations();

// alpha as a Lie homomorphism (15 pairs), the two printed values, the three
// vanishing operators, and the decomposition of S under k via alpha.
Report verify_alpha();

// Connection identity and companion, the four Dirac anticommutator
// identities, the projection absorption T p' = T, and evenness plus
// K-invariance of D_k.
Report verify_operator_identities();

// Casimir comparison in A: Omega_{k_Delta} expands into Omega_k (x) 1 + D_k
// + the pure Clifford terms.
Report verify_casimir_k_identity();

// K-invariants of C(p) under the alpha commutator action: dimension must be
// 2; the nonscalar generator (top blade E3E4F3F4, leading coefficient 1) is
// recorded. Optionally returns the generator.
Report cp_invariants(CliffordElement* generator_out = nullptr);

}  // namespace so41kit
