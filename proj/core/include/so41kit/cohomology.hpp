#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "so41kit/clifford.hpp"
#include "so41kit/linalg.hpp"
#include "so41kit/module.hpp"
#include "so41kit/rational.hpp"
#include "so41kit/report.hpp"

namespace so41kit {

// Sparse vector in Z_t (x) S: (truncation basis index, spin index) -> value.
using XSKey = std::pair<std::size_t, int>;
using XSVector = std::map<XSKey, Q>;

XSVector xs_scale(const Q& c, const XSVector& v);
XSVector xs_add(const XSVector& a, const XSVector& b);
bool xs_equal(const XSVector& a, const XSVector& b);

// Factor-wise actions: g (x) 1, 1 (x) c, u (x) 1, and full A-elements.
XSVector xs_apply_gen(const ModuleTruncation& mt, Gen g, const XSVector& v);
XSVector xs_apply_clifford(const CliffordElement& c, const XSVector& v);
XSVector xs_apply_ue(const ModuleTruncation& mt, const UEnvElement& u,
                     const XSVector& v);
XSVector xs_apply_a(const ModuleTruncation& mt, const AElement& a,
                    const XSVector& v);
// x_Delta = x (x) 1 + 1 (x) alpha(x) for compact x.
XSVector xs_apply_delta(const ModuleTruncation& mt, Gen g, const XSVector& v);

// Doubled (H1, H2) weight of a basis vector of Z_t (x) S (doubling keeps
// spinor weights integral).
std::pair<long, long> xs_weight2(const ModuleTruncation& mt, std::size_t zi,
                                 int si);

// Dirac cohomology model: the two-term w vectors
//   w[s][l] = F1^{s+1} F2^l v0 (x) E3^E4 + 2(m0-s) F1^s F2^l v0 (x) 1,
// s in 0..m0-1, l in 0..n0, with w[s][l] = (F1_Delta)^s (F2_Delta)^l w[0][0].
struct HDSpace {
  LambdaParam lambda{1, 0};
  int level = 0;
  std::vector<std::vector<XSVector>> w;

  std::size_t dim() const { return w.empty() ? 0 : w.size() * w[0].size(); }
};

// Matrix of D on Z_{t-1} (x) S into Z_t (x) S; both sides indexed by
// 4*(truncation index) + spin index.
SparseMatrix dirac_matrix(const ModuleTruncation& mt);

// Kernel of D^2 on the interior (levels <= t-2), blocked per highest
// weight: exactly one kernel line, at the spinor K-type
// (lambda1+1/2, lambda2+1/2), spanned by w[0][0]; Ker D agrees with
// Ker D^2 blockwise; D is level-graded and K-equivariant inside the
// truncation. Checks are appended to the report; the w basis is returned.
HDSpace compute_hd(const ModuleTruncation& mt, Report& rep);

// D_k acts on every w[s][l] by exactly -(lambda1 + lambda2 + 4).
Report dk_eigenvalue_check(const ModuleTruncation& mt, const HDSpace& hd);

// gamma + rho_k lies in the W(B2)-orbit of Lambda = lambda + rho, with the
// witnessing signed permutation reported, and the norms agree exactly.
Report hp_character_check(const LambdaParam& lam);

// The staged bases of Z_t and of Z_t (x) E3: words with ad(F2)-twists, the
// words E3^{k+l} F2^l, the E3-line words on w[0][l], the final E3-line
// family, and the overflow reduction lemma instances.
Report xs_basis(const ModuleTruncation& mt, const HDSpace& hd);

// Exact reduction identities on the w vectors inside X (x) S: the E2, F1
// and F4 ladder identities and the span memberships for F1 E3^k words.
Report verify_s4_reductions(const ModuleTruncation& mt, const HDSpace& hd);

}  // namespace so41kit
