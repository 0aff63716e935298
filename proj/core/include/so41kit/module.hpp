#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "so41kit/kmodule.hpp"
#include "so41kit/lie.hpp"
#include "so41kit/pbw.hpp"
#include "so41kit/rational.hpp"
#include "so41kit/report.hpp"

namespace so41kit {

// Discrete series parameter; m0 and n0 are the coordinates of the lowest
// K-type (m0, n0).
struct LambdaParam {
  long l1 = 1, l2 = 0;

  LambdaParam(long a, long b);  // requires a >= b >= 0
  long m0() const { return l1 + l2 + 2; }
  long n0() const { return l1 - l2; }
};

// K-type lattice node: K-type V_{m0+k+l} (x) V_{n0+k-l}, level k+l.
struct GammaNode {
  int k = 0, l = 0;
  int level() const { return k + l; }
  bool operator==(const GammaNode& o) const { return k == o.k && l == o.l; }
};

// Nodes with k+l <= t and 0 <= l <= n0, ordered by (level, l).
std::vector<GammaNode> ktypes(const LambdaParam& lam, int t);

// Closed form (1/6)(n0+1)(3m0+2t+3)(t^2+3t+2) for dim Z_t.
long zt_dimension(long m0, long n0, long t);
// Word-count double sum over the lattice; equals zt_dimension.
long st_cardinality(long m0, long n0, long t);

// Transition scalars per node, in the order
// mu, alpha, beta, gamma, delta, epsilon, eta, rho, zeta: coefficients of
//   E3.v = mu v(k+1,l)
//   E4.v = alpha F2 v(k+1,l) + beta v(k,l+1)
//   F3.v = gamma F1F2 v(k+1,l) + delta F1 v(k,l+1) + eps F2 v(k,l-1)
//        + eta v(k-1,l)
//   F4.v = rho v(k,l-1) + zeta F1 v(k+1,l)
// on the highest weight vector v of the node; scalars with absent targets
// are zero.
enum ScalarSlot {
  kMu = 0,
  kAlpha,
  kBeta,
  kGamma,
  kDelta,
  kEps,
  kEta,
  kRho,
  kZeta
};
constexpr int kNumScalars = 9;
extern const char* const kScalarNames[kNumScalars];

using NodeScalars = std::array<Q, kNumScalars>;
using TransitionScalars = std::vector<std::pair<GammaNode, NodeScalars>>;

// Sparse vector over the truncation basis.
using ModuleVec = std::map<std::size_t, Q>;

struct BasisCoord {
  std::size_t node = 0;
  int i = 0, j = 0;
};

// Exact truncation Z_t: basis indexed by (node, (i,j)) with i <= n, j <= m
// of the node's K-type, nodes in (level, l) order. The p-action is defined
// on source levels <= t-1 and lands in levels <= t.
struct ModuleTruncation {
  LambdaParam lambda{1, 0};
  int level = 0;
  std::vector<GammaNode> nodes;
  std::vector<std::size_t> offset;  // basis offset per node
  std::size_t dim = 0;
  std::vector<NodeScalars> scalars;  // per node; unused at level t
  // Column-major action of each generator; p-columns at source level >= t
  // are absent and flagged invalid.
  std::array<std::vector<ModuleVec>, kNumGen> action;
  std::vector<char> p_source_valid;

  std::optional<std::size_t> node_at(int k, int l) const;
  KTypeLabel label(std::size_t node_idx) const;
  std::size_t basis_index(std::size_t node_idx, int i, int j) const;
  BasisCoord coord(std::size_t idx) const;
  // weight of a basis vector under (H1+H2, H1-H2)
  std::pair<long, long> weight(std::size_t idx) const;
};

// Solve the transition scalars level by level in the spanning-tree gauge
// (mu = 1 everywhere, beta = 1 along k = 0): equivariance and bracket
// constraints become linear stages. Throws "inconsistent" when a stage has
// no solution and "underdetermined" when a non-gauge scalar stays free.
TransitionScalars solve_transition_scalars(const LambdaParam& lam, int t);

ModuleTruncation build_truncation(const LambdaParam& lam, int t);

// Action through the stored columns; throws "truncation overflow" when a
// p-generator is applied to a vector supported on level t.
ModuleVec apply_gen(const ModuleTruncation& mt, Gen g, const ModuleVec& v);
ModuleVec apply_lie(const ModuleTruncation& mt, const LieElement& x,
                    const ModuleVec& v);
// Word applied right to left (last letter acts first).
ModuleVec apply_word(const ModuleTruncation& mt, const Word& w,
                     const ModuleVec& v);
ModuleVec apply_poly(const ModuleTruncation& mt, const UEnvElement& u,
                     const ModuleVec& v);

ModuleVec mv_scale(const Q& c, const ModuleVec& v);
ModuleVec mv_add(const ModuleVec& a, const ModuleVec& b);

// Words F1^a F2^b E3^k E4^l on the lowest hwv: cardinality equals dim and
// the vectors have full rank.
Report verify_basis_theorem(const ModuleTruncation& mt);

// x(yv) - y(xv) = [x,y]v for all 45 generator pairs on every basis vector
// of level <= t-2.
Report verify_module_axioms(const ModuleTruncation& mt);

// dim matches the closed form and the per-node dimension sum.
Report verify_dimensions(const ModuleTruncation& mt);

// mu != 0 at every solved node; beta != 0 wherever the (n+1, m-1) neighbor
// exists.
Report verify_scalar_nonvanishing(const ModuleTruncation& mt);

// The Casimir of g acts by one scalar on all of Z_{t-2}; the scalar is
// recorded in the report.
Report verify_casimir_scalar(const ModuleTruncation& mt);

// JSON round-trip of (lambda, level, scalars, dim); matrices are rebuilt on
// load and revalidated against the dimension formula.
std::string truncation_to_json(const ModuleTruncation& mt);
ModuleTruncation truncation_from_json(const std::string& text);

// Solve or reuse a cached solve under cache_dir (empty string disables
// caching).
ModuleTruncation load_or_build(const LambdaParam& lam, int t,
                               const std::string& cache_dir);

}  // namespace so41kit
