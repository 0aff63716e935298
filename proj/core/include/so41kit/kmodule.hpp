#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "so41kit/lie.hpp"
#include "so41kit/pbw.hpp"
#include "so41kit/rational.hpp"
#include "so41kit/report.hpp"

namespace so41kit {

// Irreducible k-module V_n (x) V_m: n is the highest H1+H2 eigenvalue, m the
// highest H1-H2 eigenvalue. The alternative labeling is
// (a, b) = ((n+m)/2, (n-m)/2) in half-integers.
struct KTypeLabel {
  long n = 0, m = 0;

  long dim() const { return (n + 1) * (m + 1); }
  std::pair<Q, Q> ab() const { return {Q(n + m) / 2, Q(n - m) / 2}; }
  bool operator==(const KTypeLabel& o) const { return n == o.n && m == o.m; }
  bool operator<(const KTypeLabel& o) const {
    return n != o.n ? n < o.n : m < o.m;
  }
};

std::string ktype_str(const KTypeLabel& l);

// Vector in V_n (x) V_m over the weight basis f1^i f2^j hwv,
// 0 <= i <= n, 0 <= j <= m.
using KModuleVector = std::map<std::pair<int, int>, Q>;

KModuleVector kv_scale(const Q& c, const KModuleVector& v);
KModuleVector kv_add(const KModuleVector& a, const KModuleVector& b);

// Standard sl2 x sl2 action: on the first factor (H1+H2) f1^i = (n-2i) f1^i,
// F1 f1^i = f1^{i+1} (zero past n), E1 f1^i = i(n-i+1) f1^{i-1}; the second
// factor uses H1-H2, E2, F2 with m, j. Throws "not in k" on p-components.
KModuleVector act_k_gen(Gen x, const KModuleVector& v, const KTypeLabel& l);
KModuleVector act_k(const LieElement& x, const KModuleVector& v,
                    const KTypeLabel& l);

// Action of a U(k) element (monomials must involve only compact slots).
KModuleVector act_k_poly(const UEnvElement& u, const KModuleVector& v,
                         const KTypeLabel& l);

// Clebsch-Gordan in each sl2 factor; multiplicity-one labels listed in
// decreasing n then decreasing m.
std::vector<std::pair<KTypeLabel, int>> tensor_decompose(const KTypeLabel& l1,
                                                         const KTypeLabel& l2);

// Highest weight vectors of weight (n, m) inside V_{l1} (x) V_{l2}:
// exact kernel of E1 and E2 on the weight subspace. Coordinates are over the
// product basis ((i1,j1),(i2,j2)) in lexicographic order.
std::vector<std::vector<Q>> extract_hwv_tensor(const KTypeLabel& l1,
                                               const KTypeLabel& l2,
                                               const KTypeLabel& weight);

// Bracket compatibility of act_k on random vectors, dimension bookkeeping of
// tensor_decompose (validated against hwv extraction), label conversion.
Report verify_k_modules();

}  // namespace so41kit
