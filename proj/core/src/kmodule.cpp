#include "so41kit/kmodule.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "so41kit/linalg.hpp"

namespace so41kit {

std::string ktype_str(const KTypeLabel& l) {
  std::ostringstream os;
  os << "V" << l.n << "xV" << l.m;
  return os.str();
}

KModuleVector kv_scale(const Q& c, const KModuleVector& v) {
  KModuleVector r;
  if (c == 0) return r;
  for (const auto& [k, x] : v) r[k] = c * x;
  return r;
}

KModuleVector kv_add(const KModuleVector& a, const KModuleVector& b) {
  KModuleVector r = a;
  for (const auto& [k, x] : b) {
    auto it = r.find(k);
    if (it == r.end()) {
      r[k] = x;
    } else {
      it->second += x;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

KModuleVector act_k_gen(Gen x, const KModuleVector& v, const KTypeLabel& l) {
  if (!is_compact(x)) throw std::domain_error("not in k");
  KModuleVector r;
  auto put = [&r](int i, int j, const Q& c) {
    if (c == 0) return;
    auto key = std::make_pair(i, j);
    auto it = r.find(key);
    if (it == r.end()) {
      r[key] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  };
  for (const auto& [ij, c] : v) {
    int i = ij.first, j = ij.second;
    switch (x) {
      case Gen::H1:
        put(i, j, c * Q((l.n - 2 * i) + (l.m - 2 * j)) / 2);
        break;
      case Gen::H2:
        put(i, j, c * Q((l.n - 2 * i) - (l.m - 2 * j)) / 2);
        break;
      case Gen::E1:
        if (i > 0) put(i - 1, j, c * Q(i) * Q(l.n - i + 1));
        break;
      case Gen::F1:
        if (i + 1 <= l.n) put(i + 1, j, c);
        break;
      case Gen::E2:
        if (j > 0) put(i, j - 1, c * Q(j) * Q(l.m - j + 1));
        break;
      case Gen::F2:
        if (j + 1 <= l.m) put(i, j + 1, c);
        break;
      default:
        break;
    }
  }
  return r;
}

KModuleVector act_k(const LieElement& x, const KModuleVector& v,
                    const KTypeLabel& l) {
  KModuleVector r;
  for (const auto& [g, c] : x)
    r = kv_add(r, kv_scale(c, act_k_gen(g, v, l)));
  return r;
}

KModuleVector act_k_poly(const UEnvElement& u, const KModuleVector& v,
                         const KTypeLabel& l) {
  KModuleVector out;
  for (const auto& [mono, c] : u) {
    for (int s = 0; s < 4; ++s)
      if (mono[s] != 0) throw std::domain_error("not in k");
    KModuleVector cur = v;
    for (int s = kNumSlots - 1; s >= 4; --s)  // rightmost factor acts first
      for (int rep = 0; rep < mono[s]; ++rep)
        cur = act_k_gen(slot_gen(s), cur, l);
    out = kv_add(out, kv_scale(c, cur));
  }
  return out;
}

std::vector<std::pair<KTypeLabel, int>> tensor_decompose(
    const KTypeLabel& l1, const KTypeLabel& l2) {
  std::vector<std::pair<KTypeLabel, int>> out;
  for (long n = l1.n + l2.n; n >= std::labs(l1.n - l2.n); n -= 2)
    for (long m = l1.m + l2.m; m >= std::labs(l1.m - l2.m); m -= 2)
      out.push_back({KTypeLabel{n, m}, 1});
  return out;
}

std::vector<std::vector<Q>> extract_hwv_tensor(const KTypeLabel& l1,
                                               const KTypeLabel& l2,
                                               const KTypeLabel& weight) {
  // product basis ((i1,j1),(i2,j2)), lexicographic
  struct Idx {
    int i1, j1, i2, j2;
  };
  std::vector<Idx> basis;
  for (int i1 = 0; i1 <= l1.n; ++i1)
    for (int j1 = 0; j1 <= l1.m; ++j1)
      for (int i2 = 0; i2 <= l2.n; ++i2)
        for (int j2 = 0; j2 <= l2.m; ++j2) basis.push_back({i1, j1, i2, j2});
  auto index_of = [&](int i1, int j1, int i2, int j2) {
    return std::size_t(((i1 * (l1.m + 1) + j1) * (l2.n + 1) + i2) *
                           (l2.m + 1) +
                       j2);
  };

  // restrict to the requested (H1+H2, H1-H2) weight
  std::vector<std::size_t> sel;
  std::vector<long> selidx(basis.size(), -1);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const Idx& x = basis[b];
    long wn = (l1.n - 2 * x.i1) + (l2.n - 2 * x.i2);
    long wm = (l1.m - 2 * x.j1) + (l2.m - 2 * x.j2);
    if (wn == weight.n && wm == weight.m) {
      selidx[b] = long(sel.size());
      sel.push_back(b);
    }
  }
  if (sel.empty()) return {};

  // raising operators by the Leibniz rule
  SparseMatrix stacked(0, sel.size());
  for (Gen e : {Gen::E1, Gen::E2}) {
    std::vector<std::map<std::size_t, Q>> rows(basis.size());
    for (std::size_t cidx = 0; cidx < sel.size(); ++cidx) {
      const Idx& x = basis[sel[cidx]];
      KModuleVector v1{{{x.i1, x.j1}, Q(1)}};
      KModuleVector v2{{{x.i2, x.j2}, Q(1)}};
      KModuleVector a1 = act_k_gen(e, v1, l1);
      KModuleVector a2 = act_k_gen(e, v2, l2);
      auto bump = [&rows, cidx](std::size_t row, const Q& c) {
        auto& cell = rows[row][cidx];
        cell += c;
        if (cell == 0) rows[row].erase(cidx);
      };
      for (const auto& [ij, c] : a1)
        bump(index_of(ij.first, ij.second, x.i2, x.j2), c);
      for (const auto& [ij, c] : a2)
        bump(index_of(x.i1, x.j1, ij.first, ij.second), c);
    }
    for (auto& r : rows)
      if (!r.empty()) stacked.append_row(r);
  }

  auto ker = kernel_basis(stacked);
  // lift back to full product coordinates
  std::vector<std::vector<Q>> out;
  for (const auto& kv : ker) {
    std::vector<Q> full(basis.size(), Q(0));
    for (std::size_t c = 0; c < sel.size(); ++c) full[sel[c]] = kv[c];
    out.push_back(std::move(full));
  }
  return out;
}

Report verify_k_modules() {
  Report rep;

  // bracket compatibility on random vectors
  std::mt19937 rng(77001u);
  std::uniform_int_distribution<int> coeff(-4, 4);
  bool br_ok = true;
  std::string bad;
  for (const KTypeLabel l : {KTypeLabel{3, 1}, KTypeLabel{2, 2}}) {
    KModuleVector v;
    for (int i = 0; i <= l.n; ++i)
      for (int j = 0; j <= l.m; ++j) {
        int c = coeff(rng);
        if (c != 0) v[{i, j}] = Q(c);
      }
    for (int a = 0; a < 6 && br_ok; ++a)
      for (int b = a + 1; b < 6 && br_ok; ++b) {
        Gen x = gen_of(a), y = gen_of(b);
        KModuleVector lhs = act_k(bracket_gen(x, y), v, l);
        KModuleVector rhs =
            kv_add(act_k_gen(x, act_k_gen(y, v, l), l),
                   kv_scale(Q(-1), act_k_gen(y, act_k_gen(x, v, l), l)));
        if (lhs != rhs) {
          br_ok = false;
          bad = ktype_str(l) + " pair " + gen_name(x) + "," + gen_name(y);
        }
      }
  }
  rep.add("kmodule/bracket-compatibility", br_ok,
          "[x,y]v = x(yv) - y(xv) on random vectors",
          br_ok ? "exact" : "failed at " + bad);

  // tensor decomposition: dimension count and hwv multiplicities
  bool td_ok = true;
  std::string tdbad;
  std::uniform_int_distribution<int> lab(0, 3);
  for (int trial = 0; trial < 6 && td_ok; ++trial) {
    KTypeLabel l1{lab(rng), lab(rng)}, l2{lab(rng), lab(rng)};
    long total = 0;
    for (const auto& [l, mult] : tensor_decompose(l1, l2))
      total += mult * l.dim();
    if (total != l1.dim() * l2.dim()) {
      td_ok = false;
      tdbad = ktype_str(l1) + " (x) " + ktype_str(l2) + " dimension";
      break;
    }
    for (const auto& [l, mult] : tensor_decompose(l1, l2)) {
      auto hw = extract_hwv_tensor(l1, l2, l);
      if (long(hw.size()) != mult) {
        td_ok = false;
        tdbad = ktype_str(l1) + " (x) " + ktype_str(l2) + " at " + ktype_str(l);
        break;
      }
    }
  }
  rep.add("kmodule/tensor-decomposition", td_ok,
          "Clebsch-Gordan labels match dimensions and hwv counts",
          td_ok ? "confirmed on random labels" : "failed at " + tdbad);

  // label conversion: V_{(1/2,1/2)} corresponds to V_1 (x) V_0
  KTypeLabel v10{1, 0};
  auto [a, b] = v10.ab();
  bool conv_ok = (a == Q(1, 2) && b == Q(1, 2));
  rep.add("kmodule/label-conversion", conv_ok,
          "(n,m) = (1,0) maps to (a,b) = (1/2,1/2)",
          conv_ok ? "confirmed" : "mismatch");
  return rep;
}

}  // namespace so41kit
