#include "so41kit/pbw.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "so41kit/linalg.hpp"

namespace so41kit {

namespace {
// slot -> generator
const Gen kSlotGen[kNumSlots] = {Gen::E3, Gen::E4, Gen::F3, Gen::F4, Gen::H1,
                                 Gen::H2, Gen::E1, Gen::E2, Gen::F1, Gen::F2};
// generator index -> slot
const int kGenSlot[kNumGen] = {4, 5, 6, 7, 8, 9, 0, 1, 2, 3};
}  // namespace

Gen slot_gen(int slot) { return kSlotGen[slot]; }
int gen_slot(Gen g) { return kGenSlot[gen_index(g)]; }

int mono_degree(const PbwExp& m) {
  int d = 0;
  for (int s = 0; s < kNumSlots; ++s) d += m[s];
  return d;
}

std::string mono_str(const PbwExp& m) {
  std::ostringstream os;
  bool any = false;
  for (int s = 0; s < kNumSlots; ++s) {
    if (m[s] == 0) continue;
    if (any) os << ".";
    os << gen_name(kSlotGen[s]);
    if (m[s] > 1) os << "^" << int(m[s]);
    any = true;
  }
  return any ? os.str() : "1";
}

UEnvElement ue_one() { return {{PbwExp{}, Q(1)}}; }

UEnvElement ue_gen(Gen g) {
  PbwExp e{};
  e[gen_slot(g)] = 1;
  return {{e, Q(1)}};
}

UEnvElement ue_scale(const Q& c, const UEnvElement& u) {
  UEnvElement r;
  if (c == 0) return r;
  for (const auto& [m, v] : u) r[m] = c * v;
  return r;
}

UEnvElement ue_add(const UEnvElement& a, const UEnvElement& b) {
  UEnvElement r = a;
  for (const auto& [m, v] : b) {
    auto it = r.find(m);
    if (it == r.end()) {
      r[m] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

bool ue_is_zero(const UEnvElement& u) { return u.empty(); }

int ue_degree(const UEnvElement& u) {
  int d = -1;
  for (const auto& [m, v] : u) d = std::max(d, mono_degree(m));
  return d;
}

std::string ue_str(const UEnvElement& u) {
  if (u.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : u) {
    if (!first) os << " + ";
    os << q_str(v) << "*" << mono_str(m);
    first = false;
  }
  return os.str();
}

UEnvElement mul_mono_gen(const PbwExp& m, Gen g) {
  static std::map<std::pair<PbwExp, int>, UEnvElement> memo;
  auto key = std::make_pair(m, gen_index(g));
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  int top = -1;
  for (int s = kNumSlots - 1; s >= 0; --s)
    if (m[s] > 0) {
      top = s;
      break;
    }

  UEnvElement r;
  int gs = gen_slot(g);
  if (top <= gs) {
    // appending keeps normal order
    PbwExp e = m;
    ++e[gs];
    r[e] = Q(1);
  } else {
    // m = m' * x_top, so m*g = (m'*g)*x_top + m'*[x_top, g]
    PbwExp mp = m;
    --mp[top];
    Gen xt = kSlotGen[top];
    for (const auto& [n, c] : mul_mono_gen(mp, g))
      r = ue_add(r, ue_scale(c, mul_mono_gen(n, xt)));
    for (const auto& [z, c] : bracket_gen(xt, g))
      r = ue_add(r, ue_scale(c, mul_mono_gen(mp, z)));
  }
  memo.emplace(key, r);
  return r;
}

UEnvElement mul_elem_gen(const UEnvElement& u, Gen g) {
  UEnvElement r;
  for (const auto& [m, c] : u) r = ue_add(r, ue_scale(c, mul_mono_gen(m, g)));
  return r;
}

UEnvElement multiply(const UEnvElement& a, const UEnvElement& b) {
  UEnvElement r;
  for (const auto& [mb, cb] : b) {
    UEnvElement acc = ue_scale(cb, a);
    for (int s = 0; s < kNumSlots; ++s)
      for (int rep = 0; rep < mb[s]; ++rep) acc = mul_elem_gen(acc, kSlotGen[s]);
    r = ue_add(r, acc);
  }
  return r;
}

UEnvElement power(const UEnvElement& a, int n) {
  UEnvElement r = ue_one();
  for (int i = 0; i < n; ++i) r = multiply(r, a);
  return r;
}

UEnvElement normalize(const Word& w) {
  UEnvElement r = ue_one();
  for (Gen g : w) r = mul_elem_gen(r, g);
  return r;
}

UEnvElement ad_gen(Gen x, const UEnvElement& u) {
  UEnvElement xu = multiply(ue_gen(x), u);
  UEnvElement ux = mul_elem_gen(u, x);
  return ue_add(xu, ue_scale(Q(-1), ux));
}

UEnvElement adjoint_power(Gen x, int n, const UEnvElement& u) {
  UEnvElement r = u;
  for (int i = 0; i < n; ++i) r = ad_gen(x, r);
  return r;
}

UEnvElement casimir_g() {
  // Gram matrix of B on the ordered basis, inverted exactly.
  std::vector<std::vector<Q>> gram(kNumGen, std::vector<Q>(2 * kNumGen, Q(0)));
  for (int i = 0; i < kNumGen; ++i) {
    for (int j = 0; j < kNumGen; ++j)
      gram[i][j] = invariant_form(gen_of(i), gen_of(j));
    gram[i][kNumGen + i] = 1;
  }
  for (int col = 0; col < kNumGen; ++col) {
    int piv = -1;
    for (int r = col; r < kNumGen; ++r)
      if (gram[r][col] != 0) {
        piv = r;
        break;
      }
    std::swap(gram[piv], gram[col]);
    Q inv = 1 / gram[col][col];
    for (int j = 0; j < 2 * kNumGen; ++j) gram[col][j] *= inv;
    for (int r = 0; r < kNumGen; ++r) {
      if (r == col || gram[r][col] == 0) continue;
      Q f = gram[r][col];
      for (int j = 0; j < 2 * kNumGen; ++j) gram[r][j] -= f * gram[col][j];
    }
  }
  UEnvElement omega;
  for (int i = 0; i < kNumGen; ++i)
    for (int j = 0; j < kNumGen; ++j) {
      const Q& c = gram[i][kNumGen + j];
      if (c == 0) continue;
      omega = ue_add(omega,
                     ue_scale(c, normalize({gen_of(i), gen_of(j)})));
    }
  return omega;
}

Report verify_f1e3_identity(int k) {
  Report rep;
  Word w;
  w.push_back(Gen::F1);
  for (int i = 0; i < k; ++i) w.push_back(Gen::E3);
  UEnvElement lhs = normalize(w);

  UEnvElement rhs;
  if (k >= 2) {
    PbwExp e{};
    e[gen_slot(Gen::E3)] = std::uint8_t(k - 2);
    e[gen_slot(Gen::E2)] = 1;
    rhs = ue_add(rhs, UEnvElement{{e, Q(-k * (k - 1))}});
  }
  if (k >= 1) {
    PbwExp e{};
    e[gen_slot(Gen::E3)] = std::uint8_t(k - 1);
    e[gen_slot(Gen::F4)] = 1;
    rhs = ue_add(rhs, UEnvElement{{e, Q(k)}});
  }
  {
    PbwExp e{};
    e[gen_slot(Gen::E3)] = std::uint8_t(k);
    e[gen_slot(Gen::F1)] = 1;
    rhs = ue_add(rhs, UEnvElement{{e, Q(1)}});
  }
  UEnvElement diff = ue_add(lhs, ue_scale(Q(-1), rhs));
  bool ok = ue_is_zero(diff);
  rep.add("pbw/f1-e3-straightening-k" + std::to_string(k), ok,
          "F1.E3^k = -k(k-1)E3^(k-2)E2 + k.E3^(k-1)F4 + E3^k.F1",
          ok ? "exact" : "identity failure: " + ue_str(diff));
  return rep;
}

Report verify_associativity(int triples) {
  Report rep;
  std::mt19937 rng(20240517u);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> pick(0, kNumGen - 1);
  auto random_elem = [&] {
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(gen_of(pick(rng)));
    return normalize(w);
  };
  bool ok = true;
  int bad = -1;
  for (int i = 0; i < triples; ++i) {
    UEnvElement a = random_elem(), b = random_elem(), c = random_elem();
    UEnvElement lhs = multiply(multiply(a, b), c);
    UEnvElement rhs = multiply(a, multiply(b, c));
    if (ue_add(lhs, ue_scale(Q(-1), rhs)) != UEnvElement{}) {
      ok = false;
      bad = i;
      break;
    }
  }
  rep.add("pbw/associativity", ok,
          "(ab)c = a(bc) on " + std::to_string(triples) + " random triples",
          ok ? "exact" : "failed at triple " + std::to_string(bad));
  return rep;
}

Report verify_ug_span(int d) {
  Report rep;

  // Column index for every monomial of degree <= d.
  std::map<PbwExp, std::size_t> col;
  {
    PbwExp cur{};
    // enumerate exponent vectors with total degree <= d, lexicographically
    std::vector<PbwExp> all;
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
      if (slot == kNumSlots) {
        all.push_back(cur);
        return;
      }
      for (int e = 0; e <= remaining; ++e) {
        cur[slot] = std::uint8_t(e);
        rec(slot + 1, remaining - e);
      }
      cur[slot] = 0;
    };
    rec(0, d);
    std::sort(all.begin(), all.end());
    for (const auto& m : all) col.emplace(m, col.size());
  }
  const std::size_t ncols = col.size();

  UEnvElement quad = ue_add(normalize({Gen::E3, Gen::F3}),
                            normalize({Gen::E4, Gen::F4}));

  // U(k) monomials of degree <= bound over slots H1..F2.
  auto k_monomials = [&](int bound) {
    std::vector<PbwExp> out;
    PbwExp cur{};
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
      if (slot == kNumSlots) {
        out.push_back(cur);
        return;
      }
      for (int e = 0; e <= remaining; ++e) {
        cur[slot] = std::uint8_t(e);
        rec(slot + 1, remaining - e);
      }
      cur[slot] = 0;
    };
    rec(4, bound);
    return out;
  };

  SparseMatrix mat(0, ncols);
  std::size_t count = 0;
  for (int k = 0; k <= d; ++k) {
    UEnvElement e3k = ue_one();
    for (int i = 0; i < k; ++i) e3k = mul_elem_gen(e3k, Gen::E3);
    for (int t = 0; k + 2 * t <= d; ++t) {
      UEnvElement qt = power(quad, t);
      for (int b = 0; b <= k; ++b) {
        UEnvElement xb = adjoint_power(Gen::F2, b, e3k);
        for (int a = 0; a <= k; ++a) {
          UEnvElement x = adjoint_power(Gen::F1, a, xb);
          UEnvElement xq = multiply(x, qt);
          for (const auto& y : k_monomials(d - k - 2 * t)) {
            UEnvElement elem = multiply(xq, UEnvElement{{y, Q(1)}});
            std::map<std::size_t, Q> row;
            for (const auto& [m, c] : elem) row[col.at(m)] = c;
            mat.append_row(row);
            ++count;
          }
        }
      }
    }
  }

  RankCertificate cert = full_rank_certificate(mat);
  bool dims_ok = (count >= ncols);
  bool ok = dims_ok && cert.full_rank && cert.target == ncols;
  std::ostringstream exp, act;
  exp << "span of " << count << " elements has dimension " << ncols;
  if (ok)
    act << "rank " << ncols;
  else
    act << "span deficiency: rank " << cert.observed << " of " << ncols;
  rep.add("pbw/enveloping-span-degree-" + std::to_string(d), ok, exp.str(),
          act.str());
  return rep;
}

Report verify_casimir_central() {
  Report rep;
  UEnvElement omega = casimir_g();
  bool ok = true;
  std::string bad;
  for (int i = 0; i < kNumGen; ++i) {
    Gen g = gen_of(i);
    UEnvElement comm = ue_add(multiply(ue_gen(g), omega),
                              ue_scale(Q(-1), mul_elem_gen(omega, g)));
    if (!ue_is_zero(comm)) {
      ok = false;
      bad = gen_name(g);
      break;
    }
  }
  rep.add("pbw/casimir-central", ok, "[casimir, x] = 0 for all 10 generators",
          ok ? "exact" : "nonzero commutator with " + bad);
  return rep;
}

}  // namespace so41kit
