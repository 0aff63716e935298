#include "so41kit/lie.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace so41kit {

namespace {
const char* kGenNames[kNumGen] = {"H1", "H2", "E1", "E2", "F1",
                                  "F2", "E3", "E4", "F3", "F4"};
}

Gen gen_of(int i) { return static_cast<Gen>(i); }
int gen_index(Gen g) { return static_cast<int>(g); }
const char* gen_name(Gen g) { return kGenNames[gen_index(g)]; }
bool is_compact(Gen g) { return gen_index(g) < 6; }

LieElement lie_scale(const Q& c, const LieElement& x) {
  LieElement r;
  if (c == 0) return r;
  for (const auto& [g, v] : x) r[g] = c * v;
  return r;
}

LieElement lie_add(const LieElement& x, const LieElement& y) {
  LieElement r = x;
  for (const auto& [g, v] : y) {
    auto it = r.find(g);
    if (it == r.end()) {
      r[g] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

namespace {

struct Term {
  Gen g;
  long c;
};

// Commutator table, upper triangle in the basis order H1 H2 E1 E2 F1 F2 E3
// E4 F3 F4; the rest is filled by antisymmetry.
struct TableEntry {
  Gen a, b;
  std::vector<Term> value;
};

const std::vector<TableEntry>& upper_table() {
  using enum Gen;
  static const std::vector<TableEntry> t = {
      {H1, H2, {}},
      {H1, E1, {{E1, 1}}},
      {H1, E2, {{E2, 1}}},
      {H1, F1, {{F1, -1}}},
      {H1, F2, {{F2, -1}}},
      {H1, E3, {{E3, 1}}},
      {H1, E4, {}},
      {H1, F3, {{F3, -1}}},
      {H1, F4, {}},
      {H2, E1, {{E1, 1}}},
      {H2, E2, {{E2, -1}}},
      {H2, F1, {{F1, -1}}},
      {H2, F2, {{F2, 1}}},
      {H2, E3, {}},
      {H2, E4, {{E4, 1}}},
      {H2, F3, {}},
      {H2, F4, {{F4, -1}}},
      {E1, E2, {}},
      {E1, F1, {{H1, 1}, {H2, 1}}},
      {E1, F2, {}},
      {E1, E3, {}},
      {E1, E4, {}},
      {E1, F3, {{E4, -1}}},
      {E1, F4, {{E3, 1}}},
      {E2, F1, {}},
      {E2, F2, {{H1, 1}, {H2, -1}}},
      {E2, E3, {}},
      {E2, E4, {{E3, 1}}},
      {E2, F3, {{F4, -1}}},
      {E2, F4, {}},
      {F1, F2, {}},
      {F1, E3, {{F4, 1}}},
      {F1, E4, {{F3, -1}}},
      {F1, F3, {}},
      {F1, F4, {}},
      {F2, E3, {{E4, 1}}},
      {F2, E4, {}},
      {F2, F3, {}},
      {F2, F4, {{F3, -1}}},
      {E3, E4, {{E1, 2}}},
      {E3, F3, {{H1, 2}}},
      {E3, F4, {{E2, 2}}},
      {E4, F3, {{F2, 2}}},
      {E4, F4, {{H2, 2}}},
      {F3, F4, {{F1, -2}}},
  };
  return t;
}

// table[i][j] for all ordered pairs.
const std::array<std::array<LieElement, kNumGen>, kNumGen>& full_table() {
  static const auto tbl = [] {
    std::array<std::array<LieElement, kNumGen>, kNumGen> t{};
    for (const auto& e : upper_table()) {
      LieElement v;
      for (const auto& term : e.value) v[term.g] = Q(term.c);
      t[gen_index(e.a)][gen_index(e.b)] = v;
      t[gen_index(e.b)][gen_index(e.a)] = lie_scale(Q(-1), v);
    }
    return t;
  }();
  return tbl;
}

}  // namespace

LieElement bracket_gen(Gen x, Gen y) {
  return full_table()[gen_index(x)][gen_index(y)];
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  LieElement r;
  for (const auto& [gx, cx] : x)
    for (const auto& [gy, cy] : y)
      r = lie_add(r, lie_scale(cx * cy, bracket_gen(gx, gy)));
  return r;
}

namespace {

GMat5 gmat_zero() { return GMat5{}; }

// Entries are listed as (row, col, value); e_{ab} in the source text is
// 1-based, here 0-based.
GMat5 build(std::initializer_list<std::tuple<int, int, GQ>> entries) {
  GMat5 m = gmat_zero();
  for (const auto& [i, j, v] : entries) m[i][j] = m[i][j] + v;
  return m;
}

}  // namespace

GMat5 generator_matrix(Gen g) {
  const GQ i = gq_i();
  const GQ h(Q(1, 2));       // 1/2
  const GQ ih(Q(0), Q(1, 2));  // i/2
  const GQ one(Q(1));
  switch (g) {
    case Gen::H1:
      return build({{0, 1, i}, {1, 0, -i}});
    case Gen::H2:
      return build({{2, 3, i}, {3, 2, -i}});
    case Gen::E1:
      // (1/2)(e13 - e24 - i e23 - i e14 - e31 + e42 + i e32 + i e41)
      return build({{0, 2, h},
                    {1, 3, -h},
                    {1, 2, -ih},
                    {0, 3, -ih},
                    {2, 0, -h},
                    {3, 1, h},
                    {2, 1, ih},
                    {3, 0, ih}});
    case Gen::E2:
      // (1/2)(e13 + e24 - i e23 + i e14 - e31 - e42 + i e32 - i e41)
      return build({{0, 2, h},
                    {1, 3, h},
                    {1, 2, -ih},
                    {0, 3, ih},
                    {2, 0, -h},
                    {3, 1, -h},
                    {2, 1, ih},
                    {3, 0, -ih}});
    case Gen::F1:
      // -(1/2)(e13 - e24 + i e23 + i e14 - e31 + e42 - i e32 - i e41)
      return build({{0, 2, -h},
                    {1, 3, h},
                    {1, 2, -ih},
                    {0, 3, -ih},
                    {2, 0, h},
                    {3, 1, -h},
                    {2, 1, ih},
                    {3, 0, ih}});
    case Gen::F2:
      // -(1/2)(e13 + e24 + i e23 - i e14 - e31 - e42 - i e32 + i e41)
      return build({{0, 2, -h},
                    {1, 3, -h},
                    {1, 2, -ih},
                    {0, 3, ih},
                    {2, 0, h},
                    {3, 1, h},
                    {2, 1, ih},
                    {3, 0, -ih}});
    case Gen::E3:
      return build({{0, 4, one}, {1, 4, -i}, {4, 0, one}, {4, 1, -i}});
    case Gen::E4:
      return build({{2, 4, one}, {3, 4, -i}, {4, 2, one}, {4, 3, -i}});
    case Gen::F3:
      return build({{0, 4, one}, {1, 4, i}, {4, 0, one}, {4, 1, i}});
    case Gen::F4:
      return build({{2, 4, one}, {3, 4, i}, {4, 2, one}, {4, 3, i}});
  }
  return gmat_zero();
}

GMat5 mat_mul(const GMat5& a, const GMat5& b) {
  GMat5 r = gmat_zero();
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < 5; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

GMat5 mat_sub(const GMat5& a, const GMat5& b) {
  GMat5 r = gmat_zero();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

GQ mat_trace_product(const GMat5& a, const GMat5& b) {
  GQ t;
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) t = t + a[i][k] * b[k][i];
  return t;
}

std::array<long, 2> root_weight(Gen g) {
  switch (g) {
    case Gen::H1:
    case Gen::H2:
      return {0, 0};
    case Gen::E1:
      return {1, 1};
    case Gen::E2:
      return {1, -1};
    case Gen::F1:
      return {-1, -1};
    case Gen::F2:
      return {-1, 1};
    case Gen::E3:
      return {1, 0};
    case Gen::E4:
      return {0, 1};
    case Gen::F3:
      return {-1, 0};
    case Gen::F4:
      return {0, -1};
  }
  return {0, 0};
}

Q invariant_form(Gen x, Gen y) {
  GQ t = mat_trace_product(generator_matrix(x), generator_matrix(y));
  if (t.im != 0) throw std::logic_error("invariant form has imaginary part");
  return t.re / 4;
}

RootDatum root_datum() {
  RootDatum d;
  d.compact_positive = {{1, -1}, {1, 1}};
  d.noncompact_positive = {{1, 0}, {0, 1}};
  d.rho = {Q(3, 2), Q(1, 2)};
  d.rho_k = {Q(1), Q(0)};
  d.rho_n = {Q(1, 2), Q(1, 2)};
  return d;
}

namespace {

GMat5 matrix_of(const LieElement& x) {
  GMat5 m = gmat_zero();
  for (const auto& [g, c] : x) {
    GMat5 gm = generator_matrix(g);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m[i][j] = m[i][j] + GQ(c) * gm[i][j];
  }
  return m;
}

bool mat_is_zero(const GMat5& m) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (!m[i][j].is_zero()) return false;
  return true;
}

std::string lie_str(const LieElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : x) {
    if (!first) os << " + ";
    os << q_str(c) << "*" << gen_name(g);
    first = false;
  }
  return os.str();
}

}  // namespace

Report verify_structure_constants() {
  Report rep;
  for (int i = 0; i < kNumGen; ++i)
    for (int j = i + 1; j < kNumGen; ++j) {
      Gen a = gen_of(i), b = gen_of(j);
      GMat5 ab = mat_mul(generator_matrix(a), generator_matrix(b));
      GMat5 ba = mat_mul(generator_matrix(b), generator_matrix(a));
      GMat5 comm = mat_sub(ab, ba);
      LieElement tbl = bracket_gen(a, b);
      GMat5 residual = mat_sub(comm, matrix_of(tbl));
      bool ok = mat_is_zero(residual);
      std::string name = std::string("lie/commutator/") + gen_name(a) + "," +
                         gen_name(b);
      rep.add(name, ok, lie_str(tbl),
              ok ? lie_str(tbl) : "table mismatch at this pair");
    }
  return rep;
}

Report verify_jacobi() {
  Report rep;
  for (int i = 0; i < kNumGen; ++i)
    for (int j = i + 1; j < kNumGen; ++j)
      for (int k = j + 1; k < kNumGen; ++k) {
        Gen x = gen_of(i), y = gen_of(j), z = gen_of(k);
        LieElement s = bracket(LieElement{{x, Q(1)}}, bracket_gen(y, z));
        s = lie_add(s, bracket(LieElement{{y, Q(1)}}, bracket_gen(z, x)));
        s = lie_add(s, bracket(LieElement{{z, Q(1)}}, bracket_gen(x, y)));
        bool ok = s.empty();
        std::string name = std::string("lie/jacobi/") + gen_name(x) + "," +
                           gen_name(y) + "," + gen_name(z);
        rep.add(name, ok, "0", ok ? "0" : "jacobi failure: " + lie_str(s));
      }
  return rep;
}

Report verify_cartan_and_roots() {
  Report rep;

  bool grading_ok = true;
  std::string grading_bad;
  for (int i = 0; i < kNumGen && grading_ok; ++i)
    for (int j = i + 1; j < kNumGen && grading_ok; ++j) {
      Gen a = gen_of(i), b = gen_of(j);
      bool want_compact = (is_compact(a) == is_compact(b));
      for (const auto& [g, c] : bracket_gen(a, b))
        if (is_compact(g) != want_compact) {
          grading_ok = false;
          grading_bad = std::string(gen_name(a)) + "," + gen_name(b);
        }
    }
  rep.add("lie/cartan-grading", grading_ok, "brackets respect k/p grading",
          grading_ok ? "brackets respect k/p grading"
                     : "violated at " + grading_bad);

  bool theta_ok = true;
  for (int i = 0; i < kNumGen; ++i) {
    Gen g = gen_of(i);
    GMat5 m = generator_matrix(g);
    // theta(X) = -X^T must equal +X on k and -X on p
    GMat5 mt = gmat_zero();
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) mt[r][c] = -m[c][r];
    GMat5 want = m;
    if (!is_compact(g))
      for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) want[r][c] = -m[r][c];
    if (!mat_is_zero(mat_sub(mt, want))) theta_ok = false;
  }
  rep.add("lie/theta-eigenspaces", theta_ok,
          "theta fixes k and negates p", theta_ok ? "confirmed" : "mismatch");

  bool roots_ok = true;
  for (int i = 0; i < kNumGen; ++i) {
    Gen g = gen_of(i);
    auto w = root_weight(g);
    LieElement h1x = bracket_gen(Gen::H1, g);
    LieElement h2x = bracket_gen(Gen::H2, g);
    LieElement want1 = w[0] == 0 ? LieElement{} : LieElement{{g, Q(w[0])}};
    LieElement want2 = w[1] == 0 ? LieElement{} : LieElement{{g, Q(w[1])}};
    if (h1x != want1 || h2x != want2) roots_ok = false;
  }
  rep.add("lie/root-weights", roots_ok, "ad(H1), ad(H2) diagonal with listed roots",
          roots_ok ? "confirmed" : "mismatch");

  RootDatum d = root_datum();
  // rho is the half sum of all positive roots, rho_k of the compact ones.
  Q s1(0), s2(0);
  for (auto& r : d.compact_positive) {
    s1 += r[0];
    s2 += r[1];
  }
  Q k1 = s1 / 2, k2 = s2 / 2;
  for (auto& r : d.noncompact_positive) {
    s1 += r[0];
    s2 += r[1];
  }
  bool rho_ok = (d.rho[0] == s1 / 2 && d.rho[1] == s2 / 2) &&
                (d.rho_k[0] == k1 && d.rho_k[1] == k2) &&
                (d.rho[0] == d.rho_k[0] + d.rho_n[0]) &&
                (d.rho[1] == d.rho_k[1] + d.rho_n[1]);
  rep.add("lie/rho-half-sums", rho_ok,
          "rho=(3/2,1/2), rho_k=(1,0), rho_n=(1/2,1/2), rho=rho_k+rho_n",
          rho_ok ? "confirmed" : "mismatch");
  return rep;
}

}  // namespace so41kit
