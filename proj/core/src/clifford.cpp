#include "so41kit/clifford.hpp"

#include <sstream>
#include <stdexcept>

#include "so41kit/linalg.hpp"

namespace so41kit {

namespace {
const Gen kPGen[4] = {Gen::E3, Gen::E4, Gen::F3, Gen::F4};

int p_bit(Gen g) {
  switch (g) {
    case Gen::E3:
      return 0;
    case Gen::E4:
      return 1;
    case Gen::F3:
      return 2;
    case Gen::F4:
      return 3;
    default:
      throw std::domain_error("not in p");
  }
}
}  // namespace

Blade blade_of(Gen p_gen) { return Blade(1u << p_bit(p_gen)); }

std::string blade_str(Blade b) {
  if (b == 0) return "1";
  std::string s;
  for (int i = 0; i < 4; ++i)
    if (b & (1u << i)) {
      if (!s.empty()) s += ".";
      s += gen_name(kPGen[i]);
    }
  return s;
}

Q bform_p(Gen x, Gen y) {
  int bx = p_bit(x), by = p_bit(y);
  // dual pairs: E3<->F3 (bits 0,2) and E4<->F4 (bits 1,3)
  return (bx ^ by) == 2 ? Q(1) : Q(0);
}

CliffordElement cliff_one() { return {{Blade(0), Q(1)}}; }

CliffordElement cliff_gen(Gen p_gen) { return {{blade_of(p_gen), Q(1)}}; }

CliffordElement cliff_scale(const Q& c, const CliffordElement& a) {
  CliffordElement r;
  if (c == 0) return r;
  for (const auto& [b, v] : a) r[b] = c * v;
  return r;
}

CliffordElement cliff_add(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement r = a;
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

bool cliff_is_zero(const CliffordElement& a) { return a.empty(); }

std::string cliff_str(const CliffordElement& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, v] : a) {
    if (!first) os << " + ";
    os << q_str(v) << "*" << blade_str(b);
    first = false;
  }
  return os.str();
}

namespace {

// blade times a single generator, straightened to ascending order
CliffordElement mul_blade_gen(Blade b, Gen g) {
  int gb = p_bit(g);
  int top = -1;
  for (int i = 3; i >= 0; --i)
    if (b & (1u << i)) {
      top = i;
      break;
    }
  if (top < gb) return {{Blade(b | (1u << gb)), Q(1)}};
  if (top == gb) return {};  // generators square to zero (B(x,x) = 0)
  Blade bp = Blade(b & ~(1u << top));
  Gen xt = kPGen[top];
  // x_t x_g = -x_g x_t - 2B(x_t, x_g)
  CliffordElement r;
  for (const auto& [n, c] : mul_blade_gen(bp, g))
    r = cliff_add(r, cliff_scale(-c, mul_blade_gen(n, xt)));
  Q bv = bform_p(xt, g);
  if (bv != 0) r = cliff_add(r, CliffordElement{{bp, -2 * bv}});
  return r;
}

CliffordElement cliff_mul_gen(const CliffordElement& a, Gen g) {
  CliffordElement r;
  for (const auto& [b, c] : a) r = cliff_add(r, cliff_scale(c, mul_blade_gen(b, g)));
  return r;
}

}  // namespace

CliffordElement clifford_multiply(const CliffordElement& a,
                                  const CliffordElement& b) {
  CliffordElement r;
  for (const auto& [bb, cb] : b) {
    CliffordElement acc = cliff_scale(cb, a);
    for (int i = 0; i < 4; ++i)
      if (bb & (1u << i)) acc = cliff_mul_gen(acc, kPGen[i]);
    r = cliff_add(r, acc);
  }
  return r;
}

CliffordElement clifford_commutator(const CliffordElement& a,
                                    const CliffordElement& b) {
  return cliff_add(clifford_multiply(a, b),
                   cliff_scale(Q(-1), clifford_multiply(b, a)));
}

const char* spin_basis_name(int idx) {
  static const char* names[4] = {"1", "E3", "E4", "E3^E4"};
  return names[idx];
}

namespace {

SpinVector spin_gen(int bit, const SpinVector& s) {
  SpinVector r{Q(0), Q(0), Q(0), Q(0)};
  switch (bit) {
    case 0:  // E3: exterior multiplication
      r[1] = s[0];
      r[3] = s[2];
      break;
    case 1:  // E4: exterior, E4^E3 = -E3^E4
      r[2] = s[0];
      r[3] = -s[1];
      break;
    case 2:  // F3: -2 contraction, pairs with E3
      r[0] = -2 * s[1];
      r[2] = -2 * s[3];
      break;
    case 3:  // F4: -2 contraction, pairs with E4
      r[0] = -2 * s[2];
      r[1] = 2 * s[3];
      break;
  }
  return r;
}

}  // namespace

SpinVector spin_action(const CliffordElement& c, const SpinVector& s) {
  SpinVector out{Q(0), Q(0), Q(0), Q(0)};
  for (const auto& [b, v] : c) {
    SpinVector cur = s;
    for (int i = 0; i < 4; ++i)  // rightmost factor acts first
      if (b & (1u << (3 - i))) cur = spin_gen(3 - i, cur);
    for (int k = 0; k < 4; ++k) out[k] += v * cur[k];
  }
  return out;
}

namespace {

CliffordElement embed_p(const LieElement& x) {
  CliffordElement r;
  for (const auto& [g, c] : x) r = cliff_add(r, cliff_scale(c, cliff_gen(g)));
  return r;
}

}  // namespace

CliffordElement alpha(const LieElement& x) {
  for (const auto& [g, c] : x)
    if (!is_compact(g)) throw std::domain_error("not in k");
  static const Gen pairs[4][2] = {{Gen::E3, Gen::F3},
                                  {Gen::F3, Gen::E3},
                                  {Gen::E4, Gen::F4},
                                  {Gen::F4, Gen::E4}};
  CliffordElement sum;
  for (const auto& bd : pairs) {
    LieElement br = bracket(x, LieElement{{bd[0], Q(1)}});
    sum = cliff_add(sum, clifford_multiply(embed_p(br), cliff_gen(bd[1])));
  }
  return cliff_scale(Q(-1, 4), sum);
}

AElement a_one() { return {{{PbwExp{}, Blade(0)}, Q(1)}}; }

AElement a_from_ue(const UEnvElement& u) {
  AElement r;
  for (const auto& [m, c] : u) r[{m, Blade(0)}] = c;
  return r;
}

AElement a_from_cliff(const CliffordElement& c) {
  AElement r;
  for (const auto& [b, v] : c) r[{PbwExp{}, b}] = v;
  return r;
}

AElement a_tensor(const UEnvElement& u, const CliffordElement& c) {
  AElement r;
  for (const auto& [m, cu] : u)
    for (const auto& [b, cv] : c) {
      Q p = cu * cv;
      if (p != 0) r[{m, b}] = p;
    }
  return r;
}

AElement a_scale(const Q& c, const AElement& a) {
  AElement r;
  if (c == 0) return r;
  for (const auto& [k, v] : a) r[k] = c * v;
  return r;
}

AElement a_add(const AElement& a, const AElement& b) {
  AElement r = a;
  for (const auto& [k, v] : b) {
    auto it = r.find(k);
    if (it == r.end()) {
      r[k] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

AElement a_multiply(const AElement& a, const AElement& b) {
  AElement r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      UEnvElement ue = multiply(UEnvElement{{ka.first, Q(1)}},
                                UEnvElement{{kb.first, Q(1)}});
      CliffordElement cl = clifford_multiply(CliffordElement{{ka.second, Q(1)}},
                                             CliffordElement{{kb.second, Q(1)}});
      r = a_add(r, a_scale(ca * cb, a_tensor(ue, cl)));
    }
  return r;
}

AElement a_commutator(const AElement& a, const AElement& b) {
  return a_add(a_multiply(a, b), a_scale(Q(-1), a_multiply(b, a)));
}

bool a_is_zero(const AElement& a) { return a.empty(); }

std::string a_str(const AElement& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : a) {
    if (!first) os << " + ";
    os << q_str(v) << "*" << mono_str(k.first) << "(x)" << blade_str(k.second);
    first = false;
  }
  return os.str();
}

AElement diagonal_embed(const LieElement& x) {
  CliffordElement ax = alpha(x);  // validates x in k
  UEnvElement u;
  for (const auto& [g, c] : x) u = ue_add(u, ue_scale(c, ue_gen(g)));
  return a_add(a_from_ue(u), a_from_cliff(ax));
}

AElement build_dirac() {
  AElement d;
  d = a_add(d, a_tensor(ue_gen(Gen::E3), cliff_gen(Gen::F3)));
  d = a_add(d, a_tensor(ue_gen(Gen::E4), cliff_gen(Gen::F4)));
  d = a_add(d, a_tensor(ue_gen(Gen::F3), cliff_gen(Gen::E3)));
  d = a_add(d, a_tensor(ue_gen(Gen::F4), cliff_gen(Gen::E4)));
  return d;
}

AElement build_k_dirac() {
  auto le = [](Gen g) { return LieElement{{g, Q(1)}}; };
  LieElement hp{{Gen::H1, Q(1)}, {Gen::H2, Q(1)}};
  LieElement hm{{Gen::H1, Q(1)}, {Gen::H2, Q(-1)}};
  UEnvElement uhp = ue_add(ue_gen(Gen::H1), ue_gen(Gen::H2));
  UEnvElement uhm = ue_add(ue_gen(Gen::H1), ue_scale(Q(-1), ue_gen(Gen::H2)));
  AElement d;
  d = a_add(d, a_tensor(ue_gen(Gen::E1), cliff_scale(Q(2), alpha(le(Gen::F1)))));
  d = a_add(d, a_tensor(ue_gen(Gen::E2), cliff_scale(Q(2), alpha(le(Gen::F2)))));
  d = a_add(d, a_tensor(ue_gen(Gen::F1), cliff_scale(Q(2), alpha(le(Gen::E1)))));
  d = a_add(d, a_tensor(ue_gen(Gen::F2), cliff_scale(Q(2), alpha(le(Gen::E2)))));
  d = a_add(d, a_tensor(uhm, alpha(hm)));
  d = a_add(d, a_tensor(uhp, alpha(hp)));
  return d;
}

UEnvElement casimir_k() {
  UEnvElement hp = ue_add(ue_gen(Gen::H1), ue_gen(Gen::H2));
  UEnvElement hm = ue_add(ue_gen(Gen::H1), ue_scale(Q(-1), ue_gen(Gen::H2)));
  UEnvElement r = normalize({Gen::E1, Gen::F1});
  r = ue_add(r, normalize({Gen::F1, Gen::E1}));
  r = ue_add(r, ue_scale(Q(1, 2), multiply(hp, hp)));
  r = ue_add(r, normalize({Gen::E2, Gen::F2}));
  r = ue_add(r, normalize({Gen::F2, Gen::E2}));
  r = ue_add(r, ue_scale(Q(1, 2), multiply(hm, hm)));
  return r;
}

AElement casimir_k_delta() {
  auto dg = [](std::initializer_list<std::pair<Gen, int>> terms) {
    LieElement x;
    for (auto& [g, c] : terms) x[g] = Q(c);
    return diagonal_embed(x);
  };
  AElement e1 = dg({{Gen::E1, 1}}), f1 = dg({{Gen::F1, 1}});
  AElement e2 = dg({{Gen::E2, 1}}), f2 = dg({{Gen::F2, 1}});
  AElement hp = dg({{Gen::H1, 1}, {Gen::H2, 1}});
  AElement hm = dg({{Gen::H1, 1}, {Gen::H2, -1}});
  AElement r = a_multiply(e1, f1);
  r = a_add(r, a_multiply(f1, e1));
  r = a_add(r, a_scale(Q(1, 2), a_multiply(hp, hp)));
  r = a_add(r, a_multiply(e2, f2));
  r = a_add(r, a_multiply(f2, e2));
  r = a_add(r, a_scale(Q(1, 2), a_multiply(hm, hm)));
  return r;
}

Report verify_clifford_relations() {
  Report rep;
  bool rel_ok = true;
  std::string bad;
  for (int i = 0; i < 4 && rel_ok; ++i)
    for (int j = i; j < 4 && rel_ok; ++j) {
      Gen x = kPGen[i], y = kPGen[j];
      CliffordElement anti =
          cliff_add(clifford_multiply(cliff_gen(x), cliff_gen(y)),
                    clifford_multiply(cliff_gen(y), cliff_gen(x)));
      CliffordElement want = cliff_scale(-2 * bform_p(x, y), cliff_one());
      if (cliff_add(anti, cliff_scale(Q(-1), want)) != CliffordElement{}) {
        rel_ok = false;
        bad = std::string(gen_name(x)) + "," + gen_name(y);
      }
    }
  rep.add("clifford/defining-relations", rel_ok, "xy + yx = -2B(x,y)",
          rel_ok ? "exact on all basis pairs" : "failed at " + bad);

  bool mod_ok = true;
  for (int a = 0; a < 16 && mod_ok; ++a)
    for (int b = 0; b < 16 && mod_ok; ++b) {
      CliffordElement ca{{Blade(a), Q(1)}}, cb{{Blade(b), Q(1)}};
      CliffordElement ab = clifford_multiply(ca, cb);
      for (int s = 0; s < 4; ++s) {
        SpinVector v{Q(0), Q(0), Q(0), Q(0)};
        v[s] = 1;
        SpinVector lhs = spin_action(ab, v);
        SpinVector rhs = spin_action(ca, spin_action(cb, v));
        if (lhs != rhs) mod_ok = false;
      }
    }
  rep.add("clifford/spin-module-property", mod_ok,
          "spin_action(ab, s) = spin_action(a, spin_action(b, s))",
          mod_ok ? "exact on all blade pairs" : "module property violated");
  return rep;
}

Report verify_alpha() {
  Report rep;
  auto le = [](Gen g) { return LieElement{{g, Q(1)}}; };

  bool hom_ok = true;
  std::string bad;
  for (int i = 0; i < 6 && hom_ok; ++i)
    for (int j = i + 1; j < 6 && hom_ok; ++j) {
      Gen x = gen_of(i), y = gen_of(j);
      CliffordElement lhs = alpha(bracket_gen(x, y));
      CliffordElement rhs = clifford_commutator(alpha(le(x)), alpha(le(y)));
      if (cliff_add(lhs, cliff_scale(Q(-1), rhs)) != CliffordElement{}) {
        hom_ok = false;
        bad = std::string(gen_name(x)) + "," + gen_name(y);
      }
    }
  rep.add("clifford/alpha-homomorphism", hom_ok,
          "alpha([x,y]) = [alpha(x), alpha(y)] on 15 k-pairs",
          hom_ok ? "exact" : "failed at " + bad);

  CliffordElement ae2 = alpha(le(Gen::E2));
  CliffordElement want_e2 = cliff_scale(
      Q(-1, 2), clifford_multiply(cliff_gen(Gen::E3), cliff_gen(Gen::F4)));
  CliffordElement af1 = alpha(le(Gen::F1));
  CliffordElement want_f1 = cliff_scale(
      Q(1, 2), clifford_multiply(cliff_gen(Gen::F3), cliff_gen(Gen::F4)));
  bool vals_ok = (ae2 == want_e2) && (af1 == want_f1);
  rep.add("clifford/alpha-values", vals_ok,
          "alpha(E2) = -1/2 E3F4, alpha(F1) = 1/2 F3F4",
          vals_ok ? "both reproduced"
                  : "alpha(E2) = " + cliff_str(ae2) +
                        ", alpha(F1) = " + cliff_str(af1));

  // three operators that kill both 1 and E3^E4
  CliffordElement t1 =
      clifford_multiply(cliff_gen(Gen::E3), cliff_gen(Gen::F4));
  CliffordElement t2 =
      clifford_multiply(cliff_gen(Gen::E4), cliff_gen(Gen::F3));
  CliffordElement t3 = cliff_add(
      clifford_multiply(cliff_gen(Gen::E3), cliff_gen(Gen::F3)),
      cliff_scale(Q(-1), clifford_multiply(cliff_gen(Gen::E4),
                                           cliff_gen(Gen::F4))));
  bool van_ok = true;
  for (const CliffordElement* t : {&t1, &t2, &t3})
    for (int s : {0, 3}) {
      SpinVector v{Q(0), Q(0), Q(0), Q(0)};
      v[s] = 1;
      SpinVector img = spin_action(*t, v);
      if (img != SpinVector{Q(0), Q(0), Q(0), Q(0)}) van_ok = false;
    }
  rep.add("clifford/vanishing-operators", van_ok,
          "E3F4, E4F3, E3F3-E4F4 kill 1 and E3^E4",
          van_ok ? "all six images vanish" : "nonzero image found");

  // S = V1 boxtimes V0 {E3^E4, 1} + V0 boxtimes V1 {E3, E4} under alpha
  bool dec_ok = true;
  // weights-x2 of the spin basis under (H1, H2)
  const int wx2[4][2] = {{-1, -1}, {1, -1}, {-1, 1}, {1, 1}};
  for (int s = 0; s < 4 && dec_ok; ++s) {
    SpinVector v{Q(0), Q(0), Q(0), Q(0)};
    v[s] = 1;
    for (int h = 0; h < 2 && dec_ok; ++h) {
      SpinVector img = spin_action(alpha(le(h == 0 ? Gen::H1 : Gen::H2)), v);
      SpinVector want = v;
      for (auto& c : want) c *= Q(wx2[s][h], 2);
      if (img != want) dec_ok = false;
    }
  }
  // E1, E2 annihilate the claimed highest weight vectors E3^E4 and E3
  for (Gen e : {Gen::E1, Gen::E2}) {
    for (int s : {1, 3}) {
      SpinVector v{Q(0), Q(0), Q(0), Q(0)};
      v[s] = 1;
      bool claimed_hwv = (e == Gen::E1 && s == 3) || (e == Gen::E2 && s == 1);
      if (!claimed_hwv) continue;
      SpinVector img = spin_action(alpha(le(e)), v);
      if (img != SpinVector{Q(0), Q(0), Q(0), Q(0)}) dec_ok = false;
    }
  }
  rep.add("clifford/spin-decomposition", dec_ok,
          "S = V1xV0{E3^E4,1} + V0xV1{E3,E4} via alpha weights and hwvs",
          dec_ok ? "confirmed" : "weight or hwv mismatch");
  return rep;
}

Report verify_operator_identities() {
  Report rep;
  AElement d = build_dirac();
  AElement dk = build_k_dirac();
  AElement d2 = a_multiply(d, d);
  UEnvElement hp = ue_add(ue_gen(Gen::H1), ue_gen(Gen::H2));

  {
    UEnvElement lhsu = ue_add(normalize({Gen::E3, Gen::F3}),
                              normalize({Gen::E4, Gen::F4}));
    AElement rhs = a_add(a_add(a_scale(Q(-1, 2), d2), dk), a_from_ue(hp));
    AElement res = a_add(a_from_ue(lhsu), a_scale(Q(-1), rhs));
    rep.add("clifford/connection-identity", a_is_zero(res),
            "(E3F3 + E4F4)(x)1 = -1/2 D^2 + D_k + (H1+H2)(x)1",
            a_is_zero(res) ? "exact" : "residual " + a_str(res));
  }
  {
    UEnvElement lhsu = ue_add(normalize({Gen::F3, Gen::E3}),
                              normalize({Gen::F4, Gen::E4}));
    AElement rhs = a_add(a_add(a_scale(Q(-1, 2), d2), dk),
                         a_scale(Q(-1), a_from_ue(hp)));
    AElement res = a_add(a_from_ue(lhsu), a_scale(Q(-1), rhs));
    rep.add("clifford/connection-companion", a_is_zero(res),
            "(F3E3 + F4E4)(x)1 = -1/2 D^2 + D_k - (H1+H2)(x)1",
            a_is_zero(res) ? "exact" : "residual " + a_str(res));
  }

  auto cg = [](Gen g) { return cliff_gen(g); };
  auto tens = [](Gen u, Gen c) {
    return a_tensor(ue_gen(u), cliff_gen(c));
  };
  {
    CliffordElement s = clifford_multiply(cg(Gen::E3), cg(Gen::F4));
    AElement lhs = a_commutator(d, a_from_cliff(s));
    AElement rhs = a_scale(
        Q(-2), a_add(tens(Gen::E3, Gen::F4), a_scale(Q(-1), tens(Gen::F4, Gen::E3))));
    AElement res = a_add(lhs, a_scale(Q(-1), rhs));
    rep.add("clifford/dirac-bracket-e3f4", a_is_zero(res),
            "[D, 1(x)E3F4] = -2(E3(x)F4 - F4(x)E3)",
            a_is_zero(res) ? "exact" : "residual " + a_str(res));
  }
  {
    CliffordElement s = clifford_multiply(cg(Gen::E4), cg(Gen::F3));
    AElement lhs = a_commutator(d, a_from_cliff(s));
    AElement rhs = a_scale(
        Q(-2), a_add(tens(Gen::E4, Gen::F3), a_scale(Q(-1), tens(Gen::F3, Gen::E4))));
    AElement res = a_add(lhs, a_scale(Q(-1), rhs));
    rep.add("clifford/dirac-bracket-e4f3", a_is_zero(res),
            "[D, 1(x)E4F3] = -2(E4(x)F3 - F3(x)E4)",
            a_is_zero(res) ? "exact" : "residual " + a_str(res));
  }
  {
    CliffordElement s = cliff_add(
        clifford_multiply(cg(Gen::E3), cg(Gen::F3)),
        cliff_scale(Q(-1), clifford_multiply(cg(Gen::E4), cg(Gen::F4))));
    AElement lhs = a_commutator(d, a_from_cliff(s));
    AElement rhs = a_add(a_scale(Q(-2), d),
                         a_scale(Q(4), a_add(tens(Gen::E4, Gen::F4),
                                             tens(Gen::F3, Gen::E3))));
    AElement res = a_add(lhs, a_scale(Q(-1), rhs));
    rep.add("clifford/dirac-bracket-e3f3-e4f4", a_is_zero(res),
            "[D, 1(x)(E3F3-E4F4)] = -2D + 4(E4(x)F4 + F3(x)E3)",
            a_is_zero(res) ? "exact" : "residual " + a_str(res));
  }
  {
    AElement lhs = a_add(d, a_scale(Q(-1), a_add(tens(Gen::E4, Gen::F4),
                                                 tens(Gen::F3, Gen::E3))));
    AElement rhs = a_add(tens(Gen::E3, Gen::F3), tens(Gen::F4, Gen::E4));
    AElement res = a_add(lhs, a_scale(Q(-1), rhs));
    rep.add("clifford/dirac-split", a_is_zero(res),
            "D - (E4(x)F4 + F3(x)E3) = E3(x)F3 + F4(x)E4",
            a_is_zero(res) ? "exact" : "residual " + a_str(res));
  }

  // projection absorption: T p' = T on S for the three operators
  {
    CliffordElement t1 = clifford_multiply(cg(Gen::E3), cg(Gen::F4));
    CliffordElement t2 = clifford_multiply(cg(Gen::E4), cg(Gen::F3));
    CliffordElement t3 = cliff_add(
        clifford_multiply(cg(Gen::E3), cg(Gen::F3)),
        cliff_scale(Q(-1), clifford_multiply(cg(Gen::E4), cg(Gen::F4))));
    bool ok = true;
    for (const CliffordElement* t : {&t1, &t2, &t3})
      for (int s = 0; s < 4; ++s) {
        SpinVector v{Q(0), Q(0), Q(0), Q(0)};
        v[s] = 1;
        SpinVector pv{Q(0), Q(0), Q(0), Q(0)};  // projection onto span{E3,E4}
        pv[1] = v[1];
        pv[2] = v[2];
        if (spin_action(*t, pv) != spin_action(*t, v)) ok = false;
      }
    rep.add("clifford/projection-absorption", ok,
            "T p' = T for T in {E3F4, E4F3, E3F3-E4F4}",
            ok ? "exact on all spin basis vectors" : "absorption fails");
  }

  // D_k is even and commutes with every diagonal k-generator
  {
    bool even = true;
    for (const auto& [k, v] : dk) {
      int bits = 0;
      for (int i = 0; i < 4; ++i)
        if (k.second & (1u << i)) ++bits;
      if (bits % 2 != 0) even = false;
    }
    rep.add("clifford/k-dirac-even", even, "all blades of D_k have even degree",
            even ? "confirmed" : "odd blade present");

    bool inv = true;
    std::string bad;
    for (int i = 0; i < 6; ++i) {
      Gen g = gen_of(i);
      AElement c = a_commutator(dk, diagonal_embed(LieElement{{g, Q(1)}}));
      if (!a_is_zero(c)) {
        inv = false;
        bad = gen_name(g);
        break;
      }
    }
    rep.add("clifford/k-dirac-invariance", inv,
            "[D_k, x_Delta] = 0 for all k-generators",
            inv ? "exact" : "nonzero at " + bad);
  }
  return rep;
}

Report verify_casimir_k_identity() {
  Report rep;
  auto le = [](Gen g) { return LieElement{{g, Q(1)}}; };
  LieElement hp{{Gen::H1, Q(1)}, {Gen::H2, Q(1)}};
  LieElement hm{{Gen::H1, Q(1)}, {Gen::H2, Q(-1)}};

  CliffordElement cross = cliff_add(
      cliff_add(clifford_multiply(alpha(le(Gen::E1)), alpha(le(Gen::F1))),
                clifford_multiply(alpha(le(Gen::F1)), alpha(le(Gen::E1)))),
      cliff_add(clifford_multiply(alpha(le(Gen::E2)), alpha(le(Gen::F2))),
                clifford_multiply(alpha(le(Gen::F2)), alpha(le(Gen::E2)))));
  AElement rhs = a_from_ue(casimir_k());
  rhs = a_add(rhs, build_k_dirac());
  rhs = a_add(rhs, a_scale(Q(1, 2), a_from_cliff(clifford_multiply(
                               alpha(hp), alpha(hp)))));
  rhs = a_add(rhs, a_scale(Q(1, 2), a_from_cliff(clifford_multiply(
                               alpha(hm), alpha(hm)))));
  rhs = a_add(rhs, a_from_cliff(cross));
  AElement res = a_add(casimir_k_delta(), a_scale(Q(-1), rhs));
  bool ok = a_is_zero(res);
  rep.add("clifford/casimir-diagonal-expansion", ok,
          "Omega_{k_Delta} = Omega_k(x)1 + D_k + Clifford terms",
          ok ? "identity exact" : "identity failure: " + a_str(res));
  return rep;
}

Report cp_invariants(CliffordElement* generator_out) {
  Report rep;
  // stack the 6 commutator maps [alpha(x), -] on the 16-dim C(p)
  SparseMatrix m(0, 16);
  for (int gi = 0; gi < 6; ++gi) {
    CliffordElement ax = alpha(LieElement{{gen_of(gi), Q(1)}});
    // rows of the map in the blade basis
    std::vector<std::map<std::size_t, Q>> rows(16);
    for (int b = 0; b < 16; ++b) {
      CliffordElement img = clifford_commutator(ax, CliffordElement{{Blade(b), Q(1)}});
      for (const auto& [ob, c] : img) rows[ob][std::size_t(b)] = c;
    }
    for (auto& r : rows) m.append_row(r);
  }
  auto ker = kernel_basis(m);
  bool dim_ok = (ker.size() == 2);
  rep.add("clifford/cp-invariants-dimension", dim_ok, "2",
          std::to_string(ker.size()));

  CliffordElement gen;
  bool found = false;
  for (const auto& v : ker) {
    if (v[15] != 0) {
      Q inv = 1 / v[15];
      for (int b = 0; b < 16; ++b)
        if (v[b] != 0) gen[Blade(b)] = inv * v[b];
      found = true;
      break;
    }
  }
  rep.add("clifford/cp-invariant-generator", found,
          "invariant with top blade E3.E4.F3.F4",
          found ? cliff_str(gen) : "no invariant reaches the top blade");
  if (generator_out) *generator_out = gen;
  return rep;
}

}  // namespace so41kit
