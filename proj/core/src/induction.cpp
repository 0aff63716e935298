#include "so41kit/induction.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace so41kit {

namespace {

UEnvElement word_mono(long f1, long f2, long e3) {
  Word w;
  for (long i = 0; i < f1; ++i) w.push_back(Gen::F1);
  for (long i = 0; i < f2; ++i) w.push_back(Gen::F2);
  for (long i = 0; i < e3; ++i) w.push_back(Gen::E3);
  return normalize(w);
}

std::string word_str(long f1, long f2, long e3) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const char* g, long p) {
    if (p == 0) return;
    if (!first) os << " ";
    os << g;
    if (p > 1) os << "^" << p;
    first = false;
  };
  put("F1", f1);
  put("F2", f2);
  put("E3", e3);
  if (first) os << "1";
  return os.str();
}

const char* kGroupBlade[8] = {"E3", "E4", "1", "E3E4", "F3", "F4", "E3F3", "F3F4"};

CliffordElement group_blade(int g) {
  const CliffordElement e3 = cliff_gen(Gen::E3), e4 = cliff_gen(Gen::E4);
  const CliffordElement f3 = cliff_gen(Gen::F3), f4 = cliff_gen(Gen::F4);
  switch (g) {
    case 0: return e3;
    case 1: return e4;
    case 2: return cliff_one();
    case 3: return clifford_multiply(e3, e4);
    case 4: return f3;
    case 5: return f4;
    case 6: return clifford_multiply(e3, f3);
    default: return clifford_multiply(f3, f4);
  }
}

std::string element_label(long f1, long f2, long e3, int group, long s, long l) {
  return word_str(f1, f2, e3) + " (x) " + kGroupBlade[group] + ", w[" +
         std::to_string(s) + "][" + std::to_string(l) + "]";
}

}  // namespace

std::vector<SpanningElement> spanning_set(const LambdaParam& lam, int t) {
  const long m0 = lam.m0(), n0 = lam.n0();
  std::vector<SpanningElement> out;
  for (long k = 0; k <= t; ++k) {
    for (long c = 0; c <= k; ++c)
      for (int g = 0; g < 4; ++g)
        for (long s = 0; s < m0; ++s)
          for (long l = 0; l <= n0; ++l)
            out.push_back({word_mono(0, c, k), group_blade(g), s, l, k, g,
                           element_label(0, c, k, g, s, l)});
    for (long a = 0; a <= k; ++a)
      for (long b = 0; b <= k; ++b)
        for (int g = 4; g < 8; ++g)
          for (long l = 0; l <= n0; ++l)
            out.push_back({word_mono(a, b, k), group_blade(g), m0 - 1, l, k, g,
                           element_label(a, b, k, g, m0 - 1, l)});
  }
  return out;
}

XSVector phi(const ModuleTruncation& mt, const HDSpace& hd,
             const SpanningElement& e) {
  XSVector r = xs_apply_clifford(e.blade, hd.w[e.s][e.l]);
  return xs_apply_ue(mt, e.u, r);
}

Report verify_isomorphism(const ModuleTruncation& mt, const HDSpace& hd) {
  Report rep;
  const long m0 = mt.lambda.m0(), n0 = mt.lambda.n0();
  const int t = mt.level;
  const std::size_t N = mt.dim;
  std::vector<SpanningElement> elems = spanning_set(mt.lambda, t);

  rep.add("induction/spanning-count", elems.size() == 4 * N,
          std::to_string(4 * N),
          elems.size() == 4 * N
              ? std::to_string(elems.size())
              : "count mismatch: " + std::to_string(elems.size()) + " of " +
                    std::to_string(4 * N));

  std::size_t slice0 = 0;
  for (const auto& e : elems)
    if (e.k == 0) ++slice0;
  std::size_t slice0_want = std::size_t(4 * m0 * (n0 + 1) + 4 * (n0 + 1));
  rep.add("induction/spanning-slice-count", slice0 == slice0_want,
          std::to_string(slice0_want), std::to_string(slice0));

  long t1 = 0, t2 = 0;
  for (long k = 0; k <= t; ++k) {
    t1 += k + 1;
    t2 += (k + 1) * (k + 1);
  }
  std::size_t fam_a = 0, fam_b = 0;
  for (const auto& e : elems) (e.group < 4 ? fam_a : fam_b)++;
  bool dual_ok = fam_a == std::size_t(4 * m0 * (n0 + 1) * t1) &&
                 fam_b == std::size_t(4 * (n0 + 1) * t2);
  rep.add("induction/label-duality", dual_ok,
          "family sizes " + std::to_string(4 * m0 * (n0 + 1) * t1) + " + " +
              std::to_string(4 * (n0 + 1) * t2) + " match the X (x) S basis index sets",
          dual_ok ? "confirmed"
                  : "count mismatch: " + std::to_string(fam_a) + " + " +
                        std::to_string(fam_b));

  // identity word with the unit blade fixes every w vector
  bool id_ok = true;
  std::string id_bad;
  for (long s = 0; s < m0 && id_ok; ++s)
    for (long l = 0; l <= n0 && id_ok; ++l) {
      SpanningElement e{ue_one(), cliff_one(), s, l, 0, 2, ""};
      if (!xs_equal(phi(mt, hd, e), hd.w[s][l])) {
        id_ok = false;
        id_bad = "(s,l) = (" + std::to_string(s) + "," + std::to_string(l) + ")";
      }
    }
  rep.add("induction/phi-identity-action", id_ok,
          "(1 (x) 1) (x) w[s][l] maps to w[s][l]",
          id_ok ? "exact" : "failed at " + id_bad);

  // the blade E3F4 kills 1 and E3^E4, hence every w vector
  const CliffordElement e3f4 =
      clifford_multiply(cliff_gen(Gen::E3), cliff_gen(Gen::F4));
  bool z_ok = true;
  for (long s = 0; s < m0 && z_ok; ++s)
    for (long l = 0; l <= n0 && z_ok; ++l) {
      SpanningElement e{ue_one(), e3f4, s, l, 0, 2, ""};
      z_ok = phi(mt, hd, e).empty();
    }
  rep.add("induction/phi-e3f4-vanishing", z_ok,
          "(1 (x) E3F4) (x) w[s][l] maps to zero",
          z_ok ? "confirmed" : "nonzero image");

  // images, their blade support, and the four diagonal blocks
  // column blocks: [E3^E4 | unit | E3 | E4] from the blade pairs
  // (E3E4, E3F3), (1, F3F4), (E3, F4), (E4, F3)
  const int block_of_group[8] = {2, 3, 1, 0, 3, 2, 0, 1};
  const int block_spin[4] = {3, 0, 1, 2};
  const char* block_name[4] = {"E3^E4 block", "unit block", "E3 block",
                               "E4 block"};
  std::array<std::vector<std::map<std::size_t, Q>>, 4> block_cols;
  bool support_ok = true, nonzero_ok = true;
  std::string support_bad, nonzero_bad;
  for (const auto& e : elems) {
    XSVector img = phi(mt, hd, e);
    if (img.empty() && nonzero_ok) {
      nonzero_ok = false;
      nonzero_bad = e.label;
    }
    int blk = block_of_group[e.group];
    std::map<std::size_t, Q> col;
    for (const auto& [key, cv] : img) {
      bool allowed = key.second == block_spin[blk] ||
                     (blk == 1 && key.second == 3);
      if (!allowed && support_ok) {
        support_ok = false;
        support_bad = "unexpected blade support at " + e.label;
      }
      if (key.second == block_spin[blk]) col[key.first] = cv;
    }
    block_cols[blk].push_back(std::move(col));
  }
  rep.add("induction/phi-nonvanishing", nonzero_ok,
          "every spanning element has a nonzero image",
          nonzero_ok ? "confirmed" : "zero image at " + nonzero_bad);
  rep.add("induction/blade-block-structure", support_ok,
          "image blade support follows the four-block triangular pattern",
          support_ok ? "confirmed" : support_bad);

  bool count_ok = true;
  std::string count_bad;
  for (int b = 0; b < 4; ++b)
    if (block_cols[b].size() != N && count_ok) {
      count_ok = false;
      count_bad = "count mismatch: " + std::string(block_name[b]) + " has " +
                  std::to_string(block_cols[b].size()) + " of " +
                  std::to_string(N);
    }
  rep.add("induction/image-count", count_ok,
          "4 blocks of " + std::to_string(N),
          count_ok ? "confirmed" : count_bad);

  bool rank_ok = count_ok;
  std::string rank_bad;
  if (count_ok)
    for (int b = 0; b < 4 && rank_ok; ++b) {
      SparseMatrix m(N, N);
      for (std::size_t c = 0; c < N; ++c)
        for (const auto& [r, cv] : block_cols[b][c]) m.set(r, c, cv);
      RankCertificate cert = full_rank_certificate(m);
      if (!cert.full_rank) {
        rank_ok = false;
        rank_bad = "dependent images: " + std::string(block_name[b]) +
                   " rank " + std::to_string(cert.observed) + " of " +
                   std::to_string(N);
      }
    }
  rep.add("induction/image-independence", rank_ok,
          "all " + std::to_string(4 * N) + " images linearly independent",
          rank_ok ? "rank " + std::to_string(4 * N)
                  : (count_ok ? rank_bad : "blocks not square"));
  return rep;
}

Report verify_phi_identities(const ModuleTruncation& mt, const HDSpace& hd) {
  Report rep;
  const long m0 = mt.lambda.m0(), n0 = mt.lambda.n0();
  const CliffordElement e3 = cliff_gen(Gen::E3), e4 = cliff_gen(Gen::E4);
  const CliffordElement f3 = cliff_gen(Gen::F3), f4 = cliff_gen(Gen::F4);
  auto img = [&](const CliffordElement& blade, long s, long l) {
    SpanningElement e{ue_one(), blade, s, l, 0, 0, ""};
    return phi(mt, hd, e);
  };

  bool ok = true;
  std::string bad;
  for (long s = 0; s + 1 < m0 && ok; ++s)
    for (long l = 0; l <= n0 && ok; ++l)
      if (!xs_equal(xs_scale(Q(m0 - 1 - s), img(f4, s, l)), img(e3, s + 1, l))) {
        ok = false;
        bad = "(s,l) = (" + std::to_string(s) + "," + std::to_string(l) + ")";
      }
  rep.add("induction/phi-f4-ladder", ok,
          "(m0-1-s) phi(1 (x) F4, w[s][l]) = phi(1 (x) E3, w[s+1][l])",
          ok ? "exact" : "failed at " + bad);

  struct Ladder {
    const char* name;
    CliffordElement lhs, rhs;
    Q sign;
  };
  const Ladder ladders[3] = {
      {"induction/phi-e4f4-ladder", clifford_multiply(e4, f4),
       clifford_multiply(e4, e3), Q(1)},
      {"induction/phi-f3f4-ladder", clifford_multiply(f3, f4),
       clifford_multiply(f3, e3), Q(1)},
      {"induction/phi-f3-ladder", f3, e4, Q(-1)},
  };
  for (const Ladder& ld : ladders) {
    ok = true;
    for (long s = 1; s + 1 < m0 && ok; ++s)
      for (long l = 0; l <= n0 && ok; ++l)
        if (!xs_equal(xs_scale(Q(m0 - 1 - s), img(ld.lhs, s, l)),
                      xs_scale(ld.sign, img(ld.rhs, s + 1, l)))) {
          ok = false;
          bad = "(s,l) = (" + std::to_string(s) + "," + std::to_string(l) + ")";
        }
    std::string digest = std::string("(m0-1-s) phi(1 (x) ") +
                         cliff_str(ld.lhs) + ") steps to " +
                         (ld.sign == 1 ? "" : "-") + "phi(1 (x) " +
                         cliff_str(ld.rhs) + ")";
    rep.add(ld.name, ok, digest, ok ? "exact" : "failed at " + bad);
  }
  return rep;
}

Report verify_phi_equivariance(const ModuleTruncation& mt, const HDSpace& hd) {
  Report rep;
  const int t = mt.level;
  std::vector<SpanningElement> elems = spanning_set(mt.lambda, t);
  std::mt19937 rng(424243u);
  std::size_t checked = 0, skipped = 0;
  bool ok = true;
  std::string bad;
  for (const auto& e : elems) {
    if (e.k >= t) {
      ++skipped;
      continue;
    }
    Gen g = gen_of(int(rng() % kNumGen));
    XSVector lhs, rhs;
    try {
      rhs = xs_apply_gen(mt, g, phi(mt, hd, e));
      SpanningElement left{multiply(ue_gen(g), e.u), e.blade, e.s, e.l,
                           e.k, e.group, ""};
      lhs = phi(mt, hd, left);
    } catch (const std::runtime_error&) {
      ++skipped;
      continue;
    }
    ++checked;
    if (ok && !xs_equal(lhs, rhs)) {
      ok = false;
      bad = std::string("failed for ") + gen_name(g) + " at " + e.label;
    }
  }
  rep.add("induction/phi-equivariance", ok && checked > 0,
          "phi((a u (x) blade) (x) w) = a phi((u (x) blade) (x) w)",
          ok ? "verified " + std::to_string(checked) + " instances (" +
                   std::to_string(skipped) + " skipped at the truncation boundary)"
             : bad);
  return rep;
}

namespace {

UEnvElement sl2_casimir(const Q& hsign, Gen e, Gen f) {
  // h^2/2 + ef + fe for the sl2 triple (H1 + hsign H2, e, f)
  UEnvElement h = ue_add(ue_gen(Gen::H1), ue_scale(hsign, ue_gen(Gen::H2)));
  UEnvElement r = ue_scale(Q(1, 2), multiply(h, h));
  r = ue_add(r, multiply(ue_gen(e), ue_gen(f)));
  return ue_add(r, multiply(ue_gen(f), ue_gen(e)));
}

}  // namespace

Report verify_ak_inventory() {
  Report rep;
  UEnvElement om1 = sl2_casimir(Q(1), Gen::E1, Gen::F1);
  UEnvElement om2 = sl2_casimir(Q(-1), Gen::E2, Gen::F2);

  UEnvElement split = ue_add(om1, ue_add(om2, ue_scale(Q(-1), casimir_k())));
  rep.add("induction/casimir-split", ue_is_zero(split),
          "Omega_k1 + Omega_k2 = Omega_k", ue_is_zero(split) ? "exact" : "differs");

  CliffordElement omega;
  cp_invariants(&omega);

  struct Inv {
    std::string name;
    AElement elem;
  };
  const Inv inventory[5] = {
      {"Omega_k1 (x) 1", a_from_ue(om1)},
      {"Omega_k2 (x) 1", a_from_ue(om2)},
      {"1 (x) omega", a_from_cliff(omega)},
      {"D", build_dirac()},
      {"D_k", build_k_dirac()},
  };
  bool ok = true;
  std::string bad;
  for (const Inv& inv : inventory)
    for (int gi = 0; gi < kNumGen && ok; ++gi) {
      Gen g = gen_of(gi);
      if (!is_compact(g)) continue;
      AElement c = a_commutator(inv.elem, diagonal_embed(LieElement{{g, Q(1)}}));
      if (!a_is_zero(c)) {
        ok = false;
        bad = "generator " + inv.name + " not invariant under " +
              gen_name(g) + "_Delta";
      }
    }
  rep.add("induction/ak-invariance", ok,
          "all five generators commute with every x_Delta",
          ok ? "exact" : bad);

  // Dirac bracket identities in A
  const AElement d = build_dirac();
  auto t = [](Gen u, Gen c) { return a_tensor(ue_gen(u), cliff_gen(c)); };
  auto cl = [](Gen a, Gen b) {
    return a_from_cliff(clifford_multiply(cliff_gen(a), cliff_gen(b)));
  };
  AElement lhs1 = a_commutator(d, cl(Gen::E3, Gen::F4));
  AElement rhs1 = a_scale(Q(-2), a_add(t(Gen::E3, Gen::F4),
                                       a_scale(Q(-1), t(Gen::F4, Gen::E3))));
  AElement lhs2 = a_commutator(d, cl(Gen::E4, Gen::F3));
  AElement rhs2 = a_scale(Q(-2), a_add(t(Gen::E4, Gen::F3),
                                       a_scale(Q(-1), t(Gen::F3, Gen::E4))));
  AElement lhs3 = a_commutator(
      d, a_add(cl(Gen::E3, Gen::F3), a_scale(Q(-1), cl(Gen::E4, Gen::F4))));
  AElement rhs3 = a_add(a_scale(Q(-2), d),
                        a_scale(Q(4), a_add(t(Gen::E4, Gen::F4),
                                            t(Gen::F3, Gen::E3))));
  AElement lhs4 = a_add(d, a_scale(Q(-1), a_add(t(Gen::E4, Gen::F4),
                                                t(Gen::F3, Gen::E3))));
  AElement rhs4 = a_add(t(Gen::E3, Gen::F3), t(Gen::F4, Gen::E4));
  const char* names[4] = {"[D, 1 (x) E3F4]", "[D, 1 (x) E4F3]",
                          "[D, 1 (x) (E3F3 - E4F4)]",
                          "D - (E4 (x) F4 + F3 (x) E3)"};
  AElement defects[4] = {
      a_add(lhs1, a_scale(Q(-1), rhs1)), a_add(lhs2, a_scale(Q(-1), rhs2)),
      a_add(lhs3, a_scale(Q(-1), rhs3)), a_add(lhs4, a_scale(Q(-1), rhs4))};
  ok = true;
  for (int i = 0; i < 4 && ok; ++i)
    if (!a_is_zero(defects[i])) {
      ok = false;
      bad = std::string("identity ") + names[i] + " fails";
    }
  rep.add("induction/anticommutator-identities", ok,
          "the four Dirac bracket identities hold in A",
          ok ? "exact" : bad);
  return rep;
}

}  // namespace so41kit
