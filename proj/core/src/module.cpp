#include "so41kit/module.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "so41kit/linalg.hpp"

namespace so41kit {

const char* const kScalarNames[kNumScalars] = {
    "mu", "alpha", "beta", "gamma", "delta", "epsilon", "eta", "rho", "zeta"};

LambdaParam::LambdaParam(long a, long b) : l1(a), l2(b) {
  if (!(a >= b && b >= 0))
    throw std::invalid_argument("λ1 ≥ λ2 ≥ 0 required");
}

std::vector<GammaNode> ktypes(const LambdaParam& lam, int t) {
  std::vector<GammaNode> out;
  for (int r = 0; r <= t; ++r)
    for (int l = 0; l <= std::min(long(r), lam.n0()); ++l)
      out.push_back({r - l, l});
  return out;
}

long zt_dimension(long m0, long n0, long t) {
  long num = (n0 + 1) * (3 * m0 + 2 * t + 3) * (t * t + 3 * t + 2);
  return num / 6;
}

long st_cardinality(long m0, long n0, long t) {
  long total = 0;
  for (long l = 0; l <= n0; ++l)
    for (long k = 0; k + l <= t; ++k)
      total += (m0 + k + l + 1) * (n0 + k - l + 1);
  return total;
}

std::optional<std::size_t> ModuleTruncation::node_at(int k, int l) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].k == k && nodes[i].l == l) return i;
  return std::nullopt;
}

KTypeLabel ModuleTruncation::label(std::size_t ni) const {
  const GammaNode& nd = nodes[ni];
  return {lambda.m0() + nd.k + nd.l, lambda.n0() + nd.k - nd.l};
}

std::size_t ModuleTruncation::basis_index(std::size_t ni, int i, int j) const {
  return offset[ni] + std::size_t(i) * std::size_t(label(ni).m + 1) +
         std::size_t(j);
}

BasisCoord ModuleTruncation::coord(std::size_t idx) const {
  auto it = std::upper_bound(offset.begin(), offset.end(), idx);
  std::size_t ni = std::size_t(it - offset.begin()) - 1;
  std::size_t rem = idx - offset[ni];
  long m = label(ni).m;
  return {ni, int(rem / std::size_t(m + 1)), int(rem % std::size_t(m + 1))};
}

std::pair<long, long> ModuleTruncation::weight(std::size_t idx) const {
  BasisCoord c = coord(idx);
  KTypeLabel l = label(c.node);
  return {l.n - 2 * c.i, l.m - 2 * c.j};
}

ModuleVec mv_scale(const Q& c, const ModuleVec& v) {
  ModuleVec r;
  if (c == 0) return r;
  for (const auto& [i, x] : v) r[i] = c * x;
  return r;
}

ModuleVec mv_add(const ModuleVec& a, const ModuleVec& b) {
  ModuleVec r = a;
  for (const auto& [i, x] : b) {
    auto it = r.find(i);
    if (it == r.end()) {
      r[i] = x;
    } else {
      it->second += x;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

namespace {

void mv_bump(ModuleVec& v, std::size_t i, const Q& c) {
  if (c == 0) return;
  auto it = v.find(i);
  if (it == v.end()) {
    v[i] = c;
  } else {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

ModuleVec mv_sub(const ModuleVec& a, const ModuleVec& b) {
  return mv_add(a, mv_scale(Q(-1), b));
}

ModuleTruncation make_shape(const LambdaParam& lam, int t) {
  ModuleTruncation a;
  a.lambda = lam;
  a.level = t;
  a.nodes = ktypes(lam, t);
  a.offset.resize(a.nodes.size());
  std::size_t off = 0;
  for (std::size_t ni = 0; ni < a.nodes.size(); ++ni) {
    a.offset[ni] = off;
    off += std::size_t(a.label(ni).dim());
  }
  a.dim = off;
  a.scalars.assign(a.nodes.size(), NodeScalars{});
  return a;
}

int level_of(const ModuleTruncation& a, std::size_t idx) {
  return a.nodes[a.coord(idx).node].level();
}

// k-action directly on truncation coordinates (level preserving)
ModuleVec act_k_gen_amb(const ModuleTruncation& a, Gen g, const ModuleVec& v) {
  ModuleVec r;
  for (const auto& [idx, c] : v) {
    BasisCoord bc = a.coord(idx);
    KTypeLabel lab = a.label(bc.node);
    long n = lab.n, m = lab.m;
    int i = bc.i, j = bc.j;
    switch (g) {
      case Gen::H1:
        mv_bump(r, idx, c * Q((n - 2 * i) + (m - 2 * j)) / 2);
        break;
      case Gen::H2:
        mv_bump(r, idx, c * Q((n - 2 * i) - (m - 2 * j)) / 2);
        break;
      case Gen::E1:
        if (i > 0)
          mv_bump(r, a.basis_index(bc.node, i - 1, j), c * Q(i) * Q(n - i + 1));
        break;
      case Gen::F1:
        if (i + 1 <= n) mv_bump(r, a.basis_index(bc.node, i + 1, j), c);
        break;
      case Gen::E2:
        if (j > 0)
          mv_bump(r, a.basis_index(bc.node, i, j - 1), c * Q(j) * Q(m - j + 1));
        break;
      case Gen::F2:
        if (j + 1 <= m) mv_bump(r, a.basis_index(bc.node, i, j + 1), c);
        break;
      default:
        throw std::domain_error("not in k");
    }
  }
  return r;
}

ModuleVec act_k_lie_amb(const ModuleTruncation& a, const LieElement& x,
                        const ModuleVec& v) {
  ModuleVec r;
  for (const auto& [g, c] : x)
    r = mv_add(r, mv_scale(c, act_k_gen_amb(a, g, v)));
  return r;
}

// p-action on the node's highest weight vector through the scalar ansatz
ModuleVec act_p_hwv(const ModuleTruncation& a, Gen x, std::size_t ni) {
  const GammaNode nd = a.nodes[ni];
  const NodeScalars& s = a.scalars[ni];
  ModuleVec r;
  auto put = [&](int k, int l, int i, int j, const Q& c) {
    if (c == 0) return;
    auto t = a.node_at(k, l);
    if (!t) return;  // absent target, scalar pinned to zero
    mv_bump(r, a.basis_index(*t, i, j), c);
  };
  switch (x) {
    case Gen::E3:
      put(nd.k + 1, nd.l, 0, 0, s[kMu]);
      break;
    case Gen::E4:
      put(nd.k + 1, nd.l, 0, 1, s[kAlpha]);
      put(nd.k, nd.l + 1, 0, 0, s[kBeta]);
      break;
    case Gen::F3:
      put(nd.k + 1, nd.l, 1, 1, s[kGamma]);
      put(nd.k, nd.l + 1, 1, 0, s[kDelta]);
      put(nd.k, nd.l - 1, 0, 1, s[kEps]);
      put(nd.k - 1, nd.l, 0, 0, s[kEta]);
      break;
    case Gen::F4:
      put(nd.k, nd.l - 1, 0, 0, s[kRho]);
      put(nd.k + 1, nd.l, 1, 0, s[kZeta]);
      break;
    default:
      throw std::domain_error("not in p");
  }
  return r;
}

ModuleVec act_p_basis(const ModuleTruncation& a, Gen x, std::size_t ni, int i,
                      int j);

ModuleVec act_p_lie_basis(const ModuleTruncation& a, const LieElement& x,
                          std::size_t ni, int i, int j) {
  ModuleVec r;
  for (const auto& [g, c] : x)
    r = mv_add(r, mv_scale(c, act_p_basis(a, g, ni, i, j)));
  return r;
}

// peel F1 powers, then F2 powers, through Table 1: x f1^i = f1 (x f1^{i-1})
// + [x, f1] f1^{i-1} on the node's vectors
ModuleVec act_p_basis(const ModuleTruncation& a, Gen x, std::size_t ni, int i,
                      int j) {
  if (i > 0) {
    ModuleVec r = act_k_gen_amb(a, Gen::F1, act_p_basis(a, x, ni, i - 1, j));
    return mv_add(r, act_p_lie_basis(a, bracket_gen(x, Gen::F1), ni, i - 1, j));
  }
  if (j > 0) {
    ModuleVec r = act_k_gen_amb(a, Gen::F2, act_p_basis(a, x, ni, 0, j - 1));
    return mv_add(r, act_p_lie_basis(a, bracket_gen(x, Gen::F2), ni, 0, j - 1));
  }
  return act_p_hwv(a, x, ni);
}

ModuleVec act_p_gen_amb(const ModuleTruncation& a, Gen x, const ModuleVec& v) {
  ModuleVec r;
  for (const auto& [idx, c] : v) {
    BasisCoord bc = a.coord(idx);
    r = mv_add(r, mv_scale(c, act_p_basis(a, x, bc.node, bc.i, bc.j)));
  }
  return r;
}

ModuleVec act_p_lie_amb(const ModuleTruncation& a, const LieElement& x,
                        const ModuleVec& v) {
  ModuleVec r;
  for (const auto& [g, c] : x)
    r = mv_add(r, mv_scale(c, act_p_gen_amb(a, g, v)));
  return r;
}

ModuleVec filter_level(const ModuleTruncation& a, const ModuleVec& v,
                       int lvl) {
  ModuleVec r;
  for (const auto& [idx, c] : v)
    if (level_of(a, idx) == lvl) r[idx] = c;
  return r;
}

const Gen kPList[4] = {Gen::E3, Gen::E4, Gen::F3, Gen::F4};
const Gen kPPairs[6][2] = {{Gen::E3, Gen::E4}, {Gen::E3, Gen::F3},
                           {Gen::E3, Gen::F4}, {Gen::E4, Gen::F3},
                           {Gen::E4, Gen::F4}, {Gen::F3, Gen::F4}};

// All equivariance and bracket defect vectors of stage r, restricted to one
// target level. Entries vanish exactly when the action is consistent there.
std::vector<ModuleVec> stage_defects(const ModuleTruncation& a, int r,
                                     int want_level) {
  std::vector<ModuleVec> out;
  if (want_level < 0 || want_level > a.level) {
    return out;
  }
  for (std::size_t ni = 0; ni < a.nodes.size(); ++ni) {
    if (a.nodes[ni].level() != r) continue;
    ModuleVec hwv{{a.basis_index(ni, 0, 0), Q(1)}};
    for (Gen ec : {Gen::E1, Gen::E2})
      for (Gen x : kPList) {
        ModuleVec d = act_k_gen_amb(a, ec, act_p_gen_amb(a, x, hwv));
        d = mv_sub(d, act_p_lie_amb(a, bracket_gen(ec, x), hwv));
        out.push_back(filter_level(a, d, want_level));
      }
  }
  if (r >= 1) {
    for (std::size_t ni = 0; ni < a.nodes.size(); ++ni) {
      if (a.nodes[ni].level() != r - 1) continue;
      ModuleVec hwv{{a.basis_index(ni, 0, 0), Q(1)}};
      for (const auto& pr : kPPairs) {
        ModuleVec d = act_k_lie_amb(a, bracket_gen(pr[0], pr[1]), hwv);
        d = mv_sub(d, act_p_gen_amb(a, pr[0], act_p_gen_amb(a, pr[1], hwv)));
        d = mv_add(d, act_p_gen_amb(a, pr[1], act_p_gen_amb(a, pr[0], hwv)));
        out.push_back(filter_level(a, d, want_level));
      }
    }
  }
  return out;
}

Q value_at(const ModuleVec& v, std::size_t idx) {
  auto it = v.find(idx);
  return it == v.end() ? Q(0) : it->second;
}

void solve_phase(ModuleTruncation& a,
                 const std::vector<std::pair<std::size_t, int>>& unk,
                 const std::function<std::vector<ModuleVec>()>& eval,
                 const std::string& where) {
  std::vector<ModuleVec> base = eval();
  std::vector<std::vector<ModuleVec>> cols;
  for (const auto& [ni, slot] : unk) {
    a.scalars[ni][slot] = 1;
    cols.push_back(eval());
    a.scalars[ni][slot] = 0;
  }

  SparseMatrix m(0, unk.size());
  std::vector<Q> rhs;
  for (std::size_t d = 0; d < base.size(); ++d) {
    std::set<std::size_t> support;
    for (const auto& [i, c] : base[d]) support.insert(i);
    for (const auto& cs : cols)
      for (const auto& [i, c] : cs[d]) support.insert(i);
    for (std::size_t idx : support) {
      Q b0 = value_at(base[d], idx);
      std::map<std::size_t, Q> row;
      for (std::size_t u = 0; u < unk.size(); ++u) {
        Q cu = value_at(cols[u][d], idx) - b0;
        if (cu != 0) row[u] = cu;
      }
      if (row.empty() && b0 == 0) continue;
      m.append_row(row);
      rhs.push_back(-b0);
    }
  }
  SolveResult sr = solve_linear(m, rhs);
  if (!sr.consistent) throw std::runtime_error("inconsistent: " + where);
  if (sr.null_dim > 0) throw std::runtime_error("underdetermined: " + where);
  for (std::size_t u = 0; u < unk.size(); ++u)
    a.scalars[unk[u].first][unk[u].second] = sr.solution[u];
}

void solve_into(ModuleTruncation& a) {
  const long n0 = a.lambda.n0();
  for (int r = 0; r < a.level; ++r) {
    std::vector<std::size_t> lev;
    for (std::size_t ni = 0; ni < a.nodes.size(); ++ni)
      if (a.nodes[ni].level() == r) lev.push_back(ni);

    // spanning-tree gauge
    for (std::size_t ni : lev) {
      a.scalars[ni][kMu] = 1;
      if (a.nodes[ni].k == 0 && a.nodes[ni].l < n0) a.scalars[ni][kBeta] = 1;
    }

    std::vector<std::pair<std::size_t, int>> up;
    for (std::size_t ni : lev) {
      const GammaNode& nd = a.nodes[ni];
      up.push_back({ni, kAlpha});
      if (nd.l < n0 && nd.k >= 1) up.push_back({ni, kBeta});
      up.push_back({ni, kGamma});
      if (nd.l < n0) up.push_back({ni, kDelta});
      up.push_back({ni, kZeta});
    }
    std::string tag = "level " + std::to_string(r);
    solve_phase(a, up, [&] { return stage_defects(a, r, r + 1); },
                tag + " raising scalars");

    std::vector<std::pair<std::size_t, int>> down;
    for (std::size_t ni : lev) {
      const GammaNode& nd = a.nodes[ni];
      if (nd.l >= 1) down.push_back({ni, kEps});
      if (nd.k >= 1) down.push_back({ni, kEta});
      if (nd.l >= 1) down.push_back({ni, kRho});
    }
    solve_phase(a, down, [&] { return stage_defects(a, r, r - 1); },
                tag + " lowering scalars");
  }
}

void build_matrices(ModuleTruncation& a) {
  a.p_source_valid.assign(a.dim, 0);
  for (int gi = 0; gi < kNumGen; ++gi) a.action[gi].assign(a.dim, {});
  for (std::size_t idx = 0; idx < a.dim; ++idx) {
    BasisCoord bc = a.coord(idx);
    ModuleVec e{{idx, Q(1)}};
    for (int gi = 0; gi < kNumGen; ++gi) {
      Gen g = gen_of(gi);
      if (is_compact(g)) {
        a.action[gi][idx] = act_k_gen_amb(a, g, e);
      } else if (a.nodes[bc.node].level() <= a.level - 1) {
        a.action[gi][idx] = act_p_basis(a, g, bc.node, bc.i, bc.j);
      }
    }
    if (a.nodes[bc.node].level() <= a.level - 1) a.p_source_valid[idx] = 1;
  }
}

}  // namespace

TransitionScalars solve_transition_scalars(const LambdaParam& lam, int t) {
  ModuleTruncation a = make_shape(lam, t);
  solve_into(a);
  TransitionScalars out;
  for (std::size_t ni = 0; ni < a.nodes.size(); ++ni)
    if (a.nodes[ni].level() <= t - 1) out.push_back({a.nodes[ni], a.scalars[ni]});
  return out;
}

ModuleTruncation build_truncation(const LambdaParam& lam, int t) {
  ModuleTruncation a = make_shape(lam, t);
  solve_into(a);
  build_matrices(a);
  return a;
}

ModuleVec apply_gen(const ModuleTruncation& mt, Gen g, const ModuleVec& v) {
  ModuleVec r;
  bool compact = is_compact(g);
  for (const auto& [idx, c] : v) {
    if (!compact && !mt.p_source_valid[idx])
      throw std::runtime_error("truncation overflow");
    r = mv_add(r, mv_scale(c, mt.action[gen_index(g)][idx]));
  }
  return r;
}

ModuleVec apply_lie(const ModuleTruncation& mt, const LieElement& x,
                    const ModuleVec& v) {
  ModuleVec r;
  for (const auto& [g, c] : x) r = mv_add(r, mv_scale(c, apply_gen(mt, g, v)));
  return r;
}

ModuleVec apply_word(const ModuleTruncation& mt, const Word& w,
                     const ModuleVec& v) {
  ModuleVec r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_gen(mt, *it, r);
  return r;
}

ModuleVec apply_poly(const ModuleTruncation& mt, const UEnvElement& u,
                     const ModuleVec& v) {
  ModuleVec out;
  for (const auto& [mono, c] : u) {
    ModuleVec cur = v;
    for (int s = kNumSlots - 1; s >= 0; --s)
      for (int rep = 0; rep < mono[s]; ++rep)
        cur = apply_gen(mt, slot_gen(s), cur);
    out = mv_add(out, mv_scale(c, cur));
  }
  return out;
}

Report verify_basis_theorem(const ModuleTruncation& mt) {
  Report rep;
  const long m0 = mt.lambda.m0(), n0 = mt.lambda.n0();
  const int t = mt.level;

  long count = st_cardinality(m0, n0, t);
  bool card_ok = (count == long(mt.dim));
  rep.add("module/basis-cardinality", card_ok, std::to_string(mt.dim),
          std::to_string(count));

  SparseMatrix rows(0, mt.dim);
  ModuleVec v0{{0, Q(1)}};
  ModuleVec vl = v0;
  for (long l = 0; l <= n0; ++l) {
    if (l > 0) vl = apply_gen(mt, Gen::E4, vl);
    ModuleVec vlk = vl;
    for (long k = 0; k + l <= t; ++k) {
      if (k > 0) vlk = apply_gen(mt, Gen::E3, vlk);
      ModuleVec vb = vlk;
      for (long b = 0; b <= n0 + k - l; ++b) {
        if (b > 0) vb = apply_gen(mt, Gen::F2, vb);
        ModuleVec va = vb;
        for (long a = 0; a <= m0 + k + l; ++a) {
          if (a > 0) va = apply_gen(mt, Gen::F1, va);
          std::map<std::size_t, Q> row(va.begin(), va.end());
          rows.append_row(row);
        }
      }
    }
  }
  RankCertificate cert = full_rank_certificate(rows);
  bool ok = cert.full_rank && rows.rows() == mt.dim;
  std::ostringstream act;
  if (ok)
    act << "rank " << mt.dim;
  else
    act << "rank deficiency: rank " << cert.observed << " of " << mt.dim;
  rep.add("module/basis-theorem", ok,
          "words F1^a F2^b E3^k E4^l on v0 have full rank " +
              std::to_string(mt.dim),
          act.str());
  return rep;
}

Report verify_module_axioms(const ModuleTruncation& mt) {
  Report rep;
  bool ok = true;
  std::string bad;
  for (std::size_t idx = 0; idx < mt.dim && ok; ++idx) {
    if (level_of(mt, idx) > mt.level - 2) continue;
    ModuleVec e{{idx, Q(1)}};
    for (int i = 0; i < kNumGen && ok; ++i)
      for (int j = i + 1; j < kNumGen && ok; ++j) {
        Gen x = gen_of(i), y = gen_of(j);
        ModuleVec lhs = apply_gen(mt, x, apply_gen(mt, y, e));
        lhs = mv_sub(lhs, apply_gen(mt, y, apply_gen(mt, x, e)));
        ModuleVec rhs = apply_lie(mt, bracket_gen(x, y), e);
        if (lhs != rhs) {
          ok = false;
          bad = std::string(gen_name(x)) + "," + gen_name(y) + " at index " +
                std::to_string(idx);
        }
      }
  }
  rep.add("module/bracket-axioms", ok,
          "x(yv) - y(xv) = [x,y]v for all pairs on levels <= t-2",
          ok ? "exact" : "failed at " + bad);
  return rep;
}

Report verify_dimensions(const ModuleTruncation& mt) {
  Report rep;
  long closed = zt_dimension(mt.lambda.m0(), mt.lambda.n0(), mt.level);
  bool ok = (closed == long(mt.dim));
  rep.add("module/dimension-formula", ok, std::to_string(closed),
          std::to_string(mt.dim));
  return rep;
}

Report verify_scalar_nonvanishing(const ModuleTruncation& mt) {
  Report rep;
  bool mu_ok = true, beta_ok = true;
  std::string mu_bad, beta_bad;
  for (std::size_t ni = 0; ni < mt.nodes.size(); ++ni) {
    const GammaNode& nd = mt.nodes[ni];
    if (nd.level() > mt.level - 1) continue;
    if (mt.scalars[ni][kMu] == 0) {
      mu_ok = false;
      mu_bad = ktype_str(mt.label(ni));
    }
    if (nd.l < mt.lambda.n0() && mt.scalars[ni][kBeta] == 0) {
      beta_ok = false;
      beta_bad = ktype_str(mt.label(ni));
    }
  }
  rep.add("module/mu-nonvanishing", mu_ok, "mu != 0 at every solved K-type",
          mu_ok ? "confirmed" : "mu = 0 at " + mu_bad);
  rep.add("module/beta-nonvanishing", beta_ok,
          "beta != 0 wherever the (n+1, m-1) neighbor exists",
          beta_ok ? "confirmed" : "beta = 0 at " + beta_bad);
  return rep;
}

Report verify_casimir_scalar(const ModuleTruncation& mt) {
  Report rep;
  UEnvElement omega = casimir_g();
  bool ok = true;
  bool have = false;
  Q scalar(0);
  for (std::size_t idx = 0; idx < mt.dim && ok; ++idx) {
    if (level_of(mt, idx) > mt.level - 2) continue;
    ModuleVec img = apply_poly(mt, omega, ModuleVec{{idx, Q(1)}});
    Q c = value_at(img, idx);
    ModuleVec rest = mv_sub(img, ModuleVec{{idx, c}});
    if (!rest.empty()) {
      ok = false;
      break;
    }
    if (!have) {
      scalar = c;
      have = true;
    } else if (c != scalar) {
      ok = false;
    }
  }
  rep.add("module/casimir-infinitesimal-character", ok,
          "Casimir of g acts by one scalar on levels <= t-2",
          ok ? "scalar " + q_str(scalar) : "not scalar");
  return rep;
}

std::string truncation_to_json(const ModuleTruncation& mt) {
  nlohmann::ordered_json j;
  j["lambda"] = {mt.lambda.l1, mt.lambda.l2};
  j["level"] = mt.level;
  j["scalars"] = nlohmann::ordered_json::array();
  for (std::size_t ni = 0; ni < mt.nodes.size(); ++ni) {
    if (mt.nodes[ni].level() > mt.level - 1) continue;
    nlohmann::ordered_json entry;
    KTypeLabel lab = mt.label(ni);
    entry["ktype"] = {lab.n, lab.m};
    for (int s = 0; s < kNumScalars; ++s)
      entry[kScalarNames[s]] = q_str(mt.scalars[ni][s]);
    j["scalars"].push_back(entry);
  }
  j["dim"] = mt.dim;
  return j.dump(2) + "\n";
}

ModuleTruncation truncation_from_json(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  LambdaParam lam(j.at("lambda").at(0).get<long>(),
                  j.at("lambda").at(1).get<long>());
  int t = j.at("level").get<int>();
  ModuleTruncation a = make_shape(lam, t);
  std::size_t pos = 0;
  const auto& sc = j.at("scalars");
  for (std::size_t ni = 0; ni < a.nodes.size(); ++ni) {
    if (a.nodes[ni].level() > t - 1) continue;
    if (pos >= sc.size()) throw std::runtime_error("module cache truncated");
    const auto& entry = sc.at(pos++);
    KTypeLabel lab = a.label(ni);
    if (entry.at("ktype").at(0).get<long>() != lab.n ||
        entry.at("ktype").at(1).get<long>() != lab.m)
      throw std::runtime_error("module cache K-type order mismatch");
    for (int s = 0; s < kNumScalars; ++s)
      a.scalars[ni][s] = q_parse(entry.at(kScalarNames[s]).get<std::string>());
  }
  if (pos != sc.size()) throw std::runtime_error("module cache has extra entries");
  if (j.at("dim").get<std::size_t>() != a.dim)
    throw std::runtime_error("module cache dimension mismatch");
  build_matrices(a);
  return a;
}

ModuleTruncation load_or_build(const LambdaParam& lam, int t,
                               const std::string& cache_dir) {
  if (cache_dir.empty()) return build_truncation(lam, t);
  std::filesystem::path dir(cache_dir);
  std::filesystem::path file =
      dir / ("zt_" + std::to_string(lam.l1) + "_" + std::to_string(lam.l2) +
             "_t" + std::to_string(t) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return truncation_from_json(ss.str());
  }
  ModuleTruncation mt = build_truncation(lam, t);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(file);
  out << truncation_to_json(mt);
  return mt;
}

}  // namespace so41kit
