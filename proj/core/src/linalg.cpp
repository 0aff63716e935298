#include "so41kit/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace so41kit {

void SparseMatrix::set(std::size_t i, std::size_t j, const Q& v) {
  if (v == 0)
    rows_[i].erase(j);
  else
    rows_[i][j] = v;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Q& v) {
  if (v == 0) return;
  auto it = rows_[i].find(j);
  if (it == rows_[i].end()) {
    rows_[i][j] = v;
  } else {
    it->second += v;
    if (it->second == 0) rows_[i].erase(it);
  }
}

Q SparseMatrix::get(std::size_t i, std::size_t j) const {
  auto it = rows_[i].find(j);
  return it == rows_[i].end() ? Q(0) : it->second;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseMatrix::append_row(const std::map<std::size_t, Q>& r) {
  rows_.push_back(r);
  ++nrows_;
}

std::vector<Q> SparseMatrix::apply(const std::vector<Q>& x) const {
  std::vector<Q> y(nrows_, Q(0));
  for (std::size_t i = 0; i < nrows_; ++i)
    for (const auto& [j, v] : rows_[i]) y[i] += v * x[j];
  return y;
}

namespace {

// Row echelon form on sparse rational rows. Pivot rule: lowest usable column,
// first row in index order — fully deterministic. Returns pivot (row, col)
// pairs; `rows` is left in echelon form with unit pivots and eliminated
// pivot columns above and below (reduced form).
std::vector<std::pair<std::size_t, std::size_t>> rref(
    std::vector<std::map<std::size_t, Q>>& rows, std::size_t ncols) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t pr = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      auto it = rows[i].begin();
      if (it != rows[i].end() && it->first == c) {
        pr = i;
        break;
      }
    }
    if (pr == rows.size()) continue;
    std::swap(rows[r], rows[pr]);
    Q inv = 1 / rows[r].begin()->second;
    for (auto& [j, v] : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      auto it = rows[i].find(c);
      if (it == rows[i].end()) continue;
      Q f = it->second;
      for (const auto& [j, v] : rows[r]) {
        auto jt = rows[i].find(j);
        if (jt == rows[i].end()) {
          rows[i][j] = -f * v;
        } else {
          jt->second -= f * v;
          if (jt->second == 0) rows[i].erase(jt);
        }
      }
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

std::vector<std::map<std::size_t, Q>> copy_rows(const SparseMatrix& m) {
  std::vector<std::map<std::size_t, Q>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  return rows;
}

constexpr std::uint64_t kP1 = 2147483647ULL;  // 2^31 - 1
constexpr std::uint64_t kP2 = 2147483629ULL;

inline std::uint64_t mod_mersenne31(std::uint64_t x) {
  x = (x & kP1) + (x >> 31);
  x = (x & kP1) + (x >> 31);
  return x >= kP1 ? x - kP1 : x;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (__uint128_t)r * b % p;
    b = (__uint128_t)b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);  // p prime
}

// Reduce a rational mod p; nullopt when the denominator vanishes mod p.
std::optional<std::uint64_t> q_mod(const Q& q, std::uint64_t p) {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class nm = num % pz;
  if (nm < 0) nm += pz;
  mpz_class dm = den % pz;
  if (dm == 0) return std::nullopt;
  std::uint64_t n = nm.get_ui(), d = dm.get_ui();
  return (__uint128_t)n * inv_mod(d, p) % p;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  auto rows = copy_rows(m);
  return rref(rows, m.cols()).size();
}

std::vector<std::vector<Q>> kernel_basis(const SparseMatrix& m) {
  auto rows = copy_rows(m);
  auto pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto& [r, c] : pivots) is_pivot[c] = true;
  std::vector<std::vector<Q>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Q> v(m.cols(), Q(0));
    v[f] = 1;
    for (auto& [r, c] : pivots) {
      auto it = rows[r].find(f);
      if (it != rows[r].end()) v[c] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve_linear(const SparseMatrix& m, const std::vector<Q>& rhs) {
  // Eliminate on [m | rhs]; the rhs occupies a virtual column m.cols().
  std::size_t bc = m.cols();
  auto rows = copy_rows(m);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rhs[i] != 0) rows[i][bc] = rhs[i];
  auto pivots = rref(rows, m.cols());
  SolveResult res;
  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (!rows[i].empty()) return res;  // leftover rhs: inconsistent
  res.consistent = true;
  res.solution.assign(m.cols(), Q(0));
  for (auto& [r, c] : pivots) {
    auto it = rows[r].find(bc);
    if (it != rows[r].end()) res.solution[c] = it->second;
  }
  res.null_dim = m.cols() - pivots.size();
  return res;
}

std::optional<std::size_t> rank_mod(const SparseMatrix& m, std::uint64_t p) {
  std::size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  std::vector<std::uint64_t> a(nr * nc, 0);
  for (std::size_t i = 0; i < nr; ++i)
    for (const auto& [j, v] : m.row(i)) {
      auto r = q_mod(v, p);
      if (!r) return std::nullopt;
      a[i * nc + j] = *r;
    }
  const bool mers = (p == kP1);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < nc && rk < nr; ++c) {
    std::size_t pr = nr;
    for (std::size_t i = rk; i < nr; ++i)
      if (a[i * nc + c]) {
        pr = i;
        break;
      }
    if (pr == nr) continue;
    if (pr != rk)
      for (std::size_t j = c; j < nc; ++j)
        std::swap(a[pr * nc + j], a[rk * nc + j]);
    std::uint64_t inv = inv_mod(a[rk * nc + c], p);
    const std::uint64_t* prow = &a[rk * nc];
    for (std::size_t i = rk + 1; i < nr; ++i) {
      std::uint64_t* row = &a[i * nc];
      std::uint64_t f = row[c];
      if (!f) continue;
      // multiplier g = f / pivot, so that row[j] -= g * prow[j]
      std::uint64_t g = (std::uint64_t)((__uint128_t)f * inv % p);
      if (!g) continue;
      std::uint64_t ng = p - g;
      if (mers) {
        for (std::size_t j = c; j < nc; ++j)
          row[j] = mod_mersenne31(row[j] + mod_mersenne31(ng * prow[j]));
      } else {
        for (std::size_t j = c; j < nc; ++j)
          row[j] = (row[j] + (__uint128_t)ng * prow[j] % p) % p;
      }
    }
    ++rk;
  }
  return rk;
}

RankCertificate full_rank_certificate(const SparseMatrix& m) {
  RankCertificate cert;
  cert.target = std::min(m.rows(), m.cols());
  auto r1 = rank_mod(m, kP1);
  if (r1) {
    cert.observed = *r1;
    if (*r1 == cert.target) {
      cert.full_rank = true;
      return cert;
    }
  }
  auto r2 = rank_mod(m, kP2);
  if (r2) {
    cert.observed = std::max(cert.observed, *r2);
    if (*r2 == cert.target) {
      cert.full_rank = true;
      return cert;
    }
  }
  if (!r1 && !r2) {
    cert.observed = rank(m);
    cert.full_rank = (cert.observed == cert.target);
  }
  return cert;
}

}  // namespace so41kit
