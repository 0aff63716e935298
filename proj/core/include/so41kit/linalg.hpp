#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "so41kit/rational.hpp"

namespace so41kit {

// Sparse exact rational matrix. Rows are ordered maps column -> value; zero
// entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix() : nrows_(0), ncols_(0) {}
  SparseMatrix(std::size_t rows, std::size_t cols)
      : nrows_(rows), ncols_(cols), rows_(rows) {}

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }

  void set(std::size_t i, std::size_t j, const Q& v);
  void add(std::size_t i, std::size_t j, const Q& v);
  Q get(std::size_t i, std::size_t j) const;
  const std::map<std::size_t, Q>& row(std::size_t i) const { return rows_[i]; }

  std::size_t nnz() const;
  void append_row(const std::map<std::size_t, Q>& r);

  std::vector<Q> apply(const std::vector<Q>& x) const;  // m * x

 private:
  std::size_t nrows_, ncols_;
  std::vector<std::map<std::size_t, Q>> rows_;
};

// Exact rank over Q (plain rational elimination).
std::size_t rank(const SparseMatrix& m);

// Exact basis of the right null space; size = cols - rank.
std::vector<std::vector<Q>> kernel_basis(const SparseMatrix& m);

struct SolveResult {
  bool consistent = false;
  std::vector<Q> solution;   // one exact solution when consistent
  std::size_t null_dim = 0;  // dimension of the solution space's kernel
};

// Solve m x = rhs. Reports inconsistency; when consistent returns a
// particular solution (free variables set to 0) and the null-space dimension.
SolveResult solve_linear(const SparseMatrix& m, const std::vector<Q>& rhs);

// Rank over Z/p. Returns nullopt when some denominator is divisible by p.
// rank_mod(m, p) <= rank(m) always holds, so a full modular rank certifies
// full rational rank.
std::optional<std::size_t> rank_mod(const SparseMatrix& m, std::uint64_t p);

struct RankCertificate {
  bool full_rank = false;
  std::size_t observed = 0;  // modular rank witnessed (or exact when used)
  std::size_t target = 0;    // min(rows, cols)
};

// Certify rank(m) == min(rows, cols) via two fixed primes, with an exact
// fallback for small matrices if both modular attempts are unusable.
RankCertificate full_rank_certificate(const SparseMatrix& m);

}  // namespace so41kit
