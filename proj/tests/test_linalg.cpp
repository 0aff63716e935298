#include <random>

#include "doctest.h"
#include "so41kit/linalg.hpp"

using namespace so41kit;

TEST_SUITE("linalg") {

TEST_CASE("rank and kernel of a rank-one matrix") {
  SparseMatrix m(2, 2);
  m.set(0, 0, Q(1));
  m.set(0, 1, Q(2));
  m.set(1, 0, Q(2));
  m.set(1, 1, Q(4));
  CHECK(rank(m) == 1);

  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Q(-2));
  CHECK(ker[0][1] == Q(1));

  auto img = m.apply(ker[0]);
  CHECK(img[0] == 0);
  CHECK(img[1] == 0);
}

TEST_CASE("solve_linear reports consistency and kernel dimension") {
  SparseMatrix m(2, 3);
  m.set(0, 0, Q(1));
  m.set(0, 2, Q(1));
  m.set(1, 1, Q(2));

  auto res = solve_linear(m, {Q(3), Q(4)});
  REQUIRE(res.consistent);
  CHECK(res.null_dim == 1);
  auto img = m.apply(res.solution);
  CHECK(img[0] == Q(3));
  CHECK(img[1] == Q(4));

  SparseMatrix bad(2, 1);
  bad.set(0, 0, Q(1));
  bad.set(1, 0, Q(2));
  auto none = solve_linear(bad, {Q(1), Q(3)});
  CHECK_FALSE(none.consistent);
}

TEST_CASE("rank-nullity on random sparse matrices") {
  std::mt19937 rng(555019u);
  std::uniform_int_distribution<int> dim(1, 12), val(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (val(rng) > 3) {
          Q q(val(rng), den(rng));
          q.canonicalize();
          m.set(i, j, q);
        }
    std::size_t rk = rank(m);
    CHECK(rk + kernel_basis(m).size() == c);
    // Modular rank never exceeds the rational rank.
    auto rp = rank_mod(m, 2147483647ull);
    REQUIRE(rp.has_value());
    CHECK(*rp <= rk);
    for (const auto& k : kernel_basis(m)) {
      auto img = m.apply(k);
      for (const auto& x : img) CHECK(x == 0);
    }
  }
}

TEST_CASE("modular rank matches the exact rank on small matrices") {
  SparseMatrix m(3, 3);
  m.set(0, 0, Q(1, 2));
  m.set(1, 1, Q(-3));
  m.set(2, 2, Q(7, 5));
  CHECK(rank(m) == 3);
  CHECK(rank_mod(m, 2147483647ull) == 3);
  CHECK(rank_mod(m, 2147483629ull) == 3);
}

TEST_CASE("full rank certificate") {
  SparseMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, Q(1));
  auto cert = full_rank_certificate(id);
  CHECK(cert.full_rank);
  CHECK(cert.observed == 3);
  CHECK(cert.target == 3);

  SparseMatrix deg(2, 2);
  deg.set(0, 0, Q(1));
  deg.set(0, 1, Q(2));
  deg.set(1, 0, Q(2));
  deg.set(1, 1, Q(4));
  auto bad = full_rank_certificate(deg);
  CHECK_FALSE(bad.full_rank);
  CHECK(bad.observed == 1);
  CHECK(bad.target == 2);
}

TEST_CASE("append_row and nnz bookkeeping") {
  SparseMatrix m(0, 4);
  m.append_row({{0, Q(1)}, {3, Q(-2)}});
  m.append_row({{1, Q(5)}});
  CHECK(m.rows() == 2);
  CHECK(m.nnz() == 3);
  CHECK(m.get(0, 3) == Q(-2));
  CHECK(m.get(1, 0) == 0);
  CHECK(rank(m) == 2);
}

}  // TEST_SUITE
