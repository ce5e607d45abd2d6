#include "doctest.h"

#include <random>

#include "hcp/matrix.hpp"

using hcp::Field;
using hcp::Matrix;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng,
                     std::size_t max_rank) {
  // Product of r x k and k x c factors bounds the rank by k.
  const std::size_t k = 1 + rng() % max_rank;
  Matrix a(f, r, k), b(f, k, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = rng() % f.order();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = rng() % f.order();
  return a * b;
}

}  // namespace

TEST_CASE("rref examples") {
  Field f2 = Field::prime(2);
  auto id = Matrix::identity(f2, 3);
  auto e = hcp::rref(id);
  CHECK(e.form == id);
  CHECK(e.rank == 3);

  Matrix z(f2, 2, 4);
  auto ez = hcp::rref(z);
  CHECK(ez.rank == 0);
  CHECK(ez.form.rows() == 0);
  CHECK(hcp::nullspace(z).rows() == 4);

  auto m = Matrix::from_ints(f2, {{1, 1}, {1, 1}});
  auto em = hcp::rref(m);
  CHECK(em.rank == 1);
  CHECK(em.form == Matrix::from_ints(f2, {{1, 1}}));
  CHECK(em.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("nullspace examples") {
  Field f3 = Field::prime(3);
  CHECK(hcp::nullspace(Matrix::identity(f3, 4)).rows() == 0);
  CHECK(hcp::nullspace(Matrix(f3, 2, 3)).rows() == 3);
  auto n = hcp::nullspace(Matrix::from_ints(f3, {{1, 1}}));
  CHECK(n == Matrix::from_ints(f3, {{1, 2}}));
}

TEST_CASE("randomized rank and nullspace properties") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u}) {
    Field f = Field::prime(p);
    for (int trial = 0; trial < 200; ++trial) {
      Matrix a = random_matrix(f, 6, 6, rng, 6), b = random_matrix(f, 6, 6, rng, 6);
      const auto ra = hcp::rank(a), rb = hcp::rank(b), rab = hcp::rank(a * b);
      CHECK(rab <= std::min(ra, rb));
      auto e = hcp::rref(a);
      CHECK(hcp::rref(e.form).form == e.form);
      auto n = hcp::nullspace(a);
      CHECK(n.rows() + ra == a.cols());
      CHECK((a * n.transpose()).is_zero());
      CHECK(hcp::rank(n) == n.rows());
      auto ln = hcp::left_nullspace(a);
      CHECK(ln.rows() + ra == a.rows());
      CHECK((ln * a).is_zero());
      if (ra == 6) {
        auto inv = hcp::inverse(a);
        REQUIRE(inv);
        CHECK((a * *inv).is_identity());
        CHECK(hcp::determinant(a) != 0);
      } else {
        CHECK_FALSE(hcp::inverse(a));
        CHECK(hcp::determinant(a) == 0);
      }
    }
  }
}

TEST_CASE("determinant is multiplicative over an extension field") {
  std::mt19937_64 rng(11);
  Field f = Field::make(2, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a = random_matrix(f, 4, 4, rng, 4), b = random_matrix(f, 4, 4, rng, 4);
    CHECK(hcp::determinant(a * b) == f.mul(hcp::determinant(a), hcp::determinant(b)));
  }
}

TEST_CASE("echelon basis expresses vectors in inserted order") {
  Field f = Field::prime(5);
  hcp::EchelonBasis basis(f, 3, true);
  CHECK(basis.insert({1, 2, 0}));
  CHECK_FALSE(basis.insert({2, 4, 0}));
  CHECK(basis.insert({0, 1, 1}));
  CHECK(basis.contains({1, 3, 1}));
  CHECK_FALSE(basis.contains({0, 0, 1}));
  // 2 (1,2,0) + 3 (0,1,1) = (2, 2, 3)
  auto c = basis.express({2, 2, 3});
  REQUIRE(c.size() >= 2);
  CHECK(c[0] == 2);
  CHECK(c[1] == 3);
  auto e = hcp::rref(basis.matrix());
  CHECK(e.rank == 2);
  auto coords = hcp::coordinates_in(e, Matrix::from_ints(f, {{2, 2, 3}}));
  CHECK((coords * e.form) == Matrix::from_ints(f, {{2, 2, 3}}));
}
