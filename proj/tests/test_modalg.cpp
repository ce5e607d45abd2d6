#include "doctest.h"

#include <random>

#include "hcp/error.hpp"
#include "hcp/modalg.hpp"

using hcp::AlgebraModule;
using hcp::Field;
using hcp::Matrix;

namespace {

AlgebraModule c2_regular(const Field& f) {
  return {f, 2, {Matrix::from_ints(f, {{0, 1}, {1, 0}})}};
}

AlgebraModule trivial(const Field& f, std::size_t gens) {
  return {f, 1, std::vector<Matrix>(gens, Matrix::identity(f, 1))};
}

// Permutation module of S_n on n points for the generators (1 2) and (1 2 ... n).
AlgebraModule perm_module(const Field& f, std::size_t n) {
  Matrix t(f, n, n), c(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i < 2 ? 1 - i : i) = 1;
    c(i, (i + 1) % n) = 1;
  }
  return {f, n, {t, c}};
}

AlgebraModule random_module(const Field& f, std::size_t dim, std::size_t gens,
                            std::mt19937_64& rng, bool sparse) {
  std::vector<Matrix> g;
  for (std::size_t k = 0; k < gens; ++k) {
    Matrix a(f, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        // Sparse upper block structure makes reducible modules common.
        if (!sparse || j >= i || rng() % 4 == 0) a(i, j) = rng() % f.order();
    g.push_back(a);
  }
  return {f, dim, std::move(g)};
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix a(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rng() % f.order();
    if (hcp::rank(a) == n) return a;
  }
}

std::vector<std::size_t> factor_dims(const std::vector<hcp::CompositionFactor>& cf) {
  std::vector<std::size_t> d;
  for (const auto& c : cf)
    for (std::size_t k = 0; k < c.multiplicity; ++k) d.push_back(c.module.dim());
  return d;
}

}  // namespace

TEST_CASE("spin") {
  Field f2 = Field::prime(2);
  auto m = c2_regular(f2);
  CHECK(hcp::spin(m, Matrix(f2, 1, 2)).basis.rows() == 0);
  CHECK(hcp::spin(m, Matrix::identity(f2, 2)).basis.rows() == 2);
  auto s = hcp::spin(m, Matrix::from_ints(f2, {{1, 1}}));
  CHECK(s.basis == Matrix::from_ints(f2, {{1, 1}}));
  CHECK(hcp::spin(m, s.basis).basis == s.basis);
  CHECK(hcp::is_submodule(m, s.basis));
  CHECK_FALSE(hcp::is_submodule(m, Matrix::from_ints(f2, {{1, 0}})));
}

TEST_CASE("meataxe examples") {
  Field f2 = Field::prime(2), f3 = Field::prime(3);
  CHECK(hcp::meataxe_irreducible(trivial(f2, 2), 0).irreducible);
  auto r = hcp::meataxe_irreducible(c2_regular(f2), 0);
  CHECK_FALSE(r.irreducible);
  REQUIRE(r.witness);
  CHECK(r.witness->basis == Matrix::from_ints(f2, {{1, 1}}));
  CHECK_FALSE(hcp::meataxe_irreducible(c2_regular(f3), 0).irreducible);
  CHECK_THROWS_AS(hcp::meataxe_irreducible(AlgebraModule(f2, 0, {}), 0), hcp::InvalidInput);

  // Deleted permutation module of S_4 over GF(3) is 3-dim irreducible.
  auto p4 = perm_module(f3, 4);
  auto cf = hcp::composition_factors(p4);
  CHECK(factor_dims(cf) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("non-split irreducible modules raise, and splitting resolves them") {
  // Multiplication by a primitive element of GF(4) on GF(2)^2.
  Field f2 = Field::prime(2);
  AlgebraModule m(f2, 2, {Matrix::from_ints(f2, {{0, 1}, {1, 1}})});
  CHECK(hcp::meataxe_irreducible(m, 0, {.require_split = false}).irreducible);
  CHECK_THROWS_AS(hcp::meataxe_irreducible(m, 0), hcp::NonSplit);
  CHECK(hcp::exhaustive_irreducible(m).irreducible);
  auto cf = hcp::split_composition_factors(m);
  REQUIRE(cf.size() == 2);
  CHECK(cf[0].module.field().order() == 4);
  CHECK(cf[0].module.dim() == 1);
  CHECK(cf[1].module.dim() == 1);
}

TEST_CASE("meataxe agrees with exhaustive search") {
  std::mt19937_64 rng(2024);
  int reducible = 0, irreducible = 0;
  for (std::uint32_t p : {2u, 3u}) {
    Field f = Field::prime(p);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t dim = 1 + rng() % 6;
      auto m = random_module(f, dim, 1 + rng() % 2, rng, trial % 2 == 0);
      auto ex = hcp::exhaustive_irreducible(m);
      auto mt = hcp::meataxe_irreducible(m, trial, {.exhaustive_dim = 0, .require_split = false});
      CAPTURE(dim);
      CHECK(ex.irreducible == mt.irreducible);
      if (!mt.irreducible) {
        CHECK(hcp::is_submodule(m, mt.witness->basis));
        CHECK(mt.witness->basis.rows() > 0);
        CHECK(mt.witness->basis.rows() < dim);
        ++reducible;
      } else {
        ++irreducible;
      }
    }
  }
  CHECK(reducible > 20);
  CHECK(irreducible > 20);
}

TEST_CASE("meataxe is conclusive on split semisimple modules without fallback") {
  // Every algebra element has distinct linear eigenvalues, so the linear part
  // of each characteristic polynomial has several factors.
  Field f = Field::prime(3);
  hcp::AlgebraModule swap(f, 2, {Matrix::from_ints(f, {{0, 1}, {1, 0}})});
  auto r = hcp::meataxe_irreducible(swap, 0, {.exhaustive_dim = 0});
  CHECK_FALSE(r.irreducible);
  CHECK(r.witness->basis.rows() == 1);
  Field f5 = Field::prime(5);
  hcp::AlgebraModule diag(f5, 3, {Matrix::from_ints(f5, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})});
  CHECK_FALSE(hcp::meataxe_irreducible(diag, 1, {.exhaustive_dim = 0}).irreducible);
}

TEST_CASE("composition factors") {
  Field f2 = Field::prime(2), f3 = Field::prime(3);
  auto cf = hcp::composition_factors(c2_regular(f2));
  REQUIRE(cf.size() == 1);
  CHECK(cf[0].module.dim() == 1);
  CHECK(cf[0].multiplicity == 2);

  auto p4 = perm_module(f3, 4);
  auto irr = hcp::quotient_action(p4, hcp::spin(p4, Matrix::from_ints(f3, {{1, 1, 1, 1}})).basis);
  auto twice = hcp::composition_factors(hcp::direct_sum(irr, irr));
  REQUIRE(twice.size() == 1);
  CHECK(twice[0].multiplicity == 2);
  CHECK(hcp::module_iso(twice[0].module, irr).has_value());

  // S_5 permutation module over GF(5): 1 and 3 factors of the heart, trivial twice.
  auto p5 = perm_module(Field::prime(5), 5);
  auto cf5 = hcp::composition_factors(p5);
  CHECK(factor_dims(cf5) == std::vector<std::size_t>{1, 1, 3});
}

TEST_CASE("composition factors are invariant under basis change and generator order") {
  std::mt19937_64 rng(99);
  Field f3 = Field::prime(3);
  auto m = hcp::direct_sum(perm_module(f3, 4), perm_module(f3, 3));
  auto base = hcp::composition_factors(m, 1);
  auto moved = m.rebased(random_invertible(f3, m.dim(), rng));
  AlgebraModule swapped(f3, m.dim(), {m.generator(1), m.generator(0)});
  auto a = hcp::composition_factors(moved, 5);
  auto b = hcp::composition_factors(swapped, 9);
  REQUIRE(a.size() == base.size());
  REQUIRE(b.size() == base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(a[i].multiplicity == base[i].multiplicity);
    CHECK(b[i].multiplicity == base[i].multiplicity);
    CHECK(hcp::module_iso(a[i].module, base[i].module).has_value());
    AlgebraModule back(f3, b[i].module.dim(), {b[i].module.generator(1), b[i].module.generator(0)});
    bool found = false;
    for (const auto& c : base) found |= hcp::module_iso(back, c.module).has_value();
    CHECK(found);
  }
}

TEST_CASE("hom spaces") {
  Field f2 = Field::prime(2);
  auto h = hcp::hom_space(c2_regular(f2), trivial(f2, 1));
  CHECK(h.dimension() == 1);
  CHECK(hcp::hom_space(trivial(f2, 1), trivial(f2, 1)).dimension() == 1);
  CHECK(hcp::hom_space(c2_regular(f2), c2_regular(f2)).dimension() == 2);

  Field f3 = Field::prime(3);
  auto p4 = perm_module(f3, 4);
  // End of the S_4 permutation module over GF(3) has dimension = #orbits on pairs = 2.
  CHECK(hcp::hom_space(p4, p4).dimension() == 2);
}

TEST_CASE("hom space against the brute-force linear system") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Field f = Field::prime(trial % 2 ? 3 : 2);
    const std::size_t dm = 1 + rng() % 4;
    auto m = random_module(f, dm, 2, rng, true);
    auto n = trial % 3 == 0 ? m : random_module(f, 1 + rng() % 4, 2, rng, true);
    const std::size_t dn = n.dim();
    // Unknown F (dm x dn) flattened; equations A F - F B = 0.
    const std::size_t u = dm * dn;
    Matrix sys(f, 0, u);
    for (std::size_t g = 0; g < 2; ++g)
      for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
          std::vector<Field::Elem> row(u, 0);
          for (std::size_t k = 0; k < dm; ++k)
            row[k * dn + j] = f.add(row[k * dn + j], m.generator(g)(i, k));
          for (std::size_t k = 0; k < dn; ++k)
            row[i * dn + k] = f.sub(row[i * dn + k], n.generator(g)(k, j));
          sys.append_row(row);
        }
    const std::size_t expected = u - hcp::rank(sys);
    auto h = hcp::hom_space(m, n);
    CHECK(h.dimension() == expected);
    for (const auto& b : h.basis)
      for (std::size_t g = 0; g < 2; ++g) CHECK(m.generator(g) * b == b * n.generator(g));
    auto moved = m.rebased(random_invertible(f, dm, rng));
    CHECK(hcp::hom_space(moved, n).dimension() == expected);
  }
}

TEST_CASE("module isomorphism") {
  Field f5 = Field::prime(5);
  AlgebraModule a(f5, 1, {Matrix::from_ints(f5, {{3}})});
  AlgebraModule b(f5, 1, {Matrix::from_ints(f5, {{4}})});
  CHECK_FALSE(hcp::module_iso(a, b).has_value());
  CHECK(hcp::module_iso(a, a).has_value());
  CHECK_FALSE(hcp::module_iso(a, c2_regular(f5)).has_value());

  std::mt19937_64 rng(1);
  auto p = perm_module(f5, 4);
  Matrix c = random_invertible(f5, 4, rng);
  auto q = p.rebased(c);
  auto iso = hcp::module_iso(p, q);
  REQUIRE(iso);
  for (std::size_t g = 0; g < 2; ++g) CHECK(p.generator(g) * *iso == *iso * q.generator(g));
}

TEST_CASE("scalar extension follows the Conway embedding") {
  Field f4 = Field::make(2, 2), f16 = Field::make(2, 4);
  auto image = hcp::embed_field(f4, f16);
  for (Field::Elem a = 0; a < 4; ++a)
    for (Field::Elem b = 0; b < 4; ++b) {
      CHECK(image[f4.mul(a, b)] == f16.mul(image[a], image[b]));
      CHECK(image[f4.add(a, b)] == f16.add(image[a], image[b]));
    }
  CHECK_THROWS_AS(hcp::embed_field(Field::make(2, 2), Field::make(2, 3)), hcp::InvalidInput);
}
