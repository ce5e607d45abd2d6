#include "doctest.h"

#include <random>

#include "hcp/error.hpp"
#include "hcp/grouprep.hpp"

using hcp::AlgebraModule;
using hcp::Field;
using hcp::GLGroup;
using hcp::Matrix;
using hcp::Orientation;
using hcp::ParabolicDescription;

namespace {

Matrix random_element(const GLGroup& g, std::mt19937_64& rng, int len = 12) {
  Matrix x = Matrix::identity(g.field(), g.n());
  std::uniform_int_distribution<std::size_t> pick(0, g.generators().size() - 1);
  for (int i = 0; i < len; ++i) x = x * g.generators()[pick(rng)];
  return x;
}

bool isomorphic(const AlgebraModule& a, const AlgebraModule& b) {
  return a.dim() == b.dim() && hcp::module_iso(a, b).has_value();
}

}  // namespace

TEST_CASE("group orders and generation") {
  CHECK(GLGroup::make(2, 2).order() == 6);
  CHECK(GLGroup::make(2, 3).order() == 48);
  CHECK(GLGroup::make(3, 2).order() == 168);
  CHECK(GLGroup::make(3, 3).order() == 11232);
  CHECK(GLGroup::make(2, 4).order() == 180);
  CHECK(GLGroup::make_product({2, 1}, 3).order() == 96);
  CHECK_THROWS_AS(GLGroup::make(4, 3), hcp::SizeLimit);
  CHECK_THROWS_AS(GLGroup::make(2, 6), hcp::InvalidInput);
}

TEST_CASE("words reproduce group elements") {
  std::mt19937_64 rng(5);
  for (auto [blocks, q] : std::vector<std::pair<std::vector<unsigned>, std::uint64_t>>{
           {{2}, 3}, {{3}, 2}, {{1, 2}, 3}, {{2, 1, 1}, 2}, {{2}, 4}}) {
    const auto g = GLGroup::make_product(blocks, q);
    for (int t = 0; t < 20; ++t) {
      const Matrix x = random_element(g, rng);
      Matrix y = Matrix::identity(g.field(), g.n());
      for (auto i : g.word(x)) y = y * g.generators()[i];
      CHECK(y == x);
    }
  }
  const auto g = GLGroup::make_product({1, 1}, 3);
  Matrix off = Matrix::identity(g.field(), 2);
  off(0, 1) = 1;
  CHECK_FALSE(g.contains(off));
  CHECK_THROWS_AS(g.word(off), hcp::InvalidInput);
}

TEST_CASE("Weyl matrices form a homomorphism") {
  const auto g = GLGroup::make_product({3, 1}, 2);
  const hcp::CoxeterGroup w(g.weyl_type());
  const auto elems = w.enumerate();
  CHECK(elems.size() == 6);
  for (const auto& a : elems)
    for (const auto& b : elems) CHECK(g.weyl_matrix(w.multiply(a, b)) == g.weyl_matrix(a) * g.weyl_matrix(b));
}

TEST_CASE("representations evaluate on products") {
  const auto g = GLGroup::make(2, 3);
  const auto ps = hcp::principal_series(g, Field::prime(2));
  const hcp::Representation rho(g, ps.module);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const Matrix x = random_element(g, rng), y = random_element(g, rng);
    CHECK(rho(x * y) == rho(x) * rho(y));
  }
  CHECK(hcp::check_group_relations(g, ps.module));
}

TEST_CASE("parabolic validation and indices") {
  const auto g = GLGroup::make(3, 2);
  CHECK(hcp::parabolic_index(g, {{2, 1}}) == 7);
  CHECK(hcp::parabolic_index(g, {{1, 1, 1}}) == 21);
  CHECK(hcp::parabolic_index(g, {{3}}) == 1);
  CHECK(hcp::parabolic_index(GLGroup::make(2, 3), {{1, 1}}) == 4);
  CHECK(hcp::parabolic_index(GLGroup::make(3, 3), {{1, 2}}) == 13);
  CHECK_THROWS_AS(hcp::validate_parabolic(g, {{2, 2}}), hcp::InvalidInput);
  CHECK_THROWS_AS(hcp::validate_parabolic(GLGroup::make_product({2, 1}, 2), {{1, 2}}),
                  hcp::InvalidInput);
  CHECK_THROWS_AS(hcp::validate_parabolic(g, {{0, 3}}), hcp::InvalidInput);
}

TEST_CASE("coset transversals") {
  for (auto o : {Orientation::Upper, Orientation::Lower}) {
    const auto g = GLGroup::make(3, 2);
    for (const auto& comp : std::vector<std::vector<unsigned>>{{2, 1}, {1, 2}, {1, 1, 1}, {3}}) {
      const ParabolicDescription p{comp, o};
      const auto t = hcp::coset_transversal(g, p);
      CHECK(t.index() == hcp::parabolic_index(g, p));
      CHECK(t.reps[0].is_identity());
      // Every generator permutes the cosets.
      for (const auto& tg : t.target) {
        std::vector<bool> hit(t.index());
        for (auto j : tg) hit[j] = true;
        CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
      }
      // Levi components actually lie in the Levi.
      const auto l = hcp::levi(g, p);
      for (const auto& ls : t.levi)
        for (const auto& m : ls) CHECK(l.contains(m));
    }
  }
}

TEST_CASE("induction from the Borel is the permutation module") {
  for (auto [n, q, ell] : std::vector<std::tuple<unsigned, std::uint64_t, std::uint32_t>>{
           {2, 3, 2}, {2, 5, 3}, {3, 2, 3}, {2, 2, 3}}) {
    const auto g = GLGroup::make(n, q);
    const Field k = Field::prime(ell);
    const auto b = hcp::borel(g);
    const auto r = hcp::hc_induce(g, b, hcp::trivial_module(hcp::levi(g, b), k));
    CHECK(r.dim() == hcp::parabolic_index(g, b));
    CHECK(hcp::check_group_relations(g, r));
    // Number of B-double cosets equals |W| in every characteristic.
    CHECK(hcp::hom_space(r, r).dimension() == g.weyl_type().order());
  }
}

TEST_CASE("defining characteristic is rejected") {
  const auto g = GLGroup::make(2, 3);
  const auto b = hcp::borel(g);
  CHECK_THROWS_AS(hcp::hc_induce(g, b, hcp::trivial_module(hcp::levi(g, b), Field::prime(3))),
                  hcp::DefiningCharacteristic);
  CHECK_THROWS_AS(hcp::principal_series_hecke(g, Field::prime(3)), hcp::DefiningCharacteristic);
}

TEST_CASE("restriction examples") {
  const auto g = GLGroup::make(2, 3);
  const Field k = Field::prime(2);
  const auto b = hcp::borel(g);
  const auto t = hcp::levi(g, b);
  CHECK(hcp::hc_restrict(g, b, hcp::trivial_module(g, k)).dim() == 1);
  const auto r = hcp::hc_induce(g, b, hcp::trivial_module(t, k));
  const auto back = hcp::hc_restrict(g, b, r);
  CHECK(back.dim() == 2);
  CHECK(hcp::check_group_relations(t, back));
}

TEST_CASE("principal series endomorphisms match the Hecke algebra") {
  for (auto [n, q, ell] : std::vector<std::tuple<unsigned, std::uint64_t, std::uint32_t>>{
           {2, 3, 2}, {2, 5, 3}, {3, 2, 3}, {2, 2, 3}, {3, 2, 5}}) {
    const auto g = GLGroup::make(n, q);
    const Field k = Field::prime(ell);
    const auto ps = hcp::principal_series(g, k);
    const auto h = hcp::principal_series_hecke(g, k);
    REQUIRE(ps.endo.dimension() == h.dim());
    CHECK(ps.endo.labels == h.elements());
    for (std::size_t a = 0; a < h.dim(); ++a)
      for (std::size_t b = 0; b < h.dim(); ++b) {
        const auto prod = h.basis(h.elements()[a]) * h.basis(h.elements()[b]);
        CHECK(ps.endo.constants[a][b] == prod.coeffs());
        // The constants read off one pair describe the whole product matrix.
        Matrix sum(k, ps.module.dim(), ps.module.dim());
        for (std::size_t c = 0; c < h.dim(); ++c)
          sum = sum + ps.endo.basis[c].scaled(ps.endo.constants[a][b][c]);
        CHECK(sum == ps.endo.basis[a] * ps.endo.basis[b]);
      }
    // The orbital matrices commute with the group.
    for (const auto& m : ps.endo.basis)
      for (const auto& s : ps.module.generators()) CHECK(m * s == s * m);
  }
}

TEST_CASE("generic endomorphism algebra") {
  const auto g = GLGroup::make(2, 3);
  const Field k = Field::prime(2);
  const auto ps = hcp::principal_series(g, k);
  const auto e = hcp::endo_algebra(ps.module);
  CHECK(e.dimension() == 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Matrix sum(k, ps.module.dim(), ps.module.dim());
      for (std::size_t c = 0; c < 2; ++c) sum = sum + e.basis[c].scaled(e.constants[a][b][c]);
      CHECK(sum == e.basis[a] * e.basis[b]);
    }
}

TEST_CASE("cuspidal unipotent modules") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  auto c = hcp::find_cuspidal_unipotent(GLGroup::make(2, 3), f2);
  REQUIRE(c.size() == 1);
  CHECK(c[0].dim() == 2);
  c = hcp::find_cuspidal_unipotent(GLGroup::make(2, 5), f3);
  REQUIRE(c.size() == 1);
  CHECK(c[0].dim() == 4);
  c = hcp::find_cuspidal_unipotent(GLGroup::make(2, 2), f3);
  REQUIRE(c.size() == 1);
  CHECK(c[0].dim() == 1);
  // The torus is its own Levi: everything is cuspidal there.
  c = hcp::find_cuspidal_unipotent(GLGroup::make_product({1, 1}, 3), f2);
  CHECK(c.size() == 1);
  // GL_2(q) needs l | q + 1.
  CHECK_THROWS_AS(hcp::find_cuspidal_unipotent(GLGroup::make(2, 3), Field::prime(5)), hcp::Error);
}

TEST_CASE("outer tensor and block permutation") {
  const auto l = GLGroup::make_product({1, 2}, 3);
  const Field k = Field::prime(2);
  const auto cusp = hcp::find_cuspidal_unipotent(GLGroup::make(2, 3), k)[0];
  const auto x = hcp::outer_tensor(l, {hcp::trivial_module(GLGroup::make(1, 3), k), cusp});
  CHECK(x.dim() == 2);
  CHECK(hcp::check_group_relations(l, x));
  const auto swapped = hcp::permute_blocks(l, x, {1, 0});
  CHECK(hcp::check_group_relations(GLGroup::make_product({2, 1}, 3), swapped));
  CHECK_THROWS_AS(hcp::permute_blocks(l, x, {0, 0}), hcp::InvalidInput);
}

TEST_CASE("adjunction dimension identity") {
  const auto g = GLGroup::make(3, 2);
  const Field k = Field::prime(3);
  const auto ps = hcp::principal_series(g, k);
  const auto targets = hcp::composition_series(ps.module);
  for (const auto& comp : std::vector<std::vector<unsigned>>{{1, 1, 1}, {2, 1}, {1, 2}}) {
    const ParabolicDescription p{comp};
    const auto l = hcp::levi(g, p);
    const auto lb = hcp::borel(l);
    std::vector<AlgebraModule> xs{hcp::trivial_module(l, k)};
    for (const auto& f : hcp::composition_factors(hcp::hc_induce(l, lb, hcp::trivial_module(hcp::levi(l, lb), k))))
      xs.push_back(f.module);
    std::vector<AlgebraModule> ms = targets;
    ms.push_back(ps.module);
    for (const auto& x : xs)
      for (const auto& m : ms)
        CHECK(hcp::hom_space(hcp::hc_induce(g, p, x), m).dimension() ==
              hcp::hom_space(x, hcp::hc_restrict(g, p, m)).dimension());
  }
}

TEST_CASE("upper and lower parabolics induce isomorphic modules") {
  const auto g = GLGroup::make(3, 2);
  const Field k = Field::prime(3);
  for (const auto& comp : std::vector<std::vector<unsigned>>{{2, 1}, {1, 1, 1}}) {
    const auto l = GLGroup::make_product(comp, 2);
    for (const auto& f : hcp::composition_factors(hcp::principal_series(l, k).module)) {
      const auto up = hcp::hc_induce(g, ParabolicDescription{comp, Orientation::Upper}, f.module);
      const auto lo = hcp::hc_induce(g, ParabolicDescription{comp, Orientation::Lower}, f.module);
      CHECK(isomorphic(up, lo));
    }
  }
}

TEST_CASE("transitivity of induction") {
  const auto g = GLGroup::make(3, 2);
  const Field k = Field::prime(3);
  const auto t = GLGroup::make_product({1, 1, 1}, 2);
  const auto x = hcp::trivial_module(t, k);
  const auto direct = hcp::hc_induce(g, hcp::borel(g), x);
  for (const auto& comp : std::vector<std::vector<unsigned>>{{2, 1}, {1, 2}}) {
    const auto l = GLGroup::make_product(comp, 2);
    const auto mid = hcp::hc_induce(l, hcp::borel(l), x);
    CHECK(isomorphic(hcp::hc_induce(g, ParabolicDescription{comp}, mid), direct));
  }
  // Two-block group over GF(3) with a nontrivial cuspidal factor.
  const auto g3 = GLGroup::make(3, 3);
  const auto l3 = GLGroup::make_product({1, 2}, 3);
  const Field f2 = Field::prime(2);
  const auto cusp = hcp::find_cuspidal_unipotent(GLGroup::make(2, 3), f2)[0];
  const auto x3 = hcp::outer_tensor(l3, {hcp::trivial_module(GLGroup::make(1, 3), f2), cusp});
  const auto via_lower = hcp::hc_induce(g3, ParabolicDescription{{1, 2}, Orientation::Lower}, x3);
  CHECK(isomorphic(hcp::hc_induce(g3, ParabolicDescription{{1, 2}}, x3), via_lower));
}

TEST_CASE("torus Mackey count") {
  for (auto [n, q, ell] : std::vector<std::tuple<unsigned, std::uint64_t, std::uint32_t>>{
           {2, 3, 2}, {3, 2, 3}, {2, 5, 3}}) {
    const auto g = GLGroup::make(n, q);
    const Field k = Field::prime(ell);
    const auto b = hcp::borel(g);
    const auto t = hcp::levi(g, b);
    const auto r = hcp::hc_induce(g, b, hcp::trivial_module(t, k));
    CHECK(hcp::hc_restrict(g, b, r).dim() == g.weyl_type().order());
  }
}

TEST_CASE("series simples") {
  const auto g = GLGroup::make(2, 3);
  const Field k = Field::prime(2);
  const auto b = hcp::borel(g);
  const auto s = hcp::series_simples(g, b, hcp::trivial_module(hcp::levi(g, b), k));
  REQUIRE(s.size() == 1);
  CHECK(s[0].dim() == 1);
  const auto g3 = GLGroup::make(3, 3);
  const auto l = GLGroup::make_product({1, 2}, 3);
  const auto cusp = hcp::find_cuspidal_unipotent(GLGroup::make(2, 3), k)[0];
  const auto x = hcp::outer_tensor(l, {hcp::trivial_module(GLGroup::make(1, 3), k), cusp});
  const auto s3 = hcp::series_simples(g3, {{1, 2}}, x);
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].dim() == 26);
}

TEST_CASE("principal series diagram") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const auto g = GLGroup::make(2, 3);
  const auto t = GLGroup::make_product({1, 1}, 3);
  auto r = hcp::check_lemma1_diagram(g, {1, 1}, hcp::trivial_module(t, f2));
  CHECK(r.verdict == hcp::DiagramVerdict::Commutes);
  CHECK(r.path1_dim == 2);

  const auto g3 = GLGroup::make(3, 2);
  const auto l = GLGroup::make_product({2, 1}, 2);
  const auto lb = hcp::borel(l);
  const auto ys = hcp::series_simples(l, lb, hcp::trivial_module(hcp::levi(l, lb), f3));
  CHECK_FALSE(ys.empty());
  for (const auto& y : ys) {
    r = hcp::check_lemma1_diagram(g3, {2, 1}, y);
    CHECK(r.verdict == hcp::DiagramVerdict::Commutes);
  }
  // A cuspidal Y is invisible from the principal series.
  const auto cusp = hcp::find_cuspidal_unipotent(GLGroup::make(2, 2), f3)[0];
  const auto y = hcp::outer_tensor(l, {cusp, hcp::trivial_module(GLGroup::make(1, 2), f3)});
  CHECK(hcp::check_lemma1_diagram(g3, {2, 1}, y).verdict == hcp::DiagramVerdict::Degenerate);
}

TEST_CASE("Levi candidates") {
  const auto c = hcp::levis_containing({1, 2}, 3);
  REQUIRE(c.size() == 2);
  CHECK(c[0].composition == std::vector<unsigned>{1, 2});
  CHECK(c[1].composition == std::vector<unsigned>{2, 1});
  CHECK(c[1].l0_orders == std::vector<std::vector<unsigned>>{{1, 0}});
  const auto t = hcp::levis_containing({1, 1, 1}, 3);
  // [1,1,1], [2,1], [1,2].
  CHECK(t.size() == 3);
  CHECK(hcp::levis_containing({3}, 3).empty());
  CHECK_THROWS_AS(hcp::levis_containing({1, 1}, 3), hcp::InvalidInput);
}

TEST_CASE("oracle on small groups") {
  const Field k = Field::prime(2);
  const auto g = GLGroup::make(2, 3);
  const auto t = GLGroup::make_product({1, 1}, 3);
  const auto res = hcp::oracle_primitivity(g, {1, 1}, hcp::trivial_module(t, k));
  CHECK(res.simples.size() == 1);
  CHECK_FALSE(res.any_imprimitive());

  const auto g3 = GLGroup::make(3, 3);
  const auto l = GLGroup::make_product({1, 2}, 3);
  const auto cusp = hcp::find_cuspidal_unipotent(GLGroup::make(2, 3), k)[0];
  const auto x = hcp::outer_tensor(l, {hcp::trivial_module(GLGroup::make(1, 3), k), cusp});
  const auto res3 = hcp::oracle_primitivity(g3, {1, 2}, x);
  REQUIRE(res3.simples.size() == 1);
  CHECK(res3.simples[0].imprimitive);
  CHECK(res3.simples[0].witness_levi == std::vector<unsigned>{1, 2});
  CHECK(res3.simples[0].witness_dim == 2);
}
