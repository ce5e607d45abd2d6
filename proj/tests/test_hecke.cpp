#include "doctest.h"

#include "hcp/error.hpp"
#include "hcp/hecke.hpp"

using hcp::CoxeterType;
using hcp::Field;
using hcp::HeckeAlgebra;
using hcp::HeckeModule;
using hcp::Matrix;

namespace {

std::vector<std::vector<Field::Elem>> all_params(const CoxeterType& t, const Field& f) {
  const auto cls = t.reflection_classes();
  const std::size_t n = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::vector<Field::Elem>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<Field::Elem>> next;
    for (const auto& p : out)
      for (Field::Elem q = 1; q < f.order(); ++q) {
        auto v = p;
        v.push_back(q);
        next.push_back(v);
      }
    out = next;
  }
  return out;
}

std::vector<hcp::ParabolicSubset> subsets(unsigned rank) {
  std::vector<hcp::ParabolicSubset> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    hcp::ParabolicSubset j;
    for (unsigned s = 0; s < rank; ++s)
      if (mask >> s & 1) j.push_back(s);
    out.push_back(j);
  }
  return out;
}

}  // namespace

TEST_CASE("construction") {
  auto h = hcp::hecke_make(CoxeterType::parse("A1"), Field::prime(2), {1});
  CHECK(h.dim() == 2);
  auto ts = h.word({0});
  CHECK(ts * ts == h.one());
  CHECK(hcp::hecke_make(CoxeterType::parse("A2"), Field::prime(3), {2}).dim() == 6);
  CHECK(hcp::hecke_make(CoxeterType::parse("B2"), Field::prime(2), {1, 1}).dim() == 8);
  CHECK_THROWS_AS(hcp::hecke_make(CoxeterType::parse("A1"), Field::prime(3), {0}),
                  hcp::InvalidInput);
  CHECK_THROWS_AS(hcp::hecke_make(CoxeterType::parse("B2"), Field::prime(3), {1}),
                  hcp::InvalidInput);
}

TEST_CASE("multiplication law") {
  Field f3 = Field::prime(3);
  auto h = hcp::hecke_make(CoxeterType::parse("A1"), f3, {2});
  auto ts = h.word({0});
  CHECK(ts * ts == ts + h.one().scaled(2));
  auto a2 = hcp::hecke_make(CoxeterType::parse("A2"), f3, {2});
  for (const auto& w : a2.elements()) CHECK(a2.one() * a2.basis(w) == a2.basis(w));
  CHECK(a2.word({0}) * a2.word({1}) == a2.basis(a2.group().reduce({0, 1})));
  CHECK_THROWS_AS(h.one() * a2.one(), hcp::InvalidInput);
}

TEST_CASE("associativity and quadratic relations on basis triples") {
  for (const char* name : {"A1", "A2", "A3", "A1xA1", "B2", "A1xA2"}) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      Field f = Field::prime(p);
      auto t = CoxeterType::parse(name);
      auto params = all_params(t, f);
      // Two parameter choices per field keeps this quick; criterion runs cover the rest.
      for (std::size_t pi = 0; pi < params.size(); pi += std::max<std::size_t>(1, params.size() / 2)) {
        auto h = hcp::hecke_make(t, f, params[pi]);
        CAPTURE(name);
        CAPTURE(p);
        const auto& el = h.elements();
        bool assoc = true;
        for (const auto& x : el)
          for (const auto& y : el)
            for (const auto& z : el) {
              auto a = h.basis(x), b = h.basis(y), c = h.basis(z);
              assoc &= (a * b) * c == a * (b * c);
            }
        CHECK(assoc);
        for (unsigned s = 0; s < t.rank(); ++s) {
          auto ts = h.word({s});
          const auto q = h.param(s);
          CHECK(ts * ts == ts.scaled(f.sub(q, 1)) + h.one().scaled(q));
        }
        // Reduced words multiply without lower terms.
        for (const auto& w : el) CHECK(h.word(h.group().reduced_word(w)) == h.basis(w));
      }
    }
  }
}

TEST_CASE("q = 1 gives the group algebra") {
  auto h = hcp::hecke_make(CoxeterType::parse("B2"), Field::prime(5), {1, 1});
  const auto& g = h.group();
  for (const auto& x : h.elements())
    for (const auto& y : h.elements()) CHECK(h.basis(x) * h.basis(y) == h.basis(g.multiply(x, y)));
}

TEST_CASE("parabolic subalgebras") {
  auto h = hcp::hecke_make(CoxeterType::parse("A2"), Field::prime(3), {2});
  auto full = hcp::parabolic_subalgebra(h, {0, 1});
  CHECK_FALSE(full.proper());
  CHECK(full.sub.dim() == 6);
  auto one = hcp::parabolic_subalgebra(h, {0});
  CHECK(one.sub.dim() == 2);
  CHECK(one.proper());
  auto a1 = hcp::hecke_make(CoxeterType::parse("A1"), Field::prime(3), {2});
  CHECK(hcp::parabolic_subalgebra(a1, {}).sub.dim() == 1);

  // The embedding is an injective algebra morphism.
  auto hb = hcp::hecke_make(CoxeterType::parse("B3"), Field::prime(5), {2, 3});
  auto emb = hcp::parabolic_subalgebra(hb, {0, 2});
  CHECK(emb.sub.type().to_string() == "B1xA1");
  CHECK(emb.sub.param(0) == 2);
  CHECK(emb.sub.param(1) == 3);
  for (const auto& x : emb.sub.elements())
    for (const auto& y : emb.sub.elements()) {
      auto a = emb.sub.basis(x), b = emb.sub.basis(y);
      CHECK(emb.embed(a * b) == emb.embed(a) * emb.embed(b));
    }
}

TEST_CASE("module relations are checked") {
  Field f3 = Field::prime(3);
  auto h = hcp::hecke_make(CoxeterType::parse("A1"), f3, {2});
  CHECK_THROWS_AS(HeckeModule(h, {Matrix::from_ints(f3, {{1}})}), hcp::InvalidInput);
  HeckeModule ok(h, {Matrix::from_ints(f3, {{2}})});
  CHECK(ok.dim() == 1);
  auto a2 = hcp::hecke_make(CoxeterType::parse("A2"), f3, {1});
  // An involution next to the identity breaks the braid relation of A2.
  CHECK_THROWS_AS(HeckeModule(a2, {Matrix::from_ints(f3, {{0, 1}, {1, 0}}),
                                   Matrix::identity(f3, 2)}),
                  hcp::InvalidInput);
  auto reg = hcp::regular_module(a2);
  // T_e rho(T_w) = T_w in the regular module.
  for (std::size_t i = 0; i < a2.dim(); ++i) {
    auto r = reg.action_of(a2.elements()[i]);
    std::vector<Field::Elem> e(a2.dim(), 0);
    e[0] = 1;
    CHECK(r.apply(e) == a2.basis(a2.elements()[i]).coeffs());
  }
}

TEST_CASE("induction examples") {
  Field f2 = Field::prime(2);
  auto h = hcp::hecke_make(CoxeterType::parse("A1"), f2, {1});
  auto emb = hcp::parabolic_subalgebra(h, {});
  HeckeModule triv(emb.sub, 1, {});
  auto ind = hcp::induce_module(emb, triv);
  CHECK(ind.dim() == 2);
  CHECK_FALSE(hcp::hecke_simple_check(ind).simple);
  auto cf = hcp::composition_factors(ind.as_module());
  REQUIRE(cf.size() == 1);
  CHECK(cf[0].multiplicity == 2);
  // Induction from the trivial subgroup is the regular module.
  CHECK(hcp::module_iso(ind.as_module(), hcp::regular_module(h).as_module()).has_value());

  Field f3 = Field::prime(3);
  auto a2 = hcp::hecke_make(CoxeterType::parse("A2"), f3, {2});
  auto e1 = hcp::parabolic_subalgebra(a2, {0});
  HeckeModule m(e1.sub, {Matrix::from_ints(f3, {{2}})});
  CHECK(hcp::induce_module(e1, m).dim() == 3);
  CHECK_THROWS_AS(hcp::induce_module(e1, hcp::regular_module(a2)), hcp::InvalidInput);
}

TEST_CASE("simple checks and simple modules") {
  Field f2 = Field::prime(2), f3 = Field::prime(3), f5 = Field::prime(5);
  auto s2 = hcp::hecke_make(CoxeterType::parse("A1"), f2, {1});
  auto reg = hcp::regular_module(s2);
  auto chk = hcp::hecke_simple_check(reg);
  CHECK_FALSE(chk.simple);
  REQUIRE(chk.witness);
  CHECK(*chk.witness == Matrix::from_ints(f2, {{1, 1}}));
  CHECK(hcp::hecke_simple_check(hcp::linear_module(s2, {false})).simple);
  CHECK_FALSE(hcp::hecke_simple_check(
                  hcp::regular_module(hcp::hecke_make(CoxeterType::parse("A1"), f3, {1})))
                  .simple);

  CHECK(hcp::hecke_simples(s2).size() == 1);
  CHECK(hcp::hecke_simples(hcp::hecke_make(CoxeterType::parse("A1"), f3, {2})).size() == 1);
  auto two = hcp::hecke_simples(hcp::hecke_make(CoxeterType::parse("A1"), f5, {3}));
  REQUIRE(two.size() == 2);
  CHECK_FALSE(hcp::module_iso(two[0].as_module(), two[1].as_module()).has_value());
  CHECK_THROWS_AS(hcp::hecke_simples(hcp::hecke_make(CoxeterType::parse("B3"), f3, {1, 1})),
                  hcp::SizeLimit);
  // S_3 over GF(3): the trivial and sign characters only.
  auto s3 = hcp::hecke_simples(hcp::hecke_make(CoxeterType::parse("A2"), f3, {1}));
  CHECK(s3.size() == 2);
  // S_3 over GF(5): dimensions 1, 1, 2.
  auto s3_5 = hcp::hecke_simples(hcp::hecke_make(CoxeterType::parse("A2"), f5, {1}));
  REQUIRE(s3_5.size() == 3);
  CHECK(s3_5[2].dim() == 2);
}

TEST_CASE("Frobenius reciprocity and the identity embedding") {
  for (const char* name : {"A1", "A2", "A1xA1", "B2", "A3"}) {
    for (std::uint32_t p : {2u, 3u}) {
      Field f = Field::prime(p);
      auto t = CoxeterType::parse(name);
      for (const auto& params : all_params(t, f)) {
        auto h = hcp::hecke_make(t, f, params);
        auto simples = hcp::hecke_simples(h);
        for (const auto& j : subsets(t.rank())) {
          auto emb = hcp::parabolic_subalgebra(h, j);
          auto sub_simples = hcp::hecke_simples(emb.sub);
          for (const auto& m : sub_simples) {
            if (m.owner().field() != f) continue;
            auto ind = hcp::induce_module(emb, m);
            CHECK(ind.dim() == m.dim() * h.dim() / emb.sub.dim());
            if (!emb.proper()) CHECK(hcp::module_iso(ind.as_module(), m.as_module()).has_value());
            for (const auto& n : simples) {
              if (n.owner().field() != f) continue;
              auto res = hcp::restrict_module(emb, n);
              CAPTURE(name);
              CHECK(hcp::hom_space(ind.as_module(), n.as_module()).dimension() ==
                    hcp::hom_space(m.as_module(), res.as_module()).dimension());
            }
          }
        }
      }
    }
  }
}
