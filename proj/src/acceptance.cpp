#include "hcp/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "hcp/classify.hpp"
#include "hcp/error.hpp"
#include "hcp/grouprep.hpp"
#include "hcp/hecke.hpp"
#include "hcp/modalg.hpp"

namespace hcp {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

CriterionResult timed(int id, std::string name, double limit, const std::function<Outcome()>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.limit = limit;
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.within_limit = r.seconds < limit;
  r.passed = o.ok && r.within_limit;
  r.detail = o.detail;
  if (!r.within_limit) r.detail += (r.detail.empty() ? "" : "; ") + std::string("over time budget");
  return r;
}

std::string comp_str(const std::vector<unsigned>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

struct DeskCase {
  unsigned n;
  std::uint64_t q;
  std::uint32_t l;
  std::string label() const {
    return "GL_" + std::to_string(n) + "(" + std::to_string(q) + ") l=" + std::to_string(l);
  }
};

std::vector<std::vector<unsigned>> compositions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<unsigned> c{1};
    for (unsigned g = 0; g + 1 < n; ++g) {
      if (mask >> g & 1)
        ++c.back();
      else
        c.push_back(1);
    }
    out.push_back(c);
  }
  return out;
}

AlgebraModule over(const AlgebraModule& m, const Field& f) {
  return m.field() == f ? m : m.extend_scalars(f);
}

Field common(const Field& a, const Field& b) { return a.degree() >= b.degree() ? a : b; }

std::vector<AlgebraModule> factor_modules(const AlgebraModule& m, std::uint64_t seed) {
  std::vector<AlgebraModule> out;
  for (auto& f : split_composition_factors(m, seed)) out.push_back(f.module);
  return out;
}

// Torus character sending every GL_1 generator to c.
AlgebraModule torus_character(const GLGroup& t, const Field& k, Field::Elem c) {
  Matrix m(k, 1, 1);
  m(0, 0) = c;
  return AlgebraModule(k, 1, std::vector<Matrix>(t.generators().size(), m));
}

}  // namespace

CriterionResult run_criterion_1(std::uint64_t) {
  return timed(1, "shape verdict vs normalizer equality", 1.0, [] {
    std::size_t shapes = 0, bad = 0;
    for (std::uint32_t l : {2u, 3u, 5u})
      for (unsigned e = 1; e <= 4; ++e)
        for (unsigned n = 1; n <= 12; ++n)
          for (const auto& s : enumerate_cuspidal_shapes(n, e, l)) {
            ++shapes;
            const auto v = shape_verdict(s);
            const auto eq = normalizer_equality_exists(s);
            const bool agree = (v.verdict == Verdict::Primitive) == !eq.has_value() &&
                               (!eq || v.witness == *eq);
            if (!agree) ++bad;
          }
    return Outcome{bad == 0, std::to_string(shapes) + " shapes, " + std::to_string(bad) +
                                 " disagreements"};
  });
}

CriterionResult run_criterion_2(std::uint64_t seed) {
  return timed(2, "induced Hecke modules are reducible", 60.0, [seed] {
    std::size_t checked = 0, counter = 0;
    std::string first;
    for (const char* ty : {"A1", "A2", "A3", "A1xA1", "B2"})
      for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto type = CoxeterType::parse(ty);
        const Field k = Field::prime(p);
        const auto cls = type.reflection_classes();
        const std::size_t nclass = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
        std::vector<std::vector<Field::Elem>> params{{}};
        for (std::size_t c = 0; c < nclass; ++c) {
          std::vector<std::vector<Field::Elem>> next;
          for (const auto& v : params)
            for (Field::Elem x = 1; x < k.order(); ++x) {
              auto w = v;
              w.push_back(x);
              next.push_back(w);
            }
          params = next;
        }
        for (const auto& par : params) {
          const HeckeAlgebra h(type, k, par);
          for (unsigned mask = 0; mask + 1 < (1u << type.rank()); ++mask) {
            ParabolicSubset j;
            for (unsigned s = 0; s < type.rank(); ++s)
              if (mask >> s & 1) j.push_back(s);
            const auto emb = parabolic_subalgebra(h, j);
            for (const auto& simple : hecke_simples(emb.sub, seed)) {
              const auto& f = simple.owner().field();
              const auto big_emb = f == k ? emb : parabolic_subalgebra(h.extend_scalars(f), j);
              const HeckeModule m(big_emb.sub, simple.dim(), simple.as_module().generators());
              const auto ind = induce_module(big_emb, m);
              ++checked;
              if (hecke_simple_check(ind, seed).simple) {
                ++counter;
                if (first.empty()) {
                  std::ostringstream os;
                  os << ty << " over GF(" << p << ") J=" << comp_str(j) << " dim " << simple.dim();
                  first = os.str();
                }
              }
            }
          }
        }
      }
    return Outcome{counter == 0, std::to_string(checked) + " induced modules, " +
                                     std::to_string(counter) + " counterexamples" +
                                     (first.empty() ? "" : " (first: " + first + ")")};
  });
}

CriterionResult run_criterion_3(std::uint64_t) {
  return timed(3, "principal series endomorphisms match the Hecke algebra", 30.0, [] {
    std::string detail;
    bool ok = true;
    for (const DeskCase& c : {DeskCase{2, 3, 2}, DeskCase{2, 5, 3}, DeskCase{3, 2, 3}}) {
      const auto g = GLGroup::make(c.n, c.q);
      const Field k = Field::prime(c.l);
      const auto ps = principal_series(g, k);
      const auto h = hecke_make(g.weyl_type(), k, {k.from_int(static_cast<std::int64_t>(c.q % c.l))});
      std::size_t mismatches = 0;
      const bool dim_ok = ps.endo.dimension() == h.dim() && endo_algebra(ps.module).dimension() == h.dim() &&
                          ps.endo.labels == h.elements();
      if (dim_ok) {
        for (std::size_t a = 0; a < h.dim(); ++a)
          for (std::size_t b = 0; b < h.dim(); ++b)
            if ((h.basis(h.elements()[a]) * h.basis(h.elements()[b])).coeffs() != ps.endo.constants[a][b])
              ++mismatches;
      }
      ok = ok && dim_ok && mismatches == 0;
      detail += (detail.empty() ? "" : "; ") + c.label() + ": dim " +
                std::to_string(ps.endo.dimension()) + ", " + std::to_string(mismatches) +
                " mismatched products";
    }
    return Outcome{ok, detail};
  });
}

CriterionResult run_criterion_4(std::uint64_t seed) {
  return timed(4, "Hecke module diagram commutes", 120.0, [seed] {
    std::string detail;
    bool ok = true;
    auto run = [&](const GLGroup& g, const std::vector<unsigned>& comp, const AlgebraModule& y,
                   const std::string& label) {
      const auto r = check_lemma1_diagram(g, comp, y, seed);
      const bool good = r.verdict == DiagramVerdict::Commutes;
      ok = ok && good;
      detail += (detail.empty() ? "" : "; ") + label + " dim Y " + std::to_string(y.dim()) + ": " +
                (good ? "commutes" : r.report);
    };
    {
      const auto g = GLGroup::make(2, 3);
      const Field k = Field::prime(2);
      const auto t = GLGroup::make_product({1, 1}, 3);
      const auto tb = borel(t);
      for (const auto& y : series_simples(t, tb, trivial_module(levi(t, tb), k), seed))
        run(g, {1, 1}, y, "GL_2(3) l=2 L=T");
    }
    {
      const auto g = GLGroup::make(3, 2);
      const Field k = Field::prime(3);
      const auto l = GLGroup::make_product({2, 1}, 2);
      const auto lb = borel(l);
      for (const auto& y : series_simples(l, lb, trivial_module(levi(l, lb), k), seed))
        run(g, {2, 1}, y, "GL_3(2) l=3 L=GL_2xGL_1");
    }
    return Outcome{ok, detail};
  });
}

CriterionResult run_criterion_5(std::uint64_t seed) {
  return timed(5, "classification agrees with the brute-force oracle", 300.0, [seed] {
    std::string detail;
    bool ok = true;
    struct Case {
      unsigned n;
      std::uint64_t q;
      std::uint32_t l;
      std::string shape;
      Verdict expected;
      std::vector<unsigned> witness;
    };
    for (const Case& c : {Case{2, 3, 2, "1^2", Verdict::Primitive, {}},
                          Case{3, 3, 2, "1^1+(1*2^1)^1", Verdict::Imprimitive, {1, 2}}}) {
      const GroupCase gc{GroupKind::GL, c.n, c.q, c.l};
      const auto e = multiplicative_order(c.q, c.l);
      const auto shape = parse_shape(c.shape, c.n, e, c.l);
      const auto v = is_primitive_unipotent(gc, shape);
      const bool classify_ok = v.verdict == c.expected && v.witness == c.witness;

      const Field k = Field::prime(c.l);
      const auto g = GLGroup::make(c.n, c.q);
      const auto l0 = shape.levi_blocks();
      const auto x0 = cuspidal_unipotent_product(shape.levi_blocks(), c.q, k, seed);
      const auto oracle = oracle_primitivity(g, l0, x0, seed);
      bool oracle_ok = !oracle.simples.empty();
      if (c.expected == Verdict::Primitive) {
        oracle_ok = oracle_ok && !oracle.any_imprimitive();
      } else {
        bool found = false;
        for (const auto& s : oracle.simples)
          if (s.imprimitive && s.witness_levi == c.witness) {
            // Reconfirm with the meataxe that the induced module is simple.
            auto ind = hc_induce(g, ParabolicDescription{c.witness}, over(x0, s.module.field()));
            found = meataxe_irreducible(ind, seed).irreducible;
          }
        oracle_ok = oracle_ok && found;
      }
      ok = ok && classify_ok && oracle_ok;
      detail += (detail.empty() ? "" : "; ") + std::string("GL_") + std::to_string(c.n) + "(" +
                std::to_string(c.q) + ") l=" + std::to_string(c.l) + " " + c.shape + ": " +
                to_string(v.verdict) + (v.witness.empty() ? "" : " " + comp_str(v.witness)) +
                ", oracle " + std::to_string(oracle.simples.size()) + " simple(s), " +
                (oracle.any_imprimitive() ? "imprimitive found" : "none imprimitive") +
                (classify_ok && oracle_ok ? "" : " MISMATCH");
    }
    return Outcome{ok, detail};
  });
}

CriterionResult run_criterion_6(std::uint64_t seed) {
  return timed(6, "Harish-Chandra functor laws", 60.0, [seed] {
    std::size_t adj = 0, par = 0, trans = 0, mackey = 0, bad = 0;
    std::string first;
    auto fail = [&](const std::string& what) {
      ++bad;
      if (first.empty()) first = what;
    };
    for (const DeskCase& c :
         {DeskCase{2, 3, 2}, DeskCase{2, 5, 3}, DeskCase{3, 2, 3}, DeskCase{3, 3, 2}}) {
      const auto g = GLGroup::make(c.n, c.q);
      const Field k = Field::prime(c.l);
      const auto b = borel(g);
      const auto t = levi(g, b);
      const auto ps = hc_induce(g, b, trivial_module(t, k));
      auto targets = factor_modules(ps, seed);
      targets.push_back(over(ps, targets[0].field()));

      std::vector<AlgebraModule> chars{trivial_module(t, k)};
      if (c.l != 2) chars.push_back(torus_character(t, k, k.neg(1)));

      for (const auto& comp : compositions(c.n)) {
        const ParabolicDescription p{comp};
        const auto l = levi(g, p);
        const auto lb = borel(l);
        std::vector<AlgebraModule> xs;
        for (const auto& ch : chars)
          for (const auto& f : factor_modules(hc_induce(l, lb, ch), seed)) xs.push_back(f);

        for (const auto& x : xs) {
          // Adjunction: Hom_G(R X, M) = Hom_L(X, *R M).
          for (const auto& m : targets) {
            const Field f = common(x.field(), m.field());
            const auto xf = over(x, f), mf = over(m, f);
            ++adj;
            if (hom_space(hc_induce(g, p, xf), mf).dimension() !=
                hom_space(xf, hc_restrict(g, p, mf)).dimension())
              fail(c.label() + " adjunction at " + comp_str(comp));
          }
          // Upper and lower parabolics.
          if (comp.size() > 1) {
            ++par;
            const auto up = hc_induce(g, ParabolicDescription{comp, Orientation::Upper}, x);
            const auto lo = hc_induce(g, ParabolicDescription{comp, Orientation::Lower}, x);
            if (!module_iso(up, lo, seed)) fail(c.label() + " upper/lower at " + comp_str(comp));
          }
        }
        // Transitivity through L.
        for (const auto& ch : chars) {
          ++trans;
          const auto direct = hc_induce(g, b, ch);
          const auto staged = hc_induce(g, p, hc_induce(l, lb, ch));
          if (!module_iso(direct, staged, seed)) fail(c.label() + " transitivity via " + comp_str(comp));
        }
      }
      // Mackey: *R^G_T R^G_T chi has dimension |W|.
      for (const auto& ch : chars) {
        ++mackey;
        if (hc_restrict(g, b, hc_induce(g, b, ch)).dim() != g.weyl_type().order())
          fail(c.label() + " torus Mackey count");
      }
    }
    return Outcome{bad == 0, std::to_string(adj) + " adjunction, " + std::to_string(par) +
                                 " orientation, " + std::to_string(trans) + " transitivity, " +
                                 std::to_string(mackey) + " Mackey checks, " + std::to_string(bad) +
                                 " failures" + (first.empty() ? "" : " (first: " + first + ")")};
  });
}

CriterionResult run_criterion_7(std::uint64_t seed) {
  return timed(7, "meataxe agrees with exhaustive search", 30.0, [seed] {
    std::vector<AlgebraModule> corpus;
    std::mt19937_64 rng(seed ^ 0x6d65617461786500ULL);
    auto random_change = [&](const Field& f, std::size_t d) {
      std::uniform_int_distribution<Field::Elem> pick(0, f.order() - 1);
      while (true) {
        Matrix c(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) c(i, j) = pick(rng);
        if (determinant(c) != 0) return c;
      }
    };
    auto add = [&](const AlgebraModule& m) {
      if (m.dim() == 0 || m.dim() > 6) return;
      corpus.push_back(m);
      corpus.push_back(m.rebased(random_change(m.field(), m.dim())));
    };

    // Hecke modules over GF(2) and GF(3).
    for (const char* ty : {"A1", "A2", "A1xA1", "B2"})
      for (std::uint32_t p : {2u, 3u}) {
        const auto type = CoxeterType::parse(ty);
        const Field k = Field::prime(p);
        const auto cls = type.reflection_classes();
        const std::size_t nclass = *std::max_element(cls.begin(), cls.end()) + 1;
        const std::size_t combos = nclass == 1 ? p - 1 : (p - 1) * (p - 1);
        for (std::size_t ci = 0; ci < combos; ++ci) {
          std::vector<Field::Elem> par{static_cast<Field::Elem>(1 + ci % (p - 1))};
          if (nclass == 2) par.push_back(static_cast<Field::Elem>(1 + ci / (p - 1)));
          const HeckeAlgebra h(type, k, par);
          add(regular_module(h).as_module());
          for (unsigned mask = 0; mask + 1 < (1u << type.rank()); ++mask) {
            ParabolicSubset j;
            for (unsigned s = 0; s < type.rank(); ++s)
              if (mask >> s & 1) j.push_back(s);
            const auto emb = parabolic_subalgebra(h, j);
            const auto sub_cls = emb.sub.type().reflection_classes();
            std::size_t sub_n = sub_cls.empty() ? 0 : *std::max_element(sub_cls.begin(), sub_cls.end()) + 1;
            for (unsigned signs = 0; signs < (1u << sub_n); ++signs) {
              std::vector<bool> sv;
              for (std::size_t c = 0; c < sub_n; ++c) sv.push_back(signs >> c & 1);
              add(induce_module(emb, linear_module(emb.sub, sv)).as_module());
            }
          }
        }
      }
    // Permutation modules of small groups and their direct sums of factors.
    for (const DeskCase& c : {DeskCase{2, 2, 3}, DeskCase{2, 3, 2}, DeskCase{2, 5, 2},
                              DeskCase{2, 5, 3}, DeskCase{2, 4, 3}}) {
      const auto g = GLGroup::make(c.n, c.q);
      const Field k = Field::prime(c.l);
      const auto b = borel(g);
      const auto ps = hc_induce(g, b, trivial_module(levi(g, b), k));
      add(ps);
      const auto factors = composition_factors(ps, seed);
      for (const auto& f : factors) add(f.module);
      for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i; j < factors.size(); ++j)
          add(direct_sum(factors[i].module, factors[j].module));
    }
    // Random modules with two or three generators.
    std::uniform_int_distribution<int> dimd(1, 6), ngen(2, 3);
    while (corpus.size() < 320) {
      const Field k = Field::prime(corpus.size() % 2 ? 2 : 3);
      const std::size_t d = static_cast<std::size_t>(dimd(rng));
      std::uniform_int_distribution<Field::Elem> pick(0, k.order() - 1);
      std::vector<Matrix> gens;
      const int ng = ngen(rng);
      for (int i = 0; i < ng; ++i) {
        Matrix a(k, d, d);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t s = 0; s < d; ++s) a(r, s) = pick(rng);
        gens.push_back(std::move(a));
      }
      corpus.emplace_back(k, d, std::move(gens));
    }

    std::size_t disagree = 0, bad_witness = 0, irreducible = 0;
    std::string first;
    MeataxeOptions opts;
    opts.require_split = false;
    opts.exhaustive_dim = 0;  // no fallback to the reference
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& m = corpus[i];
      const auto ref = exhaustive_irreducible(m);
      auto where = [&](const std::string& why) {
        ++disagree;
        if (first.empty())
          first = "module " + std::to_string(i) + " of dim " + std::to_string(m.dim()) + " over GF(" +
                  std::to_string(m.field().order()) + "): " + why;
      };
      IrreducibilityResult got;
      try {
        got = meataxe_irreducible(m, seed + i, opts);
      } catch (const Error& e) {
        where(e.what());
        continue;
      }
      if (got.irreducible != ref.irreducible) where("verdicts differ");
      if (ref.irreducible) ++irreducible;
      if (!got.irreducible) {
        const auto& w = got.witness->basis;
        if (w.rows() == 0 || w.rows() >= m.dim() || !is_submodule(m, w)) ++bad_witness;
      }
    }
    return Outcome{disagree == 0 && bad_witness == 0,
                   std::to_string(corpus.size()) + " modules (" + std::to_string(irreducible) +
                       " irreducible), " + std::to_string(disagree) + " disagreements, " +
                       std::to_string(bad_witness) + " bad witnesses" +
                       (first.empty() ? "" : " (first: " + first + ")")};
  });
}

std::vector<std::function<CriterionResult(std::uint64_t)>> all_criteria() {
  return {run_criterion_1, run_criterion_2, run_criterion_3, run_criterion_4,
          run_criterion_5, run_criterion_6, run_criterion_7};
}

std::string format_result(const CriterionResult& r) {
  char times[64];
  std::snprintf(times, sizeof times, "[%.2f s / %.0f s]", r.seconds, r.limit);
  return std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + " " +
         times + " " + r.detail;
}

}  // namespace hcp
