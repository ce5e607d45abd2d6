#include "hcp/modalg.hpp"

#include <algorithm>
#include <random>

#include "hcp/error.hpp"
#include "hcp/polynomial.hpp"

namespace hcp {

AlgebraModule::AlgebraModule(Field f, std::size_t dim, std::vector<Matrix> generators)
    : field_(std::move(f)), dim_(dim), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.field() != field_) throw InvalidInput("module generator over a different field");
    if (g.rows() != dim_ || g.cols() != dim_)
      throw InvalidInput("module generator has wrong size");
  }
}

AlgebraModule AlgebraModule::transposed() const {
  std::vector<Matrix> t;
  t.reserve(gens_.size());
  for (const auto& g : gens_) t.push_back(g.transpose());
  return {field_, dim_, std::move(t)};
}

AlgebraModule AlgebraModule::rebased(const Matrix& change) const {
  auto inv = inverse(change);
  if (!inv) throw InvalidInput("change of basis is singular");
  std::vector<Matrix> g;
  g.reserve(gens_.size());
  for (const auto& a : gens_) g.push_back(change * a * *inv);
  return {field_, dim_, std::move(g)};
}

std::vector<Field::Elem> embed_field(const Field& small, const Field& big) {
  if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0)
    throw InvalidInput("field is not a subfield");
  std::vector<Field::Elem> image(small.order());
  if (small.is_prime_field()) {
    for (Field::Elem a = 0; a < small.order(); ++a) image[a] = a;
    return image;
  }
  // Root of the small modulus inside big; the Conway-compatible choice first.
  const auto& m = small.modulus();
  auto is_root = [&](Field::Elem r) {
    Field::Elem acc = 0;
    for (std::size_t k = m.size(); k-- > 0;) acc = big.add(big.mul(acc, r), m[k]);
    return acc == 0;
  };
  Field::Elem root = big.pow(big.primitive_element(),
                             (big.order() - 1) / (small.order() - 1));
  if (!is_root(root)) {
    root = 0;
    for (Field::Elem r = 1; r < big.order() && root == 0; ++r)
      if (is_root(r)) root = r;
    if (root == 0) throw Error("no embedding found");
  }
  for (Field::Elem a = 0; a < small.order(); ++a) {
    auto c = small.coefficients(a);
    Field::Elem acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = big.add(big.mul(acc, root), c[k]);
    image[a] = acc;
  }
  return image;
}

AlgebraModule AlgebraModule::extend_scalars(const Field& big) const {
  const auto image = embed_field(field_, big);
  std::vector<Matrix> g;
  for (const auto& a : gens_) {
    std::vector<Field::Elem> codes;
    codes.reserve(a.codes().size());
    for (auto c : a.codes()) codes.push_back(image[c]);
    g.push_back(Matrix::from_codes(big, dim_, dim_, std::move(codes)));
  }
  return {big, dim_, std::move(g)};
}

AlgebraModule direct_sum(const AlgebraModule& a, const AlgebraModule& b) {
  if (a.field() != b.field() || a.num_generators() != b.num_generators())
    throw InvalidInput("direct sum of incompatible modules");
  const std::size_t n = a.dim() + b.dim();
  std::vector<Matrix> g;
  for (std::size_t i = 0; i < a.num_generators(); ++i) {
    Matrix m(a.field(), n, n);
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = a.generator(i)(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c)
        m(a.dim() + r, a.dim() + c) = b.generator(i)(r, c);
    g.push_back(std::move(m));
  }
  return {a.field(), n, std::move(g)};
}

SubmoduleWitness spin(const AlgebraModule& m, const Matrix& seeds) {
  EchelonBasis basis(m.field(), m.dim());
  std::vector<std::vector<Field::Elem>> queue;
  for (std::size_t r = 0; r < seeds.rows(); ++r) {
    std::vector<Field::Elem> v(seeds.row(r).begin(), seeds.row(r).end());
    if (basis.insert(v)) queue.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < queue.size() && !basis.full(); ++k) {
    for (const auto& g : m.generators()) {
      auto w = g.apply(queue[k]);
      if (basis.insert(w)) queue.push_back(std::move(w));
      if (basis.full()) break;
    }
  }
  return {basis.matrix()};
}

bool is_submodule(const AlgebraModule& m, const Matrix& basis) {
  Echelon e = rref(basis);
  for (const auto& g : m.generators()) {
    Matrix img = e.form * g;
    Matrix both = e.form.vstack(img);
    if (rank(both) != e.rank) return false;
  }
  return true;
}

AlgebraModule submodule_action(const AlgebraModule& m, const Matrix& basis) {
  Echelon e = rref(basis);
  std::vector<Matrix> g;
  for (const auto& a : m.generators()) g.push_back(coordinates_in(e, e.form * a));
  return {m.field(), e.rank, std::move(g)};
}

AlgebraModule quotient_action(const AlgebraModule& m, const Matrix& basis) {
  const Field& f = m.field();
  Echelon e = rref(basis);
  const std::size_t d = m.dim();
  std::vector<bool> is_pivot(d, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t k = free_cols.size();
  std::vector<Matrix> g;
  for (const auto& a : m.generators()) {
    Matrix out(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Field::Elem> v(a.row(free_cols[i]).begin(), a.row(free_cols[i]).end());
      for (std::size_t r = 0; r < e.rank; ++r) {
        const Field::Elem c = v[e.pivots[r]];
        if (c) f.axpy(v.data(), e.form.row(r).data(), f.neg(c), d);
      }
      for (std::size_t j = 0; j < k; ++j) out(i, j) = v[free_cols[j]];
    }
    g.push_back(std::move(out));
  }
  return {f, k, std::move(g)};
}

namespace {

Matrix single_row(const Field& f, std::span<const Field::Elem> v) {
  Matrix r(f, 0, v.size());
  r.append_row(v);
  return r;
}

Matrix random_algebra_element(const AlgebraModule& m, std::mt19937_64& rng) {
  const Field& f = m.field();
  const std::size_t g = m.num_generators();
  Matrix x(f, m.dim(), m.dim());
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    const int len = 1 + static_cast<int>(rng() % 4);
    Matrix w = m.generator(rng() % g);
    for (int k = 1; k < len; ++k) w = w * m.generator(rng() % g);
    Field::Elem c = 1 + static_cast<Field::Elem>(rng() % (f.order() - 1));
    x = x + w.scaled(c);
  }
  const Field::Elem shift = static_cast<Field::Elem>(rng() % f.order());
  for (std::size_t i = 0; i < m.dim(); ++i) x(i, i) = f.add(x(i, i), shift);
  return x;
}

std::optional<SubmoduleWitness> proper_spin(const AlgebraModule& m,
                                            std::span<const Field::Elem> v) {
  auto s = spin(m, single_row(m.field(), v));
  if (s.basis.rows() < m.dim()) return s;
  return std::nullopt;
}

// Submodule of m annihilated by an invariant subspace of the transposed module.
SubmoduleWitness annihilator(const Matrix& dual_sub) { return {nullspace(dual_sub)}; }

}  // namespace

IrreducibilityResult exhaustive_irreducible(const AlgebraModule& m) {
  if (m.dim() == 0) throw InvalidInput("irreducibility of the zero module");
  const Field& f = m.field();
  const std::size_t d = m.dim();
  // Projective points: leading nonzero coordinate equal to one.
  std::vector<Field::Elem> v(d, 0);
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    const std::size_t tail = d - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < tail; ++k) count *= f.order();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t k = 0; k < tail; ++k) {
        v[lead + 1 + k] = static_cast<Field::Elem>(t % f.order());
        t /= f.order();
      }
      if (auto s = proper_spin(m, v)) return {false, std::move(s)};
    }
  }
  return {true, std::nullopt};
}

IrreducibilityResult meataxe_irreducible(const AlgebraModule& m, std::uint64_t seed,
                                         const MeataxeOptions& opts) {
  const std::size_t d = m.dim();
  if (d == 0) throw InvalidInput("irreducibility of the zero module");
  if (d == 1) return {true, std::nullopt};
  const Field& f = m.field();
  if (m.num_generators() == 0) {
    Matrix e(f, 1, d);
    e(0, 0) = 1;
    return {false, SubmoduleWitness{e}};
  }
  const AlgebraModule dual = m.transposed();
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + d);
  const long max_factor_degree = std::min<long>(static_cast<long>(d), 12);

  for (int sample = 0; sample < opts.max_samples; ++sample) {
    Matrix x = sample < static_cast<int>(m.num_generators())
                   ? m.generator(static_cast<std::size_t>(sample))
                   : random_algebra_element(m, rng);
    const Polynomial cp = characteristic_polynomial(x);
    const auto parts = distinct_degree_parts(cp, max_factor_degree);
    for (std::size_t k0 = 0; k0 < parts.size(); ++k0) {
      const long k = static_cast<long>(k0) + 1;
      const Polynomial& part = parts[k0];
      if (part.degree() < k) continue;
      const auto factors = part.degree() == k
                               ? std::vector<Polynomial>{part}
                               : equal_degree_factors(part, k, rng());
      for (const auto& p : factors) {
        const Matrix n = p.evaluate(x);
        const Matrix kernel = left_nullspace(n);
        if (kernel.rows() == 0) continue;
        if (auto s = proper_spin(m, kernel.row(0))) return {false, std::move(s)};
        if (kernel.rows() != static_cast<std::size_t>(k)) continue;
        const Matrix dual_kernel = nullspace(n);
        if (auto s = proper_spin(dual, dual_kernel.row(0)))
          return {false, annihilator(s->basis)};
        if (k > 1 && opts.require_split) {
          const std::size_t endo = hom_space(m, m).dimension();
          if (endo > 1) throw NonSplit(static_cast<unsigned>(endo));
        }
        return {true, std::nullopt};
      }
    }
  }
  std::uint64_t points = 1;
  for (std::size_t k = 0; k < d && points <= (1u << 20); ++k) points *= f.order();
  if (d <= opts.exhaustive_dim && points <= (1u << 20)) {
    auto r = exhaustive_irreducible(m);
    if (r.irreducible && opts.require_split) {
      const std::size_t endo = hom_space(m, m).dimension();
      if (endo > 1) throw NonSplit(static_cast<unsigned>(endo));
    }
    return r;
  }
  throw Error("meataxe inconclusive after " + std::to_string(opts.max_samples) + " samples");
}

namespace {

void series_into(const AlgebraModule& m, std::uint64_t seed, std::vector<AlgebraModule>& out) {
  if (m.dim() == 0) return;
  auto r = meataxe_irreducible(m, seed);
  if (r.irreducible) {
    out.push_back(m);
    return;
  }
  series_into(submodule_action(m, r.witness->basis), seed + 1, out);
  series_into(quotient_action(m, r.witness->basis), seed + 2, out);
}

// Simple modules of equal dimension are isomorphic iff a nonzero
// homomorphism exists.
bool simples_isomorphic(const AlgebraModule& a, const AlgebraModule& b) {
  return a.dim() == b.dim() && hom_space(a, b).dimension() > 0;
}

}  // namespace

std::vector<AlgebraModule> composition_series(const AlgebraModule& m, std::uint64_t seed) {
  if (m.dim() > 200) throw SizeLimit("composition factors limited to dimension 200");
  std::vector<AlgebraModule> out;
  series_into(m, seed, out);
  return out;
}

std::vector<CompositionFactor> composition_factors(const AlgebraModule& m, std::uint64_t seed) {
  std::vector<CompositionFactor> classes;
  for (auto& s : composition_series(m, seed)) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const CompositionFactor& c) {
      return simples_isomorphic(c.module, s);
    });
    if (it != classes.end())
      ++it->multiplicity;
    else
      classes.push_back({std::move(s), 1});
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const CompositionFactor& a, const CompositionFactor& b) {
                     return a.module.dim() < b.module.dim();
                   });
  return classes;
}

std::vector<CompositionFactor> split_composition_factors(const AlgebraModule& m,
                                                         std::uint64_t seed) {
  AlgebraModule cur = m;
  for (;;) {
    try {
      return composition_factors(cur, seed);
    } catch (const NonSplit& e) {
      const std::uint32_t degree = cur.field().degree() * e.endo_degree();
      if (degree > 6) throw;
      cur = cur.extend_scalars(Field::make(cur.field().characteristic(), degree));
    }
  }
}

HomSpace hom_space(const AlgebraModule& m, const AlgebraModule& n) {
  if (m.field() != n.field()) throw InvalidInput("hom space between different fields");
  if (m.num_generators() != n.num_generators())
    throw InvalidInput("hom space between modules with different generator counts");
  const Field& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), g = m.num_generators();
  if (dm == 0 || dn == 0) return {};

  // Seeds: standard vectors that generate m as a module, found greedily.
  std::vector<std::size_t> seeds;
  {
    EchelonBasis span(f, dm);
    std::vector<std::vector<Field::Elem>> queue;
    std::size_t processed = 0;
    for (std::size_t c = 0; c < dm && !span.full(); ++c) {
      std::vector<Field::Elem> e(dm, 0);
      e[c] = 1;
      if (!span.insert(e)) continue;
      seeds.push_back(c);
      queue.push_back(std::move(e));
      for (; processed < queue.size() && !span.full(); ++processed)
        for (const auto& a : m.generators()) {
          auto w = a.apply(queue[processed]);
          if (span.insert(w)) queue.push_back(std::move(w));
        }
    }
  }

  // Unknowns: images of the seeds, concatenated.  Every spun basis vector b_j
  // has image w * phi[j] for a (|seeds| dn) x dn matrix phi[j].
  const std::size_t unknowns = seeds.size() * dn;
  EchelonBasis span(f, dm, true);
  std::vector<std::vector<Field::Elem>> basis;
  std::vector<Matrix> phi;
  Matrix sol = Matrix::identity(f, unknowns);

  auto apply_constraint = [&](const Matrix& c) {
    Matrix kc = sol * c;
    if (kc.is_zero()) return;
    Matrix z = left_nullspace(kc);
    sol = z * sol;
  };

  std::size_t processed = 0;
  for (std::size_t t = 0; t < seeds.size(); ++t) {
    std::vector<Field::Elem> e(dm, 0);
    e[seeds[t]] = 1;
    if (!span.insert(e)) throw Error("hom_space: seed replay diverged");
    Matrix sel(f, unknowns, dn);
    for (std::size_t k = 0; k < dn; ++k) sel(t * dn + k, k) = 1;
    basis.push_back(std::move(e));
    phi.push_back(std::move(sel));
    for (; processed < basis.size(); ++processed) {
      for (std::size_t i = 0; i < g; ++i) {
        auto w = m.generator(i).apply(basis[processed]);
        Matrix image = phi[processed] * n.generator(i);
        if (span.insert(w)) {
          basis.push_back(std::move(w));
          phi.push_back(std::move(image));
          continue;
        }
        if (sol.rows() == 0) continue;
        const auto coeffs = span.express(std::move(w));
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          if (coeffs[k] == 0) continue;
          image = image - phi[k].scaled(coeffs[k]);
        }
        apply_constraint(image);
      }
    }
  }
  if (basis.size() != dm) throw Error("hom_space: seeds do not generate the module");

  Matrix p(f, 0, dm);
  for (const auto& b : basis) p.append_row(b);
  const Matrix pinv = *inverse(p);
  HomSpace out;
  for (std::size_t s = 0; s < sol.rows(); ++s) {
    Matrix fb(f, dm, dn);
    for (std::size_t j = 0; j < dm; ++j) {
      auto row = phi[j].apply(sol.row(s));
      std::copy(row.begin(), row.end(), fb.row(j).begin());
    }
    out.basis.push_back(pinv * fb);
  }
  return out;
}

std::optional<Matrix> module_iso(const AlgebraModule& m, const AlgebraModule& n,
                                 std::uint64_t seed) {
  if (m.field() != n.field()) throw InvalidInput("iso test between different fields");
  if (m.dim() != n.dim() || m.num_generators() != n.num_generators()) return std::nullopt;
  const Field& f = m.field();
  if (m.dim() == 0) return Matrix(f, 0, 0);
  const HomSpace h = hom_space(m, n);
  if (h.basis.empty()) return std::nullopt;
  for (const auto& b : h.basis)
    if (rank(b) == m.dim()) return b;
  std::mt19937_64 rng(seed ^ 0xA5A5A5A5ull);
  auto combine = [&](const std::vector<Field::Elem>& c) {
    Matrix x(f, m.dim(), m.dim());
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k]) x = x + h.basis[k].scaled(c[k]);
    return x;
  };
  std::vector<Field::Elem> c(h.basis.size());
  for (int trial = 0; trial < 48; ++trial) {
    for (auto& x : c) x = static_cast<Field::Elem>(rng() % f.order());
    Matrix x = combine(c);
    if (rank(x) == m.dim()) return x;
  }
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < h.basis.size() && total <= (1u << 16); ++k) total *= f.order();
  if (total <= (1u << 16)) {
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (auto& x : c) {
        x = static_cast<Field::Elem>(t % f.order());
        t /= f.order();
      }
      Matrix x = combine(c);
      if (rank(x) == m.dim()) return x;
    }
  }
  return std::nullopt;
}

}  // namespace hcp
