#include "hcp/grouprep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "hcp/error.hpp"

namespace hcp {

namespace {

// Elements of one GL_b(q) factor, as a Schreier tree from the identity.
struct BlockEnumeration {
  unsigned size = 0;
  std::vector<Matrix> gens;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::size_t> parent;
  std::vector<unsigned> via;  // element = element[parent] * gens[via]
};

void append_code(std::string& key, Field::Elem c) {
  key.push_back(static_cast<char>(c & 0xff));
  key.push_back(static_cast<char>((c >> 8) & 0xff));
}

std::string matrix_key(const Matrix& m) {
  std::string key;
  key.reserve(2 * m.codes().size());
  for (auto c : m.codes()) append_code(key, c);
  return key;
}

std::uint64_t gl_order(unsigned b, std::uint64_t q) {
  // prod (q^b - q^i), saturating just above kMaxOrder.
  constexpr std::uint64_t cap = GLGroup::kMaxOrder + 1;
  long double qb = std::pow(static_cast<long double>(q), b);
  if (qb > 4.0L * cap) return cap;
  std::uint64_t qbi = 1;
  for (unsigned i = 0; i < b; ++i) qbi *= q;
  std::uint64_t order = 1, qi = 1;
  for (unsigned i = 0; i < b; ++i) {
    order *= qbi - qi;
    if (order > cap) return cap;
    qi *= q;
  }
  return order;
}

std::vector<Matrix> block_generator_set(const Field& f, unsigned b, bool fallback) {
  const auto w = f.primitive_element();
  Matrix d = Matrix::identity(f, b);
  d(0, 0) = w;
  if (b == 1) return {d};
  Matrix c(f, b, b);
  for (unsigned i = 0; i < b; ++i) c(i, (i + 1) % b) = 1;
  Matrix u = Matrix::identity(f, b);
  u(0, 1) = 1;
  if (fallback) return {d, c, u};
  return {d * c, u};
}

std::shared_ptr<const BlockEnumeration> enumerate_block(const Field& f, unsigned b,
                                                        std::uint64_t expected) {
  for (bool fallback : {false, true}) {
    auto e = std::make_shared<BlockEnumeration>();
    e->size = b;
    e->gens = block_generator_set(f, b, fallback);
    std::vector<Matrix> elems{Matrix::identity(f, b)};
    e->index.emplace(matrix_key(elems[0]), 0);
    e->parent.push_back(0);
    e->via.push_back(0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (unsigned g = 0; g < e->gens.size(); ++g) {
        Matrix t = elems[i] * e->gens[g];
        auto [it, fresh] = e->index.emplace(matrix_key(t), elems.size());
        if (!fresh) continue;
        elems.push_back(std::move(t));
        e->parent.push_back(i);
        e->via.push_back(g);
      }
    }
    if (elems.size() == expected) return e;
  }
  throw Error("generators of GL_" + std::to_string(b) + "(" + std::to_string(f.order()) +
              ") do not generate");
}

std::shared_ptr<const BlockEnumeration> cached_block(const Field& f, unsigned b,
                                                     std::uint64_t expected) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, std::uint64_t>, std::shared_ptr<const BlockEnumeration>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(b, static_cast<std::uint64_t>(f.order()));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto e = enumerate_block(f, b, expected);
  cache.emplace(key, e);
  return e;
}

std::vector<unsigned> offsets_of(const std::vector<unsigned>& parts) {
  std::vector<unsigned> off{0};
  for (auto p : parts) off.push_back(off.back() + p);
  return off;
}

Matrix sub_block(const Matrix& g, unsigned off, unsigned b) {
  Matrix s(g.field(), b, b);
  for (unsigned i = 0; i < b; ++i)
    for (unsigned j = 0; j < b; ++j) s(i, j) = g(off + i, off + j);
  return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto c = a(i, j);
      if (c == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(c, b(k, l));
    }
  return out;
}

std::vector<Field::Elem> flatten(const Matrix& m) { return m.codes(); }

void check_module_of(const GLGroup& g, const AlgebraModule& m, const char* what) {
  if (m.num_generators() != g.generators().size())
    throw InvalidInput(std::string(what) + ": module has " + std::to_string(m.num_generators()) +
                       " generators, the group " + std::to_string(g.generators().size()));
  if (m.field().characteristic() == g.field().characteristic())
    throw DefiningCharacteristic("l = " + std::to_string(m.field().characteristic()) +
                                 " divides q = " + std::to_string(g.q()));
}

Field common_field(const Field& a, const Field& b) {
  if (a == b) return a;
  if (a.characteristic() != b.characteristic()) throw InvalidInput("fields of different characteristic");
  const auto d = std::lcm(a.degree(), b.degree());
  if (d == a.degree()) return a;
  if (d == b.degree()) return b;
  return Field::make(a.characteristic(), d);
}

AlgebraModule over(const AlgebraModule& m, const Field& f) {
  return m.field() == f ? m : m.extend_scalars(f);
}

}  // namespace

struct GLGroup::Impl {
  unsigned n = 0;
  std::uint64_t q = 0;
  Field field = Field::prime(2);
  std::vector<unsigned> blocks, offsets;
  std::uint64_t order = 1;
  std::vector<Matrix> gens;
  std::vector<unsigned> gen_block;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::vector<std::shared_ptr<const BlockEnumeration>> enums;

  std::size_t node_of(unsigned b, const Matrix& g) const {
    auto it = enums[b]->index.find(matrix_key(sub_block(g, offsets[b], blocks[b])));
    if (it == enums[b]->index.end()) throw InvalidInput("matrix is not in the group");
    return it->second;
  }
};

GLGroup GLGroup::make(unsigned n, std::uint64_t q) { return make_product({n}, q); }

GLGroup GLGroup::make_product(std::vector<unsigned> blocks, std::uint64_t q) {
  if (blocks.empty()) throw InvalidInput("group needs at least one block");
  for (auto b : blocks)
    if (b == 0) throw InvalidInput("block sizes must be positive");
  auto impl = std::make_shared<Impl>();
  impl->q = q;
  impl->field = Field::of_order(q);
  impl->blocks = std::move(blocks);
  impl->offsets = offsets_of(impl->blocks);
  impl->n = impl->offsets.back();
  for (unsigned b = 0; b < impl->blocks.size(); ++b) {
    const unsigned size = impl->blocks[b];
    const auto ord = gl_order(size, q);
    if (ord > kMaxOrder)
      throw SizeLimit("GL_" + std::to_string(size) + "(" + std::to_string(q) +
                      ") is too large to enumerate");
    impl->order *= ord;
    impl->enums.push_back(cached_block(impl->field, size, ord));
    const std::size_t first = impl->gens.size();
    for (const auto& gb : impl->enums.back()->gens) {
      Matrix g = Matrix::identity(impl->field, impl->n);
      const unsigned off = impl->offsets[b];
      for (unsigned i = 0; i < size; ++i)
        for (unsigned j = 0; j < size; ++j) g(off + i, off + j) = gb(i, j);
      impl->gens.push_back(std::move(g));
      impl->gen_block.push_back(b);
    }
    impl->ranges.emplace_back(first, impl->gens.size());
  }
  return GLGroup(std::move(impl));
}

unsigned GLGroup::n() const noexcept { return impl_->n; }
std::uint64_t GLGroup::q() const noexcept { return impl_->q; }
const Field& GLGroup::field() const noexcept { return impl_->field; }
const std::vector<unsigned>& GLGroup::blocks() const noexcept { return impl_->blocks; }
std::uint64_t GLGroup::order() const noexcept { return impl_->order; }
const std::vector<Matrix>& GLGroup::generators() const noexcept { return impl_->gens; }
unsigned GLGroup::generator_block(std::size_t i) const { return impl_->gen_block.at(i); }
std::pair<std::size_t, std::size_t> GLGroup::block_generators(unsigned b) const {
  return impl_->ranges.at(b);
}

bool GLGroup::contains(const Matrix& g) const {
  const auto& im = *impl_;
  if (g.rows() != im.n || g.cols() != im.n || g.field() != im.field) return false;
  std::vector<unsigned> block_of(im.n);
  for (unsigned b = 0; b < im.blocks.size(); ++b)
    for (unsigned i = im.offsets[b]; i < im.offsets[b + 1]; ++i) block_of[i] = b;
  for (unsigned i = 0; i < im.n; ++i)
    for (unsigned j = 0; j < im.n; ++j)
      if (block_of[i] != block_of[j] && g(i, j) != 0) return false;
  for (unsigned b = 0; b < im.blocks.size(); ++b)
    if (determinant(sub_block(g, im.offsets[b], im.blocks[b])) == 0) return false;
  return true;
}

std::vector<std::size_t> GLGroup::word(const Matrix& g) const {
  if (!contains(g)) throw InvalidInput("matrix is not in the group");
  const auto& im = *impl_;
  std::vector<std::size_t> out;
  for (unsigned b = 0; b < im.blocks.size(); ++b) {
    const auto& e = *im.enums[b];
    std::vector<std::size_t> rev;
    for (std::size_t node = im.node_of(b, g); node != 0; node = e.parent[node])
      rev.push_back(im.ranges[b].first + e.via[node]);
    out.insert(out.end(), rev.rbegin(), rev.rend());
  }
  return out;
}

CoxeterType GLGroup::weyl_type() const {
  std::vector<CoxeterFactor> f;
  for (auto b : impl_->blocks) f.push_back({CoxeterKind::A, b - 1});
  return CoxeterType(std::move(f));
}

Matrix GLGroup::weyl_matrix(const CoxeterElement& w) const {
  const auto& im = *impl_;
  const auto& win = w.window();
  if (win.size() != im.n) throw InvalidInput("Weyl group element has the wrong window");
  Matrix m(im.field, im.n, im.n);
  for (unsigned b = 0; b < im.blocks.size(); ++b)
    for (unsigned i = im.offsets[b]; i < im.offsets[b + 1]; ++i) {
      const int img = win[i];
      if (img <= static_cast<int>(im.offsets[b]) || img > static_cast<int>(im.offsets[b + 1]))
        throw InvalidInput("Weyl group element has the wrong window");
      m(img - 1, i) = 1;
    }
  return m;
}

Representation::Representation(GLGroup g, AlgebraModule m)
    : group_(std::move(g)), module_(std::move(m)), cache_(group_.blocks().size()) {
  if (module_.num_generators() != group_.generators().size())
    throw InvalidInput("representation: generator count mismatch");
}

Matrix Representation::operator()(const Matrix& g) const {
  const auto& im = group_.impl();
  Matrix out = Matrix::identity(module_.field(), module_.dim());
  for (unsigned b = 0; b < im.blocks.size(); ++b) {
    const auto& e = *im.enums[b];
    auto& cache = cache_[b];
    std::size_t node = im.node_of(b, g);
    if (node == 0) continue;
    std::vector<std::size_t> chain;
    std::size_t cur = node;
    while (cur != 0 && !cache.count(cur)) {
      chain.push_back(cur);
      cur = e.parent[cur];
    }
    Matrix acc = cur == 0 ? Matrix::identity(module_.field(), module_.dim()) : cache.at(cur);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      acc = acc * module_.generator(im.ranges[b].first + e.via[*it]);
      cache.emplace(*it, acc);
    }
    out = out * acc;
  }
  return out;
}

void validate_parabolic(const GLGroup& g, const ParabolicDescription& p) {
  const auto goff = offsets_of(g.blocks());
  const auto poff = offsets_of(p.composition);
  for (auto c : p.composition)
    if (c == 0) throw InvalidInput("composition parts must be positive");
  if (poff.back() != g.n()) throw InvalidInput("composition does not sum to n");
  for (auto o : goff)
    if (!std::binary_search(poff.begin(), poff.end(), o))
      throw InvalidInput("composition does not refine the group's blocks");
}

ParabolicDescription borel(const GLGroup& g, Orientation o) {
  return {std::vector<unsigned>(g.n(), 1), o};
}

GLGroup levi(const GLGroup& g, const ParabolicDescription& p) {
  validate_parabolic(g, p);
  return GLGroup::make_product(p.composition, g.q());
}

std::uint64_t parabolic_index(const GLGroup& g, const ParabolicDescription& p) {
  validate_parabolic(g, p);
  // |G| / |P| = |G| / (|L| q^{dim U}).
  const auto poff = offsets_of(p.composition);
  const auto goff = offsets_of(g.blocks());
  std::uint64_t index = 1;
  std::size_t k = 0;
  for (unsigned b = 0; b < g.blocks().size(); ++b) {
    std::uint64_t levi_order = 1, unip = 0;
    std::vector<unsigned> parts;
    while (k < p.composition.size() && poff[k] < goff[b + 1]) parts.push_back(p.composition[k++]);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      levi_order *= gl_order(parts[i], g.q());
      for (std::size_t j = i + 1; j < parts.size(); ++j) unip += parts[i] * parts[j];
    }
    std::uint64_t qu = 1;
    for (std::uint64_t i = 0; i < unip; ++i) qu *= g.q();
    index *= gl_order(g.blocks()[b], g.q()) / (levi_order * qu);
  }
  return index;
}

std::string coset_key(const ParabolicDescription& p, const Matrix& t) {
  const auto off = offsets_of(p.composition);
  const unsigned n = off.back();
  std::string key;
  for (std::size_t k = 1; k + 1 < off.size(); ++k) {
    const unsigned begin = p.orientation == Orientation::Upper ? off[k] : 0;
    const unsigned count = p.orientation == Orientation::Upper ? n - off[k] : off[k];
    const auto e = rref(t.row_block(begin, count));
    for (auto c : e.form.codes()) append_code(key, c);
    key.push_back('|');
  }
  return key;
}

std::size_t CosetTransversal::coset_of(const Matrix& t) const {
  auto it = keys.find(coset_key(parabolic, t));
  if (it == keys.end()) throw InvalidInput("element outside the group of the transversal");
  return it->second;
}

CosetTransversal coset_transversal(const GLGroup& g, const ParabolicDescription& p) {
  const auto expected = parabolic_index(g, p);
  if (expected > CosetTransversal::kMaxIndex)
    throw SizeLimit("parabolic index " + std::to_string(expected) + " exceeds " +
                    std::to_string(CosetTransversal::kMaxIndex));
  CosetTransversal tr;
  tr.parabolic = p;
  const auto& gens = g.generators();
  tr.reps.push_back(Matrix::identity(g.field(), g.n()));
  tr.keys.emplace(coset_key(p, tr.reps[0]), 0);
  for (std::size_t i = 0; i < tr.reps.size(); ++i)
    for (const auto& s : gens) {
      Matrix t = tr.reps[i] * s;
      if (tr.keys.emplace(coset_key(p, t), tr.reps.size()).second) tr.reps.push_back(std::move(t));
    }
  if (tr.reps.size() != expected) throw Error("coset enumeration does not match the index");

  std::vector<Matrix> inv;
  for (const auto& r : tr.reps) inv.push_back(*inverse(r));
  const auto off = offsets_of(p.composition);
  std::vector<unsigned> part(g.n());
  for (unsigned k = 0; k + 1 < off.size(); ++k)
    for (unsigned i = off[k]; i < off[k + 1]; ++i) part[i] = k;
  tr.target.assign(gens.size(), std::vector<std::size_t>(tr.reps.size()));
  tr.levi.assign(gens.size(), {});
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t i = 0; i < tr.reps.size(); ++i) {
      Matrix t = tr.reps[i] * gens[s];
      const std::size_t j = tr.keys.at(coset_key(p, t));
      Matrix pm = t * inv[j];
      for (unsigned r = 0; r < g.n(); ++r)
        for (unsigned c = 0; c < g.n(); ++c) {
          if (part[r] == part[c]) continue;
          const bool allowed =
              p.orientation == Orientation::Upper ? part[r] < part[c] : part[r] > part[c];
          if (!allowed && pm(r, c) != 0) throw Error("coset cocycle left the parabolic");
          pm(r, c) = 0;
        }
      tr.target[s][i] = j;
      tr.levi[s].push_back(std::move(pm));
    }
  return tr;
}

AlgebraModule trivial_module(const GLGroup& g, const Field& k) {
  return AlgebraModule(k, 1, std::vector<Matrix>(g.generators().size(), Matrix::identity(k, 1)));
}

AlgebraModule outer_tensor(const GLGroup& g, const std::vector<AlgebraModule>& per_block) {
  if (per_block.size() != g.blocks().size())
    throw InvalidInput("outer tensor needs one module per block");
  const Field& k = per_block[0].field();
  std::vector<std::size_t> dims;
  for (unsigned b = 0; b < per_block.size(); ++b) {
    const auto [lo, hi] = g.block_generators(b);
    if (per_block[b].field() != k) throw InvalidInput("outer tensor factors over different fields");
    if (per_block[b].num_generators() != hi - lo)
      throw InvalidInput("outer tensor factor has the wrong number of generators");
    dims.push_back(per_block[b].dim());
  }
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<Matrix> gens;
  std::size_t before = 1;
  for (unsigned b = 0; b < per_block.size(); ++b) {
    const std::size_t after = total / (before * dims[b]);
    for (const auto& a : per_block[b].generators())
      gens.push_back(kron(kron(Matrix::identity(k, before), a), Matrix::identity(k, after)));
    before *= dims[b];
  }
  return AlgebraModule(k, total, std::move(gens));
}

AlgebraModule permute_blocks(const GLGroup& g, const AlgebraModule& m,
                             const std::vector<unsigned>& order) {
  const unsigned r = static_cast<unsigned>(g.blocks().size());
  std::vector<unsigned> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<unsigned> ident(r);
  std::iota(ident.begin(), ident.end(), 0u);
  if (sorted != ident) throw InvalidInput("block order is not a permutation");
  if (m.num_generators() != g.generators().size())
    throw InvalidInput("permute_blocks: generator count mismatch");
  std::vector<Matrix> gens;
  for (auto b : order) {
    const auto [lo, hi] = g.block_generators(b);
    for (auto i = lo; i < hi; ++i) gens.push_back(m.generator(i));
  }
  return AlgebraModule(m.field(), m.dim(), std::move(gens));
}

AlgebraModule hc_induce(const GLGroup& g, const CosetTransversal& t, const AlgebraModule& x) {
  const GLGroup l = levi(g, t.parabolic);
  check_module_of(l, x, "Harish-Chandra induction");
  const Representation rho(l, x);
  const std::size_t d = x.dim(), nc = t.index();
  std::vector<Matrix> gens;
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    Matrix m(x.field(), d * nc, d * nc);
    for (std::size_t i = 0; i < nc; ++i) {
      const std::size_t j = t.target[s][i];
      const Matrix blk = rho(t.levi[s][i]);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) m(i * d + a, j * d + b) = blk(a, b);
    }
    gens.push_back(std::move(m));
  }
  return AlgebraModule(x.field(), d * nc, std::move(gens));
}

AlgebraModule hc_induce(const GLGroup& g, const ParabolicDescription& p, const AlgebraModule& x) {
  return hc_induce(g, coset_transversal(g, p), x);
}

AlgebraModule hc_restrict(const GLGroup& g, const ParabolicDescription& p, const AlgebraModule& m) {
  const GLGroup l = levi(g, p);
  check_module_of(g, m, "Harish-Chandra restriction");
  const Field& k = m.field();
  const Field& fq = g.field();
  const Representation rho(g, m);
  const auto off = offsets_of(p.composition);
  const auto goff = offsets_of(g.blocks());
  std::vector<unsigned> part(g.n()), gblock(g.n());
  for (unsigned a = 0; a + 1 < off.size(); ++a)
    for (unsigned i = off[a]; i < off[a + 1]; ++i) part[i] = a;
  for (unsigned a = 0; a + 1 < goff.size(); ++a)
    for (unsigned i = goff[a]; i < goff[a + 1]; ++i) gblock[i] = a;

  // Root subgroups of the radical are generated by I + lambda E_ij, lambda
  // running over an F_p-basis of GF(q).
  const std::size_t d = m.dim();
  Matrix stacked(k, d, 0);
  std::vector<Matrix> blocks;
  const Matrix id = Matrix::identity(k, d);
  for (unsigned i = 0; i < g.n(); ++i)
    for (unsigned j = 0; j < g.n(); ++j) {
      if (gblock[i] != gblock[j] || part[i] == part[j]) continue;
      if ((p.orientation == Orientation::Upper) != (part[i] < part[j])) continue;
      Field::Elem lambda = 1;
      for (unsigned e = 0; e < fq.degree(); ++e, lambda *= fq.characteristic()) {
        Matrix u = Matrix::identity(fq, g.n());
        u(i, j) = lambda;
        blocks.push_back(rho(u) - id);
      }
    }
  Matrix fixed = Matrix::identity(k, d);
  if (!blocks.empty()) {
    Matrix h(k, d, d * blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) h(r, b * d + c) = blocks[b](r, c);
    fixed = left_nullspace(h);
  }
  const auto e = rref(fixed);
  std::vector<Matrix> gens;
  for (const auto& s : l.generators()) gens.push_back(coordinates_in(e, e.form * rho(s)));
  return AlgebraModule(k, e.rank, std::move(gens));
}

EndoAlgebra endo_algebra(const AlgebraModule& m) {
  constexpr std::size_t kMaxEndo = 64;
  auto hom = hom_space(m, m);
  if (hom.dimension() > kMaxEndo) throw SizeLimit("endomorphism algebra is too large");
  EndoAlgebra out;
  out.basis = std::move(hom.basis);
  const std::size_t n = out.basis.size(), d = m.dim();
  EchelonBasis eb(m.field(), d * d, true);
  for (const auto& b : out.basis) eb.insert(flatten(b));
  out.constants.assign(n, std::vector<std::vector<Field::Elem>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.constants[a][b] = eb.express(flatten(out.basis[a] * out.basis[b]));
  return out;
}

PrincipalSeries principal_series(const GLGroup& g, const Field& k) {
  constexpr std::size_t kMaxCosets = 2000;
  const auto b = borel(g);
  if (parabolic_index(g, b) > kMaxCosets) throw SizeLimit("too many Borel cosets");
  PrincipalSeries ps{coset_transversal(g, b), AlgebraModule(k, 0, {}), {}};
  ps.module = hc_induce(g, ps.transversal, trivial_module(levi(g, b), k));

  const std::size_t n = ps.transversal.index();
  const auto& tgt = ps.transversal.target;
  std::vector<int> orbit(n * n, -1);
  int norbits = 0;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (orbit[start] >= 0) continue;
    std::deque<std::size_t> queue{start};
    orbit[start] = norbits;
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (const auto& ts : tgt) {
        const std::size_t nxt = ts[cur / n] * n + ts[cur % n];
        if (orbit[nxt] < 0) {
          orbit[nxt] = norbits;
          queue.push_back(nxt);
        }
      }
    }
    ++norbits;
  }

  const CoxeterGroup w(g.weyl_type());
  const auto elems = w.enumerate();
  if (static_cast<std::size_t>(norbits) != elems.size())
    throw Error("orbital count differs from the Weyl group order");
  std::vector<std::size_t> rep_row;
  std::vector<int> ids;
  for (const auto& x : elems) {
    const std::size_t c = ps.transversal.coset_of(g.weyl_matrix(x));
    if (std::find(ids.begin(), ids.end(), orbit[c * n]) != ids.end())
      throw Error("two Weyl group elements label the same orbital");
    ids.push_back(orbit[c * n]);
    rep_row.push_back(c);
  }
  for (std::size_t a = 0; a < elems.size(); ++a) {
    Matrix mat(k, n, n);
    for (std::size_t i = 0; i < n * n; ++i)
      if (orbit[i] == ids[a]) mat(i / n, i % n) = 1;
    ps.endo.basis.push_back(std::move(mat));
  }
  ps.endo.labels = elems;
  const std::size_t dim = elems.size();
  ps.endo.constants.assign(dim, std::vector<std::vector<Field::Elem>>(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b2 = 0; b2 < dim; ++b2) {
      auto& out = ps.endo.constants[a][b2];
      out.assign(dim, 0);
      const Matrix& ma = ps.endo.basis[a];
      const Matrix& mb = ps.endo.basis[b2];
      for (std::size_t c = 0; c < dim; ++c) {
        Field::Elem acc = 0;
        for (std::size_t mid = 0; mid < n; ++mid)
          acc = k.add(acc, k.mul(ma(rep_row[c], mid), mb(mid, 0)));
        out[c] = acc;
      }
    }
  return ps;
}

HeckeAlgebra principal_series_hecke(const GLGroup& g, const Field& k) {
  const auto qk = k.from_int(static_cast<std::int64_t>(g.q() % k.characteristic()));
  if (qk == 0)
    throw DefiningCharacteristic("l = " + std::to_string(k.characteristic()) +
                                 " divides q = " + std::to_string(g.q()));
  return HeckeAlgebra::uniform(g.weyl_type(), k, qk);
}

std::vector<Matrix> hom_module_actions(const PrincipalSeries& ps, const GLGroup& g,
                                       const HomSpace& hom) {
  const CoxeterGroup w(g.weyl_type());
  const Field& k = ps.module.field();
  const std::size_t dim = hom.dimension();
  EchelonBasis eb(k, dim == 0 ? 0 : hom.basis[0].rows() * hom.basis[0].cols(), true);
  for (const auto& f : hom.basis) eb.insert(flatten(f));
  std::vector<Matrix> out;
  for (unsigned s = 0; s < w.rank(); ++s) {
    const auto gen = w.generator(s);
    auto it = std::find(ps.endo.labels.begin(), ps.endo.labels.end(), gen);
    const Matrix& a = ps.endo.basis.at(static_cast<std::size_t>(it - ps.endo.labels.begin()));
    Matrix r(k, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const auto coords = eb.express(flatten(a * hom.basis[i]));
      for (std::size_t j = 0; j < dim; ++j) r(i, j) = coords[j];
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<AlgebraModule> series_simples(const GLGroup& g, const ParabolicDescription& p,
                                          const AlgebraModule& x, std::uint64_t seed) {
  AlgebraModule r = hc_induce(g, p, x);
  const auto factors = split_composition_factors(r, seed);
  std::vector<AlgebraModule> out;
  if (factors.empty()) return out;
  r = over(r, factors[0].module.field());
  for (const auto& f : factors)
    if (hom_space(r, f.module).dimension() > 0) out.push_back(f.module);
  return out;
}

std::vector<AlgebraModule> find_cuspidal_unipotent(const GLGroup& l, const Field& k,
                                                   std::uint64_t seed) {
  const auto b = borel(l);
  const auto ps = hc_induce(l, b, trivial_module(levi(l, b), k));
  std::vector<AlgebraModule> out;
  for (const auto& f : split_composition_factors(ps, seed)) {
    bool cuspidal = true;
    for (std::size_t blk = 0; blk < l.blocks().size() && cuspidal; ++blk)
      for (unsigned a = 1; a < l.blocks()[blk] && cuspidal; ++a) {
        ParabolicDescription p;
        for (std::size_t c = 0; c < l.blocks().size(); ++c) {
          if (c != blk) {
            p.composition.push_back(l.blocks()[c]);
          } else {
            p.composition.push_back(a);
            p.composition.push_back(l.blocks()[c] - a);
          }
        }
        if (hc_restrict(l, p, f.module).dim() > 0) cuspidal = false;
      }
    if (cuspidal) out.push_back(f.module);
  }
  if (out.empty()) throw Error("no cuspidal unipotent module at these parameters");
  return out;
}

AlgebraModule cuspidal_unipotent_product(const std::vector<unsigned>& blocks, std::uint64_t q,
                                         const Field& k, std::uint64_t seed) {
  if (blocks.empty()) throw InvalidInput("empty block list");
  const GLGroup l0 = GLGroup::make_product(blocks, q);
  std::vector<AlgebraModule> per;
  for (auto b : blocks) per.push_back(find_cuspidal_unipotent(GLGroup::make(b, q), k, seed)[0]);
  Field f = per[0].field();
  for (const auto& m : per) f = common_field(f, m.field());
  for (auto& m : per) m = over(m, f);
  return outer_tensor(l0, per);
}

Lemma1Result check_lemma1_diagram(const GLGroup& g, const std::vector<unsigned>& l_composition,
                                  const AlgebraModule& y, std::uint64_t seed) {
  const ParabolicDescription p{l_composition, Orientation::Upper};
  const GLGroup l = levi(g, p);
  check_module_of(l, y, "diagram check");
  const Field& k = y.field();
  Lemma1Result res;

  const auto ps_g = principal_series(g, k);
  const auto hom_g = hom_space(ps_g.module, hc_induce(g, p, y));
  const auto ps_l = principal_series(l, k);
  const auto hom_l = hom_space(ps_l.module, y);
  res.path1_dim = hom_g.dimension();
  res.path2_dim = hom_l.dimension();
  if (res.path1_dim == 0 && res.path2_dim == 0) {
    res.verdict = DiagramVerdict::Degenerate;
    res.report = "both hom spaces vanish";
    return res;
  }
  // Reflections of W_G that lie in W_L: adjacent points in one Levi block.
  const auto off = offsets_of(l_composition);
  std::vector<unsigned> part(g.n());
  for (unsigned a = 0; a + 1 < off.size(); ++a)
    for (unsigned i = off[a]; i < off[a + 1]; ++i) part[i] = a;
  const auto wt = g.weyl_type();
  ParabolicSubset j;
  for (unsigned s = 0; s < wt.rank(); ++s) {
    const auto [f, local] = wt.locate(s);
    const unsigned pt = wt.first_point(f) + local;  // 0-based global point
    if (part[pt] == part[pt + 1]) j.push_back(s);
  }

  const HeckeAlgebra h = principal_series_hecke(g, k);
  const auto emb = parabolic_subalgebra(h, j);
  const HeckeModule m1(h, res.path1_dim, hom_module_actions(ps_g, g, hom_g));
  const HeckeModule m2(emb.sub, res.path2_dim, hom_module_actions(ps_l, l, hom_l));
  const HeckeModule ind = induce_module(emb, m2);
  if (ind.dim() != m1.dim()) {
    res.verdict = DiagramVerdict::Fails;
    res.report = "dimensions differ: " + std::to_string(m1.dim()) + " vs " +
                 std::to_string(ind.dim());
    return res;
  }
  const bool iso = module_iso(m1.as_module(), ind.as_module(), seed).has_value();
  res.verdict = iso ? DiagramVerdict::Commutes : DiagramVerdict::Fails;
  res.report = std::string(iso ? "isomorphic" : "not isomorphic") + " Hecke modules of dimension " +
               std::to_string(m1.dim());
  return res;
}

std::vector<LeviCandidate> levis_containing(const std::vector<unsigned>& l0, unsigned n) {
  if (std::accumulate(l0.begin(), l0.end(), 0u) != n || l0.empty())
    throw InvalidInput("L_0 composition does not sum to n");
  // One block order per size sequence: blocks of equal size carry
  // isomorphic cuspidal factors.
  std::vector<unsigned> idx(l0.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](unsigned a, unsigned b) {
    return l0[a] != l0[b] ? l0[a] < l0[b] : a < b;
  });
  std::map<std::vector<unsigned>, std::vector<std::vector<unsigned>>> found;
  std::set<std::vector<unsigned>> seen;
  auto by_size = [&](unsigned a, unsigned b) { return l0[a] < l0[b]; };
  do {
    std::vector<unsigned> sizes;
    for (auto i : idx) sizes.push_back(l0[i]);
    if (!seen.insert(sizes).second) continue;
    const std::size_t gaps = sizes.size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps); ++mask) {
      std::vector<unsigned> comp{sizes[0]};
      for (std::size_t gp = 0; gp < gaps; ++gp) {
        if (mask >> gp & 1)
          comp.back() += sizes[gp + 1];
        else
          comp.push_back(sizes[gp + 1]);
      }
      if (comp.size() == 1) continue;
      found[comp].push_back(idx);
    }
  } while (std::next_permutation(idx.begin(), idx.end(), by_size));
  std::vector<LeviCandidate> out;
  for (auto& [c, orders] : found) out.push_back({c, std::move(orders)});
  return out;
}

bool OracleResult::any_imprimitive() const {
  return std::any_of(simples.begin(), simples.end(),
                     [](const OracleSimple& s) { return s.imprimitive; });
}

OracleResult oracle_primitivity(const GLGroup& g, const std::vector<unsigned>& l0,
                                const AlgebraModule& x0, std::uint64_t seed) {
  if (g.blocks().size() != 1) throw InvalidInput("oracle needs GL_n(q)");
  const GLGroup l0_group = levi(g, {l0, Orientation::Upper});
  check_module_of(l0_group, x0, "oracle");
  OracleResult res;
  for (auto& s : series_simples(g, {l0, Orientation::Upper}, x0, seed))
    res.simples.push_back(OracleSimple{std::move(s), false, {}, {}, 0});
  for (const auto& cand : levis_containing(l0, g.n())) {
    const GLGroup lg = GLGroup::make_product(cand.composition, g.q());
    const auto tr = coset_transversal(g, {cand.composition, Orientation::Upper});
    for (const auto& order : cand.l0_orders) {
      ++res.levis_tested;
      std::vector<unsigned> sizes;
      for (auto i : order) sizes.push_back(l0[i]);
      const AlgebraModule x0p = permute_blocks(l0_group, x0, order);
      for (const auto& xp : series_simples(lg, {sizes, Orientation::Upper}, x0p, seed)) {
        const std::size_t dim = xp.dim() * tr.index();
        std::optional<AlgebraModule> induced;
        for (auto& s : res.simples) {
          if (s.imprimitive || s.module.dim() != dim) continue;
          if (!induced) induced = hc_induce(g, tr, xp);
          const Field f = common_field(induced->field(), s.module.field());
          if (module_iso(over(*induced, f), over(s.module, f), seed)) {
            s.imprimitive = true;
            s.witness_levi = cand.composition;
            s.witness_order = order;
            s.witness_dim = xp.dim();
          }
        }
      }
    }
  }
  return res;
}

bool check_group_relations(const GLGroup& g, const AlgebraModule& m) {
  if (m.num_generators() != g.generators().size()) return false;
  auto order_of = [&](const Matrix& x) {
    Matrix p = x;
    std::uint64_t k = 1;
    while (!p.is_identity()) {
      p = p * x;
      if (++k > g.order()) throw Error("element order exceeds the group order");
    }
    return k;
  };
  auto holds = [&](const Matrix& x, const Matrix& rx) {
    const auto k = order_of(x);
    Matrix p = Matrix::identity(m.field(), m.dim());
    for (std::uint64_t i = 0; i < k; ++i) p = p * rx;
    return p.is_identity();
  };
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!holds(gens[i], m.generator(i))) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!holds(gens[i] * gens[j], m.generator(i) * m.generator(j))) return false;
  }
  return true;
}

}  // namespace hcp
