#include "hcp/hecke.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "hcp/error.hpp"

namespace hcp {

struct HeckeAlgebra::Impl {
  CoxeterGroup group;
  Field field;
  std::vector<Field::Elem> class_params;
  std::vector<Field::Elem> params;  // per simple reflection
  std::vector<CoxeterElement> elems;
  std::unordered_map<CoxeterElement, std::size_t, CoxeterElementHash> index;
  std::vector<unsigned> len;
  std::vector<std::vector<std::uint32_t>> left, right;  // [s][idx]
  std::vector<std::vector<unsigned>> words;              // reduced words

  Impl(CoxeterGroup g, Field f) : group(std::move(g)), field(std::move(f)) {}
};

namespace {

std::shared_ptr<HeckeAlgebra::Impl> build_impl(const CoxeterType& type, const Field& field,
                                               std::vector<Field::Elem> class_params) {
  auto impl = std::make_shared<HeckeAlgebra::Impl>(CoxeterGroup(type), field);
  const auto classes = type.reflection_classes();
  const unsigned nclasses =
      classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
  if (class_params.size() != nclasses)
    throw InvalidInput("Hecke algebra of type " + type.to_string() + " needs " +
                       std::to_string(nclasses) + " parameters, got " +
                       std::to_string(class_params.size()));
  for (auto q : class_params) {
    if (q >= field.order()) throw InvalidInput("Hecke parameter is not a field element");
    if (q == 0) throw InvalidInput("Hecke parameters must be nonzero");
  }
  impl->class_params = std::move(class_params);
  for (unsigned s = 0; s < type.rank(); ++s) impl->params.push_back(impl->class_params[classes[s]]);

  const auto& g = impl->group;
  impl->elems = g.enumerate();
  const std::size_t n = impl->elems.size();
  impl->index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    impl->index.emplace(impl->elems[i], i);
    impl->len.push_back(g.length(impl->elems[i]));
  }
  impl->left.assign(type.rank(), std::vector<std::uint32_t>(n));
  impl->right.assign(type.rank(), std::vector<std::uint32_t>(n));
  impl->words.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned s = 0; s < type.rank(); ++s) {
      impl->left[s][i] = static_cast<std::uint32_t>(impl->index.at(g.left_multiply(s, impl->elems[i])));
      impl->right[s][i] = static_cast<std::uint32_t>(impl->index.at(g.right_multiply(impl->elems[i], s)));
    }
    // Elements are sorted by length, so a shorter parent already has its word.
    for (unsigned s = 0; s < type.rank() && impl->len[i] > 0; ++s) {
      const std::size_t parent = impl->right[s][i];
      if (impl->len[parent] < impl->len[i]) {
        impl->words[i] = impl->words[parent];
        impl->words[i].push_back(s);
        break;
      }
    }
  }
  return impl;
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(CoxeterType type, Field field, std::vector<Field::Elem> params)
    : impl_(build_impl(type, field, std::move(params))) {}

HeckeAlgebra HeckeAlgebra::uniform(CoxeterType type, Field field, Field::Elem q) {
  const auto classes = type.reflection_classes();
  const unsigned n = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
  return HeckeAlgebra(std::move(type), std::move(field), std::vector<Field::Elem>(n, q));
}

const CoxeterGroup& HeckeAlgebra::group() const noexcept { return impl_->group; }
const CoxeterType& HeckeAlgebra::type() const noexcept { return impl_->group.type(); }
const Field& HeckeAlgebra::field() const noexcept { return impl_->field; }
std::size_t HeckeAlgebra::dim() const noexcept { return impl_->elems.size(); }
Field::Elem HeckeAlgebra::param(unsigned s) const { return impl_->params.at(s); }
const std::vector<Field::Elem>& HeckeAlgebra::class_params() const noexcept {
  return impl_->class_params;
}
const std::vector<CoxeterElement>& HeckeAlgebra::elements() const noexcept {
  return impl_->elems;
}
std::size_t HeckeAlgebra::index(const CoxeterElement& w) const {
  auto it = impl_->index.find(w);
  if (it == impl_->index.end()) throw InvalidInput("element not in the Coxeter group");
  return it->second;
}
unsigned HeckeAlgebra::length(std::size_t idx) const { return impl_->len.at(idx); }

HeckeElement HeckeAlgebra::zero() const { return {*this, std::vector<Field::Elem>(dim(), 0)}; }
HeckeElement HeckeAlgebra::one() const { return basis(group().identity()); }
HeckeElement HeckeAlgebra::basis(const CoxeterElement& w) const {
  std::vector<Field::Elem> c(dim(), 0);
  c[index(w)] = 1;
  return {*this, std::move(c)};
}
HeckeElement HeckeAlgebra::word(const std::vector<unsigned>& word) const {
  HeckeElement x = one();
  for (unsigned s : word) {
    if (s >= type().rank()) throw InvalidInput("simple reflection index out of range");
    x = x.right_mul_generator(s);
  }
  return x;
}

HeckeAlgebra HeckeAlgebra::extend_scalars(const Field& big) const {
  const auto image = embed_field(field(), big);
  auto impl = std::make_shared<Impl>(*impl_);
  impl->field = big;
  for (auto& q : impl->class_params) q = image[q];
  for (auto& q : impl->params) q = image[q];
  return HeckeAlgebra(std::shared_ptr<const Impl>(std::move(impl)));
}

HeckeElement::HeckeElement(HeckeAlgebra owner, std::vector<Field::Elem> coeffs)
    : owner_(std::move(owner)), c_(std::move(coeffs)) {
  if (c_.size() != owner_.dim()) throw InvalidInput("Hecke element has wrong length");
}

void HeckeElement::same_owner(const HeckeElement& b) const {
  if (!(owner_ == b.owner_)) throw InvalidInput("Hecke elements of different algebras");
}

HeckeElement HeckeElement::operator+(const HeckeElement& b) const {
  same_owner(b);
  auto c = c_;
  owner_.field().axpy(c.data(), b.c_.data(), 1, c.size());
  return {owner_, std::move(c)};
}

HeckeElement HeckeElement::operator-(const HeckeElement& b) const {
  same_owner(b);
  auto c = c_;
  owner_.field().axpy(c.data(), b.c_.data(), owner_.field().neg(1), c.size());
  return {owner_, std::move(c)};
}

HeckeElement HeckeElement::scaled(Field::Elem x) const {
  auto c = c_;
  owner_.field().scale(c.data(), x, c.size());
  return {owner_, std::move(c)};
}

bool HeckeElement::operator==(const HeckeElement& b) const {
  return owner_ == b.owner_ && c_ == b.c_;
}

namespace {

// T_s * T_w (or T_w * T_s) term by term, through a neighbour table.
std::vector<Field::Elem> mul_generator(const HeckeAlgebra::Impl& h, unsigned s,
                                       const std::vector<Field::Elem>& c,
                                       const std::vector<std::uint32_t>& table) {
  const Field& f = h.field;
  const Field::Elem q = h.params[s], qm1 = f.sub(h.params[s], 1);
  std::vector<Field::Elem> r(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const std::size_t t = table[i];
    if (h.len[t] > h.len[i]) {
      r[t] = f.add(r[t], c[i]);
    } else {
      r[t] = f.add(r[t], f.mul(q, c[i]));
      r[i] = f.add(r[i], f.mul(qm1, c[i]));
    }
  }
  return r;
}

}  // namespace

HeckeElement HeckeElement::left_mul_generator(unsigned s) const {
  const auto& h = *owner_.impl_;
  if (s >= h.params.size()) throw InvalidInput("simple reflection index out of range");
  return {owner_, mul_generator(h, s, c_, h.left[s])};
}

HeckeElement HeckeElement::right_mul_generator(unsigned s) const {
  const auto& h = *owner_.impl_;
  if (s >= h.params.size()) throw InvalidInput("simple reflection index out of range");
  return {owner_, mul_generator(h, s, c_, h.right[s])};
}

HeckeElement HeckeElement::operator*(const HeckeElement& b) const {
  same_owner(b);
  const auto& h = *owner_.impl_;
  const Field& f = h.field;
  std::vector<Field::Elem> out(c_.size(), 0);
  for (std::size_t x = 0; x < c_.size(); ++x) {
    if (c_[x] == 0) continue;
    std::vector<Field::Elem> v = b.c_;
    const auto& w = h.words[x];
    for (std::size_t k = w.size(); k-- > 0;) v = mul_generator(h, w[k], v, h.left[w[k]]);
    f.axpy(out.data(), v.data(), c_[x], out.size());
  }
  return {owner_, std::move(out)};
}

HeckeAlgebra hecke_make(const CoxeterType& type, const Field& field,
                        std::vector<Field::Elem> params) {
  return HeckeAlgebra(type, field, std::move(params));
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) { return a * b; }

CoxeterElement ParabolicEmbedding::embed_element(const CoxeterElement& w) const {
  std::vector<unsigned> word = sub.group().reduced_word(w);
  for (auto& s : word) s = sub_type.to_ambient[s];
  return ambient.group().reduce(word);
}

std::vector<unsigned> ParabolicEmbedding::sub_word(const CoxeterElement& w) const {
  std::vector<unsigned> word = ambient.group().reduced_word(w);
  for (auto& s : word) {
    const int t = sub_type.to_sub[s];
    if (t < 0) throw InvalidInput("element is not in the parabolic subgroup");
    s = static_cast<unsigned>(t);
  }
  return word;
}

HeckeElement ParabolicEmbedding::embed(const HeckeElement& x) const {
  if (!(x.owner() == sub)) throw InvalidInput("element of a different algebra");
  std::vector<Field::Elem> c(ambient.dim(), 0);
  const auto& el = sub.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    if (x.coeffs()[i]) c[ambient.index(embed_element(el[i]))] = x.coeffs()[i];
  return {ambient, std::move(c)};
}

ParabolicEmbedding parabolic_subalgebra(const HeckeAlgebra& h, const ParabolicSubset& j) {
  auto jj = normalize_subset(h.type(), j);
  auto pt = parabolic_type(h.type(), jj);
  const auto sub_classes = pt.type.reflection_classes();
  const unsigned n =
      sub_classes.empty() ? 0 : *std::max_element(sub_classes.begin(), sub_classes.end()) + 1;
  std::vector<Field::Elem> params(n, 0);
  for (unsigned t = 0; t < sub_classes.size(); ++t) params[sub_classes[t]] = h.param(pt.to_ambient[t]);
  HeckeAlgebra sub(pt.type, h.field(), std::move(params));
  return {std::move(sub), h, std::move(jj), std::move(pt)};
}

std::optional<std::string> hecke_relation_failure(const HeckeAlgebra& h,
                                                  const std::vector<Matrix>& actions) {
  const unsigned r = h.type().rank();
  if (actions.size() != r) return "expected " + std::to_string(r) + " action matrices";
  const Field& f = h.field();
  for (const auto& a : actions) {
    if (a.field() != f) return std::string("action matrix over a different field");
    if (a.rows() != a.cols() || a.rows() != actions[0].rows())
      return std::string("action matrices must be square of one size");
  }
  const std::size_t d = actions.empty() ? 0 : actions[0].rows();
  const Matrix id = Matrix::identity(f, d);
  for (unsigned s = 0; s < r; ++s) {
    const Field::Elem q = h.param(s);
    const Matrix& a = actions[s];
    if ((a - id.scaled(q)) * (a + id) != Matrix(f, d, d))
      return "quadratic relation fails for generator " + std::to_string(s);
  }
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = i + 1; j < r; ++j) {
      const unsigned m = h.type().braid_order(i, j);
      Matrix lhs = id, rhs = id;
      for (unsigned k = 0; k < m; ++k) {
        lhs = lhs * actions[k % 2 ? j : i];
        rhs = rhs * actions[k % 2 ? i : j];
      }
      if (lhs != rhs)
        return "braid relation fails for generators " + std::to_string(i) + ", " +
               std::to_string(j);
    }
  return std::nullopt;
}

HeckeModule::HeckeModule(HeckeAlgebra owner, std::size_t dim, std::vector<Matrix> actions)
    : owner_(std::move(owner)), module_(owner_.field(), dim, std::move(actions)) {
  if (auto err = hecke_relation_failure(owner_, module_.generators()))
    throw InvalidInput("not a Hecke module: " + *err);
}

namespace {

std::size_t action_dim(const std::vector<Matrix>& actions) {
  if (actions.empty()) throw InvalidInput("module dimension cannot be read from no matrices");
  return actions[0].rows();
}

}  // namespace

HeckeModule::HeckeModule(HeckeAlgebra owner, std::vector<Matrix> actions)
    : HeckeModule(std::move(owner), action_dim(actions), std::vector<Matrix>(actions)) {}

Matrix HeckeModule::action_of_word(const std::vector<unsigned>& word) const {
  Matrix r = Matrix::identity(owner_.field(), dim());
  for (unsigned s : word) r = r * module_.generator(s);
  return r;
}

Matrix HeckeModule::action_of(const CoxeterElement& w) const {
  return action_of_word(owner_.group().reduced_word(w));
}

HeckeModule regular_module(const HeckeAlgebra& h) {
  const Field& f = h.field();
  std::vector<Matrix> actions;
  for (unsigned s = 0; s < h.type().rank(); ++s) {
    Matrix a(f, h.dim(), h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
      auto row = h.basis(h.elements()[i]).right_mul_generator(s).coeffs();
      std::copy(row.begin(), row.end(), a.row(i).begin());
    }
    actions.push_back(std::move(a));
  }
  return {h, h.dim(), std::move(actions)};
}

HeckeModule linear_module(const HeckeAlgebra& h, const std::vector<bool>& sign_per_class) {
  const auto classes = h.type().reflection_classes();
  if (sign_per_class.size() != h.class_params().size())
    throw InvalidInput("one sign choice per reflection class expected");
  const Field& f = h.field();
  std::vector<Matrix> actions;
  for (unsigned s = 0; s < classes.size(); ++s) {
    Matrix a(f, 1, 1);
    a(0, 0) = sign_per_class[classes[s]] ? f.neg(1) : h.param(s);
    actions.push_back(std::move(a));
  }
  return {h, 1, std::move(actions)};
}

HeckeModule induce_module(const ParabolicEmbedding& emb, const HeckeModule& m) {
  if (!(m.owner() == emb.sub)) throw InvalidInput("module is not over the parabolic subalgebra");
  const HeckeAlgebra& h = emb.ambient;
  const CoxeterGroup& g = h.group();
  const Field& f = h.field();
  const auto reps = g.min_coset_reps(emb.j);
  std::unordered_map<CoxeterElement, std::size_t, CoxeterElementHash> rep_index;
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index.emplace(reps[i], i);
  const std::size_t dm = m.dim(), n = reps.size() * dm;

  std::map<CoxeterElement, Matrix> sub_action;
  auto rho = [&](const CoxeterElement& u) -> const Matrix& {
    auto it = sub_action.find(u);
    if (it == sub_action.end()) it = sub_action.emplace(u, m.action_of_word(emb.sub_word(u))).first;
    return it->second;
  };

  std::vector<Matrix> actions;
  for (unsigned s = 0; s < h.type().rank(); ++s) {
    const Field::Elem q = h.param(s);
    Matrix a(f, n, n);
    for (std::size_t xi = 0; xi < reps.size(); ++xi) {
      const auto& x = reps[xi];
      auto xs = g.right_multiply(x, s);
      std::vector<std::pair<Field::Elem, CoxeterElement>> terms;
      if (g.length(xs) > g.length(x)) {
        terms.emplace_back(1, std::move(xs));
      } else {
        terms.emplace_back(q, std::move(xs));
        terms.emplace_back(f.sub(q, 1), x);
      }
      for (const auto& [c, w] : terms) {
        if (c == 0) continue;
        auto [u, y] = g.coset_factor(emb.j, w);
        const std::size_t yi = rep_index.at(y);
        const Matrix& r = rho(u);
        for (std::size_t i = 0; i < dm; ++i)
          f.axpy(&a(xi * dm + i, yi * dm), r.row(i).data(), c, dm);
      }
    }
    actions.push_back(std::move(a));
  }
  return {h, n, std::move(actions)};
}

HeckeModule restrict_module(const ParabolicEmbedding& emb, const HeckeModule& m) {
  if (!(m.owner() == emb.ambient)) throw InvalidInput("module is not over the ambient algebra");
  std::vector<Matrix> actions;
  for (unsigned t : emb.sub_type.to_ambient) actions.push_back(m.action(t));
  return {emb.sub, m.dim(), std::move(actions)};
}

SimpleCheck hecke_simple_check(const HeckeModule& m, std::uint64_t seed) {
  if (m.dim() == 0) throw InvalidInput("simplicity of the zero module");
  auto r = meataxe_irreducible(m.as_module(), seed, {.require_split = false});
  if (r.irreducible) return {true, std::nullopt};
  return {false, r.witness->basis};
}

std::vector<HeckeModule> hecke_simples(const HeckeAlgebra& h, std::uint64_t seed) {
  if (h.dim() > 24) throw SizeLimit("simple modules are enumerated only for |W| <= 24");
  std::vector<HeckeModule> out;
  if (h.type().rank() == 0) {
    out.push_back(HeckeModule(h, 1, {}));
    return out;
  }
  auto factors = split_composition_factors(regular_module(h).as_module(), seed);
  std::optional<HeckeAlgebra> big;
  for (auto& cf : factors) {
    const Field& kf = cf.module.field();
    if (kf == h.field()) {
      out.emplace_back(h, cf.module.dim(), cf.module.generators());
      continue;
    }
    if (!big || big->field() != kf) big = h.extend_scalars(kf);
    out.emplace_back(*big, cf.module.dim(), cf.module.generators());
  }
  return out;
}

}  // namespace hcp
