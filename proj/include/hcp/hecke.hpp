#pragma once

// Iwahori-Hecke algebras of products of type A and B Coxeter groups over a
// finite field, with relations (T_s - q_s)(T_s + 1) = 0 and the braid
// relations.  Modules are right modules: a HeckeModule stores the matrices
// rho(T_s) acting on row vectors, so rho(T_w) = rho(T_s1) ... rho(T_sk) for
// a reduced word s1 ... sk of w.

#include <memory>
#include <optional>
#include <vector>

#include "hcp/coxeter.hpp"
#include "hcp/field.hpp"
#include "hcp/matrix.hpp"
#include "hcp/modalg.hpp"

namespace hcp {

class HeckeElement;

class HeckeAlgebra {
 public:
  /// params holds one nonzero value per class of
  /// CoxeterType::reflection_classes().
  HeckeAlgebra(CoxeterType type, Field field, std::vector<Field::Elem> params);
  /// Same parameter for every simple reflection.
  static HeckeAlgebra uniform(CoxeterType type, Field field, Field::Elem q);

  const CoxeterGroup& group() const noexcept;
  const CoxeterType& type() const noexcept;
  const Field& field() const noexcept;
  std::size_t dim() const noexcept;
  /// Parameter of simple reflection s.
  Field::Elem param(unsigned s) const;
  const std::vector<Field::Elem>& class_params() const noexcept;

  /// Basis elements in (length, window) order.
  const std::vector<CoxeterElement>& elements() const noexcept;
  std::size_t index(const CoxeterElement& w) const;
  unsigned length(std::size_t idx) const;

  HeckeElement zero() const;
  HeckeElement one() const;
  HeckeElement basis(const CoxeterElement& w) const;
  /// T_s1 ... T_sk.
  HeckeElement word(const std::vector<unsigned>& word) const;

  /// Same algebra with scalars moved into an extension field.
  HeckeAlgebra extend_scalars(const Field& big) const;

  bool operator==(const HeckeAlgebra& o) const noexcept { return impl_ == o.impl_; }

  struct Impl;

 private:
  explicit HeckeAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend class HeckeElement;
};

class HeckeElement {
 public:
  HeckeElement(HeckeAlgebra owner, std::vector<Field::Elem> coeffs);

  const HeckeAlgebra& owner() const noexcept { return owner_; }
  /// Coefficient vector indexed like owner().elements().
  const std::vector<Field::Elem>& coeffs() const noexcept { return c_; }
  Field::Elem coeff(const CoxeterElement& w) const { return c_[owner_.index(w)]; }

  HeckeElement operator+(const HeckeElement& b) const;
  HeckeElement operator-(const HeckeElement& b) const;
  HeckeElement operator*(const HeckeElement& b) const;
  HeckeElement scaled(Field::Elem c) const;
  /// T_s * this and this * T_s.
  HeckeElement left_mul_generator(unsigned s) const;
  HeckeElement right_mul_generator(unsigned s) const;
  bool operator==(const HeckeElement& b) const;

 private:
  void same_owner(const HeckeElement& b) const;
  HeckeAlgebra owner_;
  std::vector<Field::Elem> c_;
};

HeckeAlgebra hecke_make(const CoxeterType& type, const Field& field,
                        std::vector<Field::Elem> params);
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

struct ParabolicEmbedding {
  HeckeAlgebra sub;
  HeckeAlgebra ambient;
  ParabolicSubset j;
  ParabolicType sub_type;

  /// T_w -> T_w for w in W_J.
  HeckeElement embed(const HeckeElement& x) const;
  CoxeterElement embed_element(const CoxeterElement& w) const;
  /// Sub-algebra reduced word of an element of W_J given in the ambient group.
  std::vector<unsigned> sub_word(const CoxeterElement& w) const;
  bool proper() const { return j.size() < ambient.type().rank(); }
};

ParabolicEmbedding parabolic_subalgebra(const HeckeAlgebra& h, const ParabolicSubset& j);

class HeckeModule {
 public:
  /// Throws InvalidInput unless the matrices satisfy the quadratic and braid
  /// relations of the algebra.
  HeckeModule(HeckeAlgebra owner, std::size_t dim, std::vector<Matrix> actions);
  /// Dimension read off the matrices (the algebra must have rank >= 1).
  HeckeModule(HeckeAlgebra owner, std::vector<Matrix> actions);

  const HeckeAlgebra& owner() const noexcept { return owner_; }
  std::size_t dim() const noexcept { return module_.dim(); }
  const Matrix& action(unsigned s) const { return module_.generator(s); }
  /// rho(T_w).
  Matrix action_of(const CoxeterElement& w) const;
  Matrix action_of_word(const std::vector<unsigned>& word) const;
  const AlgebraModule& as_module() const noexcept { return module_; }

 private:
  HeckeAlgebra owner_;
  AlgebraModule module_;
};

/// Relation check used by the HeckeModule constructor; message on failure.
std::optional<std::string> hecke_relation_failure(const HeckeAlgebra& h,
                                                  const std::vector<Matrix>& actions);

/// Right regular module: basis T_w, T_w . T_s expanded in the T-basis.
HeckeModule regular_module(const HeckeAlgebra& h);

/// One-dimensional modules sending each T_s to q_s or to -1, per class.
HeckeModule linear_module(const HeckeAlgebra& h, const std::vector<bool>& sign_per_class);

/// M tensored over the parabolic subalgebra up to the ambient algebra, on the
/// basis m_k (x) T_x, x running over minimal right coset representatives in
/// (length, window) order, coset major.
HeckeModule induce_module(const ParabolicEmbedding& emb, const HeckeModule& m);

/// Restriction to the parabolic subalgebra.
HeckeModule restrict_module(const ParabolicEmbedding& emb, const HeckeModule& m);

struct SimpleCheck {
  bool simple = false;
  std::optional<Matrix> witness;  // proper invariant subspace when not simple
};

/// Irreducibility over the owner's field.
SimpleCheck hecke_simple_check(const HeckeModule& m, std::uint64_t seed = 0);

/// Simple modules up to isomorphism, from the composition factors of the
/// regular module over a splitting field (the returned modules may live over
/// an extension of the owner's field).  |W| <= 24.
std::vector<HeckeModule> hecke_simples(const HeckeAlgebra& h, std::uint64_t seed = 0);

}  // namespace hcp
