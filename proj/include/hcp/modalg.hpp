#pragma once

// Modules over finite-dimensional algebras, given by the action matrices of
// a fixed generating set.  Vectors are rows and generators act on the right,
// so a submodule is a subspace U with U * A_i contained in U for every i.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcp/field.hpp"
#include "hcp/matrix.hpp"

namespace hcp {

class AlgebraModule {
 public:
  AlgebraModule(Field f, std::size_t dim, std::vector<Matrix> generators);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }
  const std::vector<Matrix>& generators() const noexcept { return gens_; }
  const Matrix& generator(std::size_t i) const { return gens_.at(i); }

  /// Module on the contragredient space: generator matrices transposed.
  AlgebraModule transposed() const;
  /// Same module written in the basis given by the rows of change (invertible).
  AlgebraModule rebased(const Matrix& change) const;
  /// Scalars extended to big, which must contain field() (see embed_field).
  AlgebraModule extend_scalars(const Field& big) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Matrix> gens_;
};

AlgebraModule direct_sum(const AlgebraModule& a, const AlgebraModule& b);

/// Images of the codes of small under the Conway-compatible embedding into
/// big (small must be a subfield of big).
std::vector<Field::Elem> embed_field(const Field& small, const Field& big);

/// Rows span a subspace; invariant under every generator for a submodule.
struct SubmoduleWitness {
  Matrix basis;  // reduced echelon form
};

/// Smallest submodule containing the rows of seeds.
SubmoduleWitness spin(const AlgebraModule& m, const Matrix& seeds);
bool is_submodule(const AlgebraModule& m, const Matrix& basis);

/// Action on a submodule spanned by the rows of an echelon basis.
AlgebraModule submodule_action(const AlgebraModule& m, const Matrix& basis);
/// Action on the quotient by a submodule; the quotient basis is the images
/// of the standard vectors at non-pivot columns.
AlgebraModule quotient_action(const AlgebraModule& m, const Matrix& basis);

struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<SubmoduleWitness> witness;  // set when reducible
};

struct MeataxeOptions {
  int max_samples = 200;
  std::size_t exhaustive_dim = 8;
  /// Check absolute irreducibility when the conclusive factor is not linear.
  bool require_split = true;
};

/// Holt-Rees version of the Norton irreducibility test.  Deterministic in
/// (m, seed).  Throws NonSplit if the module is irreducible but its
/// endomorphism ring is larger than the field (require_split), and Error if
/// the sampling budget is exhausted above the exhaustive fallback bound.
IrreducibilityResult meataxe_irreducible(const AlgebraModule& m, std::uint64_t seed,
                                         const MeataxeOptions& opts = {});

/// Brute force: spins every projective point.  Reference oracle for small
/// modules.
IrreducibilityResult exhaustive_irreducible(const AlgebraModule& m);

struct CompositionFactor {
  AlgebraModule module;
  std::size_t multiplicity;
};

/// Composition factors up to isomorphism, sorted by (dimension, discovery).
/// dim(m) <= 200.  Non-split factors throw NonSplit (see split_composition_factors).
std::vector<CompositionFactor> composition_factors(const AlgebraModule& m, std::uint64_t seed = 0);

/// Composition factors over a splitting field: on NonSplit the whole module
/// is moved to the extension of degree (field degree * endomorphism degree)
/// and the computation is redone, up to total degree 6.
std::vector<CompositionFactor> split_composition_factors(const AlgebraModule& m,
                                                         std::uint64_t seed = 0);

/// All composition factors in series order (with repeats).
std::vector<AlgebraModule> composition_series(const AlgebraModule& m, std::uint64_t seed = 0);

struct HomSpace {
  std::vector<Matrix> basis;  // dim(M) x dim(N) matrices F with A_i F = F B_i
  std::size_t dimension() const noexcept { return basis.size(); }
};

/// All module homomorphisms M -> N.
HomSpace hom_space(const AlgebraModule& m, const AlgebraModule& n);

/// An invertible intertwiner M -> N if one exists.
std::optional<Matrix> module_iso(const AlgebraModule& m, const AlgebraModule& n,
                                 std::uint64_t seed = 0);

}  // namespace hcp
