#pragma once

// Brute-force representation theory of small general linear groups.
//
// A GLGroup is a block-diagonal product GL_{n_1}(q) x ... x GL_{n_r}(q)
// inside GL_n(q); for r = 1 it is GL_n(q) itself, and standard Levi
// subgroups are GLGroups in their own right.  Group elements are n x n
// matrices over GF(q) acting on row vectors from the right.  A module of a
// GLGroup is an AlgebraModule over GF(l^d) whose generators are the images
// of generators() in order; representations are homomorphisms,
// rho(gh) = rho(g) rho(h).
//
// Harish-Chandra induction is induction from P of the inflation of a Levi
// module, on the basis x_k (x) t_i of right cosets P t_i; restriction takes
// fixed points of the unipotent radical.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcp/coxeter.hpp"
#include "hcp/field.hpp"
#include "hcp/hecke.hpp"
#include "hcp/matrix.hpp"
#include "hcp/modalg.hpp"

namespace hcp {

class GLGroup {
 public:
  static constexpr std::uint64_t kMaxOrder = 20000;

  /// GL_n(q).
  static GLGroup make(unsigned n, std::uint64_t q);
  /// Block-diagonal product; every block order must be enumerable
  /// (|GL_b(q)| <= kMaxOrder).
  static GLGroup make_product(std::vector<unsigned> blocks, std::uint64_t q);

  unsigned n() const noexcept;
  std::uint64_t q() const noexcept;
  const Field& field() const noexcept;
  const std::vector<unsigned>& blocks() const noexcept;
  /// Order as the product of the block orders.
  std::uint64_t order() const noexcept;

  const std::vector<Matrix>& generators() const noexcept;
  /// Block each generator lives in, and the generator range of a block.
  unsigned generator_block(std::size_t i) const;
  std::pair<std::size_t, std::size_t> block_generators(unsigned b) const;

  /// Block-diagonal and invertible with the block structure of this group.
  bool contains(const Matrix& g) const;
  /// Generator indices w with g = gen[w_1] ... gen[w_k].
  std::vector<std::size_t> word(const Matrix& g) const;

  /// Weyl group: A_{b-1} per block.
  CoxeterType weyl_type() const;
  /// Permutation matrix of w, with entry (w(i), i) equal to one, so that
  /// w -> matrix is a homomorphism.
  Matrix weyl_matrix(const CoxeterElement& w) const;

  struct Impl;
  const Impl& impl() const noexcept { return *impl_; }

 private:
  explicit GLGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// rho on arbitrary group elements from rho on the generators, memoized
/// along the enumeration tree of each block.
class Representation {
 public:
  Representation(GLGroup g, AlgebraModule m);
  const GLGroup& group() const noexcept { return group_; }
  const AlgebraModule& module() const noexcept { return module_; }
  Matrix operator()(const Matrix& g) const;

 private:
  GLGroup group_;
  AlgebraModule module_;
  mutable std::vector<std::unordered_map<std::size_t, Matrix>> cache_;  // per block node
};

enum class Orientation { Upper, Lower };

/// A standard parabolic: the composition must refine the group's blocks.
/// Upper parabolics are block upper triangular, lower ones block lower
/// triangular; both have the block-diagonal Levi.
struct ParabolicDescription {
  std::vector<unsigned> composition;
  Orientation orientation = Orientation::Upper;
};

/// Checks that p refines g's blocks; throws InvalidInput otherwise.
void validate_parabolic(const GLGroup& g, const ParabolicDescription& p);
ParabolicDescription borel(const GLGroup& g, Orientation o = Orientation::Upper);
/// The Levi subgroup as a group of its own (same ambient n).
GLGroup levi(const GLGroup& g, const ParabolicDescription& p);
std::uint64_t parabolic_index(const GLGroup& g, const ParabolicDescription& p);

struct CosetTransversal {
  static constexpr std::size_t kMaxIndex = 5000;

  ParabolicDescription parabolic;
  std::vector<Matrix> reps;  // reps[0] is the identity
  /// For generator g and coset i: t_i g = p t_j with j = target[g][i] and
  /// levi[g][i] the Levi component of p.
  std::vector<std::vector<std::size_t>> target;
  std::vector<std::vector<Matrix>> levi;

  std::size_t index() const noexcept { return reps.size(); }
  /// Coset of an arbitrary element.
  std::size_t coset_of(const Matrix& t) const;
  std::unordered_map<std::string, std::size_t> keys;
};

std::string coset_key(const ParabolicDescription& p, const Matrix& t);
CosetTransversal coset_transversal(const GLGroup& g, const ParabolicDescription& p);

/// Trivial module of dimension one over k.
AlgebraModule trivial_module(const GLGroup& g, const Field& k);
/// Outer tensor product of one module per block of g.
AlgebraModule outer_tensor(const GLGroup& g, const std::vector<AlgebraModule>& per_block);
/// Reorders generator groups: the result is a module of the Levi whose
/// blocks are g's blocks permuted by order (new block i = old block order[i]).
AlgebraModule permute_blocks(const GLGroup& g, const AlgebraModule& m,
                             const std::vector<unsigned>& order);

/// R^G_L X for the Levi of p; X is a module of levi(g, p).
AlgebraModule hc_induce(const GLGroup& g, const ParabolicDescription& p, const AlgebraModule& x);
/// Same, with a precomputed transversal.
AlgebraModule hc_induce(const GLGroup& g, const CosetTransversal& t, const AlgebraModule& x);
/// *R^G_L M: fixed points of the unipotent radical as a module of the Levi.
AlgebraModule hc_restrict(const GLGroup& g, const ParabolicDescription& p, const AlgebraModule& m);

/// Endomorphism algebra of a module: hom_space basis and structure
/// constants, product = matrix product (composition read right to left).
struct EndoAlgebra {
  std::vector<Matrix> basis;
  /// constants[a][b][c]: coefficient of basis[c] in basis[a] * basis[b].
  std::vector<std::vector<std::vector<Field::Elem>>> constants;
  /// Set for principal series: labels[c] is the Weyl group element of basis[c].
  std::vector<CoxeterElement> labels;
  std::size_t dimension() const noexcept { return basis.size(); }
};

EndoAlgebra endo_algebra(const AlgebraModule& m);

/// End_G(k[B\G]) on the orbital basis: B_w is the orbital of the pair
/// (coset of the permutation matrix of w, trivial coset).  The module itself
/// is hc_induce(g, borel(g), trivial) on the same transversal.
struct PrincipalSeries {
  CosetTransversal transversal;
  AlgebraModule module;
  EndoAlgebra endo;
};

PrincipalSeries principal_series(const GLGroup& g, const Field& k);

/// The Hecke algebra expected for End_G(k[B\G]): Weyl type of g, parameter
/// q mod l for every reflection.
HeckeAlgebra principal_series_hecke(const GLGroup& g, const Field& k);

/// Generator matrices of Hom_G(source, target) as a right module over the
/// principal series Hecke algebra: row i of matrix s holds the coordinates of
/// B_s * F_i in the hom basis F.
std::vector<Matrix> hom_module_actions(const PrincipalSeries& ps, const GLGroup& g,
                                       const HomSpace& hom);

/// Simple modules of the Harish-Chandra series of (levi(g,p), x): the
/// composition factors S of R^G_L x with Hom_G(R^G_L x, S) nonzero, over a
/// splitting field.
std::vector<AlgebraModule> series_simples(const GLGroup& g, const ParabolicDescription& p,
                                          const AlgebraModule& x, std::uint64_t seed = 0);

/// Composition factors of k[B_L\L] killed by Harish-Chandra restriction to
/// every maximal parabolic of L.  Throws Error "no cuspidal unipotent
/// module at these parameters" if there is none.
std::vector<AlgebraModule> find_cuspidal_unipotent(const GLGroup& l, const Field& k,
                                                   std::uint64_t seed = 0);

/// Outer tensor product over the blocks of the first cuspidal unipotent
/// module of each GL_b(q), over a common field.
AlgebraModule cuspidal_unipotent_product(const std::vector<unsigned>& blocks, std::uint64_t q,
                                         const Field& k, std::uint64_t seed = 0);

enum class DiagramVerdict { Commutes, Fails, Degenerate };

struct Lemma1Result {
  DiagramVerdict verdict = DiagramVerdict::Fails;
  std::size_t path1_dim = 0, path2_dim = 0;
  std::string report;
};

/// Principal series form of the comparison: Hom_G(k[B\G], R^G_L Y) as a
/// Hecke module against the induction of Hom_L(k[B_L\L], Y) along the
/// parabolic subalgebra for L.  l_composition refines g's blocks.
Lemma1Result check_lemma1_diagram(const GLGroup& g, const std::vector<unsigned>& l_composition,
                                  const AlgebraModule& y, std::uint64_t seed = 0);

/// Proper standard Levis containing a block permutation of l0, each with the
/// permutations that fit inside it.
struct LeviCandidate {
  std::vector<unsigned> composition;
  std::vector<std::vector<unsigned>> l0_orders;  // order[i] = original L_0 block index
};
std::vector<LeviCandidate> levis_containing(const std::vector<unsigned>& l0, unsigned n);

struct OracleSimple {
  AlgebraModule module;
  bool imprimitive = false;
  std::vector<unsigned> witness_levi;   // composition of L with R^G_L X' = S
  std::vector<unsigned> witness_order;  // L_0 block order inside L
  std::size_t witness_dim = 0;          // dim X'
};

struct OracleResult {
  std::vector<OracleSimple> simples;
  std::size_t levis_tested = 0;
  bool any_imprimitive() const;
};

/// Decides imprimitivity of every simple in the (L_0, X_0)-series of GL_n(q)
/// by testing R^G_L X' = S for every proper standard Levi L containing a
/// conjugate of L_0 and every X' in the series of L.  x0 is a module of the
/// Levi with composition l0 (blocks in the given order).
OracleResult oracle_primitivity(const GLGroup& g, const std::vector<unsigned>& l0,
                                const AlgebraModule& x0, std::uint64_t seed = 0);

/// Spot check of the group relations on a module: the relations satisfied by
/// the generators (orders and the orders of pairwise products) hold for rho.
bool check_group_relations(const GLGroup& g, const AlgebraModule& m);

}  // namespace hcp
