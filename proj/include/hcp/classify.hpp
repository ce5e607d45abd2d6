#pragma once

// Primitivity of unipotent Harish-Chandra series by cuspidal shape.
//
// For GL_n(q) with e the order of q mod l, a cuspidal unipotent pair has
// Levi GL_1(q)^{m_-1} x prod_i GL_{e l^i}(q)^{m_i}.  A shape records
// m_-1 and the (i, m_i) with m_i >= 1; for e = 1 the i = 0 blocks are GL_1
// and are folded into m_-1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcp/coxeter.hpp"

namespace hcp {

enum class GroupKind { GL, GU, Sp, CSp, SO };

std::string to_string(GroupKind k);
/// "GL", "GU", "Sp", "CSp", "SO" (case-insensitive).
GroupKind parse_group_kind(const std::string& s);

struct GroupCase {
  GroupKind kind = GroupKind::GL;
  unsigned n = 1;
  std::uint64_t q = 2;
  std::uint32_t l = 3;
};

/// Throws InvalidInput (DefiningCharacteristic when l | q) unless q is a
/// prime power, l a prime, and the parity constraints of the kind hold.
void validate_case(const GroupCase& c);

struct ShapeBlock {
  unsigned i = 0;
  unsigned m = 0;
  bool operator==(const ShapeBlock&) const = default;
};

struct CuspidalShapeGL {
  unsigned n = 0, e = 1;
  std::uint32_t l = 2;
  unsigned m_minus1 = 0;
  std::vector<ShapeBlock> blocks;  // strictly increasing i

  /// Block sizes of L_0: m_-1 ones, then e l^i repeated m_i times.
  std::vector<unsigned> levi_blocks() const;
  bool operator==(const CuspidalShapeGL&) const = default;
};

/// Canonical form: zero blocks dropped, equal i merged, sorted, e = 1 folding.
/// Throws InvalidInput if the parameters or the size constraint are violated.
CuspidalShapeGL make_shape(unsigned n, unsigned e, std::uint32_t l, unsigned m_minus1,
                           std::vector<ShapeBlock> blocks);
void validate_shape(const CuspidalShapeGL& s);

/// All canonical shapes, m_-1 descending, then blocks in lexicographic
/// order of (m_0, m_1, ...) descending.
std::vector<CuspidalShapeGL> enumerate_cuspidal_shapes(unsigned n, unsigned e, std::uint32_t l);

/// "1^a+(e*l^i)^m+..." with blocks in increasing i.
std::string format_shape(const CuspidalShapeGL& s);
/// Parses the text form; e and l inside the blocks must match.
CuspidalShapeGL parse_shape(const std::string& text, unsigned n, unsigned e, std::uint32_t l);

/// Composition [m_-1, e m_i l^i ...] with zero parts dropped, ascending.
std::vector<unsigned> min_split_levi(const CuspidalShapeGL& s);
/// Block permutation part of the relative Weyl group.
CoxeterType relative_weyl_group(const CuspidalShapeGL& s);
/// The proper Levi with equal normalizers, if there is one.
std::optional<std::vector<unsigned>> normalizer_equality_exists(const CuspidalShapeGL& s);

enum class Verdict { Primitive, Imprimitive };
std::string to_string(Verdict v);

struct PrimitivityVerdict {
  Verdict verdict = Verdict::Primitive;
  std::vector<unsigned> witness;  // set for Imprimitive
  std::string clause;
};

/// Verdict read off the shape alone: primitive iff pure.
PrimitivityVerdict shape_verdict(const CuspidalShapeGL& s);

/// shape is required exactly for GL and must match (n, e, l) of the case.
PrimitivityVerdict is_primitive_unipotent(const GroupCase& c,
                                          const std::optional<CuspidalShapeGL>& shape);

enum class FactorKind { Linear, Unitary };

struct JordanFactor {
  FactorKind kind = FactorKind::Linear;
  unsigned n = 1;
  std::uint64_t q = 2;
  std::optional<CuspidalShapeGL> shape;  // linear factors only
  std::string label;                     // opaque cuspidal data for unitary factors
};

struct JordanFactorList {
  std::uint32_t l = 2;
  std::vector<JordanFactor> factors;
};

void validate_factors(const JordanFactorList& f);
PrimitivityVerdict is_primitive_series(const JordanFactorList& f);

}  // namespace hcp
