#pragma once

// Finite Coxeter groups that are products of type A and type B factors.
//
// Elements are stored as concatenated (signed) permutation windows: a factor
// A_n contributes the images of n+1 points, B_n the signed images of n
// points.  Points are numbered globally from 1, factor after factor.
//
// Simple reflections are numbered globally from 0, factor by factor.  Inside
// A_n, local reflection i swaps points i+1 and i+2; inside B_n, local
// reflection 0 negates point 1 and local reflection i >= 1 swaps points i
// and i+1.  Products compose as functions: (uv)(i) = u(v(i)).

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hcp {

enum class CoxeterKind { A, B };

struct CoxeterFactor {
  CoxeterKind kind;
  unsigned rank;
  bool operator==(const CoxeterFactor&) const = default;
};

class CoxeterType {
 public:
  CoxeterType() = default;
  explicit CoxeterType(std::vector<CoxeterFactor> factors);
  /// "A2", "B3", "A1xA1", "" (trivial), case-insensitive kind letters.
  static CoxeterType parse(const std::string& text);

  const std::vector<CoxeterFactor>& factors() const noexcept { return factors_; }
  /// Number of simple reflections.
  unsigned rank() const noexcept { return rank_; }
  /// Group order, saturating at UINT64_MAX.
  std::uint64_t order() const noexcept;
  /// Total number of window points.
  unsigned points() const noexcept { return points_; }

  /// (factor index, local index) of a global simple reflection.
  std::pair<unsigned, unsigned> locate(unsigned s) const;
  unsigned first_reflection(unsigned factor) const { return first_reflection_.at(factor); }
  unsigned first_point(unsigned factor) const { return first_point_.at(factor); }

  /// Order of s_i s_j.
  unsigned braid_order(unsigned i, unsigned j) const;
  /// Conjugacy classes of simple reflections, as a class id per reflection;
  /// class ids are dense and numbered in order of first appearance.
  std::vector<unsigned> reflection_classes() const;

  std::string to_string() const;
  bool operator==(const CoxeterType& o) const { return factors_ == o.factors_; }

 private:
  std::vector<CoxeterFactor> factors_;
  std::vector<unsigned> first_reflection_, first_point_;
  unsigned rank_ = 0, points_ = 0;
};

class CoxeterElement {
 public:
  CoxeterElement() = default;
  explicit CoxeterElement(std::vector<std::int8_t> window) : w_(std::move(window)) {}
  /// Signed images of the points 1..N, concatenated over the factors.
  const std::vector<std::int8_t>& window() const noexcept { return w_; }
  auto operator<=>(const CoxeterElement&) const = default;

 private:
  std::vector<std::int8_t> w_;
};

struct CoxeterElementHash {
  std::size_t operator()(const CoxeterElement& e) const noexcept;
};

/// A set of simple reflections (global indices, sorted, distinct).
using ParabolicSubset = std::vector<unsigned>;

/// The Coxeter type of W_J together with the correspondence between J and
/// the simple reflections of that type.
struct ParabolicType {
  CoxeterType type;
  std::vector<unsigned> to_ambient;  // sub reflection -> ambient reflection
  std::vector<int> to_sub;           // ambient reflection -> sub reflection or -1
};

class CoxeterGroup {
 public:
  static constexpr std::uint64_t kMaxEnumeration = 100000;

  explicit CoxeterGroup(CoxeterType type);
  const CoxeterType& type() const noexcept { return type_; }
  unsigned rank() const noexcept { return type_.rank(); }
  std::uint64_t order() const noexcept { return type_.order(); }

  CoxeterElement identity() const;
  CoxeterElement generator(unsigned s) const;
  /// Element represented by a word in simple reflections; invalid indices
  /// throw InvalidInput.
  CoxeterElement reduce(const std::vector<unsigned>& word) const;

  CoxeterElement multiply(const CoxeterElement& a, const CoxeterElement& b) const;
  CoxeterElement inverse(const CoxeterElement& a) const;
  /// s * w and w * s without building the generator.
  CoxeterElement left_multiply(unsigned s, const CoxeterElement& w) const;
  CoxeterElement right_multiply(const CoxeterElement& w, unsigned s) const;

  unsigned length(const CoxeterElement& w) const;
  bool is_left_descent(unsigned s, const CoxeterElement& w) const;
  bool is_right_descent(const CoxeterElement& w, unsigned s) const;
  /// Lexicographically first reduced word read from the left.
  std::vector<unsigned> reduced_word(const CoxeterElement& w) const;
  CoxeterElement longest_element() const;

  /// All elements, sorted by (length, window); order <= kMaxEnumeration.
  std::vector<CoxeterElement> enumerate() const;

  /// Elements of W_J, sorted by (length, window).
  std::vector<CoxeterElement> parabolic_elements(const ParabolicSubset& j) const;
  /// Minimal-length representatives of the right cosets W_J x, sorted by
  /// (length, window).
  std::vector<CoxeterElement> min_coset_reps(const ParabolicSubset& j) const;
  /// w = u x with u in W_J and x a minimal right coset representative.
  std::pair<CoxeterElement, CoxeterElement> coset_factor(const ParabolicSubset& j,
                                                         const CoxeterElement& w) const;

  /// Sort key used for every listing above.
  bool less(const CoxeterElement& a, const CoxeterElement& b) const;

 private:
  void check_reflection(unsigned s) const;
  void check_element(const CoxeterElement& w) const;
  CoxeterType type_;
  // Per point: which factor it belongs to and whether that factor is type B.
  std::vector<unsigned> point_factor_;
};

/// Validates J (sorted, distinct, in range) and returns it normalized.
ParabolicSubset normalize_subset(const CoxeterType& t, ParabolicSubset j);

/// Type of the parabolic subgroup W_J: maximal runs of consecutive local
/// reflections inside a factor; a run containing the sign change of a B
/// factor is of type B, every other run of type A.
ParabolicType parabolic_type(const CoxeterType& t, const ParabolicSubset& j);

}  // namespace hcp
