#pragma once

// Univariate polynomials over a finite field, coefficients stored from the
// constant term up.  The zero polynomial is the empty vector.

#include <cstdint>
#include <vector>

#include "hcp/field.hpp"
#include "hcp/matrix.hpp"

namespace hcp {

class Polynomial {
 public:
  using Elem = Field::Elem;

  explicit Polynomial(Field f) : field_(std::move(f)) {}
  Polynomial(Field f, std::vector<Elem> coeffs);
  static Polynomial x(const Field& f) { return {f, {0, 1}}; }
  static Polynomial constant(const Field& f, Elem c) { return {f, {c}}; }

  const Field& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  Polynomial operator+(const Polynomial& b) const;
  Polynomial operator-(const Polynomial& b) const;
  Polynomial operator*(const Polynomial& b) const;
  Polynomial operator%(const Polynomial& b) const;
  Polynomial operator/(const Polynomial& b) const;
  bool operator==(const Polynomial& b) const noexcept { return c_ == b.c_; }

  Polynomial monic() const;
  /// Evaluate at a square matrix.
  Matrix evaluate(const Matrix& a) const;

 private:
  void trim();
  Field field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor.
Polynomial gcd(Polynomial a, Polynomial b);
/// base^e mod m.
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m);

/// Characteristic polynomial det(xI - A), via reduction to Hessenberg form.
Polynomial characteristic_polynomial(const Matrix& a);

/// Distinct-degree splitting: entry k-1 is the product of the distinct
/// monic irreducible factors of degree exactly k of f, for k <= max_degree.
std::vector<Polynomial> distinct_degree_parts(const Polynomial& f, long max_degree);

/// Monic irreducible factors of a squarefree f whose irreducible factors all
/// have degree k (Cantor-Zassenhaus), sorted by coefficients.  Deterministic
/// in seed.
std::vector<Polynomial> equal_degree_factors(const Polynomial& f, long k, std::uint64_t seed = 0);

}  // namespace hcp
