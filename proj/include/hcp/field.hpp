#pragma once

// Finite fields GF(p^d).
//
// Elements are encoded as integers in [0, p^d): the element
// c_0 + c_1 x + ... + c_{d-1} x^{d-1} of GF(p)[x]/(f) has code
// c_0 + c_1 p + ... + c_{d-1} p^{d-1}.  In particular the integers
// 0..p-1 are the prime subfield, and 0 and 1 are the field's zero and one.
//
// A Field is a cheap handle onto immutable shared tables.

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace hcp {

bool is_prime(std::uint64_t n);

/// Returns (p, d) with q = p^d, or (0, 0) if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

/// Least e >= 1 with q^e = 1 mod ell.  Throws DefiningCharacteristic if
/// ell divides q.
std::uint32_t multiplicative_order(std::uint64_t q, std::uint32_t ell);

/// Built-in Conway polynomial for p in {2,3,5,7}, 2 <= d <= 6, as
/// coefficients from constant term up to the leading 1.  Empty if absent.
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t d);

class Field {
 public:
  using Elem = std::uint32_t;

  /// GF(p).
  static Field prime(std::uint32_t p);
  /// GF(p^d) defined by the built-in modulus table.
  static Field make(std::uint32_t p, std::uint32_t d);
  /// GF(q) for a prime power q, built-in modulus.
  static Field of_order(std::uint64_t q);
  /// GF(p^d) with an explicit monic modulus (constant term first).  The
  /// modulus is checked for irreducibility.
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return d_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return d_ == 1; }
  /// Monic modulus, constant term first.  Degree one fields report x.
  const std::vector<std::uint32_t>& modulus() const;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// Image of an integer under Z -> GF(p) -> GF(p^d).
  Elem from_int(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  /// A generator of the multiplicative group.
  Elem primitive_element() const noexcept { return primitive_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (d_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (d_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_ext(a);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (d_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  /// Multiplicative inverse; throws InvalidInput on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// dst[k] += c * src[k] for k < n.
  void axpy(Elem* dst, const Elem* src, Elem c, std::size_t n) const noexcept;
  /// v[k] *= c for k < n.
  void scale(Elem* v, Elem c, std::size_t n) const noexcept;

  /// Coefficients of x^0..x^{d-1} of an element.
  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<std::uint32_t>& c) const;

  /// "3" over prime fields, "2+x^2" style (x the adjoined root) otherwise.
  std::string format(Elem a) const;

  /// Same characteristic, degree and modulus.
  bool operator==(const Field& other) const noexcept;
  bool operator!=(const Field& other) const noexcept { return !(*this == other); }

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t);
  Elem add_ext(Elem a, Elem b) const noexcept;
  Elem neg_ext(Elem a) const noexcept;

  std::shared_ptr<const Tables> tables_;
  std::uint32_t p_ = 0, d_ = 0, q_ = 0;
  Elem primitive_ = 0;
  const std::uint32_t* log_ = nullptr;
  const Elem* exp_ = nullptr;
};

/// An element carrying its field; arithmetic checks that owners agree.
class FieldElement {
 public:
  FieldElement(Field f, Field::Elem code);
  static FieldElement from_int(const Field& f, std::int64_t n) { return {f, f.from_int(n)}; }

  const Field& field() const noexcept { return field_; }
  Field::Elem code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  bool operator==(const FieldElement& o) const;

 private:
  const Field& same_owner(const FieldElement& o) const;
  Field field_;
  Field::Elem code_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

}  // namespace hcp
