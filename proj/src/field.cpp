#include "hcp/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hcp/error.hpp"

namespace hcp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t d = 0;
  while (q % p == 0) {
    q /= p;
    ++d;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), d};
}

std::uint32_t multiplicative_order(std::uint64_t q, std::uint32_t ell) {
  if (!is_prime(ell)) throw InvalidInput("ell = " + std::to_string(ell) + " is not prime");
  if (q % ell == 0)
    throw DefiningCharacteristic("ell = " + std::to_string(ell) + " divides q = " +
                                 std::to_string(q));
  std::uint64_t r = q % ell, x = r;
  std::uint32_t e = 1;
  while (x != 1) {
    x = (x * r) % ell;
    ++e;
  }
  return e;
}

std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t d) {
  // Constant term first, monic.
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>
      table = {
          {{2, 2}, {1, 1, 1}},          {{2, 3}, {1, 1, 0, 1}},
          {{2, 4}, {1, 1, 0, 0, 1}},    {{2, 5}, {1, 0, 1, 0, 0, 1}},
          {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
          {{3, 2}, {2, 2, 1}},          {{3, 3}, {1, 2, 0, 1}},
          {{3, 4}, {2, 0, 0, 2, 1}},    {{3, 5}, {1, 2, 0, 0, 0, 1}},
          {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
          {{5, 2}, {2, 4, 1}},          {{5, 3}, {3, 3, 0, 1}},
          {{5, 4}, {2, 4, 4, 0, 1}},    {{5, 5}, {3, 4, 0, 0, 0, 1}},
          {{5, 6}, {2, 0, 1, 4, 1, 0, 1}},
          {{7, 2}, {3, 6, 1}},          {{7, 3}, {4, 0, 6, 1}},
          {{7, 4}, {3, 4, 5, 0, 1}},    {{7, 5}, {4, 1, 0, 0, 0, 1}},
          {{7, 6}, {3, 6, 4, 5, 1, 0, 1}},
      };
  auto it = table.find({p, d});
  return it == table.end() ? std::vector<std::uint32_t>{} : it->second;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t k = 0; k <= dm; ++k)
      a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + (p - c) * m[k]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + a[i] * b[j]) % p);
  trim(r);
  return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_over_prime_field(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= deg; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(k + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[k] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

struct Field::Tables {
  std::uint32_t p = 0, d = 0, q = 0;
  Poly modulus;
  Elem primitive = 0;
  std::vector<std::uint32_t> log;
  std::vector<Elem> exp;
  std::vector<Elem> neg;
  std::vector<Elem> add;  // q*q table for small extension fields
};

Field::Field(std::shared_ptr<const Tables> t)
    : tables_(std::move(t)),
      p_(tables_->p),
      d_(tables_->d),
      q_(tables_->q),
      primitive_(tables_->primitive),
      log_(tables_->log.empty() ? nullptr : tables_->log.data()),
      exp_(tables_->exp.empty() ? nullptr : tables_->exp.data()) {}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->d = 1;
  t->q = p;
  t->modulus = {0, 1};
  if (p == 2) {
    t->primitive = 1;
  } else {
    for (Elem g = 2; g < p; ++g) {
      std::uint64_t x = g;
      std::uint32_t ord = 1;
      while (x != 1) {
        x = (x * g) % p;
        ++ord;
      }
      if (ord == p - 1) {
        t->primitive = g;
        break;
      }
    }
  }
  return Field(std::move(t));
}

Field Field::make(std::uint32_t p, std::uint32_t d) {
  if (d == 0) throw InvalidInput("field degree must be positive");
  if (d == 1) return prime(p);
  Poly m = conway_polynomial(p, d);
  if (m.empty())
    throw InvalidInput("no built-in modulus for GF(" + std::to_string(p) + "^" +
                       std::to_string(d) + ")");
  return with_modulus(p, std::move(m));
}

Field Field::of_order(std::uint64_t q) {
  auto [p, d] = prime_power(q);
  if (p == 0) throw InvalidInput(std::to_string(q) + " is not a prime power");
  return make(p, d);
}

Field Field::with_modulus(std::uint32_t p, Poly modulus) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    throw InvalidInput("modulus must be monic of positive degree");
  const std::uint32_t d = static_cast<std::uint32_t>(modulus.size() - 1);
  if (d == 1) return prime(p);
  if (!irreducible_over_prime_field(modulus, p)) throw InvalidInput("modulus is reducible");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < d; ++i) q64 *= p;
  if (q64 > (1u << 22)) throw SizeLimit("field too large for table arithmetic");
  const auto q = static_cast<std::uint32_t>(q64);

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->d = d;
  t->q = q;
  t->modulus = modulus;

  auto decode = [&](Elem a) {
    Poly c(d, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  };
  auto encode = [&](const Poly& c) {
    Elem a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
    return a;
  };

  t->neg.resize(q);
  for (Elem a = 0; a < q; ++a) {
    Poly c = decode(a);
    for (auto& x : c) x = (p - x) % p;
    t->neg[a] = encode(c);
  }
  if (q <= 256) {
    t->add.resize(static_cast<std::size_t>(q) * q);
    for (Elem a = 0; a < q; ++a) {
      Poly ca = decode(a);
      for (Elem b = 0; b < q; ++b) {
        Poly cb = decode(b);
        for (std::uint32_t i = 0; i < d; ++i) cb[i] = (cb[i] + ca[i]) % p;
        t->add[static_cast<std::size_t>(a) * q + b] = encode(cb);
      }
    }
  }

  // Search for a primitive element; x itself for Conway moduli.
  std::vector<std::uint64_t> prime_divisors;
  {
    std::uint64_t n = q - 1;
    for (std::uint64_t k = 2; k * k <= n; ++k)
      if (n % k == 0) {
        prime_divisors.push_back(k);
        while (n % k == 0) n /= k;
      }
    if (n > 1) prime_divisors.push_back(n);
  }
  auto mulpoly = [&](Elem a, Elem b) {
    Poly r = poly_mod(poly_mul(decode(a), decode(b), p), modulus, p);
    r.resize(d, 0);
    return encode(r);
  };
  auto powpoly = [&](Elem a, std::uint64_t e) {
    Elem r = 1, b = a;
    while (e) {
      if (e & 1) r = mulpoly(r, b);
      b = mulpoly(b, b);
      e >>= 1;
    }
    return r;
  };
  Elem gen = 0;
  for (Elem cand = p; cand < q && gen == 0; ++cand) {
    bool ok = powpoly(cand, q - 1) == 1;
    for (auto r : prime_divisors) ok = ok && powpoly(cand, (q - 1) / r) != 1;
    if (ok) gen = cand;
  }
  if (gen == 0) throw Error("no primitive element found");
  t->primitive = gen;
  t->exp.resize(q - 1);
  t->log.assign(q, 0);
  Elem x = 1;
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    t->exp[k] = x;
    t->log[x] = k;
    x = mulpoly(x, gen);
  }
  return Field(std::move(t));
}

const std::vector<std::uint32_t>& Field::modulus() const { return tables_->modulus; }

Field::Elem Field::add_ext(Elem a, Elem b) const noexcept {
  if (!tables_->add.empty()) return tables_->add[static_cast<std::size_t>(a) * q_ + b];
  Elem r = 0, w = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    r += ((a % p_ + b % p_) % p_) * w;
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return r;
}

Field::Elem Field::neg_ext(Elem a) const noexcept { return tables_->neg[a]; }

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw InvalidInput("inverse of zero");
  if (d_ == 1) return pow(a, p_ - 2);
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

void Field::axpy(Elem* dst, const Elem* src, Elem c, std::size_t n) const noexcept {
  if (c == 0) return;
  if (d_ == 1) {
    const std::uint64_t cc = c;
    for (std::size_t k = 0; k < n; ++k)
      if (src[k]) dst[k] = static_cast<Elem>((dst[k] + cc * src[k]) % p_);
    return;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (src[k]) dst[k] = add(dst[k], mul(c, src[k]));
}

void Field::scale(Elem* v, Elem c, std::size_t n) const noexcept {
  for (std::size_t k = 0; k < n; ++k) v[k] = mul(v[k], c);
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(d_, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Field::Elem Field::from_coefficients(const std::vector<std::uint32_t>& c) const {
  Elem a = 0;
  for (std::size_t i = std::min<std::size_t>(c.size(), d_); i-- > 0;) a = a * p_ + c[i] % p_;
  return a;
}

std::string Field::format(Elem a) const {
  if (d_ == 1) return std::to_string(a);
  auto c = coefficients(a);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return first ? "0" : os.str();
}

bool Field::operator==(const Field& other) const noexcept {
  if (tables_ == other.tables_) return true;
  return p_ == other.p_ && d_ == other.d_ && tables_->modulus == other.tables_->modulus;
}

FieldElement::FieldElement(Field f, Field::Elem code) : field_(std::move(f)), code_(code) {
  if (code_ >= field_.order()) throw InvalidInput("element code out of range");
}

const Field& FieldElement::same_owner(const FieldElement& o) const {
  if (field_ != o.field_) throw InvalidInput("field elements from different fields");
  return field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {same_owner(o), field_.add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {same_owner(o), field_.sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {same_owner(o), field_.mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {same_owner(o), field_.div(code_, o.code_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(code_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(code_)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && code_ == o.code_;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.field().format(a.code());
}

}  // namespace hcp
