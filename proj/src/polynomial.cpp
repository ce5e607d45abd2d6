#include "hcp/polynomial.hpp"

#include <algorithm>
#include <random>

#include "hcp/error.hpp"

namespace hcp {

Polynomial::Polynomial(Field f, std::vector<Elem> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& b) const {
  std::vector<Elem> r(std::max(c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    Elem x = k < c_.size() ? c_[k] : 0, y = k < b.c_.size() ? b.c_[k] : 0;
    r[k] = field_.add(x, y);
  }
  return {field_, std::move(r)};
}

Polynomial Polynomial::operator-(const Polynomial& b) const {
  std::vector<Elem> r(std::max(c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    Elem x = k < c_.size() ? c_[k] : 0, y = k < b.c_.size() ? b.c_[k] : 0;
    r[k] = field_.sub(x, y);
  }
  return {field_, std::move(r)};
}

Polynomial Polynomial::operator*(const Polynomial& b) const {
  if (is_zero() || b.is_zero()) return Polynomial(field_);
  std::vector<Elem> r(c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) field_.axpy(r.data() + i, b.c_.data(), c_[i], b.c_.size());
  return {field_, std::move(r)};
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  const Field& f = a.field();
  std::vector<Field::Elem> r = a.coeffs();
  const auto& d = b.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial(f), a};
  std::vector<Field::Elem> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Field::Elem lead_inv = f.inv(b.leading());
  for (long k = a.degree(); k >= db; --k) {
    const Field::Elem c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Field::Elem t = f.mul(c, lead_inv);
    q[static_cast<std::size_t>(k - db)] = t;
    f.axpy(r.data() + (k - db), d.data(), f.neg(t), d.size());
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
}

Polynomial Polynomial::operator%(const Polynomial& b) const { return divmod(*this, b).second; }
Polynomial Polynomial::operator/(const Polynomial& b) const { return divmod(*this, b).first; }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Elem> r = c_;
  field_.scale(r.data(), field_.inv(leading()), r.size());
  return {field_, std::move(r)};
}

Matrix Polynomial::evaluate(const Matrix& a) const {
  if (a.rows() != a.cols()) throw InvalidInput("evaluate at non-square matrix");
  Matrix r(a.field(), a.rows(), a.cols());
  for (std::size_t k = c_.size(); k-- > 0;) {
    r = r * a;
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) = field_.add(r(i, i), c_[k]);
  }
  return r;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m) {
  Polynomial r = Polynomial::constant(base.field(), 1) % m;
  Polynomial b = base % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

Polynomial characteristic_polynomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("characteristic polynomial of non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Field::Elem inv = f.inv(h(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      const Field::Elem u = f.mul(h(k, j), inv);
      // row_k -= u * row_{j+1}; col_{j+1} += u * col_k
      for (std::size_t c = 0; c < n; ++c) h(k, c) = f.sub(h(k, c), f.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, k)));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_{i,m} (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}
  std::vector<Polynomial> p;
  p.emplace_back(f, std::vector<Field::Elem>{1});
  for (std::size_t m = 0; m < n; ++m) {
    Polynomial next = (Polynomial::x(f) - Polynomial::constant(f, h(m, m))) * p[m];
    Field::Elem prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod == 0) break;
      const Field::Elem c = f.mul(h(i, m), prod);
      if (c != 0) next = next - Polynomial::constant(f, c) * p[i];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

std::vector<Polynomial> distinct_degree_parts(const Polynomial& f, long max_degree) {
  const Field& F = f.field();
  std::vector<Polynomial> parts;
  if (f.degree() < 1) return parts;
  const Polynomial x = Polynomial::x(F);
  Polynomial h = x % f;
  for (long k = 1; k <= std::min(max_degree, f.degree()); ++k) {
    h = powmod(h, F.order(), f);
    Polynomial g = gcd(h - x, f);
    for (long j = 1; j < k; ++j)
      if (k % j == 0 && parts[static_cast<std::size_t>(j - 1)].degree() > 0)
        g = g / parts[static_cast<std::size_t>(j - 1)];
    parts.push_back(g.monic());
  }
  return parts;
}

namespace {

// Splitting polynomial for a random a: a^((q^k - 1) / 2) - 1 for odd q, the
// absolute trace a + a^2 + ... + a^(2^(dk-1)) for q = 2^d.
Polynomial splitter(const Polynomial& a, long k, const Polynomial& f) {
  const Field& F = f.field();
  if (F.characteristic() == 2) {
    Polynomial t = a % f, term = a % f;
    const long steps = static_cast<long>(F.degree()) * k;
    for (long j = 1; j < steps; ++j) {
      term = (term * term) % f;
      t = t + term;
    }
    return t;
  }
  // (q^k - 1) / 2 = (q - 1) / 2 * (1 + q + ... + q^(k-1)).
  Polynomial c = powmod(a, (F.order() - 1) / 2, f);
  Polynomial r = c;
  for (long j = 1; j < k; ++j) {
    c = powmod(c, F.order(), f);
    r = (r * c) % f;
  }
  return r - Polynomial::constant(F, 1);
}

}  // namespace

std::vector<Polynomial> equal_degree_factors(const Polynomial& f, long k, std::uint64_t seed) {
  if (k < 1 || f.degree() < k || f.degree() % k != 0)
    throw InvalidInput("equal-degree factorization needs degree a multiple of k");
  const Field& F = f.field();
  std::mt19937_64 rng(seed ^ 0x45444621ull);
  std::vector<Polynomial> done, todo{f.monic()};
  while (!todo.empty()) {
    Polynomial g = todo.back();
    todo.pop_back();
    if (g.degree() == k) {
      done.push_back(g);
      continue;
    }
    while (true) {
      std::vector<Field::Elem> c(static_cast<std::size_t>(g.degree()));
      for (auto& x : c) x = static_cast<Field::Elem>(rng() % F.order());
      const Polynomial a(F, c);
      if (a.degree() < 1) continue;
      const Polynomial d = gcd(splitter(a, k, g), g);
      if (d.degree() <= 0 || d.degree() == g.degree()) continue;
      todo.push_back(d);
      todo.push_back((g / d).monic());
      break;
    }
  }
  std::sort(done.begin(), done.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.coeffs() < b.coeffs(); });
  return done;
}

}  // namespace hcp
