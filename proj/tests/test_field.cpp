#include "doctest.h"

#include <vector>

#include "hcp/error.hpp"
#include "hcp/field.hpp"

using hcp::Field;

TEST_CASE("multiplicative order") {
  CHECK(hcp::multiplicative_order(2, 3) == 2);
  CHECK(hcp::multiplicative_order(3, 2) == 1);
  CHECK(hcp::multiplicative_order(4, 5) == 2);
  CHECK(hcp::multiplicative_order(2, 7) == 3);
  CHECK_THROWS_AS(hcp::multiplicative_order(4, 2), hcp::DefiningCharacteristic);
  CHECK_THROWS_AS(hcp::multiplicative_order(9, 3), hcp::DefiningCharacteristic);
  CHECK_THROWS_AS(hcp::multiplicative_order(2, 4), hcp::InvalidInput);
}

TEST_CASE("prime powers") {
  CHECK(hcp::prime_power(8) == std::pair<std::uint32_t, std::uint32_t>{2, 3});
  CHECK(hcp::prime_power(7) == std::pair<std::uint32_t, std::uint32_t>{7, 1});
  CHECK(hcp::prime_power(6).first == 0);
  CHECK(hcp::prime_power(1).first == 0);
}

TEST_CASE("small arithmetic") {
  Field f2 = Field::prime(2);
  CHECK(f2.add(1, 1) == 0);
  Field f5 = Field::prime(5);
  CHECK(f5.inv(2) == 3);
  CHECK_THROWS_AS(f5.inv(0), hcp::InvalidInput);

  Field f4 = Field::with_modulus(2, {1, 1, 1});
  // x * x = x + 1; codes: x = 2, x + 1 = 3
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4 == Field::make(2, 2));
  CHECK_THROWS_AS(Field::with_modulus(2, {1, 0, 1}), hcp::InvalidInput);
}

TEST_CASE("conway polynomials are irreducible with x primitive") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint32_t d = 2; d <= 6; ++d) {
      auto m = hcp::conway_polynomial(p, d);
      REQUIRE(m.size() == d + 1);
      std::uint64_t q = 1;
      for (std::uint32_t k = 0; k < d; ++k) q *= p;
      if (q > (1u << 22)) continue;
      Field f = Field::make(p, d);
      // x has code p; primitive means its order is exactly q - 1.
      Field::Elem x = p;
      std::vector<std::uint64_t> primes;
      std::uint64_t n = q - 1;
      for (std::uint64_t r = 2; r * r <= n; ++r)
        if (n % r == 0) {
          primes.push_back(r);
          while (n % r == 0) n /= r;
        }
      if (n > 1) primes.push_back(n);
      for (auto r : primes) CHECK(f.pow(x, (q - 1) / r) != 1);
      CHECK(f.pow(x, q - 1) == 1);
    }
}

TEST_CASE("field axioms, exhaustive for p^d <= 64") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    Field f = Field::of_order(q);
    CAPTURE(q);
    bool ok = true;
    for (Field::Elem a = 0; a < q && ok; ++a) {
      ok &= f.add(a, f.neg(a)) == 0;
      ok &= f.mul(a, 1) == a;
      if (a) ok &= f.mul(a, f.inv(a)) == 1;
      for (Field::Elem b = 0; b < q && ok; ++b) {
        ok &= f.add(a, b) == f.add(b, a);
        ok &= f.mul(a, b) == f.mul(b, a);
        for (Field::Elem c = 0; c < q && ok; ++c) {
          ok &= f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
          ok &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
          ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("multiplication agrees with polynomial arithmetic mod the modulus") {
  Field f = Field::make(3, 3);
  const auto& m = f.modulus();
  for (Field::Elem a = 0; a < f.order(); ++a)
    for (Field::Elem b = 0; b < f.order(); ++b) {
      auto ca = f.coefficients(a), cb = f.coefficients(b);
      std::vector<std::uint32_t> prod(5, 0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % 3;
      for (int k = 4; k >= 3; --k) {
        auto c = prod[k];
        for (int t = 0; t <= 3; ++t) prod[k - 3 + t] = (prod[k - 3 + t] + 3 * 3 - c * m[t]) % 3;
      }
      prod.resize(3);
      REQUIRE(f.mul(a, b) == f.from_coefficients(prod));
    }
}

TEST_CASE("field elements check their owner") {
  Field f3 = Field::prime(3), f5 = Field::prime(5);
  hcp::FieldElement a(f3, 2), b(f5, 2);
  CHECK_THROWS_AS(a + b, hcp::InvalidInput);
  CHECK((a * a).code() == 1);
  CHECK(a.inverse().code() == 2);
  CHECK_THROWS_AS(hcp::FieldElement(f3, 0).inverse(), hcp::InvalidInput);
  CHECK(Field::make(2, 2).format(3) == "1+x");
}
