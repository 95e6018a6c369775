#include <doctest.h>

#include "oracles.hpp"
#include "symdig/finfield.hpp"

using namespace symdig;

TEST_CASE("prime field construction") {
  const auto f = FiniteField::make(7, 1);
  CHECK(f.order() == 7);
  CHECK(f.characteristic() == 7);
  CHECK(f.degree() == 1);
  CHECK(f.modulus() == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(FiniteField::make(4, 1), Error);
  CHECK_THROWS_AS(FiniteField::make(1, 1), Error);
  CHECK_THROWS_AS(FiniteField::make(7, 0), Error);
  CHECK_THROWS_AS(FiniteField::make(2, 21), Error);  // 2^21 over the size guard
}

TEST_CASE("GF(27) uses the least irreducible cubic") {
  const auto f = FiniteField::make(3, 3);
  CHECK(f.order() == 27);
  // Frozen from the exhaustive search: x^3 + 2x + 1.
  CHECK(f.modulus() == std::vector<std::int64_t>{1, 2, 0, 1});
  CHECK(f.modulus() == oracles::least_irreducible(3, 3));
}

TEST_CASE("modulus matches the oracle for several extensions") {
  for (const auto [p, k] : {std::pair<std::int64_t, std::int64_t>{2, 4}, {3, 2}, {5, 3}, {7, 2}}) {
    const auto f = FiniteField::make(p, k);
    CHECK(f.modulus() == oracles::least_irreducible(p, k));
  }
}

TEST_CASE("arithmetic in GF(7)") {
  const auto f = FiniteField::make(7, 1);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(2) == 4);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(3) == 4);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.pow(3, -1) == f.inv(3));
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(f.div(3, 0), Error);
}

TEST_CASE("element wrapper enforces the owning field") {
  const auto f7 = FiniteField::make(7, 1);
  const auto f11 = FiniteField::make(11, 1);
  const FieldElement a(f7, 3), b(f7, 5);
  CHECK((a * b).code() == 1);
  CHECK((a + b).code() == 1);
  CHECK((-a).code() == 4);
  CHECK(a.inv().code() == 5);
  const FieldElement c(f11, 3);
  CHECK_THROWS_AS((void)(a + c), Error);
  const auto f7_copy = FiniteField::make(7, 1);
  CHECK(FieldElement(f7_copy, 3) == a);  // structural field identity
}

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (const auto [p, k] : {std::pair<std::int64_t, std::int64_t>{7, 1}, {2, 3}, {3, 2}, {3, 3},
                            {7, 2}}) {
    const auto f = FiniteField::make(p, k);
    const auto q = f.order();
    for (std::int64_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::int64_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (std::int64_t c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
          CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("square testing in GF(7)") {
  const auto f = FiniteField::make(7, 1);
  CHECK_FALSE(f.is_square(6));  // -1 for q = 3 mod 4
  CHECK(f.is_square(2));
  CHECK(f.is_square(1));
  CHECK_THROWS_AS(f.is_square(0), Error);
}

TEST_CASE("square testing agrees with exhaustive enumeration") {
  for (const auto [p, k] : {std::pair<std::int64_t, std::int64_t>{7, 1}, {11, 1}, {19, 1},
                            {3, 3}}) {
    const auto f = FiniteField::make(p, k);
    const auto table = oracles::squares(f);
    CHECK(table.size() == static_cast<std::size_t>((f.order() - 1) / 2));
    for (std::int64_t x = 1; x < f.order(); ++x) CHECK(f.is_square(x) == table.count(x));
  }
}

TEST_CASE("square cosets partition the multiplicative group") {
  for (const auto [p, k] : {std::pair<std::int64_t, std::int64_t>{7, 1}, {11, 1}, {3, 3}}) {
    const auto f = FiniteField::make(p, k);
    std::int64_t nonsquare = 0;
    for (std::int64_t x = 1; x < f.order(); ++x)
      if (!f.is_square(x)) {
        nonsquare = x;
        break;
      }
    REQUIRE(nonsquare != 0);
    for (std::int64_t x = 1; x < f.order(); ++x)
      CHECK(f.is_square(x) != f.is_square(f.mul(x, nonsquare)));
  }
}

TEST_CASE("primitive root generates the multiplicative group") {
  for (const auto [p, k] : {std::pair<std::int64_t, std::int64_t>{7, 1}, {11, 1}, {3, 3}}) {
    const auto f = FiniteField::make(p, k);
    const std::int64_t g = f.primitive_root();
    std::set<std::int64_t> seen;
    std::int64_t x = 1;
    for (std::int64_t i = 0; i < f.order() - 1; ++i) {
      x = f.mul(x, g);
      seen.insert(x);
    }
    CHECK(seen.size() == static_cast<std::size_t>(f.order() - 1));
  }
}
