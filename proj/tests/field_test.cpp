#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "fuzzylie/field.hpp"

using namespace fuzzylie;
using fixtures::vec;

namespace {

Scalar s(unsigned p, unsigned v) { return Scalar(PrimeField(p), v); }

}  // namespace

TEST_CASE("prime field construction") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(251));
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(257), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(PrimeField(3), 3), std::invalid_argument);
}

TEST_CASE("scalar arithmetic") {
  CHECK((s(3, 2) + s(3, 2)).value() == 1);
  CHECK((s(2, 1) + s(2, 1)).value() == 0);
  CHECK((s(5, 0) + s(5, 4)).value() == 4);

  CHECK((s(3, 2) * s(3, 2)).value() == 1);
  CHECK((s(7, 3) * s(7, 5)).value() == 1);
  CHECK((s(2, 1) * s(2, 0)).value() == 0);

  CHECK(inverse(s(5, 2)).value() == 3);
  CHECK(inverse(s(3, 1)).value() == 1);
  CHECK(inverse(s(7, 4)).value() == 2);
  CHECK_THROWS_AS(inverse(s(7, 0)), std::domain_error);

  CHECK_THROWS_AS(s(3, 1) + s(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(s(3, 1) * s(5, 1), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for p <= 13") {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    CAPTURE(p);
    PrimeField f(p);
    for (unsigned a = 0; a < p; ++a) {
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      for (unsigned b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (unsigned c = 0; c < p; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("vector operations") {
  CHECK(vec(2, {1, 0}) + vec(2, {1, 1}) == vec(2, {0, 1}));
  CHECK(s(3, 2) * vec(3, {1, 2}) == vec(3, {2, 1}));
  CHECK((s(5, 0) * vec(5, {3, 4, 1})).is_zero());
  CHECK_THROWS_AS(vec(3, {1, 2}) + vec(3, {1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(vec(3, {1, 2}) + vec(5, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(s(5, 1) * vec(3, {1, 2}), std::invalid_argument);
}

TEST_CASE("element index encoding is a bijection") {
  PrimeField f(3);
  for (Element x = 0; x < 27; ++x) CHECK(FVector::from_index(f, 3, x).index() == x);
  CHECK(vec(3, {1, 2}).index() == 1 + 2 * 3);
  CHECK_THROWS_AS(FVector::from_index(f, 2, 9), std::out_of_range);
}

TEST_CASE("vector space laws, exhaustive for p^d <= 81") {
  for (auto [p, d] : {std::pair{2u, 3u}, {3u, 2u}, {3u, 4u}, {5u, 2u}}) {
    CAPTURE(p);
    CAPTURE(d);
    PrimeField f(p);
    const Element n = static_cast<Element>(checked_power(p, d, 81));
    for (Element x = 0; x < n; ++x) {
      const auto u = FVector::from_index(f, d, x);
      for (Element y = 0; y < n; ++y) {
        const auto v = FVector::from_index(f, d, y);
        CHECK(u + v == v + u);
        for (unsigned a = 0; a < p; ++a)
          CHECK(Scalar(f, a) * (u + v) == Scalar(f, a) * u + Scalar(f, a) * v);
        if (p * d <= 6)
          for (Element z = 0; z < n; ++z) {
            const auto w = FVector::from_index(f, d, z);
            CHECK((u + v) + w == u + (v + w));
          }
      }
    }
  }
}
