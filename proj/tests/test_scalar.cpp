#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhall/errors.hpp"
#include "qhall/scalar.hpp"

using qhall::ErrorCode;
using qhall::Scalar;

static Scalar S(int q, const char* r, const char* s) { return Scalar(q, mpq_class(r), mpq_class(s)); }

TEST_CASE("ring addition and powers of v") {
  CHECK(Scalar::one(2) + Scalar::vpow(2, 1) == S(2, "1", "1"));
  CHECK(Scalar::vpow(2, 2) == S(2, "2", "0"));
  CHECK(Scalar::vpow(2, -1) == S(2, "0", "1/2"));
  CHECK(Scalar::vpow(3, -2) == S(3, "1/3", "0"));
  CHECK(Scalar::vpow(3, -3) == S(3, "0", "1/9"));
  CHECK(Scalar::vpow(5, 0) == Scalar::one(5));
  CHECK(Scalar::vpow(2, 1) * Scalar::vpow(2, 1) == Scalar::integer(2, 2));
  CHECK(Scalar::vpow(2, 1) * Scalar::vpow(2, -1) == Scalar::one(2));
}

TEST_CASE("mixed fields and division by zero are rejected") {
  try {
    (void)(Scalar::one(2) + Scalar::one(3));
    FAIL("expected an error");
  } catch (const qhall::Error& e) {
    CHECK(e.code() == ErrorCode::kMixedField);
  }
  try {
    (void)(Scalar::one(2) / Scalar::zero(2));
    FAIL("expected an error");
  } catch (const qhall::Error& e) {
    CHECK(e.code() == ErrorCode::kDivisionByZero);
  }
}

TEST_CASE("denominators stay powers of q") {
  CHECK_THROWS_AS(S(2, "1/3", "0"), qhall::Error);
  CHECK_NOTHROW(S(3, "5/27", "-1/3"));
  // (1 + v) / (1 + v) = 1 and q / v = v
  Scalar a = S(2, "1", "1");
  CHECK(a / a == Scalar::one(2));
  CHECK(Scalar::integer(2, 2) / Scalar::vpow(2, 1) == Scalar::vpow(2, 1));
  // q = 2: 1 / (1 + v) = (1 - v) / (1 - 2)
  CHECK(Scalar::one(2) / a == S(2, "-1", "1"));
  CHECK_THROWS_AS(Scalar::one(3) / Scalar::integer(3, 2), qhall::Error);
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5), ex(-3, 3);
  for (int q : {2, 3, 5}) {
    auto rnd = [&] {
      Scalar s(q);
      for (int k = 0; k < 3; ++k) s += Scalar::vpow(q, ex(rng)) * Scalar::integer(q, coef(rng));
      return s;
    };
    for (int t = 0; t < 100; ++t) {
      Scalar a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Scalar::zero(q));
      long k = ex(rng);
      CHECK(Scalar::vpow(q, k) * Scalar::vpow(q, -k) == Scalar::one(q));
      if (!b.is_zero()) {
        Scalar u = Scalar::vpow(q, ex(rng));
        CHECK((a * u) / u == a);
      }
    }
  }
}

TEST_CASE("rendering and rational parsing") {
  CHECK(S(2, "1", "-1/2").to_string() == "1 - 1/2*v");
  CHECK(qhall::parse_rational("-3/4") == mpq_class(-3, 4));
  CHECK_THROWS_AS(qhall::parse_rational("x"), qhall::Error);
}
