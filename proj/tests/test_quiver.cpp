#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhall/errors.hpp"
#include "qhall/quiver.hpp"

using namespace qhall;

static ValuedQuiver linear(int n) {
  std::vector<Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1, 1});
  return ValuedQuiver(n, arrows);
}

static IntMatrix M(int r, int c, std::vector<int> d) { return IntMatrix(r, c, std::move(d)); }

TEST_CASE("exchange data of small quivers") {
  auto a2 = exchange_data(linear(2));
  CHECK(a2.R == M(2, 2, {0, 0, 1, 0}));
  CHECK(a2.Rp == M(2, 2, {0, 1, 0, 0}));
  CHECK(a2.B == M(2, 2, {0, 1, -1, 0}));
  CHECK(a2.euler == M(2, 2, {1, -1, 0, 1}));

  auto a1 = exchange_data(linear(1));
  CHECK(a1.R == IntMatrix(1, 1));
  CHECK(a1.E == IntMatrix::identity(1));
  CHECK(a1.Ep == IntMatrix::identity(1));

  auto kr = exchange_data(ValuedQuiver(2, {{0, 1, 2}}));
  CHECK(kr.B == M(2, 2, {0, 2, -2, 0}));
}

TEST_CASE("valued quiver exchange data satisfies D R' = R^T D") {
  ValuedQuiver b2(2, {1, 2}, {{0, 1, 2}});
  auto x = exchange_data(b2);
  CHECK(x.D * x.Rp == x.R.transpose() * x.D);
  CHECK(x.R == M(2, 2, {0, 0, 1, 0}));
  CHECK(x.Rp == M(2, 2, {0, 2, 0, 0}));
  auto db = x.D * x.B;
  CHECK(db.is_skew_symmetric());
  CHECK_THROWS_AS(ValuedQuiver(2, {2, 3}, {{0, 1, 1}}), Error);
}

TEST_CASE("Euler form") {
  auto a2 = linear(2);
  CHECK(euler_form(a2, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(a2, {0, 1}, {1, 0}) == 0);
  CHECK(sym_form(a2, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(a2, {0, 0}, {3, -2}) == 0);
  CHECK_THROWS_AS(euler_form(a2, {1}, {0, 1}), Error);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> u(-3, 3);
  auto a3 = linear(3);
  for (int t = 0; t < 100; ++t) {
    IntVec a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)}, c{u(rng), u(rng), u(rng)};
    CHECK(euler_form(a3, a + b, c) == euler_form(a3, a, c) + euler_form(a3, b, c));
    CHECK(euler_form(a3, c, a + b) == euler_form(a3, c, a) + euler_form(a3, c, b));
  }
}

TEST_CASE("cyclic quivers are rejected") {
  try {
    ValuedQuiver(2, {{0, 1, 1}, {1, 0, 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCyclicQuiver);
  }
  CHECK_THROWS_AS(ValuedQuiver(1, {{0, 0, 1}}), Error);
}

TEST_CASE("principal framing of A2") {
  auto s = FramedSeed::principal(linear(2));
  CHECK(s.Bt() == M(4, 2, {0, 1, -1, 0, 1, 0, 0, 1}));
  CHECK(s.lambda() == M(4, 4, {0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, -1, 0, 1, 1, 0}));
  CHECK(s.compatible());
  CHECK(s.lambda_skew());
  CHECK(s.appendix_compatible());
  CHECK(s.Ept() - s.Et() == s.Bt());
  CHECK(s.Bfull() == IntMatrix::vstack(IntMatrix::hstack(s.base_data().B, -IntMatrix::identity(2)),
                                       IntMatrix::hstack(IntMatrix::identity(2), IntMatrix(2, 2))));
  // E~' Dim P_2 = e_2
  CHECK(s.Ept() * IntVec{0, 1} == IntVec{0, 1, 0, 0});
  CHECK(s.Ept() * IntVec{1, 1} == IntVec{1, 0, 0, 0});
}

TEST_CASE("principal framing of A1") {
  auto s = FramedSeed::principal(linear(1));
  CHECK(s.Bt() == M(2, 1, {0, 1}));
  CHECK(s.lambda() == M(2, 2, {0, -1, 1, 0}));
  CHECK(s.compatible());
}

TEST_CASE("lambda overrides are validated") {
  auto a2 = linear(2);
  auto good = FramedSeed::principal(a2).lambda();
  CHECK_NOTHROW(FramedSeed::principal(a2, good));
  IntMatrix bad = good;
  bad(0, 2) += 1;
  try {
    FramedSeed::principal(a2, bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIncompatibleSeed);
  }
  IntMatrix skew_bad = good;
  skew_bad(0, 1) = 1;
  skew_bad(1, 0) = -1;
  CHECK_THROWS_AS(FramedSeed::principal(a2, skew_bad), Error);
  auto raw = FramedSeed::unchecked(a2, bad);
  CHECK(!raw.lambda_skew());
}

TEST_CASE("compatible-pair identities hold on random vectors") {
  std::vector<ValuedQuiver> qs = {linear(1), linear(2), linear(3), ValuedQuiver(2, {{0, 1, 2}}),
                                  ValuedQuiver(2, {1, 2}, {{0, 1, 2}}), ValuedQuiver(3, {{0, 1, 1}, {2, 1, 1}})};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> u(-3, 3);
  for (const auto& q : qs) {
    auto s = FramedSeed::principal(q);
    CHECK(s.appendix_compatible());
    int n = q.size();
    auto zero = check_form_lemmas(s, IntVec(n, 0), IntVec(n, 0));
    CHECK(zero.all_ok());
    for (int t = 0; t < 100; ++t) {
      IntVec a(n), b(n), c(n), d(n);
      for (int i = 0; i < n; ++i) a[i] = u(rng), b[i] = u(rng), c[i] = u(rng), d[i] = u(rng);
      auto rep = check_form_lemmas(s, a, b);
      for (const auto& chk : rep.checks) CHECK_MESSAGE(chk.ok(), chk.name);
      CHECK(check_mixed_identity(s, a, b, c, d).ok());
    }
  }
}

TEST_CASE("A2 form lemmas at unit vectors") {
  auto s = FramedSeed::principal(linear(2));
  auto rep = check_form_lemmas(s, {1, 0}, {0, 1});
  CHECK(rep.checks.size() == 6);
  CHECK(rep.all_ok());
  // Lambda(E~e1, B~e2) = -<e2, e1> = 0
  CHECK(rep.checks[0].lhs == 0);
}

TEST_CASE("corrupted lambda breaks the identities") {
  auto a2 = linear(2);
  IntMatrix bad = FramedSeed::principal(a2).lambda();
  bad(0, 2) += 1;
  auto s = FramedSeed::unchecked(a2, bad);
  bool any_fail = false;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) any_fail |= !check_form_lemmas(s, {i, j}, {j, 1}).all_ok();
  CHECK(any_fail);
}
