#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qhall/fp.hpp"

using qhall::FpMatrix;

static FpMatrix random_matrix(std::mt19937_64& rng, int p, int r, int c) {
  std::uniform_int_distribution<int> u(0, p - 1);
  std::vector<int> e(r * c);
  for (auto& x : e) x = u(rng);
  return FpMatrix(p, r, c, e);
}

TEST_CASE("field inverse") {
  for (int p : {2, 3, 5, 7})
    for (int a = 1; a < p; ++a) CHECK(a * qhall::fp_inv(a, p) % p == 1);
}

TEST_CASE("rank-nullity, inverses and solving") {
  std::mt19937_64 rng(5);
  for (int p : {2, 3}) {
    for (int t = 0; t < 200; ++t) {
      int r = 1 + t % 4, c = 1 + (t / 4) % 4;
      FpMatrix A = random_matrix(rng, p, r, c);
      FpMatrix N = A.nullspace();
      CHECK(A.rank() + N.cols() == c);
      CHECK((A * N).is_zero());
      CHECK(A.column_space().cols() == A.rank());
      if (A.invertible()) {
        CHECK(A * A.inverse() == FpMatrix::identity(p, r));
      }
      FpMatrix x0 = random_matrix(rng, p, c, 1);
      FpMatrix b = A * x0, x;
      REQUIRE(A.solve(b, &x));
      CHECK(A * x == b);
    }
  }
}

TEST_CASE("basis completion") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    FpMatrix A = random_matrix(rng, 3, 4, 2).column_space();
    FpMatrix C = A.complete_basis();
    CHECK(C.invertible());
    CHECK(C.block(0, 0, 4, A.cols()) == A);
  }
}

TEST_CASE("subspace enumeration matches the Gaussian binomial") {
  for (int p : {2, 3})
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        std::set<std::vector<int>> seen;
        long long count = 0;
        qhall::for_each_subspace(p, n, k, [&](const FpMatrix& b) {
          CHECK(b.rank() == k);
          seen.insert(b.entries());
          ++count;
          return true;
        });
        // Closed form: prod (p^{n-i} - 1) / (p^{i+1} - 1)
        long long num = 1, den = 1;
        for (int i = 0; i < k; ++i) {
          long long a = 1, b = 1;
          for (int j = 0; j < n - i; ++j) a *= p;
          for (int j = 0; j < i + 1; ++j) b *= p;
          num *= a - 1;
          den *= b - 1;
        }
        CHECK(count == num / den);
        CHECK(static_cast<long long>(seen.size()) == count);
        CHECK(qhall::gaussian_binomial(p, n, k) == count);
      }
}

TEST_CASE("lines in F_2^2") {
  CHECK(qhall::gaussian_binomial(2, 2, 1) == 3);
}
