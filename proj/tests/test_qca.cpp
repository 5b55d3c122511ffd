#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhall/errors.hpp"
#include "qhall/qca.hpp"

using namespace qhall;

static std::shared_ptr<const ValuedQuiver> linear(int n) {
  std::vector<Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1, 1});
  return std::make_shared<const ValuedQuiver>(n, arrows);
}

static MorphismHall make_hall(int n, int q) {
  CatalogOptions o;
  o.max_dim = n + 1;
  auto Q = linear(n);
  return MorphismHall(std::make_shared<const ModuleCategory>(Q, q, o), FramedSeed::principal(*Q));
}

static bool same_seed(const QuantumSeed& a, const QuantumSeed& b) {
  return a.lambda == b.lambda && a.Bt == b.Bt && a.cluster == b.cluster;
}

static bool positive(const TorusElt& x) {
  for (const auto& [e, c] : x.terms())
    if (sgn(c.rat()) < 0 || sgn(c.sqrt_rat()) < 0) return false;
  return true;
}

TEST_CASE("depth zero gives the initial cluster") {
  auto H = make_hall(2, 2);
  auto vars = enumerate_variables(initial_seed(H.seed(), 2), 0);
  REQUIRE(vars.size() == 2);
  CHECK(vars[0].value == TorusElt::monomial(2, unit_vector(4, 0)));
  CHECK(vars[1].value == TorusElt::monomial(2, unit_vector(4, 1)));
}

TEST_CASE("A2 mutation at vertex 2 reproduces Psi of S2") {
  auto H = make_hall(2, 2);
  auto s = mutate(initial_seed(H.seed(), 2), 1);
  auto expect = TorusElt::monomial(2, {1, -1, 0, 1}) + TorusElt::monomial(2, {0, -1, 0, 0});
  CHECK(s.cluster[1] == expect);
  CHECK(H.psi_closed(H.category().parse_label("S2"), {0, 0}) == expect);
  CHECK(positive(s.cluster[1]));
}

TEST_CASE("mutation is an involution and keeps compatibility") {
  std::mt19937_64 rng(41);
  for (int n : {2, 3}) {
    auto H = make_hall(n, 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int it = 0; it < 25; ++it) {
      auto s = initial_seed(H.seed(), 2);
      int len = 1 + it % 4;
      for (int j = 0; j < len; ++j) {
        s = mutate(s, pick(rng));
        CHECK(s.compatible());
      }
      int k = pick(rng);
      CHECK(same_seed(mutate(mutate(s, k), k), s));
    }
  }
}

TEST_CASE("A2 pentagon") {
  auto H = make_hall(2, 2);
  auto vars = enumerate_variables(initial_seed(H.seed(), 2), 5);
  CHECK(vars.size() == 5);
  for (const auto& v : vars) CHECK(positive(v.value));
  auto rep = compare_with_psi(H, 5);
  CHECK(rep.all_matched());
  CHECK(rep.matches.size() == 5);
  CHECK(rep.unmatched_variables == 0);
}

TEST_CASE("A3 rigid indecomposables at depth 8") {
  for (int q : {2, 3}) {
    auto H = make_hall(3, q);
    auto rep = compare_with_psi(H, 8);
    CHECK(rep.enumerated == 9);
    CHECK(rep.matches.size() == 9);
    CHECK(rep.all_matched());
  }
}

TEST_CASE("division rejects non-divisible input") {
  auto H = make_hall(2, 2);
  const auto& L = H.seed().lambda();
  auto y = TorusElt::monomial(2, {1, 0, 0, 0}) + TorusElt::monomial(2, {0, 1, 0, 0});
  auto x = TorusElt::monomial(2, {2, 0, 0, 0}) + TorusElt::monomial(2, {0, 0, 0, 1});
  CHECK_THROWS_AS(right_divide(L, x, y), Error);
  auto z = TorusElt::monomial(2, {1, 1, -1, 0}) + TorusElt::monomial(2, {0, 0, 2, 0});
  CHECK(right_divide(L, tlambda_mult(L, z, y), y) == z);
}
