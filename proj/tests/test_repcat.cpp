#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "qhall/errors.hpp"
#include "qhall/repcat.hpp"

using namespace qhall;

static std::shared_ptr<const ValuedQuiver> linear(int n) {
  std::vector<Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1, 1});
  return std::make_shared<const ValuedQuiver>(n, arrows);
}

static CatalogOptions opts(int max_dim) {
  CatalogOptions o;
  o.max_dim = max_dim;
  return o;
}

static mpz_class qpow(int q, int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

TEST_CASE("Hom and Ext on A2") {
  auto Q = linear(2);
  auto S1 = Representation::simple(Q, 2, 0);
  auto S2 = Representation::simple(Q, 2, 1);
  auto P1 = Representation::projective(Q, 2, 0);
  auto P2 = Representation::projective(Q, 2, 1);
  CHECK(P1.dims() == IntVec{1, 1});
  CHECK(P2 == S2);
  CHECK(hom_dim(S1, S1) == 1);
  CHECK(hom_dim(P1, S1) == 1);
  CHECK(hom_dim(S1, P1) == 0);
  CHECK(ext_dim(S1, S2) == 1);
  CHECK(ext_dim(S2, S1) == 0);
  for (const auto& N : {S1, S2, P1}) {
    CHECK(ext_dim(P1, N) == 0);
    CHECK(ext_dim(P2, N) == 0);
  }
  auto I2 = Representation::injective(Q, 2, 1);
  CHECK(I2.dims() == IntVec{1, 1});
  CHECK(isomorphic_search(I2, P1));
}

TEST_CASE("quiver Grassmannians on A2") {
  auto Q = linear(2);
  auto M = Representation::projective(Q, 2, 0);
  CHECK(gr_count(M, {0, 0}) == 1);
  CHECK(gr_count(M, {0, 1}) == 1);
  CHECK(gr_count(M, {1, 0}) == 0);
  auto S2 = Representation::simple(Q, 2, 1);
  CHECK(gr_count(S2.direct_sum(S2), {0, 1}) == 3);
}

TEST_CASE("automorphism counts") {
  auto Q = linear(2);
  CHECK(aut_order_enumerate(Representation::zero(Q, 2)) == 1);
  auto S1 = Representation::simple(Q, 2, 0);
  CHECK(aut_order_enumerate(S1) == 1);
  CHECK(aut_order_enumerate(S1.direct_sum(S1)) == 6);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(3, 2) == 48);
}

TEST_CASE("minimal projective resolutions") {
  auto Q = linear(2);
  auto r1 = min_proj_resolution(Representation::simple(Q, 2, 0));
  CHECK(r1.top == IntVec{1, 0});
  CHECK(isomorphic_search(r1.kernel, Representation::projective(Q, 2, 1)));
  auto r2 = min_proj_resolution(Representation::simple(Q, 2, 1));
  CHECK(r2.top == IntVec{0, 1});
  CHECK(r2.kernel.total_dim() == 0);
  auto P1 = Representation::projective(Q, 3, 0);
  auto r3 = min_proj_resolution(P1);
  CHECK(r3.kernel.total_dim() == 0);
  CHECK(isomorphic_search(r3.cover, P1));
}

TEST_CASE("catalogs of linear quivers") {
  for (int q : {2, 3}) {
    IndecCatalog a1 = IndecCatalog::build(linear(1), q, opts(3));
    CHECK(a1.size() == 1);
    CHECK(a1.entry(0).label == "S1");
    IndecCatalog a2 = IndecCatalog::build(linear(2), q, opts(4));
    REQUIRE(a2.size() == 3);
    CHECK(a2.entry(0).label == "S1");
    CHECK(a2.entry(1).label == "S2");
    CHECK(a2.entry(2).label == "P1");
    CHECK(a2.complete());
    IndecCatalog a3 = IndecCatalog::build(linear(3), q, opts(4));
    CHECK(a3.size() == 6);
    CHECK(a3.complete());
    std::vector<std::string> labels;
    for (const auto& e : a3.entries()) labels.push_back(e.label);
    CHECK(labels == std::vector<std::string>{"S1", "S2", "S3", "I2", "P2", "P1"});
    for (const auto& e : a3.entries()) CHECK(e.rigid);
  }
}

TEST_CASE("Kronecker catalog is bounded and keeps regular modules") {
  auto K = std::make_shared<const ValuedQuiver>(2, std::vector<Arrow>{{0, 1, 2}});
  IndecCatalog c = IndecCatalog::build(K, 2, opts(2));
  CHECK(!c.dynkin());
  CHECK(!c.complete());
  // S1, S2, three regular (1,1) modules (points of P^1(F_2)), P1 = (1,2)
  CHECK(c.size() == 6);
  int regular = 0;
  for (const auto& e : c.entries())
    if (e.rep.dims() == IntVec{1, 1}) {
      ++regular;
      CHECK(!e.rigid);
    }
  CHECK(regular == 3);
}

TEST_CASE("A2 Hall numbers and extension counts, q = 2") {
  ModuleCategory C(linear(2), 2, opts(4));
  IsoClass S1 = C.parse_label("S1"), S2 = C.parse_label("S2"), P1 = C.parse_label("P1"), Z = C.zero();
  CHECK(C.hall_number(P1, P1, Z) == 1);
  CHECK(C.hall_number(P1, S1, S2) == 1);
  CHECK(C.hall_number(C.scaled(S1, 2), S1, S1) == 3);
  CHECK(C.ext_count_rp(S1, S2, P1) == 1);
  CHECK(C.extension_counts(S1, S2).at(P1) == 1);
  CHECK(C.extension_counts(S1, S2).at(C.sum(S1, S2)) == 1);
  CHECK(C.aut_order(C.scaled(S1, 2)) == 6);
  CHECK(C.aut_order(Z) == 1);
  CHECK(C.label(C.sum(C.scaled(S1, 2), P1)) == "S1^2+P1");
  CHECK(C.parse_label("S1^2+P1") == C.sum(C.scaled(S1, 2), P1));
  CHECK(C.parse_label("P2") == S2);
  CHECK_THROWS_AS(C.parse_label("Q7"), Error);
}

TEST_CASE("A2 hom fibers") {
  ModuleCategory C(linear(2), 2, opts(4));
  IsoClass S1 = C.parse_label("S1"), P1 = C.parse_label("P1"), P2 = C.parse_label("P2"), Z = C.zero();
  const auto& fib = C.hom_fiber_direct(P1, S1);
  CHECK(fib.count({Z, Z}) == 0);
  CHECK(fib.at({P2, Z}) == 1);
  CHECK(fib.at({P1, S1}) == 1);
  CHECK(C.hom_fiber_formula(P1, S1, P2, Z) == 1);
  CHECK(C.hom_fiber_formula(P1, S1, Z, Z) == 0);
  // f = 0 is the only map when Hom(P, M) = 0
  const auto& fib2 = C.hom_fiber_direct(P2, S1);
  CHECK(fib2.size() == 1);
  CHECK(fib2.at({P2, S1}) == 1);
}

TEST_CASE("resolutions through the category") {
  ModuleCategory C(linear(2), 2, opts(4));
  auto [a, b] = C.resolution(C.parse_label("S1"));
  CHECK(a == IntVec{1, 0});
  CHECK(b == IntVec{0, 1});
}

static void counting_properties(int n, int q) {
  ModuleCategory C(linear(n), q, opts(4));
  const auto& cat = C.catalog();
  std::vector<IsoClass> small;
  std::function<void(int, IsoClass&)> rec;
  // All classes with total dimension <= 2.
  for (int t = 0; t <= 2; ++t) {
    std::function<void(int, IntVec&, int)> dims = [&](int i, IntVec& d, int left) {
      if (i == n) {
        if (left == 0)
          for (const auto& c : C.classes_of_dim(d)) small.push_back(c);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        d[i] = k;
        dims(i + 1, d, left - k);
      }
      d[i] = 0;
    };
    IntVec d(n, 0);
    dims(0, d, t);
  }
  for (int i = 0; i < cat.size(); ++i)
    for (int j = 0; j < cat.size(); ++j) {
      const auto& X = cat.entry(i).rep;
      const auto& Y = cat.entry(j).rep;
      CHECK(hom_dim(X, Y) - ext_dim(X, Y) == euler_form(C.quiver(), X.dims(), Y.dims()));
      IsoClass M = C.indec(i), N = C.indec(j);
      mpz_class total_direct = 0, total_rp = 0;
      for (const auto& [L, cnt] : C.extension_counts(M, N)) {
        total_direct += static_cast<long>(cnt);
        CHECK(C.ext_count_rp(M, N, L) == static_cast<long>(cnt));
      }
      for (const auto& L : C.classes_of_dim(C.dim(M) + C.dim(N))) total_rp += C.ext_count_rp(M, N, L);
      CHECK(total_direct == qpow(q, C.ext_dim(M, N)));
      CHECK(total_rp == qpow(q, C.ext_dim(M, N)));
    }
  // Grassmannians sum to the independently enumerated submodule count.
  for (const auto& M : small) {
    const Representation& R = C.rep(M);
    long long s = 0;
    IntVec d = R.dims();
    std::function<void(int, IntVec&)> each = [&](int i, IntVec& e) {
      if (i == n) {
        s += gr_count(R, e);
        return;
      }
      for (int k = 0; k <= d[i]; ++k) {
        e[i] = k;
        each(i + 1, e);
      }
    };
    IntVec e(n, 0);
    each(0, e);
    CHECK(s == submodule_count(R));
    CHECK(C.aut_order(M) == aut_order_enumerate(R));
  }
}

TEST_CASE("counting identities on A2 and A3") {
  counting_properties(2, 2);
  counting_properties(2, 3);
  counting_properties(3, 2);
}

TEST_CASE("isomorphism classes are stable under base change") {
  std::mt19937_64 rng(21);
  for (int q : {2, 3}) {
    ModuleCategory C(linear(3), q, opts(4));
    std::uniform_int_distribution<int> u(0, q - 1);
    for (int i = 0; i < C.catalog().size(); ++i) {
      const auto& X = C.catalog().entry(i).rep;
      for (int t = 0; t < 20; ++t) {
        std::vector<FpMatrix> g;
        for (int v = 0; v < 3; ++v) {
          FpMatrix m(q, X.dim(v), X.dim(v));
          do {
            for (int r = 0; r < X.dim(v); ++r)
              for (int c = 0; c < X.dim(v); ++c) m.set(r, c, u(rng));
          } while (X.dim(v) && !m.invertible());
          g.push_back(m);
        }
        Representation Y = X.conjugate(g);
        CHECK(isomorphic_search(X, Y));
        CHECK(C.classify(Y) == C.indec(i));
      }
    }
    // Fingerprint and splitting routes agree on decomposable modules.
    for (const auto& L : C.classes_of_dim({1, 2, 1})) {
      const auto& R = C.rep(L);
      auto fp = C.catalog().classify_fingerprint(R);
      REQUIRE(fp.has_value());
      CHECK(*fp == L);
      CHECK(C.catalog().classify_split(R) == L);
    }
  }
}

TEST_CASE("catalog cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "qhall_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CatalogOptions o = opts(4);
  o.cache_dir = dir.string();
  IndecCatalog first = IndecCatalog::build(linear(3), 3, o);
  CHECK(!first.loaded_from_cache());
  IndecCatalog second = IndecCatalog::build(linear(3), 3, o);
  CHECK(second.loaded_from_cache());
  CHECK(second.hom_matrix() == first.hom_matrix());
  REQUIRE(second.size() == first.size());
  for (int i = 0; i < first.size(); ++i) CHECK(second.entry(i).label == first.entry(i).label);
  std::filesystem::remove_all(dir);
}

TEST_CASE("positive roots") {
  CHECK(IndecCatalog::positive_roots(*linear(3)).size() == 6);
  auto K = ValuedQuiver(2, {{0, 1, 2}});
  CHECK(IndecCatalog::positive_roots(K).empty());
  // D4 has 12 positive roots
  auto D4 = ValuedQuiver(4, {{0, 1, 1}, {2, 1, 1}, {3, 1, 1}});
  CHECK(IndecCatalog::positive_roots(D4).size() == 12);
}
