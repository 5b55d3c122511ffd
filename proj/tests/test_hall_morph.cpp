#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhall/errors.hpp"
#include "qhall/hall_morph.hpp"

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
  auto cat = std::make_shared<const ModuleCategory>(Q, q, o);
  return MorphismHall(cat, FramedSeed::principal(*Q));
}

static Scalar num(int q, long long k) { return Scalar::integer(q, mpz_class(static_cast<long>(k))); }

static mpz_class power(int q, int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

/// Every class of total dimension <= bound.
static std::vector<IsoClass> classes_up_to(const ModuleCategory& C, int bound) {
  std::vector<IsoClass> out;
  for_each_below(IntVec(C.n(), bound), [&](const IntVec& d) {
    if (total(d) > bound) return;
    for (const auto& c : C.classes_of_dim(d)) out.push_back(c);
  });
  return out;
}

static std::vector<IntVec> proj_up_to(int n, int bound) {
  std::vector<IntVec> out;
  for_each_below(IntVec(n, bound), [&](const IntVec& p) {
    if (total(p) <= bound) out.push_back(p);
  });
  return out;
}

TEST_CASE("A2 basic products") {
  auto H = make_hall(2, 2);
  const auto& C = H.category();
  IsoClass S1 = C.parse_label("S1"), S2 = C.parse_label("S2"), P1 = C.parse_label("P1");
  IntVec p2 = C.parse_proj_label("P2");
  CHECK(H.mult(H.Xshift(p2), H.X(S1)) == H.X(S1, p2));
  CHECK(H.mult(H.K({1, 0}), H.K({-2, 3})) == H.K({-1, 3}));
  CHECK(H.mult(H.Xshift({1, 0}), H.Xshift({0, 2})) == H.Xshift({1, 2}));
  // X_{S1} * X_{S2} = q^{-1} ((q - 1) X_{P1} + X_{S1+S2})
  auto expect = H.X(P1).scaled(Scalar::qpow(2, -1)) + H.X(C.sum(S1, S2)).scaled(Scalar::qpow(2, -1));
  CHECK(H.mult(H.X(S1), H.X(S2)) == expect);
  CHECK(H.mult(H.X(S2), H.X(S1)) == H.X(C.sum(S1, S2)));
  const auto& sd = H.seed();
  int lam = sd.lambda_form(sd.Ept() * C.dim(S1), sd.Ept() * C.dim(S2));
  CHECK(H.mult_twisted(H.X(S1), H.X(S2)) == expect.scaled(Scalar::vpow(2, lam)));
}

TEST_CASE("degrees of basis terms") {
  auto H = make_hall(2, 3);
  const auto& sd = H.seed();
  IntVec a{2, -1};
  CHECK(H.deg(H.key_K(a)) == -sd.tilde(a));
  IsoClass P1 = H.category().parse_label("P1");
  CHECK(H.deg(H.key_X(P1, {0, 0})) == sd.Ept() * IntVec{1, 1});
  CHECK(H.deg(H.key_X(H.category().zero(), {1, 1})) == -(sd.Ept() * IntVec{1, 2}));
}

TEST_CASE("A2 comultiplication") {
  auto H = make_hall(2, 2);
  const auto& C = H.category();
  IsoClass S1 = C.parse_label("S1"), S2 = C.parse_label("S2"), P1 = C.parse_label("P1");
  auto one = H.key_K({0, 0});
  MHTensor ds(2);
  ds.add({H.key_X(S1, {0, 0}), one}, Scalar::one(2));
  ds.add({one, H.key_X(S1, {0, 0})}, Scalar::one(2));
  CHECK(H.comult(H.X(S1)) == ds);
  MHTensor dp(2);
  dp.add({H.key_X(P1, {0, 0}), one}, Scalar::one(2));
  dp.add({one, H.key_X(P1, {0, 0})}, Scalar::one(2));
  dp.add({H.key_X(S1, {0, 0}), H.key_X(S2, {0, 0})}, Scalar::qpow(2, -1));
  CHECK(H.comult(H.X(P1)) == dp);
  IntVec a{1, -1};
  CHECK(H.comult(H.K(a)) == MHTensor(2, {one, H.key_K(a)}));
}

TEST_CASE("A2 tensor products") {
  auto H = make_hall(2, 2);
  const auto& C = H.category();
  IsoClass S1 = C.parse_label("S1"), S2 = C.parse_label("S2");
  auto one = H.key_K({0, 0});
  MHTensor kk = H.tensor_mult(MHTensor(2, {one, H.key_K({1, 0})}), MHTensor(2, {one, H.key_K({0, 2})}));
  CHECK(kk == MHTensor(2, {one, H.key_K({1, 2})}));
  MHTensor x(2, {H.key_X(S1, {0, 0}), one}), y(2, {one, H.key_X(S2, {0, 0})});
  MHTensor xy(2, {H.key_X(S1, {0, 0}), H.key_X(S2, {0, 0})}, Scalar::qpow(2, -1));
  CHECK(H.tensor_mult(x, y) == xy);
  const auto& sd = H.seed();
  int lam = sd.lambda_form(sd.Ept() * IntVec{1, 0}, sd.Ept() * IntVec{0, 1});
  CHECK(H.tensor_mult_twisted(x, y) == xy.scaled(Scalar::vpow(2, lam)));
}

TEST_CASE("A2 Psi values") {
  for (int q : {2, 3}) {
    auto H = make_hall(2, q);
    const auto& C = H.category();
    const auto& sd = H.seed();
    IsoClass S2 = C.parse_label("S2"), P1 = C.parse_label("P1");
    IntVec s2{0, 1};
    auto expect = TorusElt::monomial(q, -(sd.Et() * s2)) + TorusElt::monomial(q, -(sd.Ept() * s2));
    CHECK(H.psi_closed(S2, {0, 0}) == expect);
    CHECK(H.psi_pipeline(H.X(S2)) == expect);
    CHECK(H.psi_closed(C.zero(), {0, 1}) == TorusElt::monomial(q, {0, 1, 0, 0}));
    CHECK(H.psi_pipeline(H.Xshift({0, 1})) == TorusElt::monomial(q, {0, 1, 0, 0}));
    IntVec a{1, -2};
    CHECK(H.psi_pipeline(H.K(a)) == TorusElt::monomial(q, sd.tilde(a)));
    CHECK(H.cc_character(S2, {0, 0}) == H.psi_closed(S2, {0, 0}));
    CHECK(H.cc_character(P1, {0, 0}).size() == 3);
    CHECK(H.cc_character(C.zero(), {1, 0}) == TorusElt::monomial(q, {1, 0, 0, 0}));
    CHECK(torus_deg(sd, H.psi_closed(S2, {0, 0})) == IntVec{0, -1});
  }
}

TEST_CASE("C2 objects on A2") {
  auto H = make_hall(2, 2);
  const auto& C = H.category();
  IsoClass S1 = C.parse_label("S1");
  CHECK(H.dim_vec_c2(H.c2_C(S1)) == IntVec{1, 0, 1, 1});
  CHECK(H.ind(H.c2_C(S1)) == IntVec{1, -1, 0, 1});
  CHECK(H.ind0(H.c2_C(S1)) == IntVec{1, -1});
  for (int i = 0; i < 2; ++i) {
    IntVec p = unit_vector(2, i);
    IntVec dp = C.proj_dim(p);
    CHECK(H.dim_vec_c2(H.c2_Z(p)) == concat(-dp, IntVec(2, 0)));
    CHECK(H.dim_vec_c2(H.c2_K(p)) == concat(IntVec(2, 0), dp));
    CHECK(H.ind(H.c2_C(C.proj_class(p))) == unit_vector(4, i));
    CHECK(H.ind(H.c2_K(p)) == unit_vector(4, 2 + i));
  }
  auto x = H.c2_sum(H.c2_sum(H.c2_C(S1), H.c2_Z({0, 1})), H.c2_K({1, 0}));
  CHECK(H.dim_vec_c2(x) ==
        H.dim_vec_c2(H.c2_C(S1)) + H.dim_vec_c2(H.c2_Z({0, 1})) + H.dim_vec_c2(H.c2_K({1, 0})));
}

/// Relations of the twisted algebra, with the right-hand sides built from
/// Riedtmann-Peng extension counts and the Hom-fiber formula.
static void check_relations(const MorphismHall& H, int bound) {
  const auto& C = H.category();
  const auto& sd = H.seed();
  int q = H.q(), n = H.n();
  auto mods = classes_up_to(C, bound);
  auto projs = proj_up_to(n, 2);
  auto tw = [&](const IntVec& a, const IntVec& b) { return Scalar::vpow(q, sd.lambda_form(a, b)); };
  std::vector<IntVec> alphas{IntVec(n, 0), unit_vector(n, 0), -unit_vector(n, n - 1), IntVec(n, 1)};
  for (const auto& a : alphas)
    for (const auto& b : alphas) {
      CHECK(H.mult_twisted(H.K(a), H.K(b)) == H.K(a + b).scaled(tw(sd.tilde(a), sd.tilde(b))));
      CHECK(H.mult_twisted(H.K(a), H.K(b)) ==
            H.mult_twisted(H.K(b), H.K(a)).scaled(Scalar::qpow(q, sd.lambda_form(sd.tilde(a), sd.tilde(b)))));
    }
  for (const auto& a : alphas)
    for (const auto& M : mods)
      for (const auto& P : projs) {
        IntVec d = sd.Ept() * (C.dim(M) - C.proj_dim(P));
        CHECK(H.mult_twisted(H.K(a), H.X(M, P)) ==
              H.mult_twisted(H.X(M, P), H.K(a)).scaled(Scalar::qpow(q, -sd.lambda_form(sd.tilde(a), d))));
      }
  for (const auto& P : projs)
    for (const auto& Q : projs) {
      IntVec ep = sd.Ept() * C.proj_dim(P), eq = sd.Ept() * C.proj_dim(Q);
      CHECK(H.mult_twisted(H.Xshift(P), H.Xshift(Q)) == H.Xshift(P + Q).scaled(tw(ep, eq)));
      CHECK(H.mult_twisted(H.Xshift(P), H.Xshift(Q)) ==
            H.mult_twisted(H.Xshift(Q), H.Xshift(P)).scaled(Scalar::qpow(q, sd.lambda_form(ep, eq))));
    }
  for (const auto& M : mods)
    for (const auto& N : mods) {
      IntVec m = C.dim(M), nn = C.dim(N);
      // q^{1/2 Lambda + <m,n>} sum_L |Ext_L| / |Hom| X_L
      MHElement rhs(q);
      Scalar pre = Scalar::vpow(q, sd.lambda_form(sd.Ept() * m, sd.Ept() * nn) + 2 * C.euler(m, nn)) /
                   Scalar::integer(q, power(q, C.hom_dim(M, N)));
      for (const auto& L : C.classes_of_dim(m + nn)) {
        mpz_class e = C.ext_count_rp(M, N, L);
        if (e != 0) rhs.add(H.key_X(L, IntVec(n, 0)), pre * Scalar::integer(q, e));
      }
      CHECK(H.mult_twisted(H.X(M), H.X(N)) == rhs);
    }
  for (const auto& M : mods)
    for (const auto& P : projs) {
      IntVec m = C.dim(M), p = C.proj_dim(P);
      CHECK(H.mult_twisted(H.X(M), H.Xshift(P)) ==
            H.X(M, P).scaled(Scalar::vpow(q, -sd.lambda_form(sd.Ept() * m, sd.Ept() * p))));
      MHElement rhs(q);
      Scalar pre = Scalar::vpow(q, -sd.lambda_form(sd.Ept() * p, sd.Ept() * m) - 2 * C.euler(p, m));
      IsoClass Pc = C.proj_class(P);
      for (const auto& Qp : projs) {
        IntVec qd = C.proj_dim(Qp);
        bool fits = true;
        for (int i = 0; i < n; ++i) fits = fits && qd[i] <= p[i];
        if (!fits) continue;
        IntVec bd = m - p + qd;
        bool nonneg = true;
        for (int x : bd) nonneg = nonneg && x >= 0;
        if (!nonneg) continue;
        for (const auto& B : C.classes_of_dim(bd)) {
          mpz_class f = C.hom_fiber_formula(Pc, M, C.proj_class(Qp), B);
          if (f != 0) rhs.add(H.key_X(B, Qp), pre * Scalar::integer(q, f));
        }
      }
      CHECK(H.mult_twisted(H.Xshift(P), H.X(M)) == rhs);
    }
}

TEST_CASE("twisted relations on A2") {
  for (int q : {2, 3}) check_relations(make_hall(2, q), 3);
}

TEST_CASE("twisted relations on A3") { check_relations(make_hall(3, 2), 2); }

TEST_CASE("integration is multiplicative for the untwisted product") {
  auto H = make_hall(2, 3);
  const auto& C = H.category();
  auto mods = classes_up_to(C, 2);
  auto projs = proj_up_to(2, 1);
  for (const auto& M : mods)
    for (const auto& P : projs)
      for (const auto& N : mods)
        for (const auto& Q : projs) {
          auto x = H.mult(H.K({1, 0}), H.X(M, P));
          auto y = H.X(N, Q);
          CHECK(H.integrate(H.mult(x, y)) == t_mult(H.integrate(x), H.integrate(y)));
        }
}

TEST_CASE("Psi pipeline agrees with the closed form") {
  for (int n : {2, 3}) {
    auto H = make_hall(n, 2);
    const auto& C = H.category();
    for (const auto& M : classes_up_to(C, n == 2 ? 3 : 2))
      for (const auto& P : proj_up_to(n, 1)) {
        CHECK(H.psi_pipeline(H.X(M, P)) == H.psi_closed(M, P));
        CHECK(H.cc_character(M, P) == H.psi_closed(M, P));
        auto x = H.mult(H.K(unit_vector(n, 0)), H.X(M, P));
        CHECK(H.psi_pipeline(x) == H.psi_closed(x));
      }
  }
}

TEST_CASE("key labels") {
  auto H = make_hall(2, 2);
  const auto& C = H.category();
  CHECK(H.key_label(H.key_K({0, 0})) == "1");
  CHECK(H.key_label(H.key(IntVec{1, -1}, C.parse_label("S1"), {0, 1})) == "K[1,-1]*X(M=S1; P=P2)");
}

TEST_CASE("mismatched keys are rejected") {
  auto H = make_hall(2, 2);
  CHECK_THROWS_AS(H.K({1, 0, 0}), Error);
  CHECK_THROWS_AS(H.Xshift({-1, 0}), Error);
}
