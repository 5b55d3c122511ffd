#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "qhall/context.hpp"
#include "qhall/errors.hpp"
#include "qhall/serialize.hpp"

using namespace qhall;

static const char* kA2 = R"({"vertices":2,"arrows":[[1,2,1]],"q":3,"max_dim":3})";

static ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST_CASE("config parsing") {
  QuiverConfig c = parse_config(kA2);
  CHECK(c.quiver.size() == 2);
  CHECK(c.quiver.arrow_count(0, 1) == 1);
  CHECK(c.q == 3);
  CHECK(c.max_dim == 3);
  CHECK_FALSE(c.lambda.has_value());
  CHECK(code_of([] { parse_config("{"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_config("[]"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_config(R"({"vertices":2,"q":4})"); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { parse_config(R"({"vertices":2,"arrows":[[1,3,1]]})"); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { parse_config(R"({"vertices":2,"lambda":[[0,1],[1,0]]})"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_config(R"({"vertices":2,"arrows":[[1,2],[2,1]]})"); }) == ErrorCode::kCyclicQuiver);
}

TEST_CASE("explicit lambda is validated") {
  QuiverConfig c = parse_config(kA2);
  IntMatrix L = make_seed(c).lambda();
  c.lambda = L;
  CHECK(make_seed(c).lambda() == L);
  IntMatrix bad = L;
  bad(0, 1) += 1;
  c.lambda = bad;
  CHECK(code_of([&] { make_seed(c); }) != ErrorCode::kOk);
  c.unchecked_lambda = true;
  CHECK(make_seed(c).lambda() == bad);
}

TEST_CASE("element literals") {
  Context ctx(parse_config(kA2));
  const auto& H = ctx.hall();
  const auto& C = H.category();
  IsoClass S1 = C.parse_label("S1"), S2 = C.parse_label("S2");
  CHECK(parse_mh_literal(H, "1") == H.one());
  CHECK(parse_mh_literal(H, "K[1,-1]") == H.K({1, -1}));
  CHECK(parse_mh_literal(H, "X(M=S1; P=P2)") == H.X(S1, {0, 1}));
  CHECK(parse_mh_literal(H, "X(P=P1)") == H.Xshift({1, 0}));
  CHECK(parse_mh_literal(H, "X(M=S1)*X(M=S2)") == H.mult(H.X(S1), H.X(S2)));
  CHECK(parse_mh_literal(H, "K[0,1] * X(M=S2)") == H.mult(H.K({0, 1}), H.X(S2)));
  CHECK(code_of([&] { parse_mh_literal(H, "X(M=S9)"); }) != ErrorCode::kOk);
  CHECK(code_of([&] { parse_mh_literal(H, "K[1]"); }) != ErrorCode::kOk);
  CHECK(code_of([&] { parse_mh_literal(H, "Y(M=S1)"); }) != ErrorCode::kOk);
  const auto& D = ctx.derived_base();
  CHECK(parse_dh_literal(D, "u(M=S1; P=P2)") == D.u(S1, {0, 1}));
  CHECK(parse_dh_literal(D, "1") == D.one());
  for (const auto& k : {H.key({1, 0}, S1, {0, 1}), H.key_K({-1, 1}), H.key_X(S2, {0, 0})})
    CHECK(parse_mh_literal(H, H.key_label(k)) == MHElement(3, k));
}

TEST_CASE("JSON round trips") {
  Context ctx(parse_config(kA2));
  const auto& H = ctx.hall();
  const auto& C = H.category();
  IsoClass S1 = C.parse_label("S1"), S2 = C.parse_label("S2");
  MHElement x = H.mult_twisted(H.X(S1, {0, 1}), H.mult(H.K({1, 0}), H.X(S2)));
  CHECK(mh_from_json(H, nlohmann::json::parse(to_json(H, x).dump())) == x);
  MHTensor t = H.comult(H.mult(H.X(S1), H.X(S2)));
  CHECK(mh_tensor_from_json(H, nlohmann::json::parse(to_json(H, t).dump())) == t);
  TorusElt p = H.psi_pipeline(x);
  CHECK(torus_from_json(3, nlohmann::json::parse(to_json(p).dump())) == p);
  const auto& D = ctx.derived_base();
  DHElement d = D.mult(D.u(S1), D.ushift({0, 1}));
  CHECK(dh_from_json(D, to_json(D, d)) == d);
  Scalar s = Scalar::vpow(3, -3) + Scalar::integer(3, 7);
  CHECK(scalar_from_json(3, scalar_to_json(s)) == s);
  CHECK(code_of([] { scalar_from_json(3, nlohmann::json::parse(R"({"rat":"x","sqrt_rat":"0"})")); }) != ErrorCode::kOk);
  CHECK_FALSE(to_text(H, x).empty());
  CHECK(to_text(H, H.one()).find('1') != std::string::npos);
}

TEST_CASE("catalog cache is reused and stale files are rebuilt") {
  auto dir = std::filesystem::temp_directory_path() / ("qhall_cache_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  QuiverConfig c = parse_config(kA2);
  {
    Context a(c, dir.string());
    CHECK_FALSE(a.base().catalog().loaded_from_cache());
  }
  Context b(c, dir.string());
  CHECK(b.base().catalog().loaded_from_cache());
  for (const auto& f : std::filesystem::directory_iterator(dir)) std::ofstream(f.path()) << "{\"quiver\": 1}";
  Context d(c, dir.string());
  CHECK_FALSE(d.base().catalog().loaded_from_cache());
  CHECK(d.base().catalog().size() == b.base().catalog().size());
  std::filesystem::remove_all(dir);
}
