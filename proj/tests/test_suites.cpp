#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "qhall/errors.hpp"
#include "qhall/suites.hpp"

using namespace qhall;

static QuiverConfig linear_config(int n, int q, int max_dim) {
  std::string arrows;
  for (int i = 1; i < n; ++i) arrows += (i > 1 ? "," : "") + std::string("[") + std::to_string(i) + "," + std::to_string(i + 1) + ",1]";
  return parse_config("{\"vertices\":" + std::to_string(n) + ",\"arrows\":[" + arrows + "],\"q\":" + std::to_string(q) +
                      ",\"max_dim\":" + std::to_string(max_dim) + "}");
}

static SuiteOptions quick() {
  SuiteOptions o;
  o.samples = 30;
  return o;
}

static void run_all(const Context& ctx, const SuiteOptions& o) {
  for (const auto& name : suite_names()) {
    SuiteReport r = run_suite(ctx, name, o);
    INFO(name << ": " << (r.failure_samples.empty() ? std::string() : r.failure_samples.front()));
    MESSAGE(name << " " << r.checks << " checks " << r.seconds << "s");
    CHECK(r.failures == 0);
    CHECK(r.checks > 0);
  }
}

TEST_CASE("every suite passes on A2") {
  Context ctx(linear_config(2, 2, 4));
  run_all(ctx, quick());
}

TEST_CASE("every suite passes on A3 over F_3") {
  Context ctx(linear_config(3, 3, 4));
  run_all(ctx, quick());
}

TEST_CASE("every suite passes on the Kronecker quiver") {
  Context ctx(parse_config(R"({"vertices":2,"arrows":[[1,2,2]],"q":2,"max_dim":3})"));
  SuiteOptions o = quick();
  o.max_dim = 3;
  o.appendix_dim = 2;
  run_all(ctx, o);
}

TEST_CASE("a corrupted lambda fails the relations, integration and psi suites") {
  QuiverConfig cfg = linear_config(2, 2, 3);
  IntMatrix L = make_seed(cfg).lambda();
  L(0, 2) += 1;
  cfg.lambda = L;
  CHECK_THROWS_AS(make_seed(cfg), Error);
  cfg.unchecked_lambda = true;
  Context ctx(cfg);
  SuiteOptions o = quick();
  o.max_dim = 3;
  for (const char* name : {"relations", "integration", "psi"}) {
    SuiteReport r = run_suite(ctx, name, o);
    INFO(name);
    CHECK(r.failures > 0);
  }
}

TEST_CASE("unknown suites are rejected") {
  Context ctx(linear_config(1, 2, 2));
  CHECK_THROWS_AS(run_suite(ctx, "nope", quick()), Error);
}

TEST_CASE("suite runs are reproducible") {
  Context ctx(linear_config(2, 3, 3));
  auto a = run_suite(ctx, "bialgebra", quick()), b = run_suite(ctx, "bialgebra", quick());
  CHECK(a.checks == b.checks);
  CHECK(a.failures == b.failures);
}
