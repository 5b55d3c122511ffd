#include "qhall/qhall.h"

#include <cstring>
#include <json.hpp>
#include <random>

#include "qhall/context.hpp"
#include "qhall/errors.hpp"
#include "qhall/qca.hpp"
#include "qhall/serialize.hpp"
#include "qhall/suites.hpp"

using nlohmann::json;
using namespace qhall;

struct qhall_context {
  std::unique_ptr<Context> ctx;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
qhall_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return QHALL_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<qhall_status>(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QHALL_E_UNKNOWN;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

json matrix_json(const IntMatrix& m) { return m.to_rows(); }

json lemma_json(const LemmaCheck& c) { return {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok()}}; }

MHKey single_key(const MHElement& x) {
  if (x.size() != 1 || x.terms().begin()->second != Scalar::one(x.q()))
    fail(ErrorCode::kInvalidArgument, "expected a single basis element K_a * X(M; P)");
  return x.terms().begin()->first;
}

json compute(const Context& ctx, const std::string& what, const std::vector<std::string>& lits, int& verdict) {
  const MorphismHall& H = ctx.hall();
  auto arity = [&](size_t k) {
    if (lits.size() != k && !(k == 0 && !lits.empty()))
      fail(ErrorCode::kInvalidArgument, what + " takes " + (k ? std::to_string(k) : std::string("at least one")) +
                                            " literal" + (k == 1 ? "" : "s"));
  };
  json out{{"operation", what}, {"inputs", lits}};
  verdict = 1;
  if (what == "hall-product") {
    arity(0);
    MHElement acc = parse_mh_literal(H, lits[0]);
    for (size_t i = 1; i < lits.size(); ++i) acc = H.mult_twisted(acc, parse_mh_literal(H, lits[i]));
    out["result"] = to_json(H, acc);
    out["text"] = to_text(H, acc);
  } else if (what == "delta") {
    arity(1);
    MHTensor t = H.comult(parse_mh_literal(H, lits[0]));
    out["result"] = to_json(H, t);
    out["text"] = to_text(H, t);
  } else if (what == "psi") {
    arity(1);
    MHElement x = parse_mh_literal(H, lits[0]);
    TorusElt a = H.psi_pipeline(x), b = H.psi_closed(x);
    verdict = a == b;
    out["pipeline"] = to_json(a);
    out["closed"] = to_json(b);
    out["equal"] = a == b;
    out["text"] = "pipeline: " + a.to_string() + "\nclosed:   " + b.to_string() + "\nequal: " + (a == b ? "yes" : "no");
  } else if (what == "ccchar") {
    arity(1);
    MHKey k = single_key(parse_mh_literal(H, lits[0]));
    if (!is_zero(k.alpha)) fail(ErrorCode::kInvalidArgument, "ccchar takes X(M; P) without a K factor");
    TorusElt c = H.cc_character(k.module, k.proj);
    out["result"] = to_json(c);
    out["text"] = c.to_string();
  } else if (what == "gvector") {
    arity(1);
    MHKey k = single_key(parse_mh_literal(H, lits[0]));
    if (!is_zero(k.alpha)) fail(ErrorCode::kInvalidArgument, "gvector takes X(M; P) without a K factor");
    TorusElt x = H.psi_closed(k.module, k.proj);
    bool hom = torus_homogeneous(H.seed(), x);
    C2Object obj = H.c2_sum(H.c2_C(k.module), H.c2_Z(k.proj));
    IntVec expect = -H.ind0(obj);
    out["homogeneous"] = hom;
    out["minus_ind0"] = expect;
    if (hom) {
      IntVec g = torus_deg(H.seed(), x);
      out["gvector"] = g;
      verdict = g == expect;
      out["text"] = "g = " + to_string(g) + ", -ind0 = " + to_string(expect);
    } else {
      verdict = 0;
      out["gvector"] = nullptr;
      out["text"] = "inhomogeneous, -ind0 = " + to_string(expect);
    }
    out["equal"] = verdict == 1;
  } else if (what == "dh-psi") {
    arity(1);
    const DerivedHall& D = ctx.derived_framed();
    DHElement x = parse_dh_literal(D, lits[0]);
    TorusElt a = D.psi_pipeline(x), b = D.psi_closed(x);
    verdict = a == b;
    out["pipeline"] = to_json(a);
    out["closed"] = to_json(b);
    out["equal"] = a == b;
    out["text"] = "pipeline: " + a.to_string() + "\nclosed:   " + b.to_string() + "\nequal: " + (a == b ? "yes" : "no");
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown computation \"" + what + "\"");
  }
  return out;
}

}  // namespace

extern "C" {

const char* qhall_last_error(void) { return g_last_error.c_str(); }

const char* qhall_status_name(qhall_status s) {
  if (s == QHALL_E_UNKNOWN) return "unknown";
  return error_code_name(static_cast<ErrorCode>(s));
}

void qhall_string_free(char* s) { std::free(s); }

qhall_status qhall_context_new(const char* config_json, const char* cache_dir, qhall_context** out) {
  return guarded([&] {
    need(config_json, "config");
    need(out, "out");
    *out = nullptr;
    auto c = std::make_unique<qhall_context>();
    c->ctx = std::make_unique<Context>(parse_config(config_json), cache_dir ? cache_dir : "");
    *out = c.release();
  });
}

void qhall_context_free(qhall_context* ctx) { delete ctx; }

qhall_status qhall_check_seed(const qhall_context* ctx, int samples, uint64_t rng_seed, char** out_json, int* ok) {
  return guarded([&] {
    need(ctx, "context");
    need(out_json, "out");
    const FramedSeed& sd = ctx->ctx->seed();
    int n = sd.n();
    json j;
    j["q"] = ctx->ctx->q();
    j["name"] = ctx->ctx->config().name;
    j["B_tilde"] = matrix_json(sd.Bt());
    j["lambda"] = matrix_json(sd.lambda());
    j["lambda_skew"] = sd.lambda_skew();
    j["compatible"] = sd.compatible();
    j["appendix_compatible"] = sd.appendix_compatible();
    j["rng_seed"] = rng_seed;
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<int> d(-3, 3);
    auto rv = [&] {
      IntVec v(n);
      for (int& x : v) x = d(rng);
      return v;
    };
    long long checks = 0, failures = 0;
    json fails = json::array();
    for (int i = 0; i < samples; ++i) {
      IntVec a = rv(), b = rv();
      std::vector<LemmaCheck> cs = check_form_lemmas(sd, a, b).checks;
      cs.push_back(check_mixed_identity(sd, a, b, rv(), rv()));
      for (const auto& c : cs) {
        ++checks;
        if (!c.ok()) {
          ++failures;
          if (fails.size() < 10) fails.push_back(lemma_json(c));
        }
      }
    }
    j["lemma_checks"] = checks;
    j["lemma_failures"] = failures;
    j["lemma_failure_samples"] = fails;
    bool good = j["lambda_skew"] && j["compatible"] && j["appendix_compatible"] && failures == 0;
    j["ok"] = good;
    if (ok) *ok = good;
    *out_json = dup(j.dump(2));
  });
}

qhall_status qhall_catalog(const qhall_context* ctx, char** out_json) {
  return guarded([&] {
    need(ctx, "context");
    need(out_json, "out");
    const ModuleCategory& C = ctx->ctx->base();
    const auto& cat = C.catalog();
    json j;
    j["q"] = C.q();
    j["max_dim"] = cat.max_dim();
    j["complete"] = cat.complete();
    j["dynkin"] = cat.dynkin();
    j["loaded_from_cache"] = cat.loaded_from_cache();
    j["indecomposables"] = json::array();
    for (const auto& e : cat.entries())
      j["indecomposables"].push_back({{"label", e.label},
                                      {"dims", e.rep.dims()},
                                      {"projective", e.projective},
                                      {"injective", e.injective},
                                      {"simple", e.simple},
                                      {"rigid", e.rigid},
                                      {"end_dim", e.end_dim}});
    *out_json = dup(j.dump(2));
  });
}

qhall_status qhall_compute(const qhall_context* ctx, const char* what, const char* const* literals, int count,
                           char** out_json, int* verdict) {
  return guarded([&] {
    need(ctx, "context");
    need(what, "operation");
    need(out_json, "out");
    if (count < 0 || (count > 0 && !literals)) fail(ErrorCode::kInvalidArgument, "bad literal list");
    std::vector<std::string> lits;
    for (int i = 0; i < count; ++i) {
      need(literals[i], "literal");
      lits.emplace_back(literals[i]);
    }
    int v = 1;
    json j = compute(*ctx->ctx, what, lits, v);
    if (verdict) *verdict = v;
    *out_json = dup(j.dump(2));
  });
}

qhall_status qhall_suite_names(char** out_json) {
  return guarded([&] {
    need(out_json, "out");
    *out_json = dup(json(suite_names()).dump());
  });
}

qhall_suite_options qhall_suite_options_default(void) {
  SuiteOptions o;
  return {o.samples, o.rng_seed, o.max_dim, o.proj_copies, o.appendix_dim, o.qca_depth};
}

qhall_status qhall_verify(const qhall_context* ctx, const char* suite, const qhall_suite_options* opts,
                          char** out_json, int* passed) {
  return guarded([&] {
    need(ctx, "context");
    need(suite, "suite");
    need(out_json, "out");
    SuiteOptions o;
    if (opts) {
      if (opts->samples < 1 || opts->max_dim < 1 || opts->proj_copies < 0 || opts->appendix_dim < 1 ||
          opts->qca_depth < 0)
        fail(ErrorCode::kInvalidArgument, "suite bounds must be positive");
      o = {opts->samples, opts->rng_seed, opts->max_dim, opts->proj_copies, opts->appendix_dim, opts->qca_depth};
    }
    SuiteReport r = run_suite(*ctx->ctx, suite, o);
    json j{{"suite", r.suite},
           {"passed", r.passed()},
           {"checks", r.checks},
           {"failures", r.failures},
           {"failure_samples", r.failure_samples},
           {"notes", r.notes},
           {"seconds", r.seconds},
           {"rng_seed", r.rng_seed},
           {"samples", o.samples},
           {"max_dim", o.max_dim},
           {"q", ctx->ctx->q()},
           {"config", ctx->ctx->config().name}};
    if (passed) *passed = r.passed();
    *out_json = dup(j.dump(2));
  });
}

qhall_status qhall_cluster_compare(const qhall_context* ctx, int depth, char** out_json, int* all_matched) {
  return guarded([&] {
    need(ctx, "context");
    need(out_json, "out");
    if (depth < 0) fail(ErrorCode::kInvalidArgument, "depth must be non-negative");
    int n = ctx->ctx->n();
    int d = depth > 0 ? depth : (n <= 2 ? 5 : 8);
    QcaReport r = compare_with_psi(ctx->ctx->hall(), d);
    json matches = json::array();
    for (const auto& m : r.matches)
      matches.push_back({{"module_label", m.label}, {"matched", m.matched}, {"mutation_path", m.path}});
    json j{{"depth", d},
           {"matches", matches},
           {"enumerated", r.enumerated},
           {"unmatched_variables", r.unmatched_variables},
           {"exhaustive", r.exhaustive},
           {"all_matched", r.all_matched()}};
    if (all_matched) *all_matched = r.all_matched();
    *out_json = dup(j.dump(2));
  });
}

}  // extern "C"
