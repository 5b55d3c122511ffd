// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "qhall/context.hpp"
#include "qhall/errors.hpp"
#include "qhall/qca.hpp"
#include "qhall/suites.hpp"

using namespace qhall;

namespace {

struct Target {
  std::string file;
  int q;
};

const std::vector<Target> kTargets{{"a2.json", 2}, {"a2.json", 3}, {"a3.json", 2}, {"a3.json", 3}};

QuiverConfig config(const std::string& file, int q) {
  QuiverConfig c = load_config(std::string(QHALL_CONFIG_DIR) + "/" + file);
  c.q = q;
  return c;
}

struct Line {
  bool ok = true;
  std::string detail;
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

class Runner {
 public:
  Runner() {
    for (const auto& t : kTargets) ctx_.push_back(std::make_unique<Context>(config(t.file, t.q)));
  }

  Line suite(const std::string& name) const {
    Line l;
    long long checks = 0;
    for (size_t i = 0; i < ctx_.size(); ++i) {
      SuiteOptions o;
      o.samples = 100;
      o.rng_seed = 20240 + i;
      SuiteReport r = run_suite(*ctx_[i], name, o);
      checks += r.checks;
      if (!r.passed()) {
        l.ok = false;
        l.note(tag(i) + ": " + std::to_string(r.failures) + " failures" +
               (r.failure_samples.empty() ? "" : ", first: " + r.failure_samples.front()));
      }
    }
    l.note(std::to_string(checks) + " checks over A2/A3, q=2,3");
    return l;
  }

  Line qca() const {
    Line l;
    // A2, q = 2: pentagon and the three non-initial variables
    const Context& a2 = *ctx_[0];
    const MorphismHall& H = a2.hall();
    QuantumSeed s0 = initial_seed(H.seed(), 2), s = s0;
    for (int k : {0, 1, 0, 1, 0}) s = mutate(s, k);
    bool pentagon = s.cluster[0] == s0.cluster[1] && s.cluster[1] == s0.cluster[0] &&
                    std::equal(s.cluster.begin() + 2, s.cluster.end(), s0.cluster.begin() + 2);
    if (!pentagon) {
      l.ok = false;
      l.note("A2 pentagon does not close");
    }
    auto vars = enumerate_variables(s0, 5);
    std::vector<TorusElt> fresh;
    for (const auto& v : vars)
      if (!v.path.empty()) fresh.push_back(v.value);
    std::vector<TorusElt> psi;
    const auto& C = H.category();
    for (const char* m : {"S1", "S2", "P1"}) psi.push_back(H.psi_closed(C.parse_label(m), IntVec(2, 0)));
    bool same = fresh.size() == 3;
    for (const auto& x : psi) same = same && std::count(fresh.begin(), fresh.end(), x) == 1;
    if (!same) {
      l.ok = false;
      l.note("A2 non-initial variables differ from Psi(X_S1), Psi(X_S2), Psi(X_P1)");
    }
    for (size_t i = 0; i < ctx_.size(); ++i) {
      QcaReport r = compare_with_psi(ctx_[i]->hall(), ctx_[i]->n() <= 2 ? 5 : 8);
      if (!r.all_matched() || !r.exhaustive) {
        l.ok = false;
        l.note(tag(i) + ": unmatched variables");
      }
    }
    l.note("pentagon closes, 3 non-initial A2 variables matched, A3 rigid indecomposables matched at depth 8");
    return l;
  }

  Line negative() const {
    Line l;
    for (const auto& t : kTargets) {
      QuiverConfig c = config(t.file, t.q);
      int n = c.quiver.size();
      IntMatrix L = make_seed(c).lambda();
      L(0, n) += 1;
      c.lambda = L;
      c.unchecked_lambda = true;
      Context ctx(c);
      for (const char* name : {"relations", "integration", "psi"}) {
        SuiteOptions o;
        o.samples = 100;
        SuiteReport r = run_suite(ctx, name, o);
        if (r.failures == 0) {
          l.ok = false;
          l.note(t.file + " q=" + std::to_string(t.q) + ": " + name + " passed with a corrupted Lambda");
        }
      }
    }
    l.note("relations, integration, psi fail with Lambda[1][n+1] shifted by 1");
    return l;
  }

 private:
  std::string tag(size_t i) const { return kTargets[i].file + " q=" + std::to_string(kTargets[i].q); }
  std::vector<std::unique_ptr<Context>> ctx_;
};

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int k, const std::string& what, const std::function<Line()>& f) {
    Line l;
    try {
      l = f();
    } catch (const std::exception& e) {
      l.ok = false;
      l.note(std::string("exception: ") + e.what());
    }
    if (!l.ok) ++failed;
    std::cout << "criterion " << k << " (" << what << "): " << (l.ok ? "PASS" : "FAIL") << "  " << l.detail << "\n"
              << std::flush;
  };
  Runner r;
  report(1, "relations", [&] { return r.suite("relations"); });
  report(2, "bialgebra", [&] { return r.suite("bialgebra"); });
  report(3, "integration", [&] { return r.suite("integration"); });
  report(4, "psi", [&] { return r.suite("psi"); });
  report(5, "cluster multiplication", [&] { return r.suite("cluster-mult"); });
  report(6, "g-vectors", [&] { return r.suite("gvectors"); });
  report(7, "appendix", [&] { return r.suite("appendix"); });
  report(8, "quantum mutation", [&] { return r.qca(); });
  report(9, "counting", [&] { return r.suite("counting"); });
  report(10, "negative control", [&] { return r.negative(); });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
