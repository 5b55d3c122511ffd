#include "qhall/qca.hpp"

#include <algorithm>
#include <deque>

namespace qhall {

bool QuantumSeed::compatible() const {
  return lambda * (-Bt) == IntMatrix::vstack(D, IntMatrix(m() - n(), n()));
}

QuantumSeed initial_seed(const FramedSeed& seed, int q) {
  QuantumSeed s{seed.lambda(), seed.Bt(), seed.lambda(), seed.base_data().D, {}};
  for (int i = 0; i < seed.m(); ++i) s.cluster.push_back(TorusElt::monomial(q, unit_vector(seed.m(), i)));
  if (!s.compatible()) fail(ErrorCode::kIncompatibleSeed, "initial quantum seed is not compatible");
  return s;
}

TorusElt toric_monomial(const QuantumSeed& s, const IntVec& a) {
  int q = s.cluster.front().q();
  long long e = 0;
  for (int i = 0; i < s.m(); ++i)
    for (int j = i + 1; j < s.m(); ++j) e -= static_cast<long long>(s.lambda(i, j)) * a[i] * a[j];
  TorusElt r = TorusElt::monomial(Scalar::vpow(q, e), IntVec(s.m(), 0));
  for (int i = 0; i < s.m(); ++i) {
    if (a[i] < 0) fail(ErrorCode::kInvalidArgument, "toric monomial with a negative exponent");
    for (int t = 0; t < a[i]; ++t) r = tlambda_mult(s.lambda0, r, s.cluster[i]);
  }
  return r;
}

TorusElt right_divide(const IntMatrix& lambda, const TorusElt& x, const TorusElt& y) {
  if (y.is_zero()) fail(ErrorCode::kDivisionByZero, "division by the zero torus element");
  const auto& [ylead, yc] = *y.terms().rbegin();
  TorusElt z(x.q());
  TorusElt rem = x;
  for (int guard = 0; !rem.is_zero(); ++guard) {
    if (guard > 100000) fail(ErrorCode::kInternal, "torus division does not terminate");
    const auto& [rlead, rc] = *rem.terms().rbegin();
    IntVec ze = rlead - ylead;
    Scalar s = rc / (yc * Scalar::vpow(x.q(), lambda.form(ze, ylead)));
    TorusElt t = TorusElt::monomial(s, ze);
    z += t;
    TorusElt sub = tlambda_mult(lambda, t, y);
    for (const auto& [e, c] : sub.terms()) {
      if (e > rlead) fail(ErrorCode::kInternal, "torus element is not divisible");
      rem.add(e, -c);
    }
  }
  return z;
}

QuantumSeed mutate(const QuantumSeed& s, int k) {
  int m = s.m(), n = s.n();
  if (k < 0 || k >= n) fail(ErrorCode::kInvalidArgument, "mutation direction must be mutable");
  IntVec ap(m, 0), am(m, 0);
  for (int i = 0; i < m; ++i) {
    ap[i] = std::max(0, s.Bt(i, k));
    am[i] = std::max(0, -s.Bt(i, k));
  }
  IntVec ek = unit_vector(m, k);
  int q = s.cluster.front().q();
  // M(a - e_k) = v^{Lambda(a, e_k)} M(a) M(e_k)^{-1}
  TorusElt num = toric_monomial(s, ap).scaled(Scalar::vpow(q, s.lambda.form(ap, ek))) +
                 toric_monomial(s, am).scaled(Scalar::vpow(q, s.lambda.form(am, ek)));
  QuantumSeed r = s;
  r.cluster[k] = right_divide(s.lambda0, num, s.cluster[k]);

  IntMatrix E = IntMatrix::identity(m), F = IntMatrix::identity(n);
  E(k, k) = -1;
  F(k, k) = -1;
  for (int i = 0; i < m; ++i)
    if (i != k) E(i, k) = std::max(0, -s.Bt(i, k));
  for (int j = 0; j < n; ++j)
    if (j != k) F(k, j) = std::max(0, s.Bt(k, j));
  r.Bt = E * s.Bt * F;
  r.lambda = E.transpose() * s.lambda * E;
  if (!r.compatible()) fail(ErrorCode::kIncompatibleSeed, "mutation broke compatibility");
  return r;
}

std::vector<EnumeratedVariable> enumerate_variables(const QuantumSeed& s, int depth) {
  std::vector<EnumeratedVariable> out;
  auto seen = [&](const TorusElt& x) {
    return std::any_of(out.begin(), out.end(), [&](const EnumeratedVariable& v) { return v.value == x; });
  };
  for (int i = 0; i < s.n(); ++i) out.push_back({s.cluster[i], {}});
  struct Node {
    QuantumSeed seed;
    std::vector<int> path;
  };
  std::deque<Node> frontier{{s, {}}};
  for (int d = 0; d < depth; ++d) {
    std::deque<Node> next;
    for (const auto& node : frontier)
      for (int k = 0; k < s.n(); ++k) {
        if (!node.path.empty() && node.path.back() == k + 1) continue;
        Node child{mutate(node.seed, k), node.path};
        child.path.push_back(k + 1);
        if (!seen(child.seed.cluster[k])) out.push_back({child.seed.cluster[k], child.path});
        next.push_back(std::move(child));
      }
    frontier = std::move(next);
  }
  return out;
}

bool QcaReport::all_matched() const {
  return (!exhaustive || unmatched_variables == 0) &&
         std::all_of(matches.begin(), matches.end(), [](const QcaMatch& m) { return m.matched; });
}

QcaReport compare_with_psi(const MorphismHall& H, int depth) {
  const ModuleCategory& C = H.category();
  auto vars = enumerate_variables(initial_seed(H.seed(), H.q()), depth);
  QcaReport rep;
  rep.enumerated = static_cast<int>(vars.size());
  rep.exhaustive = C.catalog().complete();
  std::vector<bool> hit(vars.size(), false);
  auto lookup = [&](const std::string& label, const TorusElt& x) {
    QcaMatch m{label, false, {}};
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i].value == x) {
        m.matched = true;
        m.path = vars[i].path;
        hit[i] = true;
        break;
      }
    rep.matches.push_back(m);
  };
  for (int i = 0; i < C.catalog().size(); ++i) {
    IsoClass M = C.indec(i);
    if (!C.rigid(M)) continue;
    lookup(C.label(M), H.psi_closed(M, IntVec(H.n(), 0)));
  }
  for (int i = 0; i < H.n(); ++i) {
    IntVec p = unit_vector(H.n(), i);
    lookup(C.proj_label(p) + "[1]", H.psi_closed(C.zero(), p));
  }
  for (size_t i = 0; i < vars.size(); ++i)
    if (!hit[i]) ++rep.unmatched_variables;
  return rep;
}

}  // namespace qhall
