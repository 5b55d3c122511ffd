#include "qhall/repcat.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qhall/errors.hpp"

namespace qhall {

namespace {

using Path = std::vector<int>;

// Paths starting at i, grouped by end vertex, in breadth-first order.
std::vector<std::vector<Path>> paths_from(const ValuedQuiver& Q, int i) {
  std::vector<std::vector<Path>> out(Q.size());
  std::deque<std::pair<int, Path>> queue{{i, {}}};
  const auto& arrows = Q.arrow_list();
  while (!queue.empty()) {
    auto [v, p] = queue.front();
    queue.pop_front();
    out[v].push_back(p);
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
      if (arrows[a].first == v) {
        Path np = p;
        np.push_back(a);
        queue.emplace_back(arrows[a].second, np);
      }
  }
  return out;
}

// Paths ending at i, grouped by start vertex.
std::vector<std::vector<Path>> paths_to(const ValuedQuiver& Q, int i) {
  std::vector<std::vector<Path>> out(Q.size());
  std::deque<std::pair<int, Path>> queue{{i, {}}};
  const auto& arrows = Q.arrow_list();
  while (!queue.empty()) {
    auto [v, p] = queue.front();
    queue.pop_front();
    out[v].push_back(p);
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
      if (arrows[a].second == v) {
        Path np{a};
        np.insert(np.end(), p.begin(), p.end());
        queue.emplace_back(arrows[a].first, np);
      }
  }
  return out;
}

// q^e, saturating at cap + 1.
long long capped_pow(int q, int e, long long cap) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= q;
    if (r > cap) return cap + 1;
  }
  return r;
}

Morphism zero_morphism(const Representation& M, const Representation& N) {
  Morphism f;
  for (int i = 0; i < M.quiver().size(); ++i) f.emplace_back(M.q(), N.dim(i), M.dim(i));
  return f;
}

Morphism power(const Morphism& f, int k) {
  Morphism g = f;
  for (size_t i = 0; i < f.size(); ++i) {
    FpMatrix acc = FpMatrix::identity(f[i].p(), f[i].rows());
    for (int j = 0; j < k; ++j) acc = acc * f[i];
    g[i] = acc;
  }
  return g;
}

std::optional<Morphism> find_splitting_endo(const Representation& M, long long cap) {
  auto basis = hom_basis(M, M);
  int d = static_cast<int>(basis.size());
  if (d <= 1) return std::nullopt;
  auto splits = [&](const Morphism& f) { return !is_iso(f) && !is_nilpotent_endo(f); };
  if (capped_pow(M.q(), d, cap) <= cap) {
    std::optional<Morphism> found;
    for_each_vector(M.q(), d, [&](const std::vector<int>& c) {
      Morphism f = combine(basis, c, M.q(), M, M);
      if (splits(f)) {
        found = f;
        return false;
      }
      return true;
    });
    return found;
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<int> dist(0, M.q() - 1);
  for (int t = 0; t < 2048; ++t) {
    std::vector<int> c(d);
    for (auto& x : c) x = dist(rng);
    Morphism f = combine(basis, c, M.q(), M, M);
    if (splits(f)) return f;
  }
  return std::nullopt;
}

bool support_connected(const ValuedQuiver& Q, const IntVec& d) {
  int n = Q.size();
  int start = -1;
  for (int i = 0; i < n; ++i)
    if (d[i] > 0) {
      start = i;
      break;
    }
  if (start < 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (!seen[w] && d[w] > 0 && (Q.arrow_count(v, w) || Q.arrow_count(w, v))) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  for (int i = 0; i < n; ++i)
    if (d[i] > 0 && !seen[i]) return false;
  return true;
}

void for_each_dim_vector(int n, int max_total, const std::function<void(const IntVec&)>& fn) {
  IntVec d(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (total(d) > 0) fn(d);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      d[i] = k;
      rec(i + 1, left - k);
    }
    d[i] = 0;
  };
  rec(0, max_total);
}

std::string fnv_hex(const std::string& s) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- Representation

Representation::Representation(std::shared_ptr<const ValuedQuiver> quiver, int q, IntVec dims,
                               std::vector<FpMatrix> maps)
    : quiver_(std::move(quiver)), q_(q), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_->simply_laced()) {
    fail(ErrorCode::kInvalidArgument, "module-level operations need all valuations equal to 1");
  }
  if (static_cast<int>(dims_.size()) != quiver_->size()) {
    fail(ErrorCode::kInvalidArgument, "dimension vector length mismatch");
  }
  const auto& arrows = quiver_->arrow_list();
  if (maps_.size() != arrows.size()) fail(ErrorCode::kInvalidArgument, "one matrix per arrow expected");
  for (size_t a = 0; a < arrows.size(); ++a) {
    if (maps_[a].p() != q_) fail(ErrorCode::kMixedField, "arrow matrix over a different field");
    if (maps_[a].rows() != dims_[arrows[a].second] || maps_[a].cols() != dims_[arrows[a].first]) {
      fail(ErrorCode::kInvalidArgument, "arrow matrix shape does not match endpoint dimensions");
    }
  }
}

Representation Representation::zero(std::shared_ptr<const ValuedQuiver> quiver, int q) {
  std::vector<FpMatrix> maps;
  for (size_t a = 0; a < quiver->arrow_list().size(); ++a) maps.emplace_back(q, 0, 0);
  int n = quiver->size();
  return Representation(std::move(quiver), q, IntVec(n, 0), std::move(maps));
}

Representation Representation::simple(std::shared_ptr<const ValuedQuiver> quiver, int q, int i) {
  int n = quiver->size();
  IntVec d(n, 0);
  d.at(i) = 1;
  std::vector<FpMatrix> maps;
  for (auto [t, h] : quiver->arrow_list()) maps.emplace_back(q, d[h], d[t]);
  return Representation(std::move(quiver), q, d, std::move(maps));
}

Representation Representation::projective(std::shared_ptr<const ValuedQuiver> quiver, int q, int i) {
  auto paths = paths_from(*quiver, i);
  int n = quiver->size();
  IntVec d(n);
  for (int v = 0; v < n; ++v) d[v] = static_cast<int>(paths[v].size());
  std::vector<FpMatrix> maps;
  const auto& arrows = quiver->arrow_list();
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
    auto [t, h] = arrows[a];
    FpMatrix m(q, d[h], d[t]);
    for (int c = 0; c < d[t]; ++c) {
      Path np = paths[t][c];
      np.push_back(a);
      auto it = std::find(paths[h].begin(), paths[h].end(), np);
      m.set(static_cast<int>(it - paths[h].begin()), c, 1);
    }
    maps.push_back(m);
  }
  return Representation(std::move(quiver), q, d, std::move(maps));
}

Representation Representation::injective(std::shared_ptr<const ValuedQuiver> quiver, int q, int i) {
  auto paths = paths_to(*quiver, i);
  int n = quiver->size();
  IntVec d(n);
  for (int v = 0; v < n; ++v) d[v] = static_cast<int>(paths[v].size());
  std::vector<FpMatrix> maps;
  const auto& arrows = quiver->arrow_list();
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
    auto [t, h] = arrows[a];
    FpMatrix m(q, d[h], d[t]);
    for (int c = 0; c < d[t]; ++c) {
      const Path& p = paths[t][c];
      if (p.empty() || p[0] != a) continue;
      Path rest(p.begin() + 1, p.end());
      auto it = std::find(paths[h].begin(), paths[h].end(), rest);
      m.set(static_cast<int>(it - paths[h].begin()), c, 1);
    }
    maps.push_back(m);
  }
  return Representation(std::move(quiver), q, d, std::move(maps));
}

void Representation::check_compatible(const Representation& o) const {
  if (q_ != o.q_) fail(ErrorCode::kMixedField, "representations over different fields");
  if (quiver_ != o.quiver_ && !(*quiver_ == *o.quiver_)) {
    fail(ErrorCode::kInvalidArgument, "representations of different quivers");
  }
}

Representation Representation::direct_sum(const Representation& o) const {
  check_compatible(o);
  const auto& arrows = quiver_->arrow_list();
  std::vector<FpMatrix> maps;
  for (size_t a = 0; a < arrows.size(); ++a) {
    const FpMatrix& x = maps_[a];
    const FpMatrix& y = o.maps_[a];
    FpMatrix m(q_, x.rows() + y.rows(), x.cols() + y.cols());
    for (int r = 0; r < x.rows(); ++r)
      for (int c = 0; c < x.cols(); ++c) m.set(r, c, x(r, c));
    for (int r = 0; r < y.rows(); ++r)
      for (int c = 0; c < y.cols(); ++c) m.set(x.rows() + r, x.cols() + c, y(r, c));
    maps.push_back(m);
  }
  return Representation(quiver_, q_, dims_ + o.dims_, std::move(maps));
}

Representation Representation::power(int k) const {
  Representation r = zero(quiver_, q_);
  for (int i = 0; i < k; ++i) r = r.direct_sum(*this);
  return r;
}

Representation Representation::conjugate(const std::vector<FpMatrix>& g) const {
  const auto& arrows = quiver_->arrow_list();
  std::vector<FpMatrix> maps;
  for (size_t a = 0; a < arrows.size(); ++a) {
    auto [t, h] = arrows[a];
    maps.push_back(g[h] * maps_[a] * g[t].inverse());
  }
  return Representation(quiver_, q_, dims_, std::move(maps));
}

std::string Representation::to_string() const {
  std::ostringstream os;
  os << "dims=" << qhall::to_string(dims_);
  for (size_t a = 0; a < maps_.size(); ++a) os << " a" << a << "=" << maps_[a].to_string();
  return os.str();
}

// ---------------------------------------------------------------- Hom / Ext

std::vector<Morphism> hom_basis(const Representation& M, const Representation& N) {
  M.check_compatible(N);
  const ValuedQuiver& Q = M.quiver();
  int n = Q.size();
  int p = M.q();
  std::vector<int> off(n + 1, 0);
  for (int i = 0; i < n; ++i) off[i + 1] = off[i] + N.dim(i) * M.dim(i);
  int unknowns = off[n];
  if (unknowns == 0) return {};
  const auto& arrows = Q.arrow_list();
  int eqs = 0;
  for (auto [t, h] : arrows) eqs += N.dim(h) * M.dim(t);
  FpMatrix sys(p, eqs, unknowns);
  int row = 0;
  for (size_t a = 0; a < arrows.size(); ++a) {
    auto [t, h] = arrows[a];
    const FpMatrix& Ma = M.map(static_cast<int>(a));
    const FpMatrix& Na = N.map(static_cast<int>(a));
    // (f_h M_a - N_a f_t)(r, c) = 0
    for (int r = 0; r < N.dim(h); ++r)
      for (int c = 0; c < M.dim(t); ++c, ++row) {
        for (int k = 0; k < M.dim(h); ++k) {
          int idx = off[h] + r * M.dim(h) + k;
          sys.set(row, idx, sys(row, idx) + Ma(k, c));
        }
        for (int k = 0; k < N.dim(t); ++k) {
          int idx = off[t] + k * M.dim(t) + c;
          sys.set(row, idx, sys(row, idx) - Na(r, k));
        }
      }
  }
  FpMatrix ns = sys.nullspace();
  std::vector<Morphism> basis;
  for (int j = 0; j < ns.cols(); ++j) {
    Morphism f = zero_morphism(M, N);
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < N.dim(i); ++r)
        for (int c = 0; c < M.dim(i); ++c) f[i].set(r, c, ns(off[i] + r * M.dim(i) + c, j));
    basis.push_back(std::move(f));
  }
  return basis;
}

int hom_dim(const Representation& M, const Representation& N) {
  return static_cast<int>(hom_basis(M, N).size());
}

int ext_dim(const Representation& M, const Representation& N) {
  int e = hom_dim(M, N) - euler_form(M.quiver(), M.dims(), N.dims());
  if (e < 0) fail(ErrorCode::kInternal, "negative Ext dimension: Euler form convention is inconsistent");
  return e;
}

bool is_morphism(const Morphism& f, const Representation& M, const Representation& N) {
  const auto& arrows = M.quiver().arrow_list();
  for (size_t a = 0; a < arrows.size(); ++a) {
    auto [t, h] = arrows[a];
    if (!(f[h] * M.map(static_cast<int>(a)) == N.map(static_cast<int>(a)) * f[t])) return false;
  }
  return true;
}

bool is_iso(const Morphism& f) {
  for (const auto& m : f)
    if (!m.invertible()) return false;
  return true;
}

bool is_nilpotent_endo(const Morphism& f) {
  int k = 0;
  for (const auto& m : f) k = std::max(k, m.rows());
  for (const auto& m : power(f, k))
    if (!m.is_zero()) return false;
  return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (size_t i = 0; i < f.size(); ++i) h.push_back(g[i] * f[i]);
  return h;
}

Morphism combine(const std::vector<Morphism>& basis, const std::vector<int>& coeffs, int q,
                 const Representation& M, const Representation& N) {
  (void)q;
  Morphism f = zero_morphism(M, N);
  for (size_t b = 0; b < basis.size(); ++b) {
    if (!coeffs[b]) continue;
    for (size_t i = 0; i < f.size(); ++i) f[i] = f[i] + basis[b][i].scaled(coeffs[b]);
  }
  return f;
}

// ---------------------------------------------------------------- submodules

void for_each_submodule(const Representation& M, const IntVec& e,
                        const std::function<bool(const std::vector<FpMatrix>&)>& fn) {
  const ValuedQuiver& Q = M.quiver();
  int n = Q.size();
  for (int i = 0; i < n; ++i)
    if (e[i] < 0 || e[i] > M.dim(i)) return;
  const auto& order = Q.topological_order();
  const auto& arrows = Q.arrow_list();
  std::vector<FpMatrix> U(n);
  bool stop = false;
  std::function<void(int)> rec = [&](int pos) {
    if (stop) return;
    if (pos == n) {
      if (!fn(U)) stop = true;
      return;
    }
    int v = order[pos];
    FpMatrix W(M.q(), M.dim(v), 0);
    for (size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a].second == v && U[arrows[a].first].cols() > 0) {
        W = FpMatrix::hstack(W, M.map(static_cast<int>(a)) * U[arrows[a].first]);
      }
    FpMatrix Wspace = W.cols() ? W.column_space() : W;
    if (Wspace.cols() > e[v]) return;
    for_each_subspace(M.q(), M.dim(v), e[v], [&](const FpMatrix& basis) {
      if (!column_span_contains(basis, Wspace)) return true;
      U[v] = basis;
      rec(pos + 1);
      return !stop;
    });
  };
  rec(0);
}

long long gr_count(const Representation& M, const IntVec& e) {
  long long c = 0;
  for_each_submodule(M, e, [&](const std::vector<FpMatrix>&) {
    ++c;
    return true;
  });
  return c;
}

long long submodule_count(const Representation& M) {
  const ValuedQuiver& Q = M.quiver();
  int n = Q.size();
  std::vector<std::vector<FpMatrix>> spaces(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= M.dim(i); ++k)
      for_each_subspace(M.q(), M.dim(i), k, [&](const FpMatrix& b) {
        spaces[i].push_back(b);
        return true;
      });
  const auto& arrows = Q.arrow_list();
  long long count = 0;
  std::vector<size_t> idx(n, 0);
  while (true) {
    bool ok = true;
    for (size_t a = 0; a < arrows.size() && ok; ++a) {
      const FpMatrix& Ut = spaces[arrows[a].first][idx[arrows[a].first]];
      const FpMatrix& Uh = spaces[arrows[a].second][idx[arrows[a].second]];
      if (Ut.cols() == 0) continue;
      ok = column_span_contains(Uh, M.map(static_cast<int>(a)) * Ut);
    }
    if (ok) ++count;
    int pos = 0;
    while (pos < n && ++idx[pos] == spaces[pos].size()) idx[pos++] = 0;
    if (pos == n) break;
  }
  return count;
}

std::pair<Representation, Representation> sub_and_quotient(const Representation& M,
                                                           const std::vector<FpMatrix>& U) {
  const ValuedQuiver& Q = M.quiver();
  int n = Q.size();
  int p = M.q();
  std::vector<FpMatrix> C(n), Cinv(n);
  IntVec ds(n), dq(n);
  for (int i = 0; i < n; ++i) {
    C[i] = U[i].complete_basis();
    Cinv[i] = C[i].inverse();
    ds[i] = U[i].cols();
    dq[i] = M.dim(i) - ds[i];
  }
  const auto& arrows = Q.arrow_list();
  std::vector<FpMatrix> sub, quo;
  for (size_t a = 0; a < arrows.size(); ++a) {
    auto [t, h] = arrows[a];
    FpMatrix A = Cinv[h] * M.map(static_cast<int>(a)) * C[t];
    for (int r = ds[h]; r < M.dim(h); ++r)
      for (int c = 0; c < ds[t]; ++c)
        if (A(r, c)) fail(ErrorCode::kInternal, "subspace tuple is not arrow-stable");
    sub.push_back(A.block(0, 0, ds[h], ds[t]));
    quo.push_back(A.block(ds[h], ds[t], dq[h], dq[t]));
  }
  (void)p;
  return {Representation(M.quiver_ptr(), M.q(), ds, std::move(sub)),
          Representation(M.quiver_ptr(), M.q(), dq, std::move(quo))};
}

Representation kernel_rep(const Morphism& f, const Representation& M, const Representation& N) {
  (void)N;
  std::vector<FpMatrix> U;
  for (int i = 0; i < M.quiver().size(); ++i) {
    if (M.dim(i) == 0) {
      U.emplace_back(M.q(), 0, 0);
      continue;
    }
    U.push_back(f[i].nullspace());
  }
  return sub_and_quotient(M, U).first;
}

Representation cokernel_rep(const Morphism& f, const Representation& M, const Representation& N) {
  (void)M;
  std::vector<FpMatrix> U;
  for (int i = 0; i < N.quiver().size(); ++i) {
    if (N.dim(i) == 0 || f[i].cols() == 0) {
      U.emplace_back(N.q(), N.dim(i), 0);
      continue;
    }
    U.push_back(f[i].column_space());
  }
  return sub_and_quotient(N, U).second;
}

IntVec top_vector(const Representation& M) {
  const ValuedQuiver& Q = M.quiver();
  const auto& arrows = Q.arrow_list();
  IntVec top(Q.size());
  for (int i = 0; i < Q.size(); ++i) {
    FpMatrix R(M.q(), M.dim(i), 0);
    for (size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a].second == i) R = FpMatrix::hstack(R, M.map(static_cast<int>(a)));
    top[i] = M.dim(i) - (R.cols() ? R.rank() : 0);
  }
  return top;
}

ProjResolution min_proj_resolution(const Representation& M) {
  const ValuedQuiver& Q = M.quiver();
  int n = Q.size();
  const auto& arrows = Q.arrow_list();
  ProjResolution res{IntVec(n, 0), Representation::zero(M.quiver_ptr(), M.q()),
                     Representation::zero(M.quiver_ptr(), M.q()), {}};
  // Generators: complements of the radical at each vertex.
  std::vector<std::pair<int, FpMatrix>> gens;
  for (int i = 0; i < n; ++i) {
    if (M.dim(i) == 0) continue;
    FpMatrix R(M.q(), M.dim(i), 0);
    for (size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a].second == i) R = FpMatrix::hstack(R, M.map(static_cast<int>(a)));
    FpMatrix rad = R.cols() ? R.column_space() : R;
    FpMatrix full = rad.complete_basis();
    for (int c = rad.cols(); c < M.dim(i); ++c) {
      gens.emplace_back(i, full.block(0, c, M.dim(i), 1));
      ++res.top[i];
    }
  }
  std::vector<FpMatrix> comp(n);
  for (int j = 0; j < n; ++j) comp[j] = FpMatrix(M.q(), M.dim(j), 0);
  for (auto& [i, v] : gens) {
    Representation Pi = Representation::projective(M.quiver_ptr(), M.q(), i);
    res.cover = res.cover.direct_sum(Pi);
    auto paths = paths_from(Q, i);
    for (int j = 0; j < n; ++j)
      for (const Path& p : paths[j]) {
        FpMatrix img = v;
        for (int a : p) img = M.map(a) * img;
        comp[j] = FpMatrix::hstack(comp[j], img);
      }
  }
  res.cover_map = comp;
  if (!is_morphism(res.cover_map, res.cover, M)) fail(ErrorCode::kInternal, "projective cover map is not a morphism");
  for (int j = 0; j < n; ++j)
    if (comp[j].rows() && comp[j].rank() != M.dim(j)) fail(ErrorCode::kInternal, "projective cover is not surjective");
  res.kernel = kernel_rep(res.cover_map, res.cover, M);
  return res;
}

bool is_indecomposable(const Representation& M, long long exhaustive_cap) {
  if (M.total_dim() == 0) return false;
  return !find_splitting_endo(M, exhaustive_cap).has_value();
}

bool isomorphic_search(const Representation& M, const Representation& N, long long cap) {
  if (M.dims() != N.dims()) return false;
  if (M.total_dim() == 0) return true;
  auto basis = hom_basis(M, N);
  int d = static_cast<int>(basis.size());
  if (d == 0) return false;
  if (capped_pow(M.q(), d, cap) <= cap) {
    bool found = false;
    for_each_vector(M.q(), d, [&](const std::vector<int>& c) {
      if (is_iso(combine(basis, c, M.q(), M, N))) {
        found = true;
        return false;
      }
      return true;
    });
    return found;
  }
  std::mt19937_64 rng(0x150ULL);
  std::uniform_int_distribution<int> dist(0, M.q() - 1);
  for (int t = 0; t < 4096; ++t) {
    std::vector<int> c(d);
    for (auto& x : c) x = dist(rng);
    if (is_iso(combine(basis, c, M.q(), M, N))) return true;
  }
  fail(ErrorCode::kBoundExceeded, "isomorphism search space too large");
}

mpz_class aut_order_enumerate(const Representation& M, long long cap) {
  auto basis = hom_basis(M, M);
  int d = static_cast<int>(basis.size());
  if (d == 0) return 1;
  if (capped_pow(M.q(), d, cap) > cap) fail(ErrorCode::kBoundExceeded, "End(M) too large to enumerate");
  mpz_class count = 0;
  for_each_vector(M.q(), d, [&](const std::vector<int>& c) {
    if (is_iso(combine(basis, c, M.q(), M, M))) ++count;
    return true;
  });
  return count;
}

std::vector<Representation> split_indecomposables(const Representation& M) {
  if (M.total_dim() == 0) return {};
  auto f = find_splitting_endo(M, 65536);
  if (!f) return {M};
  int k = 0;
  for (const auto& m : *f) k = std::max(k, m.rows());
  Morphism g = power(*f, k);
  std::vector<FpMatrix> ker, im;
  for (int i = 0; i < M.quiver().size(); ++i) {
    if (M.dim(i) == 0) {
      ker.emplace_back(M.q(), 0, 0);
      im.emplace_back(M.q(), 0, 0);
      continue;
    }
    ker.push_back(g[i].nullspace());
    im.push_back(g[i].column_space());
  }
  auto a = split_indecomposables(sub_and_quotient(M, ker).first);
  auto b = split_indecomposables(sub_and_quotient(M, im).first);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

mpz_class gl_order(int q, int k) {
  mpz_class Q = q, r = 1;
  mpz_class qk;
  mpz_pow_ui(qk.get_mpz_t(), Q.get_mpz_t(), k);
  mpz_class qj = 1;
  for (int j = 0; j < k; ++j) {
    r *= (qk - qj);
    qj *= q;
  }
  return r;
}

// ---------------------------------------------------------------- catalog

IndecCatalog::IndecCatalog(IndecCatalog&& o) noexcept
    : quiver_(std::move(o.quiver_)),
      q_(o.q_),
      max_dim_(o.max_dim_),
      cap_(o.cap_),
      complete_(o.complete_),
      dynkin_(o.dynkin_),
      fingerprint_ok_(o.fingerprint_ok_),
      from_cache_(o.from_cache_),
      entries_(std::move(o.entries_)),
      H_(std::move(o.H_)),
      Hinv_(std::move(o.Hinv_)),
      proj_index_(std::move(o.proj_index_)),
      memo_(std::move(o.memo_)) {}

IndecCatalog& IndecCatalog::operator=(IndecCatalog&& o) noexcept {
  quiver_ = std::move(o.quiver_);
  q_ = o.q_;
  max_dim_ = o.max_dim_;
  cap_ = o.cap_;
  complete_ = o.complete_;
  dynkin_ = o.dynkin_;
  fingerprint_ok_ = o.fingerprint_ok_;
  from_cache_ = o.from_cache_;
  entries_ = std::move(o.entries_);
  H_ = std::move(o.H_);
  Hinv_ = std::move(o.Hinv_);
  proj_index_ = std::move(o.proj_index_);
  memo_ = std::move(o.memo_);
  return *this;
}

std::vector<IntVec> IndecCatalog::positive_roots(const ValuedQuiver& Q, int limit) {
  int n = Q.size();
  std::set<IntVec> roots;
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    roots.insert(unit_vector(n, i));
    queue.push_back(unit_vector(n, i));
  }
  while (!queue.empty()) {
    IntVec a = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int s = sym_form(Q, a, unit_vector(n, i));
      if (s >= 0) continue;
      IntVec b = a;
      b[i] -= s;
      if (total(b) > limit || static_cast<int>(roots.size()) > limit) return {};
      if (roots.insert(b).second) queue.push_back(b);
    }
  }
  return {roots.begin(), roots.end()};
}

std::string IndecCatalog::cache_key() const {
  return fnv_hex(quiver_->canonical_string() + "|q=" + std::to_string(q_) + "|max=" + std::to_string(max_dim_));
}

std::string IndecCatalog::to_json() const {
  nlohmann::json j;
  j["quiver"] = quiver_->canonical_string();
  j["q"] = q_;
  j["max_dim"] = max_dim_;
  j["complete"] = complete_;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json je;
    je["label"] = e.label;
    je["dims"] = e.rep.dims();
    nlohmann::json maps = nlohmann::json::array();
    for (const auto& m : e.rep.maps()) maps.push_back(m.entries());
    je["maps"] = maps;
    je["projective"] = e.projective;
    je["injective"] = e.injective;
    je["rigid"] = e.rigid;
    j["entries"].push_back(je);
  }
  j["hom_matrix"] = H_.to_rows();
  return j.dump(1);
}

int IndecCatalog::simple_index(int vertex) const {
  for (int i = 0; i < size(); ++i)
    if (entries_[i].simple && entries_[i].rep.dim(vertex) == 1) return i;
  fail(ErrorCode::kInternal, "simple module missing from catalog");
}

int IndecCatalog::find_label(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (entries_[i].label == label) return i;
  if (label.size() >= 2 && (label[0] == 'P' || label[0] == 'I' || label[0] == 'S')) {
    int v;
    try {
      size_t used;
      v = std::stoi(label.substr(1), &used) - 1;
      if (used != label.size() - 1) return -1;
    } catch (...) {
      return -1;
    }
    if (v < 0 || v >= quiver_->size()) return -1;
    if (label[0] == 'P') return proj_index_[v];
    if (label[0] == 'S') return simple_index(v);
    Representation I = Representation::injective(quiver_, q_, v);
    for (int i = 0; i < size(); ++i)
      if (entries_[i].rep.dims() == I.dims() && isomorphic_search(entries_[i].rep, I)) return i;
  }
  return -1;
}

void IndecCatalog::finish(bool complete_hint) {
  std::stable_sort(entries_.begin(), entries_.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    int ta = a.rep.total_dim(), tb = b.rep.total_dim();
    if (ta != tb) return ta < tb;
    return a.rep.dims() > b.rep.dims();
  });
  int n = quiver_->size();
  proj_index_.assign(n, -1);
  std::vector<Representation> P, I;
  for (int i = 0; i < n; ++i) {
    P.push_back(Representation::projective(quiver_, q_, i));
    I.push_back(Representation::injective(quiver_, q_, i));
  }
  std::map<std::string, int> seen;
  for (int k = 0; k < size(); ++k) {
    CatalogEntry& e = entries_[k];
    const Representation& X = e.rep;
    e.simple = X.total_dim() == 1;
    e.projective = false;
    e.injective = false;
    e.proj_vertex = -1;
    int inj_vertex = -1;
    for (int i = 0; i < n; ++i) {
      if (X.dims() == P[i].dims() && isomorphic_search(X, P[i])) {
        e.projective = true;
        e.proj_vertex = i;
        proj_index_[i] = k;
      }
      if (X.dims() == I[i].dims() && isomorphic_search(X, I[i])) {
        e.injective = true;
        inj_vertex = i;
      }
    }
    e.end_dim = hom_dim(X, X);
    e.rigid = ext_dim(X, X) == 0;
    e.residue_degree = 1;
    if (e.end_dim > 1) {
      if (capped_pow(q_, e.end_dim, cap_) > cap_) {
        fail(ErrorCode::kBoundExceeded, "End of a catalog entry too large to enumerate");
      }
      mpz_class units = aut_order_enumerate(X, cap_);
      mpz_class all;
      mpz_ui_pow_ui(all.get_mpz_t(), q_, e.end_dim);
      mpz_class non_units = all - units;
      int r = 0;
      while (non_units * q_ <= all && non_units > 0) {
        non_units *= q_;
        ++r;
      }
      e.residue_degree = r;
    }
    std::string label;
    if (e.simple) {
      for (int i = 0; i < n; ++i)
        if (X.dim(i)) label = "S" + std::to_string(i + 1);
    } else if (e.projective) {
      label = "P" + std::to_string(e.proj_vertex + 1);
    } else if (e.injective) {
      label = "I" + std::to_string(inj_vertex + 1);
    } else {
      label = "M";
      for (int i = 0; i < n; ++i) label += (i ? "_" : "") + std::to_string(X.dim(i));
    }
    int c = seen[label]++;
    if (c > 0) label += "#" + std::to_string(c + 1);
    e.label = label;
  }
  for (int i = 0; i < n; ++i)
    if (proj_index_[i] < 0) fail(ErrorCode::kInternal, "projective P" + std::to_string(i + 1) + " missing from catalog");

  int m = size();
  H_ = IntMatrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) H_(i, j) = hom_dim(entries_[i].rep, entries_[j].rep);

  // Invert H over Q.
  std::vector<std::vector<mpq_class>> A(m, std::vector<mpq_class>(2 * m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) A[i][j] = H_(i, j);
    A[i][m + i] = 1;
  }
  fingerprint_ok_ = true;
  for (int c = 0; c < m && fingerprint_ok_; ++c) {
    int sel = -1;
    for (int r = c; r < m; ++r)
      if (sgn(A[r][c]) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) {
      fingerprint_ok_ = false;
      break;
    }
    std::swap(A[sel], A[c]);
    mpq_class piv = A[c][c];
    for (auto& x : A[c]) x /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == c || sgn(A[r][c]) == 0) continue;
      mpq_class f = A[r][c];
      for (int k = 0; k < 2 * m; ++k) A[r][k] -= f * A[c][k];
    }
  }
  Hinv_.clear();
  if (fingerprint_ok_) {
    Hinv_.assign(m, std::vector<mpq_class>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) Hinv_[i][j] = A[i][m + j];
  }

  auto roots = positive_roots(*quiver_);
  dynkin_ = !roots.empty();
  complete_ = false;
  if (dynkin_) {
    // Gabriel: one indecomposable per positive root.
    bool all_fit = true;
    for (const auto& r : roots) {
      if (total(r) > max_dim_) {
        all_fit = false;
        continue;
      }
      int hits = 0;
      for (const auto& e : entries_)
        if (e.rep.dims() == r) ++hits;
      if (hits != 1) fail(ErrorCode::kInternal, "catalog disagrees with the root system at " + qhall::to_string(r));
    }
    complete_ = all_fit && complete_hint;
  }
}

IndecCatalog IndecCatalog::build(std::shared_ptr<const ValuedQuiver> quiver, int q, const CatalogOptions& opts) {
  if (!quiver->simply_laced()) {
    fail(ErrorCode::kInvalidArgument, "catalogs need all valuations equal to 1");
  }
  if (opts.max_dim < 1) fail(ErrorCode::kInvalidArgument, "max_dim must be >= 1");
  IndecCatalog cat;
  cat.quiver_ = quiver;
  cat.q_ = q;
  cat.max_dim_ = opts.max_dim;
  cat.cap_ = opts.exhaustive_cap;
  int n = quiver->size();
  const auto& arrows = quiver->arrow_list();

  std::string cache_path;
  if (!opts.cache_dir.empty()) {
    cache_path = opts.cache_dir + "/catalog_" + cat.cache_key() + ".json";
    std::ifstream in(cache_path);
    if (in) {
      try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("quiver") == quiver->canonical_string() && j.at("q") == q && j.at("max_dim") == opts.max_dim) {
          for (const auto& je : j.at("entries")) {
            IntVec dims = je.at("dims").get<IntVec>();
            std::vector<FpMatrix> maps;
            size_t a = 0;
            for (const auto& jm : je.at("maps")) {
              auto [t, h] = arrows.at(a++);
              maps.emplace_back(q, dims[h], dims[t], jm.get<std::vector<int>>());
            }
            cat.entries_.push_back({"", Representation(quiver, q, dims, std::move(maps))});
          }
          cat.finish(true);
          if (cat.H_ == IntMatrix::from_rows(j.at("hom_matrix").get<std::vector<std::vector<int>>>())) {
            cat.from_cache_ = true;
            return cat;
          }
        }
      } catch (const std::exception&) {
      }
      cat.entries_.clear();
    }
  }

  for_each_dim_vector(n, opts.max_dim, [&](const IntVec& d) {
    if (!support_connected(*quiver, d)) return;
    std::vector<int> sizes;
    int N = 0;
    for (auto [t, h] : arrows) {
      sizes.push_back(d[h] * d[t]);
      N += d[h] * d[t];
    }
    std::vector<Representation> found;
    for_each_vector(q, N, [&](const std::vector<int>& flat) {
      std::vector<FpMatrix> maps;
      size_t pos = 0;
      for (size_t a = 0; a < arrows.size(); ++a) {
        auto [t, h] = arrows[a];
        std::vector<int> ent(flat.begin() + pos, flat.begin() + pos + sizes[a]);
        pos += sizes[a];
        maps.emplace_back(q, d[h], d[t], ent);
      }
      Representation R(quiver, q, d, std::move(maps));
      if (!is_indecomposable(R, opts.exhaustive_cap)) return true;
      for (const auto& X : found)
        if (isomorphic_search(X, R)) return true;
      found.push_back(R);
      return true;
    });
    for (auto& X : found) cat.entries_.push_back({"", std::move(X)});
  });
  for (int i = 0; i < n; ++i) {
    Representation P = Representation::projective(quiver, q, i);
    if (P.total_dim() > opts.max_dim) cat.entries_.push_back({"", P});
  }
  cat.finish(true);

  if (!cache_path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(opts.cache_dir, ec);
    std::ofstream out(cache_path);
    if (out) out << cat.to_json();
  }
  return cat;
}

std::optional<IsoClass> IndecCatalog::classify_fingerprint(const Representation& R) const {
  if (!fingerprint_ok_) return std::nullopt;
  int m = size();
  std::vector<int> h(m);
  for (int j = 0; j < m; ++j) h[j] = hom_dim(entries_[j].rep, R);
  IsoClass c{std::vector<int>(m, 0)};
  IntVec dims(quiver_->size(), 0);
  for (int i = 0; i < m; ++i) {
    mpq_class k = 0;
    for (int j = 0; j < m; ++j) k += Hinv_[i][j] * h[j];
    if (k.get_den() != 1 || sgn(k) < 0) return std::nullopt;
    c.mult[i] = static_cast<int>(k.get_num().get_si());
    dims = dims + scaled(entries_[i].rep.dims(), c.mult[i]);
  }
  if (dims != R.dims()) return std::nullopt;
  return c;
}

IsoClass IndecCatalog::classify_split(const Representation& R) const {
  IsoClass c{std::vector<int>(size(), 0)};
  for (const auto& X : split_indecomposables(R)) {
    int hit = -1;
    for (int i = 0; i < size() && hit < 0; ++i)
      if (entries_[i].rep.dims() == X.dims() && isomorphic_search(entries_[i].rep, X)) hit = i;
    if (hit < 0) {
      if (X.total_dim() > max_dim_) {
        fail(ErrorCode::kBoundExceeded, "indecomposable summand of dimension " + qhall::to_string(X.dims()) +
                                            " lies outside the catalog bound " + std::to_string(max_dim_));
      }
      fail(ErrorCode::kInternal, "indecomposable summand missing from catalog: " + X.to_string());
    }
    ++c.mult[hit];
  }
  return c;
}

IsoClass IndecCatalog::classify(const Representation& R) const {
  if (R.total_dim() == 0) return IsoClass{std::vector<int>(size(), 0)};
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = memo_.find(R);
    if (it != memo_.end()) return it->second;
  }
  std::optional<IsoClass> c;
  if (complete_ || R.total_dim() <= max_dim_) c = classify_fingerprint(R);
  if (!c) c = classify_split(R);
  std::lock_guard<std::mutex> lock(memo_mu_);
  memo_.emplace(R, *c);
  return *c;
}

// ---------------------------------------------------------------- ModuleCategory

ModuleCategory::ModuleCategory(std::shared_ptr<const ValuedQuiver> quiver, int q, const CatalogOptions& opts)
    : quiver_(quiver), q_(q), catalog_(IndecCatalog::build(quiver, q, opts)) {
  int n = quiver_->size();
  proj_dims_ = IntMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    const IntVec& d = catalog_.entry(catalog_.projective_index(i)).rep.dims();
    for (int j = 0; j < n; ++j) proj_dims_(j, i) = d[j];
  }
}

IsoClass ModuleCategory::zero() const { return IsoClass{std::vector<int>(catalog_.size(), 0)}; }

IsoClass ModuleCategory::indec(int idx, int mult) const {
  IsoClass c = zero();
  c.mult.at(idx) = mult;
  return c;
}

IsoClass ModuleCategory::sum(const IsoClass& a, const IsoClass& b) const {
  IsoClass c = a;
  for (size_t i = 0; i < c.mult.size(); ++i) c.mult[i] += b.mult[i];
  return c;
}

IsoClass ModuleCategory::scaled(const IsoClass& a, int k) const {
  IsoClass c = a;
  for (auto& m : c.mult) m *= k;
  return c;
}

IsoClass ModuleCategory::difference(const IsoClass& a, const IsoClass& b) const {
  IsoClass c = a;
  for (size_t i = 0; i < c.mult.size(); ++i) {
    c.mult[i] -= b.mult[i];
    if (c.mult[i] < 0) fail(ErrorCode::kInternal, "class difference is not a direct summand");
  }
  return c;
}

IntVec ModuleCategory::dim(const IsoClass& c) const {
  IntVec d(n(), 0);
  for (int i = 0; i < catalog_.size(); ++i)
    if (c.mult[i]) d = d + qhall::scaled(catalog_.entry(i).rep.dims(), c.mult[i]);
  return d;
}

std::string ModuleCategory::label(const IsoClass& c) const {
  std::string s;
  for (int i = 0; i < catalog_.size(); ++i) {
    if (!c.mult[i]) continue;
    if (!s.empty()) s += "+";
    s += catalog_.entry(i).label;
    if (c.mult[i] > 1) s += "^" + std::to_string(c.mult[i]);
  }
  return s.empty() ? "0" : s;
}

IsoClass ModuleCategory::parse_label(const std::string& text) const {
  IsoClass c = zero();
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t == "0" || t.empty()) return c;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, '+')) {
    int mult = 1;
    std::string name = part;
    auto caret = part.find('^');
    if (caret != std::string::npos) {
      name = part.substr(0, caret);
      try {
        size_t used;
        mult = std::stoi(part.substr(caret + 1), &used);
        if (used != part.size() - caret - 1 || mult < 0) throw std::invalid_argument("mult");
      } catch (...) {
        fail(ErrorCode::kParse, "bad multiplicity in '" + part + "'");
      }
    }
    int idx = catalog_.find_label(name);
    if (idx < 0) fail(ErrorCode::kUnknownLabel, "unknown module label '" + name + "'");
    c.mult[idx] += mult;
  }
  return c;
}

const Representation& ModuleCategory::rep(const IsoClass& c) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = reps_.find(c);
    if (it != reps_.end()) return *it->second;
  }
  Representation r = Representation::zero(quiver_, q_);
  for (int i = 0; i < catalog_.size(); ++i)
    for (int k = 0; k < c.mult[i]; ++k) r = r.direct_sum(catalog_.entry(i).rep);
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = reps_[c];
  if (!slot) slot = std::make_unique<Representation>(std::move(r));
  return *slot;
}

IsoClass ModuleCategory::proj_class(const IntVec& mult) const {
  IsoClass c = zero();
  for (int i = 0; i < n(); ++i) {
    if (mult[i] < 0) fail(ErrorCode::kInvalidArgument, "negative projective multiplicity");
    c.mult[catalog_.projective_index(i)] += mult[i];
  }
  return c;
}

bool ModuleCategory::is_projective(const IsoClass& c) const {
  for (int i = 0; i < catalog_.size(); ++i)
    if (c.mult[i] && !catalog_.entry(i).projective) return false;
  return true;
}

IntVec ModuleCategory::proj_mult(const IsoClass& c) const {
  IntVec m(n(), 0);
  for (int i = 0; i < catalog_.size(); ++i) {
    if (!c.mult[i]) continue;
    if (!catalog_.entry(i).projective) fail(ErrorCode::kInvalidArgument, "class " + label(c) + " is not projective");
    m[catalog_.entry(i).proj_vertex] += c.mult[i];
  }
  return m;
}

std::string ModuleCategory::proj_label(const IntVec& mult) const {
  std::string s;
  for (int i = 0; i < n(); ++i) {
    if (!mult[i]) continue;
    if (!s.empty()) s += "+";
    s += "P" + std::to_string(i + 1);
    if (mult[i] > 1) s += "^" + std::to_string(mult[i]);
  }
  return s.empty() ? "0" : s;
}

IntVec ModuleCategory::parse_proj_label(const std::string& text) const {
  return proj_mult(parse_label(text));
}

int ModuleCategory::hom_dim(const IsoClass& a, const IsoClass& b) const {
  const IntMatrix& H = catalog_.hom_matrix();
  long long s = 0;
  for (int i = 0; i < catalog_.size(); ++i) {
    if (!a.mult[i]) continue;
    for (int j = 0; j < catalog_.size(); ++j)
      if (b.mult[j]) s += static_cast<long long>(a.mult[i]) * b.mult[j] * H(i, j);
  }
  return static_cast<int>(s);
}

int ModuleCategory::ext_dim(const IsoClass& a, const IsoClass& b) const {
  int e = hom_dim(a, b) - euler(dim(a), dim(b));
  if (e < 0) fail(ErrorCode::kInternal, "negative Ext dimension: Euler form convention is inconsistent");
  return e;
}

mpz_class ModuleCategory::aut_order(const IsoClass& c) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = aut_.find(c);
    if (it != aut_.end()) return it->second;
  }
  long long exponent = hom_dim(c, c);
  mpz_class prod = 1;
  for (int i = 0; i < catalog_.size(); ++i) {
    int k = c.mult[i];
    if (!k) continue;
    int r = catalog_.entry(i).residue_degree;
    exponent -= static_cast<long long>(k) * k * r;
    mpz_class qr;
    mpz_ui_pow_ui(qr.get_mpz_t(), q_, r);
    prod *= gl_order(static_cast<int>(qr.get_si()), k);
  }
  if (exponent < 0) fail(ErrorCode::kInternal, "negative radical dimension in aut_order");
  mpz_class qe;
  mpz_ui_pow_ui(qe.get_mpz_t(), q_, static_cast<unsigned long>(exponent));
  mpz_class a = qe * prod;
  std::lock_guard<std::mutex> lock(mu_);
  aut_[c] = a;
  return a;
}

const std::vector<IsoClass>& ModuleCategory::classes_of_dim(const IntVec& d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = classes_.find(d);
    if (it != classes_.end()) return *it->second;
  }
  auto out = std::make_unique<std::vector<IsoClass>>();
  for (int x : d)
    if (x < 0) goto done;
  {
    if (!catalog_.complete() && total(d) > catalog_.max_dim()) {
      fail(ErrorCode::kBoundExceeded, "dimension vector " + qhall::to_string(d) + " exceeds the catalog bound");
    }
    IsoClass cur = zero();
    std::function<void(int, const IntVec&)> rec = [&](int idx, const IntVec& left) {
      if (idx == catalog_.size()) {
        if (is_zero(left)) out->push_back(cur);
        return;
      }
      const IntVec& x = catalog_.entry(idx).rep.dims();
      IntVec rem = left;
      int k = 0;
      while (true) {
        cur.mult[idx] = k;
        rec(idx + 1, rem);
        rem = rem - x;
        bool ok = true;
        for (int v : rem) ok &= v >= 0;
        if (!ok) break;
        ++k;
      }
      cur.mult[idx] = 0;
    };
    rec(0, d);
  }
done:
  std::sort(out->begin(), out->end());
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = classes_[d];
  if (!slot) slot = std::move(out);
  return *slot;
}

const std::map<std::pair<IsoClass, IsoClass>, long long>& ModuleCategory::sub_quotient_table(
    const IsoClass& L, const IntVec& e) const {
  auto key = std::make_pair(L, e);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = subq_.find(key);
    if (it != subq_.end()) return *it->second;
  }
  auto table = std::make_unique<std::map<std::pair<IsoClass, IsoClass>, long long>>();
  const Representation& R = rep(L);
  for_each_submodule(R, e, [&](const std::vector<FpMatrix>& U) {
    auto [sub, quo] = sub_and_quotient(R, U);
    ++(*table)[{classify(quo), classify(sub)}];
    return true;
  });
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = subq_[key];
  if (!slot) slot = std::move(table);
  return *slot;
}

long long ModuleCategory::hall_number(const IsoClass& L, const IsoClass& M, const IsoClass& N) const {
  IntVec dl = dim(L), dm = dim(M), dn = dim(N);
  if (dl != dm + dn) return 0;
  const auto& t = sub_quotient_table(L, dn);
  auto it = t.find({M, N});
  return it == t.end() ? 0 : it->second;
}

const std::map<IsoClass, long long>& ModuleCategory::extension_counts(const IsoClass& Mc, const IsoClass& Nc) const {
  auto key = std::make_pair(Mc, Nc);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ext_.find(key);
    if (it != ext_.end()) return *it->second;
  }
  auto out = std::make_unique<std::map<IsoClass, long long>>();
  const Representation& M = rep(Mc);
  const Representation& N = rep(Nc);
  const auto& arrows = quiver_->arrow_list();
  int nv = n();
  // delta: (f_i : M_i -> N_i) -> (f_h M_a - N_a f_t)_a
  std::vector<int> off0(nv + 1, 0);
  for (int i = 0; i < nv; ++i) off0[i + 1] = off0[i] + N.dim(i) * M.dim(i);
  std::vector<int> off1(arrows.size() + 1, 0);
  for (size_t a = 0; a < arrows.size(); ++a)
    off1[a + 1] = off1[a] + N.dim(arrows[a].second) * M.dim(arrows[a].first);
  int d0 = off0[nv], d1 = off1[arrows.size()];
  FpMatrix delta(q_, d1, d0);
  for (size_t a = 0; a < arrows.size(); ++a) {
    auto [t, h] = arrows[a];
    const FpMatrix& Ma = M.map(static_cast<int>(a));
    const FpMatrix& Na = N.map(static_cast<int>(a));
    for (int r = 0; r < N.dim(h); ++r)
      for (int c = 0; c < M.dim(t); ++c) {
        int row = off1[a] + r * M.dim(t) + c;
        for (int k = 0; k < M.dim(h); ++k) {
          int idx = off0[h] + r * M.dim(h) + k;
          delta.set(row, idx, delta(row, idx) + Ma(k, c));
        }
        for (int k = 0; k < N.dim(t); ++k) {
          int idx = off0[t] + k * M.dim(t) + c;
          delta.set(row, idx, delta(row, idx) - Na(r, k));
        }
      }
  }
  FpMatrix comp(q_, d1, 0);
  if (d1 > 0) {
    FpMatrix img = d0 > 0 ? delta.column_space() : FpMatrix(q_, d1, 0);
    FpMatrix full = img.complete_basis();
    comp = full.block(0, img.cols(), d1, d1 - img.cols());
  }
  int e = comp.cols();
  if (e != ext_dim(Mc, Nc)) fail(ErrorCode::kInconsistentCount, "cocycle count disagrees with hom - Euler");
  for_each_vector(q_, e, [&](const std::vector<int>& coeff) {
    FpMatrix c(q_, d1, 1);
    for (int j = 0; j < e; ++j)
      if (coeff[j])
        for (int r = 0; r < d1; ++r) c.set(r, 0, c(r, 0) + coeff[j] * comp(r, j));
    std::vector<FpMatrix> maps;
    for (size_t a = 0; a < arrows.size(); ++a) {
      auto [t, h] = arrows[a];
      const FpMatrix& Ma = M.map(static_cast<int>(a));
      const FpMatrix& Na = N.map(static_cast<int>(a));
      FpMatrix La(q_, N.dim(h) + M.dim(h), N.dim(t) + M.dim(t));
      for (int r = 0; r < N.dim(h); ++r)
        for (int k = 0; k < N.dim(t); ++k) La.set(r, k, Na(r, k));
      for (int r = 0; r < M.dim(h); ++r)
        for (int k = 0; k < M.dim(t); ++k) La.set(N.dim(h) + r, N.dim(t) + k, Ma(r, k));
      for (int r = 0; r < N.dim(h); ++r)
        for (int k = 0; k < M.dim(t); ++k) La.set(r, N.dim(t) + k, c(off1[a] + r * M.dim(t) + k, 0));
      maps.push_back(La);
    }
    Representation L(quiver_, q_, N.dims() + M.dims(), std::move(maps));
    ++(*out)[classify(L)];
    return true;
  });
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = ext_[key];
  if (!slot) slot = std::move(out);
  return *slot;
}

mpz_class ModuleCategory::ext_count_rp(const IsoClass& M, const IsoClass& N, const IsoClass& L) const {
  long long F = hall_number(L, M, N);
  if (F == 0) return 0;
  mpz_class hom;
  mpz_ui_pow_ui(hom.get_mpz_t(), q_, hom_dim(M, N));
  mpz_class num = mpz_class(static_cast<long>(F)) * hom * aut_order(M) * aut_order(N);
  mpz_class den = aut_order(L);
  if (num % den != 0) {
    fail(ErrorCode::kInconsistentCount, "Riedtmann-Peng count is not integral for L=" + label(L));
  }
  return num / den;
}

const std::map<std::pair<IsoClass, IsoClass>, long long>& ModuleCategory::hom_fiber_direct(
    const IsoClass& Pc, const IsoClass& Mc) const {
  auto key = std::make_pair(Pc, Mc);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = fiber_.find(key);
    if (it != fiber_.end()) return *it->second;
  }
  if (!is_projective(Pc)) fail(ErrorCode::kInvalidArgument, "hom_fiber_direct: first argument must be projective");
  auto out = std::make_unique<std::map<std::pair<IsoClass, IsoClass>, long long>>();
  const Representation& P = rep(Pc);
  const Representation& M = rep(Mc);
  auto basis = hom_basis(P, M);
  for_each_vector(q_, static_cast<int>(basis.size()), [&](const std::vector<int>& c) {
    Morphism f = combine(basis, c, q_, P, M);
    ++(*out)[{classify(kernel_rep(f, P, M)), classify(cokernel_rep(f, P, M))}];
    return true;
  });
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = fiber_[key];
  if (!slot) slot = std::move(out);
  return *slot;
}

mpz_class ModuleCategory::hom_fiber_formula(const IsoClass& P, const IsoClass& M, const IsoClass& Q,
                                            const IsoClass& B) const {
  IntVec d = dim(P) - dim(Q);
  for (int x : d)
    if (x < 0) return 0;
  if (dim(M) - dim(B) != d) return 0;
  mpz_class s = 0;
  for (const IsoClass& L : classes_of_dim(d)) {
    long long f1 = hall_number(P, L, Q);
    if (!f1) continue;
    long long f2 = hall_number(M, B, L);
    if (!f2) continue;
    s += aut_order(L) * static_cast<long>(f1) * static_cast<long>(f2);
  }
  return s;
}

long long ModuleCategory::gr_count(const IsoClass& M, const IntVec& e) const { return qhall::gr_count(rep(M), e); }

std::pair<IntVec, IntVec> ModuleCategory::resolution(const IsoClass& M) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = res_.find(M);
    if (it != res_.end()) return it->second;
  }
  ProjResolution r = min_proj_resolution(rep(M));
  IsoClass omega = classify(r.kernel);
  if (!is_projective(omega)) fail(ErrorCode::kInternal, "syzygy is not projective");
  std::pair<IntVec, IntVec> out{r.top, proj_mult(omega)};
  std::lock_guard<std::mutex> lock(mu_);
  res_[M] = out;
  return out;
}

}  // namespace qhall
