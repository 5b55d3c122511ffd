#include "qhall/derived_hall.hpp"

#include <sstream>

namespace qhall {

namespace {

Scalar count_scalar(int q, const mpz_class& c) { return Scalar::integer(q, c); }
Scalar count_scalar(int q, long long c) { return Scalar::integer(q, mpz_class(static_cast<long>(c))); }

bool nonneg(const IntVec& v) {
  for (int x : v)
    if (x < 0) return false;
  return true;
}

}  // namespace

DerivedHall::DerivedHall(std::shared_ptr<const ModuleCategory> cat) : cat_(std::move(cat)) {}

DerivedHall::DerivedHall(std::shared_ptr<const ModuleCategory> cat, FramedSeed seed)
    : cat_(std::move(cat)), seed_(std::move(seed)) {
  if (!(cat_->quiver() == seed_->framed())) {
    fail(ErrorCode::kInvalidArgument, "the derived Hall engine with a seed needs the framed quiver");
  }
  frame_ = appendix_frame(*seed_);
}

const FramedSeed& DerivedHall::seed() const {
  if (!seed_) fail(ErrorCode::kInvalidArgument, "this derived Hall engine has no seed");
  return *seed_;
}

const IntMatrix& DerivedHall::Ep() const { return seed().Epfull(); }

DHKey DerivedHall::key(const IsoClass& M, const IntVec& P) const {
  if (static_cast<int>(P.size()) != n()) {
    fail(ErrorCode::kInvalidArgument, "projective multiplicities must have length " + std::to_string(n()));
  }
  if (!nonneg(P)) fail(ErrorCode::kInvalidArgument, "negative projective multiplicity");
  return {M, P};
}

DHElement DerivedHall::one() const { return DHElement(q(), key(cat_->zero(), IntVec(n(), 0))); }

DHElement DerivedHall::u(const IsoClass& M) const { return u(M, IntVec(n(), 0)); }

DHElement DerivedHall::u(const IsoClass& M, const IntVec& P) const { return DHElement(q(), key(M, P)); }

DHElement DerivedHall::ushift(const IntVec& P) const { return u(cat_->zero(), P); }

IntVec DerivedHall::deg(const DHKey& k) const { return Ep() * dim(k); }

const std::map<IsoClass, Scalar>& DerivedHall::module_product(const IsoClass& M, const IsoClass& N) const {
  auto key = std::make_pair(M, N);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mod_.find(key);
    if (it != mod_.end()) return *it->second;
  }
  auto out = std::make_unique<std::map<IsoClass, Scalar>>();
  IntVec m = cat_->dim(M), nn = cat_->dim(N);
  Scalar pre = Scalar::qpow(q(), cat_->euler(m, nn) - cat_->hom_dim(M, N));
  for (const auto& L : cat_->classes_of_dim(m + nn)) {
    mpz_class e = cat_->ext_count_rp(M, N, L);
    if (e != 0) out->emplace(L, pre * count_scalar(q(), e));
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = mod_[key];
  if (!slot) slot = std::move(out);
  return *slot;
}

const std::map<std::pair<IsoClass, IntVec>, Scalar>& DerivedHall::shift_product(const IntVec& P,
                                                                                const IsoClass& N) const {
  auto key = std::make_pair(P, N);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = shift_.find(key);
    if (it != shift_.end()) return *it->second;
  }
  auto out = std::make_unique<std::map<std::pair<IsoClass, IntVec>, Scalar>>();
  IntVec p = cat_->proj_dim(P), nn = cat_->dim(N);
  IsoClass Pc = cat_->proj_class(P);
  Scalar pre = Scalar::qpow(q(), -cat_->euler(p, nn));
  // kernels are projective submodules of P, so Dim Q <= Dim P
  for_each_below(IntVec(n(), total(p)), [&](const IntVec& Qm) {
    IntVec qd = cat_->proj_dim(Qm);
    if (!nonneg(p - qd)) return;
    IntVec bd = nn - p + qd;
    if (!nonneg(bd)) return;
    IsoClass Qc = cat_->proj_class(Qm);
    for (const auto& B : cat_->classes_of_dim(bd)) {
      mpz_class f = cat_->hom_fiber_formula(Pc, N, Qc, B);
      if (f != 0) out->emplace(std::make_pair(B, Qm), pre * count_scalar(q(), f));
    }
  });
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = shift_[key];
  if (!slot) slot = std::move(out);
  return *slot;
}

void DerivedHall::basis_mult(const DHKey& a, const DHKey& b, DHElement& out, const Scalar& c) const {
  if (is_zero(a.proj)) {
    for (const auto& [L, d] : module_product(a.module, b.module)) out.add({L, b.proj}, c * d);
    return;
  }
  for (const auto& [bq, s] : shift_product(a.proj, b.module)) {
    const auto& [B, Qp] = bq;
    IntVec shift = Qp + b.proj;
    Scalar cs = c * s;
    for (const auto& [L, d] : module_product(a.module, B)) out.add({L, shift}, cs * d);
  }
}

DHElement DerivedHall::mult(const DHElement& x, const DHElement& y) const {
  return bilinear<DHElement>(q(), x, y, [&](const DHKey& a, const DHKey& b, DHElement& out, const Scalar& c) {
    basis_mult(a, b, out, c);
  });
}

DHElement DerivedHall::mult_twisted(const DHElement& x, const DHElement& y) const {
  const FramedSeed& sd = seed();
  return bilinear<DHElement>(q(), x, y, [&](const DHKey& a, const DHKey& b, DHElement& out, const Scalar& c) {
    Scalar t = c;
    t.mul_vpow(sd.lambda_form(deg(a), deg(b)));
    basis_mult(a, b, out, t);
  });
}

DHTensor DerivedHall::comult(const DHElement& x) const {
  DHTensor out(q());
  for (const auto& [k, c] : x.terms()) {
    IntVec l = cat_->dim(k.module);
    IntVec p = cat_->proj_dim(k.proj);
    for_each_below(l, [&](const IntVec& e) {
      for (const auto& [qs, cnt] : cat_->sub_quotient_table(k.module, e)) {
        const auto& [Mq, Ns] = qs;
        Scalar s = Scalar::qpow(q(), cat_->euler(l - e, e - p)) * count_scalar(q(), cnt) * c;
        out.add({key(Mq, IntVec(n(), 0)), key(Ns, k.proj)}, s);
      }
    });
  }
  return out;
}

void DerivedHall::basis_tensor_mult(const std::pair<DHKey, DHKey>& x, const std::pair<DHKey, DHKey>& y,
                                    DHTensor& out, const Scalar& c, bool twisted) const {
  const auto& [a, b] = x;
  const auto& [cc, d] = y;
  long long e = 2 * (sym_form(cat_->quiver(), dim(b), dim(cc)) + cat_->euler(dim(a), dim(d)));
  if (twisted) e += seed().lambda_form(Ep() * (dim(a) + dim(b)), Ep() * (dim(cc) + dim(d)));
  Scalar pre = c;
  pre.mul_vpow(e);
  DHElement left(q()), right(q());
  basis_mult(a, cc, left, Scalar::one(q()));
  basis_mult(b, d, right, Scalar::one(q()));
  for (const auto& [l, cl] : left.terms())
    for (const auto& [r, cr] : right.terms()) out.add({l, r}, pre * cl * cr);
}

DHTensor DerivedHall::tensor_mult(const DHTensor& x, const DHTensor& y) const {
  return bilinear<DHTensor>(q(), x, y, [&](const auto& a, const auto& b, DHTensor& out, const Scalar& c) {
    basis_tensor_mult(a, b, out, c, false);
  });
}

DHTensor DerivedHall::tensor_mult_twisted(const DHTensor& x, const DHTensor& y) const {
  return bilinear<DHTensor>(q(), x, y, [&](const auto& a, const auto& b, DHTensor& out, const Scalar& c) {
    basis_tensor_mult(a, b, out, c, true);
  });
}

TorusElt DerivedHall::integrate(const DHElement& x) const {
  TorusElt out(q(), TorusMode::kPlain);
  for (const auto& [k, c] : x.terms()) out.add(dim(k), c);
  return out;
}

TorusTensor DerivedHall::integrate2(const DHTensor& x) const {
  TorusTensor out(q());
  for (const auto& [ab, c] : x.terms()) out.add({dim(ab.first), dim(ab.second)}, c);
  return out;
}

TorusElt DerivedHall::psi_pipeline(const DHElement& x) const {
  seed();
  return mu(*frame_, q(), integrate2(comult(x)));
}

TorusElt DerivedHall::psi_closed(const IsoClass& M, const IntVec& P) const {
  const FramedSeed& sd = seed();
  TorusElt out(q());
  IntVec m = cat_->dim(M);
  IntVec p = cat_->proj_dim(P);
  for_each_below(m, [&](const IntVec& e) {
    long long g = cat_->gr_count(M, e);
    if (!g) return;
    Scalar s = count_scalar(q(), g);
    out.add(sd.Epfull() * (p - e) - sd.Efull() * (m - e), s.mul_vpow(cat_->euler(p - e, m - e)));
  });
  return out;
}

TorusElt DerivedHall::psi_closed(const DHElement& x) const {
  TorusElt out(q());
  for (const auto& [k, c] : x.terms()) out += psi_closed(k.module, k.proj).scaled(c);
  return out;
}

TorusElt DerivedHall::cc_character(const IsoClass& M, const IntVec& P) const {
  const FramedSeed& sd = seed();
  TorusElt out(q());
  IntVec m = cat_->dim(M);
  IntVec p = cat_->proj_dim(P);
  IntVec t = top_vector(cat_->rep(cat_->proj_class(P)));
  IntVec em = sd.Efull() * m;
  for_each_below(m, [&](const IntVec& e) {
    long long g = cat_->gr_count(M, e);
    if (!g) return;
    Scalar s = count_scalar(q(), g);
    out.add(t - sd.Bfull() * e - em, s.mul_vpow(cat_->euler(p - e, m - e)));
  });
  return out;
}

int DerivedHall::derived_hom_dim(const DHKey& x, const DHKey& y, int i) const {
  // Hom(A[a], B[b][i]) = Hom(A, B) for a shift gap of 0, Ext(A, B) for 1, else 0
  auto part = [&](const IsoClass& A, int a, const IsoClass& B, int b) {
    if (A.is_zero() || B.is_zero()) return 0;
    int k = b + i - a;
    if (k == 0) return cat_->hom_dim(A, B);
    if (k == 1) return cat_->ext_dim(A, B);
    return 0;
  };
  IsoClass P = cat_->proj_class(x.proj), Q = cat_->proj_class(y.proj);
  return part(x.module, 0, y.module, 0) + part(x.module, 0, Q, 1) + part(P, 1, y.module, 0) + part(P, 1, Q, 1);
}

std::string DerivedHall::key_label(const DHKey& k) const {
  std::ostringstream os;
  os << "u(M=" << cat_->label(k.module) << "; P=" << cat_->proj_label(k.proj) << ")";
  return os.str();
}

MHElement phi_embed(const MorphismHall& H, const DHElement& x) {
  MHElement out(H.q());
  for (const auto& [k, c] : x.terms()) out.add(H.key_X(k.module, k.proj), c);
  return out;
}

IsoClass embed_module(const ModuleCategory& base, const ModuleCategory& framed, const IsoClass& M) {
  const Representation& R = base.rep(M);
  int n = base.n(), m = framed.n();
  IntVec dims(m, 0);
  for (int i = 0; i < n; ++i) dims[i] = R.dim(i);
  std::vector<FpMatrix> maps = R.maps();
  const auto& arrows = framed.quiver().arrow_list();
  if (static_cast<int>(arrows.size()) < R.arrow_count()) {
    fail(ErrorCode::kInvalidArgument, "framed quiver has fewer arrows than the base quiver");
  }
  for (size_t a = maps.size(); a < arrows.size(); ++a) {
    auto [tail, head] = arrows[a];
    maps.emplace_back(framed.q(), dims[head], dims[tail]);
  }
  return framed.classify(Representation(framed.quiver_ptr(), framed.q(), dims, maps));
}

IntVec embed_proj(const IntVec& P, int framed_n) {
  IntVec r(framed_n, 0);
  for (size_t i = 0; i < P.size(); ++i) r[i] = P[i];
  return r;
}

}  // namespace qhall
