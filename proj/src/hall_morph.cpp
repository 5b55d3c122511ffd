#include "qhall/hall_morph.hpp"

#include <sstream>

namespace qhall {

namespace {

Scalar count_scalar(int q, long long c) { return Scalar::integer(q, mpz_class(static_cast<long>(c))); }

}  // namespace

MorphismHall::MorphismHall(std::shared_ptr<const ModuleCategory> cat, FramedSeed seed)
    : cat_(std::move(cat)), seed_(std::move(seed)), frame_(main_frame(seed_)) {
  if (!(cat_->quiver() == seed_.base())) {
    fail(ErrorCode::kInvalidArgument, "seed and module category use different quivers");
  }
}

MHKey MorphismHall::key(const IntVec& alpha, const IsoClass& M, const IntVec& P) const {
  if (static_cast<int>(alpha.size()) != n() || static_cast<int>(P.size()) != n()) {
    fail(ErrorCode::kInvalidArgument, "basis key vectors must have length " + std::to_string(n()));
  }
  for (int x : P)
    if (x < 0) fail(ErrorCode::kInvalidArgument, "negative projective multiplicity");
  return {alpha, M, P};
}

MHKey MorphismHall::key_K(const IntVec& alpha) const { return key(alpha, cat_->zero(), IntVec(n(), 0)); }

MHKey MorphismHall::key_X(const IsoClass& M, const IntVec& P) const { return key(IntVec(n(), 0), M, P); }

MHElement MorphismHall::one() const { return MHElement(q(), key_K(IntVec(n(), 0))); }

MHElement MorphismHall::K(const IntVec& alpha) const { return MHElement(q(), key_K(alpha)); }

MHElement MorphismHall::X(const IsoClass& M) const { return X(M, IntVec(n(), 0)); }

MHElement MorphismHall::X(const IsoClass& M, const IntVec& P) const { return MHElement(q(), key_X(M, P)); }

MHElement MorphismHall::Xshift(const IntVec& P) const { return X(cat_->zero(), P); }

IntVec MorphismHall::deg(const MHKey& k) const {
  return seed_.Ept() * (module_dim(k) - proj_dim(k)) - seed_.tilde(k.alpha);
}

const std::map<IsoClass, Scalar>& MorphismHall::module_product(const IsoClass& M, const IsoClass& N) const {
  auto key = std::make_pair(M, N);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mod_.find(key);
    if (it != mod_.end()) return *it->second;
  }
  auto out = std::make_unique<std::map<IsoClass, Scalar>>();
  if (M.is_zero() || N.is_zero()) {
    out->emplace(cat_->sum(M, N), Scalar::one(q()));
  } else {
    // q^{<m,n>} |Ext(M,N)_L| / |Hom(M,N)| = q^{-ext(M,N)} |Ext(M,N)_L|
    Scalar pre = Scalar::qpow(q(), -cat_->ext_dim(M, N));
    for (const auto& [L, cnt] : cat_->extension_counts(M, N)) out->emplace(L, pre * count_scalar(q(), cnt));
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = mod_[key];
  if (!slot) slot = std::move(out);
  return *slot;
}

const std::map<std::pair<IsoClass, IntVec>, Scalar>& MorphismHall::shift_product(const IntVec& P,
                                                                                 const IsoClass& N) const {
  auto key = std::make_pair(P, N);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = shift_.find(key);
    if (it != shift_.end()) return *it->second;
  }
  auto out = std::make_unique<std::map<std::pair<IsoClass, IntVec>, Scalar>>();
  IsoClass Pc = cat_->proj_class(P);
  Scalar pre = Scalar::qpow(q(), -cat_->euler(cat_->proj_dim(P), cat_->dim(N)));
  for (const auto& [kc, cnt] : cat_->hom_fiber_direct(Pc, N)) {
    const auto& [ker, coker] = kc;
    if (!cat_->is_projective(ker)) fail(ErrorCode::kInternal, "kernel of a map out of a projective is not projective");
    Scalar s = pre * count_scalar(q(), cnt);
    auto [it, fresh] = out->try_emplace({coker, cat_->proj_mult(ker)}, s);
    if (!fresh) it->second += s;
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = shift_[key];
  if (!slot) slot = std::move(out);
  return *slot;
}

void MorphismHall::basis_mult(const MHKey& a, const MHKey& b, MHElement& out, const Scalar& c) const {
  // K_a X_M X_{P[1]} * K_b X_N X_{Q[1]} = K_{a+b} X_M (X_{P[1]} X_N) X_{Q[1]}
  IntVec alpha = a.alpha + b.alpha;
  if (is_zero(a.proj)) {
    for (const auto& [L, d] : module_product(a.module, b.module)) out.add({alpha, L, b.proj}, c * d);
    return;
  }
  for (const auto& [bq, s] : shift_product(a.proj, b.module)) {
    const auto& [B, Qp] = bq;
    IntVec shift = Qp + b.proj;
    Scalar cs = c * s;
    for (const auto& [L, d] : module_product(a.module, B)) out.add({alpha, L, shift}, cs * d);
  }
}

MHElement MorphismHall::mult(const MHElement& x, const MHElement& y) const {
  return bilinear<MHElement>(q(), x, y,
                             [&](const MHKey& a, const MHKey& b, MHElement& out, const Scalar& c) {
                               basis_mult(a, b, out, c);
                             });
}

MHElement MorphismHall::mult_twisted(const MHElement& x, const MHElement& y) const {
  return bilinear<MHElement>(q(), x, y, [&](const MHKey& a, const MHKey& b, MHElement& out, const Scalar& c) {
    Scalar t = c;
    t.mul_vpow(seed_.lambda_form(deg(a), deg(b)));
    basis_mult(a, b, out, t);
  });
}

MHTensor MorphismHall::comult(const MHElement& x) const {
  MHTensor out(q());
  for (const auto& [k, c] : x.terms()) {
    IntVec l = module_dim(k);
    IntVec p = proj_dim(k);
    for_each_below(l, [&](const IntVec& e) {
      for (const auto& [qs, cnt] : cat_->sub_quotient_table(k.module, e)) {
        const auto& [Mq, Ns] = qs;
        Scalar s = Scalar::qpow(q(), cat_->euler(l - e, e - p)) * count_scalar(q(), cnt) * c;
        out.add({key_X(Mq, IntVec(n(), 0)), key(k.alpha, Ns, k.proj)}, s);
      }
    });
  }
  return out;
}

void MorphismHall::basis_tensor_mult(const std::pair<MHKey, MHKey>& x, const std::pair<MHKey, MHKey>& y,
                                     MHTensor& out, const Scalar& c, bool twisted) const {
  const auto& [a, b] = x;
  const auto& [cc, d] = y;
  IntVec mp = module_dim(a) - proj_dim(a);
  IntVec nq = module_dim(b) - proj_dim(b);
  IntVec us = module_dim(cc) - proj_dim(cc);
  IntVec vt = module_dim(d) - proj_dim(d);
  long long e = 2 * (sym_form(cat_->quiver(), nq, us) + cat_->euler(mp, vt));
  if (twisted) e += seed_.lambda_form(deg(a) + deg(b), deg(cc) + deg(d));
  Scalar pre = c;
  pre.mul_vpow(e);
  MHElement left(q()), right(q());
  basis_mult(a, cc, left, Scalar::one(q()));
  basis_mult(b, d, right, Scalar::one(q()));
  for (const auto& [l, cl] : left.terms())
    for (const auto& [r, cr] : right.terms()) out.add({l, r}, pre * cl * cr);
}

MHTensor MorphismHall::tensor_mult(const MHTensor& x, const MHTensor& y) const {
  return bilinear<MHTensor>(q(), x, y, [&](const auto& a, const auto& b, MHTensor& out, const Scalar& c) {
    basis_tensor_mult(a, b, out, c, false);
  });
}

MHTensor MorphismHall::tensor_mult_twisted(const MHTensor& x, const MHTensor& y) const {
  return bilinear<MHTensor>(q(), x, y, [&](const auto& a, const auto& b, MHTensor& out, const Scalar& c) {
    basis_tensor_mult(a, b, out, c, true);
  });
}

TorusElt MorphismHall::integrate(const MHElement& x) const {
  TorusElt out(q(), TorusMode::kPlain);
  for (const auto& [k, c] : x.terms()) out.add(concat(module_dim(k) - proj_dim(k), k.alpha), c);
  return out;
}

TorusTensor MorphismHall::integrate2(const MHTensor& x) const {
  TorusTensor out(q());
  for (const auto& [ab, c] : x.terms()) {
    const auto& [a, b] = ab;
    out.add({concat(module_dim(a) - proj_dim(a), a.alpha), concat(module_dim(b) - proj_dim(b), b.alpha)}, c);
  }
  return out;
}

TorusElt MorphismHall::psi_pipeline(const MHElement& x) const { return mu(frame_, q(), integrate2(comult(x))); }

TorusElt MorphismHall::psi_closed(const IsoClass& M, const IntVec& P) const {
  TorusElt out(q());
  IntVec m = cat_->dim(M);
  IntVec p = cat_->proj_dim(P);
  for_each_below(m, [&](const IntVec& e) {
    long long g = cat_->gr_count(M, e);
    if (!g) return;
    Scalar s = count_scalar(q(), g);
    out.add(seed_.Ept() * (p - e) - seed_.Et() * (m - e), s.mul_vpow(cat_->euler(p - e, m - e)));
  });
  return out;
}

TorusElt MorphismHall::psi_closed(const MHElement& x) const {
  TorusElt out(q());
  for (const auto& [k, c] : x.terms()) {
    // K_a * X = v^{Lambda(a~, deg X)} K_a (star) X
    IntVec dX = seed_.Ept() * (module_dim(k) - proj_dim(k));
    Scalar s = c;
    s.mul_vpow(seed_.lambda_form(seed_.tilde(k.alpha), dX));
    out += tlambda_mult(seed_.lambda(), TorusElt::monomial(s, seed_.tilde(k.alpha)), psi_closed(k.module, k.proj));
  }
  return out;
}

TorusElt MorphismHall::cc_character(const IsoClass& M, const IntVec& P) const {
  TorusElt out(q());
  IntVec m = cat_->dim(M);
  IntVec p = cat_->proj_dim(P);
  IntVec t = concat(top_vector(cat_->rep(cat_->proj_class(P))), IntVec(n(), 0));
  IntVec em = seed_.Et() * m;
  for_each_below(m, [&](const IntVec& e) {
    long long g = cat_->gr_count(M, e);
    if (!g) return;
    Scalar s = count_scalar(q(), g);
    out.add(t - seed_.Bt() * e - em, s.mul_vpow(cat_->euler(p - e, m - e)));
  });
  return out;
}

C2Object MorphismHall::c2_C(const IsoClass& M) const { return {IntVec(n(), 0), IntVec(n(), 0), M}; }

C2Object MorphismHall::c2_Z(const IntVec& P) const { return {IntVec(n(), 0), P, cat_->zero()}; }

C2Object MorphismHall::c2_K(const IntVec& P) const { return {P, IntVec(n(), 0), cat_->zero()}; }

C2Object MorphismHall::c2_sum(const C2Object& a, const C2Object& b) const {
  return {a.K + b.K, a.Z + b.Z, cat_->sum(a.C, b.C)};
}

std::pair<IntVec, IntVec> MorphismHall::c2_terms(const C2Object& x) const {
  auto [a, b] = cat_->resolution(x.C);
  // K_P = (P -> P), Z_P = (P -> 0), C_M = (Omega_M -> P_M)
  return {a + x.K, b + x.K + x.Z};
}

IntVec MorphismHall::dim_vec_c2(const C2Object& x) const {
  auto [m0, m1] = c2_terms(x);
  IntVec d0 = cat_->proj_dim(m0);
  IntVec d1 = cat_->proj_dim(m1);
  return concat(d0 - d1, d0);
}

IntVec MorphismHall::ind(const C2Object& x) const {
  auto [a, b] = c2_terms(x);
  return concat(a - b, b);
}

IntVec MorphismHall::ind0(const C2Object& x) const {
  IntVec h = ind(x);
  return IntVec(h.begin(), h.begin() + n());
}

std::string MorphismHall::key_label(const MHKey& k) const {
  std::ostringstream os;
  bool any = false;
  if (!is_zero(k.alpha)) {
    os << "K[";
    for (size_t i = 0; i < k.alpha.size(); ++i) os << (i ? "," : "") << k.alpha[i];
    os << "]";
    any = true;
  }
  if (!k.module.is_zero() || !is_zero(k.proj)) {
    os << (any ? "*" : "") << "X(M=" << cat_->label(k.module) << "; P=" << cat_->proj_label(k.proj) << ")";
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

}  // namespace qhall
