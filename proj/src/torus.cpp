#include "qhall/torus.hpp"

#include <sstream>

namespace qhall {

TorusElt TorusElt::monomial(int q, const IntVec& exp, TorusMode mode) {
  return monomial(Scalar::one(q), exp, mode);
}

TorusElt TorusElt::monomial(const Scalar& c, const IntVec& exp, TorusMode mode) {
  TorusElt t(c.q(), mode);
  t.add(exp, c);
  return t;
}

TorusElt& TorusElt::operator+=(const TorusElt& o) {
  if (o.mode_ != mode_) fail(ErrorCode::kInvalidArgument, "adding torus elements of different modes");
  LinComb<IntVec>::operator+=(o);
  return *this;
}

std::string TorusElt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")X^" << qhall::to_string(e);
    first = false;
  }
  return os.str();
}

IntVec TensorFrame::top(const IntVec& x) const { return IntVec(x.begin(), x.begin() + k()); }

IntVec TensorFrame::bot(const IntVec& x) const { return IntVec(x.begin() + k(), x.end()); }

IntVec TensorFrame::tilde(const IntVec& b) const {
  IntVec r(m(), 0);
  for (int i = 0; i < bottom; ++i) r[m() - bottom + i] = b[i];
  return r;
}

IntVec TensorFrame::deg(const IntVec& x) const {
  if (static_cast<int>(x.size()) != k() + bottom) fail(ErrorCode::kInvalidArgument, "exponent has the wrong length");
  return Ep * top(x) - tilde(bot(x));
}

TensorFrame main_frame(const FramedSeed& seed) {
  return {seed.lambda(), seed.Et(), seed.Ept(), seed.base_data().euler, seed.n()};
}

TensorFrame appendix_frame(const FramedSeed& seed) {
  return {seed.lambda(), seed.Efull(), seed.Epfull(), seed.framed_data().euler, 0};
}

TorusElt t_mult(const TorusElt& x, const TorusElt& y) {
  if (x.mode() != TorusMode::kPlain || y.mode() != TorusMode::kPlain) {
    fail(ErrorCode::kInvalidArgument, "t_mult expects elements of the commutative torus");
  }
  TorusElt r(x.q(), TorusMode::kPlain);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r.add(a + b, ca * cb);
  return r;
}

TorusElt tlambda_mult(const IntMatrix& lambda, const TorusElt& x, const TorusElt& y) {
  if (x.mode() != TorusMode::kLambda || y.mode() != TorusMode::kLambda) {
    fail(ErrorCode::kInvalidArgument, "tlambda_mult expects quantum torus elements");
  }
  TorusElt r(x.q(), TorusMode::kLambda);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r.add(a + b, (ca * cb).mul_vpow(lambda.form(a, b)));
  return r;
}

TorusTensor tensor_monomial(int q, const IntVec& a, const IntVec& b) { return TorusTensor(q, {a, b}); }

TorusTensor tensor_star(const TensorFrame& f, int q, const TorusTensor& x, const TorusTensor& y) {
  TorusTensor r(q);
  for (const auto& [ab, c1] : x.terms())
    for (const auto& [cd, c2] : y.terms()) {
      const auto& [a, b] = ab;
      const auto& [c, d] = cd;
      long long e = f.lambda.form(f.deg(a) + f.deg(b), f.deg(c) + f.deg(d)) +
                    2 * (f.sym_form(f.top(b), f.top(c)) + f.euler_form(f.top(a), f.top(d)));
      r.add({a + c, b + d}, (c1 * c2).mul_vpow(e));
    }
  return r;
}

TorusElt mu(const TensorFrame& f, int q, const TorusTensor& x) {
  TorusElt r(q, TorusMode::kLambda);
  for (const auto& [ab, c] : x.terms()) {
    const auto& [a, b] = ab;
    IntVec a1 = f.top(a), b1 = f.top(b);
    long long e = -f.sym_form(a1, b1) - f.euler_form(a1, b1);
    IntVec exp = -(f.E * a1) - f.Ep * b1 + f.tilde(f.bot(a)) + f.tilde(f.bot(b));
    Scalar s = c;
    r.add(exp, s.mul_vpow(e));
  }
  return r;
}

namespace {

IntVec monomial_deg(const FramedSeed& seed, const IntVec& a) {
  int n = seed.n();
  const IntMatrix& B = seed.base_data().B;
  IntVec d(a.begin(), a.begin() + n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) d[i] -= a[n + j] * B(i, j);
  return d;
}

}  // namespace

bool torus_homogeneous(const FramedSeed& seed, const TorusElt& x) {
  if (x.is_zero()) return false;
  IntVec d = monomial_deg(seed, x.terms().begin()->first);
  for (const auto& [a, c] : x.terms())
    if (monomial_deg(seed, a) != d) return false;
  return true;
}

IntVec torus_deg(const FramedSeed& seed, const TorusElt& x) {
  if (x.is_zero()) fail(ErrorCode::kInvalidArgument, "degree of the zero element");
  if (!torus_homogeneous(seed, x)) fail(ErrorCode::kInvalidArgument, "torus element is not homogeneous");
  return monomial_deg(seed, x.terms().begin()->first);
}

}  // namespace qhall
