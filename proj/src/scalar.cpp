#include "qhall/scalar.hpp"

#include <sstream>

#include "qhall/errors.hpp"

namespace qhall {

namespace {

bool is_q_power(mpz_class d, int q) {
  if (d < 0) d = -d;
  while (d % q == 0) d /= q;
  return d == 1;
}

mpq_class mpq_qpow(int q, long k) {
  mpz_class base = q;
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return mpq_class(p);
  mpq_class r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

}  // namespace

Scalar::Scalar(int q) : q_(q), rat_(0), sqrt_(0) {
  if (q < 2) fail(ErrorCode::kInvalidArgument, "scalar field parameter q must be >= 2");
}

Scalar::Scalar(int q, const mpq_class& rat, const mpq_class& sqrt_rat)
    : q_(q), rat_(rat), sqrt_(sqrt_rat) {
  if (q < 2) fail(ErrorCode::kInvalidArgument, "scalar field parameter q must be >= 2");
  rat_.canonicalize();
  sqrt_.canonicalize();
  check_lattice();
}

Scalar Scalar::vpow(int q, long k) {
  // v^(2j) = q^j, v^(2j+1) = q^j * v
  long j = k >= 0 ? k / 2 : -((-k + 1) / 2);
  bool odd = (k - 2 * j) != 0;
  mpq_class c = mpq_qpow(q, j);
  return odd ? Scalar(q, 0, c) : Scalar(q, c, 0);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (q_ != o.q_) {
    fail(ErrorCode::kMixedField, "scalar operands over different q (" + std::to_string(q_) +
                                     " vs " + std::to_string(o.q_) + ")");
  }
}

void Scalar::check_lattice() const {
  if (!is_q_power(rat_.get_den(), q_) || !is_q_power(sqrt_.get_den(), q_)) {
    fail(ErrorCode::kInvalidArgument,
         "value " + to_string() + " leaves Z[sqrt q, 1/sqrt q] for q=" + std::to_string(q_));
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  rat_ += o.rat_;
  sqrt_ += o.sqrt_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  rat_ -= o.rat_;
  sqrt_ -= o.sqrt_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  mpq_class r = rat_ * o.rat_ + sqrt_ * o.sqrt_ * q_;
  mpq_class s = rat_ * o.sqrt_ + sqrt_ * o.rat_;
  rat_ = r;
  sqrt_ = s;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  if (o.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero scalar");
  // (a + b v) / (c + d v) = (a + b v)(c - d v) / (c^2 - q d^2)
  mpq_class norm = o.rat_ * o.rat_ - o.sqrt_ * o.sqrt_ * q_;
  mpq_class r = (rat_ * o.rat_ - sqrt_ * o.sqrt_ * q_) / norm;
  mpq_class s = (sqrt_ * o.rat_ - rat_ * o.sqrt_) / norm;
  rat_ = r;
  sqrt_ = s;
  check_lattice();
  return *this;
}

Scalar& Scalar::mul_vpow(long k) {
  if (k == 0) return *this;
  return *this *= vpow(q_, k);
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (sgn(sqrt_) == 0) {
    os << rat_.get_str();
  } else if (sgn(rat_) == 0) {
    os << sqrt_.get_str() << "*v";
  } else {
    os << rat_.get_str() << (sgn(sqrt_) > 0 ? " + " : " - ") << mpq_class(abs(sqrt_)).get_str()
       << "*v";
  }
  return os.str();
}

mpq_class parse_rational(const std::string& text) {
  mpq_class r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    fail(ErrorCode::kParse, "malformed rational '" + text + "'");
  }
  if (r.get_den() == 0) fail(ErrorCode::kParse, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace qhall
