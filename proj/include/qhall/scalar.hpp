#pragma once

#include <gmpxx.h>

#include <string>

namespace qhall {

/// Exact element rat + sqrt_rat * sqrt(q) of Z[sqrt(q), 1/sqrt(q)].
///
/// Every structure constant of the algebras in this library lives in that
/// ring once q is fixed; v = sqrt(q) is the pair (0, 1).  Both rational parts
/// always have q-power denominators; operations that would leave the ring
/// throw.
class Scalar {
 public:
  explicit Scalar(int q);
  Scalar(int q, const mpq_class& rat, const mpq_class& sqrt_rat);

  static Scalar zero(int q) { return Scalar(q); }
  static Scalar one(int q) { return Scalar(q, 1, 0); }
  static Scalar integer(int q, const mpz_class& n) { return Scalar(q, mpq_class(n), 0); }
  /// v^k with v = sqrt(q).
  static Scalar vpow(int q, long k);
  /// q^k, i.e. v^(2k).
  static Scalar qpow(int q, long k) { return vpow(q, 2 * k); }

  int q() const { return q_; }
  const mpq_class& rat() const { return rat_; }
  const mpq_class& sqrt_rat() const { return sqrt_; }
  bool is_zero() const { return sgn(rat_) == 0 && sgn(sqrt_) == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const { return Scalar(q_, -rat_, -sqrt_); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.q_ == b.q_ && a.rat_ == b.rat_ && a.sqrt_ == b.sqrt_;
  }

  /// Multiply in place by v^k.
  Scalar& mul_vpow(long k);

  /// "a + b*v" style rendering with v = sqrt(q).
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;
  void check_lattice() const;

  int q_;
  mpq_class rat_;
  mpq_class sqrt_;
};

/// Parses a rational written as "a" or "a/b".
mpq_class parse_rational(const std::string& text);

}  // namespace qhall
