#pragma once

#include <map>
#include <utility>

#include "qhall/errors.hpp"
#include "qhall/scalar.hpp"

namespace qhall {

/// Finite Scalar-linear combination of basis keys.  Zero coefficients are
/// never stored, so equality is plain map equality.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Scalar>;

  explicit LinComb(int q) : q_(q) {}
  LinComb(int q, const Key& k) : q_(q) { terms_.emplace(k, Scalar::one(q)); }
  LinComb(int q, const Key& k, const Scalar& c) : q_(q) { add(k, c); }

  int q() const { return q_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero(q_) : it->second;
  }

  void add(const Key& k, const Scalar& c) {
    if (c.q() != q_) fail(ErrorCode::kMixedField, "coefficient over a different q");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

  LinComb scaled(const Scalar& s) const {
    LinComb r(q_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.q_ == b.q_ && a.terms_ == b.terms_;
  }

 protected:
  int q_;
  Map terms_;
};

/// Bilinear extension of a basis-level product.  `basis(a, b, out, c)` must
/// add c * (a . b) to out.
template <class Out, class A, class B, class F>
Out bilinear(int q, const A& x, const B& y, F&& basis) {
  Out out(q);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) basis(a, b, out, ca * cb);
  return out;
}

}  // namespace qhall
