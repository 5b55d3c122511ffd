#include "qhall/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "qhall/errors.hpp"

namespace qhall {

ValuedQuiver::ValuedQuiver(int n, std::vector<int> valuations, const std::vector<Arrow>& arrows)
    : n_(n), valuations_(std::move(valuations)), counts_(n, n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "quiver needs at least one vertex");
  if (static_cast<int>(valuations_.size()) != n) {
    fail(ErrorCode::kInvalidArgument, "expected " + std::to_string(n) + " valuations");
  }
  for (int d : valuations_)
    if (d < 1) fail(ErrorCode::kInvalidArgument, "valuations must be positive");
  for (const auto& a : arrows) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      fail(ErrorCode::kInvalidArgument, "arrow endpoint out of range");
    }
    if (a.mult < 0) fail(ErrorCode::kInvalidArgument, "negative arrow multiplicity");
    if (a.mult == 0) continue;
    if (a.tail == a.head) fail(ErrorCode::kCyclicQuiver, "loop at vertex " + std::to_string(a.tail + 1));
    if ((valuations_[a.tail] * a.mult) % valuations_[a.head] != 0) {
      fail(ErrorCode::kInvalidArgument,
           "arrow " + std::to_string(a.tail + 1) + "->" + std::to_string(a.head + 1) +
               ": d_tail * mult must be divisible by d_head");
    }
    counts_(a.tail, a.head) += a.mult;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < counts_(i, j); ++k) arrow_list_.emplace_back(i, j);

  // Kahn's algorithm; a leftover vertex means a cycle.
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (counts_(i, j) > 0) ++indeg[j];
  std::vector<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    int v = ready.back();
    ready.pop_back();
    topo_.push_back(v);
    for (int j = 0; j < n; ++j)
      if (counts_(v, j) > 0 && --indeg[j] == 0) ready.push_back(j);
  }
  if (static_cast<int>(topo_.size()) != n) fail(ErrorCode::kCyclicQuiver, "quiver has an oriented cycle");
}

bool ValuedQuiver::simply_laced() const {
  return std::all_of(valuations_.begin(), valuations_.end(), [](int d) { return d == 1; });
}

std::string ValuedQuiver::canonical_string() const {
  std::ostringstream os;
  os << "n=" << n_ << ";d=";
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << valuations_[i];
  os << ";a=";
  bool first = true;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (counts_(i, j) > 0) {
        os << (first ? "" : ",") << i + 1 << ">" << j + 1 << "x" << counts_(i, j);
        first = false;
      }
  return os.str();
}

ExchangeData exchange_data(const ValuedQuiver& q) {
  int n = q.size();
  ExchangeData x;
  x.R = IntMatrix(n, n);
  x.Rp = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = q.arrow_count(i, j);
      if (c == 0) continue;
      x.Rp(i, j) = c;
      x.R(j, i) = q.valuation(i) * c / q.valuation(j);
    }
  x.B = x.Rp - x.R;
  x.E = IntMatrix::identity(n) - x.Rp;
  x.Ep = IntMatrix::identity(n) - x.R;
  x.D = IntMatrix::diagonal(q.valuations());
  x.euler = x.D * x.E;
  if (x.D * x.Rp != x.R.transpose() * x.D) {
    fail(ErrorCode::kInternal, "exchange data violates D R' = R^T D");
  }
  if ((IntMatrix::identity(n) - x.R.transpose()) * x.D != x.euler) {
    fail(ErrorCode::kInternal, "Euler matrix identity failed");
  }
  return x;
}

int euler_form(const ValuedQuiver& q, const IntVec& alpha, const IntVec& beta) {
  int n = q.size();
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n) {
    fail(ErrorCode::kInvalidArgument, "euler_form: expected vectors of length " + std::to_string(n));
  }
  long long s = 0;
  for (int i = 0; i < n; ++i) {
    s += static_cast<long long>(q.valuation(i)) * alpha[i] * beta[i];
    for (int j = 0; j < n; ++j) {
      int c = q.arrow_count(i, j);
      if (c) s -= static_cast<long long>(q.valuation(i)) * c * alpha[i] * beta[j];
    }
  }
  return static_cast<int>(s);
}

int sym_form(const ValuedQuiver& q, const IntVec& alpha, const IntVec& beta) {
  return euler_form(q, alpha, beta) + euler_form(q, beta, alpha);
}

namespace {

ValuedQuiver principal_framing(const ValuedQuiver& base) {
  int n = base.size();
  std::vector<int> vals = base.valuations();
  vals.insert(vals.end(), base.valuations().begin(), base.valuations().end());
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (base.arrow_count(i, j)) arrows.push_back({i, j, base.arrow_count(i, j)});
  for (int i = 0; i < n; ++i) arrows.push_back({n + i, i, 1});
  return ValuedQuiver(2 * n, vals, arrows);
}

}  // namespace

FramedSeed::FramedSeed(const ValuedQuiver& base, const ValuedQuiver& framed)
    : base_(base),
      framed_(framed),
      base_data_(exchange_data(base)),
      framed_data_(exchange_data(framed)) {
  int n = base.size();
  int m = 2 * n;
  IntMatrix Rt = framed_data_.R.block(0, 0, m, n);
  IntMatrix Rpt = framed_data_.Rp.block(0, 0, m, n);
  IntMatrix It = IntMatrix::identity(m).block(0, 0, m, n);
  Bt_ = Rpt - Rt;
  Et_ = It - Rpt;
  Ept_ = It - Rt;
}

FramedSeed FramedSeed::principal(const ValuedQuiver& base, const std::optional<IntMatrix>& lambda) {
  FramedSeed s(base, principal_framing(base));
  int n = base.size();
  if (lambda) {
    if (lambda->rows() != 2 * n || lambda->cols() != 2 * n) {
      fail(ErrorCode::kIncompatibleSeed, "lambda must be " + std::to_string(2 * n) + "x" +
                                             std::to_string(2 * n));
    }
    s.lambda_ = *lambda;
  } else {
    IntMatrix D = s.base_data_.D;
    IntMatrix DB = D * s.base_data_.B;
    IntMatrix zero(n, n);
    s.lambda_ = IntMatrix::vstack(IntMatrix::hstack(zero, -D), IntMatrix::hstack(D, -DB));
  }
  if (!s.lambda_skew()) fail(ErrorCode::kIncompatibleSeed, "lambda is not skew-symmetric");
  if (!s.compatible()) {
    fail(ErrorCode::kIncompatibleSeed, "lambda fails the compatibility Lambda(-B~) = (D; 0)");
  }
  return s;
}

FramedSeed FramedSeed::unchecked(const ValuedQuiver& base, const IntMatrix& lambda) {
  FramedSeed s(base, principal_framing(base));
  if (lambda.rows() != s.m() || lambda.cols() != s.m()) {
    fail(ErrorCode::kInvalidArgument, "lambda has the wrong shape");
  }
  s.lambda_ = lambda;
  return s;
}

IntVec FramedSeed::tilde(const IntVec& alpha) const {
  if (static_cast<int>(alpha.size()) != n()) fail(ErrorCode::kInvalidArgument, "tilde: length mismatch");
  return concat(IntVec(n(), 0), alpha);
}

bool FramedSeed::compatible() const {
  IntMatrix lhs = lambda_ * (-Bt_);
  IntMatrix rhs = IntMatrix::vstack(base_data_.D, IntMatrix(n(), n()));
  return lhs == rhs;
}

bool FramedSeed::appendix_compatible() const {
  return -(lambda_ * framed_data_.B) == IntMatrix::diagonal(framed_.valuations());
}

bool FormLemmaReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.ok(); });
}

LemmaCheck check_mixed_identity(const FramedSeed& s, const IntVec& a1, const IntVec& b1,
                                const IntVec& a2, const IntVec& b2) {
  const ValuedQuiver& q = s.base();
  long long lhs = s.lambda_form(s.Et() * a1 + s.Ept() * b1, s.Et() * a2 + s.Ept() * b2);
  long long rhs = s.lambda_form(s.Et() * (a1 + b1), s.Et() * (a2 + b2)) - euler_form(q, b2, a1) +
                  euler_form(q, b1, a2);
  return {"mixed E/E' expansion", lhs, rhs};
}

FormLemmaReport check_form_lemmas(const FramedSeed& s, const IntVec& a, const IntVec& b) {
  const ValuedQuiver& q = s.base();
  FormLemmaReport rep;
  auto lam = [&](const IntVec& x, const IntVec& y) { return static_cast<long long>(s.lambda_form(x, y)); };
  rep.checks.push_back({"Lambda(E~a, B~b) = -<b,a>", lam(s.Et() * a, s.Bt() * b), -euler_form(q, b, a)});
  rep.checks.push_back({"Lambda(B~a, B~b) = <b,a> - <a,b>", lam(s.Bt() * a, s.Bt() * b),
                        euler_form(q, b, a) - euler_form(q, a, b)});
  rep.checks.push_back({"Lambda(E~'a, E~'b) = Lambda(E~a, E~b)", lam(s.Ept() * a, s.Ept() * b),
                        lam(s.Et() * a, s.Et() * b)});
  rep.checks.push_back(check_mixed_identity(s, a, b, b, a));
  rep.checks.push_back({"Lambda(E~'a, b~) = Lambda(E~a, b~)", lam(s.Ept() * a, s.tilde(b)),
                        lam(s.Et() * a, s.tilde(b))});
  rep.checks.push_back({"Lambda(a~, E~'b) = Lambda(a~, E~b)", lam(s.tilde(a), s.Ept() * b),
                        lam(s.tilde(a), s.Et() * b)});
  return rep;
}

}  // namespace qhall
