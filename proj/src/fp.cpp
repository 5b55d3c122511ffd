#include "qhall/fp.hpp"

#include <sstream>

#include "qhall/errors.hpp"

namespace qhall {

int fp_inv(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) fail(ErrorCode::kDivisionByZero, "inverse of 0 in F_p");
  int r = 1;
  for (int e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

FpMatrix::FpMatrix(int p, int rows, int cols, const std::vector<int>& entries)
    : p_(p), rows_(rows), cols_(cols), a_(entries) {
  if (a_.size() != static_cast<size_t>(rows) * cols) {
    fail(ErrorCode::kInvalidArgument, "FpMatrix: entry count does not match shape");
  }
  for (auto& x : a_) x = ((x % p) + p) % p;
}

FpMatrix FpMatrix::identity(int p, int n) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void FpMatrix::set(int r, int c, long long v) {
  v %= p_;
  if (v < 0) v += p_;
  a_[static_cast<size_t>(r) * cols_ + c] = static_cast<int>(v);
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::kInvalidArgument, "FpMatrix product shape mismatch");
  FpMatrix m(p_, rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      int x = (*this)(r, k);
      if (!x) continue;
      for (int c = 0; c < o.cols_; ++c) {
        int& t = m.a_[static_cast<size_t>(r) * m.cols_ + c];
        t = (t + x * o(k, c)) % p_;
      }
    }
  return m;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::kInvalidArgument, "FpMatrix sum shape mismatch");
  FpMatrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = (m.a_[i] + o.a_[i]) % p_;
  return m;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const { return *this + o.scaled(-1); }

FpMatrix FpMatrix::scaled(int k) const {
  FpMatrix m = *this;
  k = ((k % p_) + p_) % p_;
  for (auto& x : m.a_) x = x * k % p_;
  return m;
}

bool FpMatrix::is_zero() const {
  for (int x : a_)
    if (x) return false;
  return true;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.a_[static_cast<size_t>(c) * rows_ + r] = (*this)(r, c);
  return t;
}

FpMatrix FpMatrix::block(int r0, int c0, int nr, int nc) const {
  FpMatrix b(p_, nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) b.a_[static_cast<size_t>(r) * nc + c] = (*this)(r0 + r, c0 + c);
  return b;
}

FpMatrix FpMatrix::hstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows_ != b.rows_) fail(ErrorCode::kInvalidArgument, "FpMatrix hstack row mismatch");
  FpMatrix m(a.p_, a.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < a.cols_; ++c) m.set(r, c, a(r, c));
    for (int c = 0; c < b.cols_; ++c) m.set(r, a.cols_ + c, b(r, c));
  }
  return m;
}

FpMatrix FpMatrix::vstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.cols_) fail(ErrorCode::kInvalidArgument, "FpMatrix vstack column mismatch");
  FpMatrix m(a.p_, a.rows_ + b.rows_, a.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c) m.set(r, c, a(r, c));
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) m.set(a.rows_ + r, c, b(r, c));
  return m;
}

FpMatrix FpMatrix::rref(std::vector<int>* pivots) const {
  FpMatrix m = *this;
  std::vector<int> piv;
  int row = 0;
  for (int c = 0; c < cols_ && row < rows_; ++c) {
    int sel = -1;
    for (int r = row; r < rows_; ++r)
      if (m(r, c)) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int k = 0; k < cols_; ++k) std::swap(m.a_[static_cast<size_t>(sel) * cols_ + k], m.a_[static_cast<size_t>(row) * cols_ + k]);
    int inv = fp_inv(m(row, c), p_);
    for (int k = 0; k < cols_; ++k) m.set(row, k, static_cast<long long>(m(row, k)) * inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == row || !m(r, c)) continue;
      int f = m(r, c);
      for (int k = 0; k < cols_; ++k) m.set(r, k, m(r, k) - static_cast<long long>(f) * m(row, k));
    }
    piv.push_back(c);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

int FpMatrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

FpMatrix FpMatrix::nullspace() const {
  std::vector<int> piv;
  FpMatrix r = rref(&piv);
  std::vector<bool> is_piv(cols_, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free;
  for (int c = 0; c < cols_; ++c)
    if (!is_piv[c]) free.push_back(c);
  FpMatrix ns(p_, cols_, static_cast<int>(free.size()));
  for (size_t j = 0; j < free.size(); ++j) {
    int f = free[j];
    ns.set(f, static_cast<int>(j), 1);
    for (size_t i = 0; i < piv.size(); ++i) ns.set(piv[i], static_cast<int>(j), -r(static_cast<int>(i), f));
  }
  return ns;
}

FpMatrix FpMatrix::column_space() const {
  std::vector<int> piv;
  FpMatrix t = transpose().rref(&piv);
  return t.block(0, 0, static_cast<int>(piv.size()), rows_).transpose();
}

bool FpMatrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) fail(ErrorCode::kInvalidArgument, "inverse of non-square matrix");
  if (rows_ == 0) return *this;
  FpMatrix aug = hstack(*this, identity(p_, rows_));
  std::vector<int> piv;
  FpMatrix r = aug.rref(&piv);
  if (static_cast<int>(piv.size()) < rows_ || piv[rows_ - 1] >= rows_) {
    fail(ErrorCode::kDivisionByZero, "matrix is singular over F_p");
  }
  return r.block(0, rows_, rows_, rows_);
}

FpMatrix FpMatrix::complete_basis() const {
  FpMatrix cur = *this;
  for (int i = 0; i < rows_ && cur.cols() < rows_; ++i) {
    FpMatrix e(p_, rows_, 1);
    e.set(i, 0, 1);
    FpMatrix trial = hstack(cur, e);
    if (trial.rank() == trial.cols()) cur = trial;
  }
  if (cur.cols() != rows_) fail(ErrorCode::kInternal, "complete_basis: columns were dependent");
  return cur;
}

bool FpMatrix::solve(const FpMatrix& b, FpMatrix* x) const {
  FpMatrix aug = hstack(*this, b);
  std::vector<int> piv;
  FpMatrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() >= cols_) return false;
  if (x) {
    *x = FpMatrix(p_, cols_, b.cols());
    for (size_t i = 0; i < piv.size(); ++i)
      for (int c = 0; c < b.cols(); ++c) x->set(piv[i], c, r(static_cast<int>(i), cols_ + c));
  }
  return true;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? ";" : "");
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

namespace {

// Enumerate k-subsets of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  for (int i = k - 1; i >= 0; --i) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void for_each_subspace(int p, int n, int k, const std::function<bool(const FpMatrix&)>& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(FpMatrix(p, n, 0));
    return;
  }
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  do {
    // Free positions: row i, columns c > piv[i] that are not pivots.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i)
      for (int c = piv[i] + 1; c < n; ++c) {
        bool pc = false;
        for (int j = 0; j < k; ++j) pc |= (piv[j] == c);
        if (!pc) free.emplace_back(i, c);
      }
    std::vector<int> vals(free.size(), 0);
    while (true) {
      FpMatrix basis(p, n, k);
      for (int i = 0; i < k; ++i) basis.set(piv[i], i, 1);
      for (size_t f = 0; f < free.size(); ++f) basis.set(free[f].second, free[f].first, vals[f]);
      if (!fn(basis)) return;
      size_t pos = 0;
      while (pos < vals.size() && ++vals[pos] == p) vals[pos++] = 0;
      if (pos == vals.size()) break;
    }
  } while (next_combination(piv, n));
}

long long gaussian_binomial(int p, int n, int k) {
  if (k < 0 || k > n) return 0;
  long long num = 1, den = 1;
  long long pn = 1, pk = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  for (int i = 0; i < k; ++i) pk *= p;
  // prod_{i<k} (p^{n-i} - 1) / (p^{k-i} - 1)
  for (int i = 0; i < k; ++i) {
    num *= (pn - 1);
    den *= (pk - 1);
    pn /= p;
    pk /= p;
  }
  return num / den;
}

bool column_span_contains(const FpMatrix& space, const FpMatrix& sub) {
  if (sub.cols() == 0) return true;
  return FpMatrix::hstack(space, sub).rank() == space.rank();
}

void for_each_vector(int p, int dim, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> v(dim, 0);
  while (true) {
    if (!fn(v)) return;
    int pos = 0;
    while (pos < dim && ++v[pos] == p) v[pos++] = 0;
    if (pos == dim) return;
  }
}

}  // namespace qhall
