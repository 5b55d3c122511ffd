#include "qhall/intmatrix.hpp"

#include <numeric>
#include <sstream>

#include "qhall/errors.hpp"

namespace qhall {

IntMatrix::IntMatrix(int rows, int cols, std::vector<int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<size_t>(rows) * cols) {
    fail(ErrorCode::kInvalidArgument, "matrix data size does not match shape");
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
  int n = static_cast<int>(d.size());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) fail(ErrorCode::kInvalidArgument, "vstack: column mismatch");
  IntMatrix m(a.rows_ + b.rows_, a.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) m(a.rows_ + r, c) = b(r, c);
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) fail(ErrorCode::kInvalidArgument, "hstack: row mismatch");
  IntMatrix m(a.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (int c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::block(int r0, int c0, int nr, int nc) const {
  IntMatrix b(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

IntVec IntMatrix::column(int c) const {
  IntVec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool IntMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::kInvalidArgument, "matrix product shape mismatch");
  IntMatrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      int a = (*this)(r, k);
      if (a == 0) continue;
      for (int c = 0; c < o.cols_; ++c) m(r, c) += a * o(k, c);
    }
  return m;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    fail(ErrorCode::kInvalidArgument, "matrix-vector length mismatch");
  }
  IntVec out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    int s = 0;
    for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::kInvalidArgument, "shape mismatch");
  IntMatrix m = *this;
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

long long IntMatrix::form(const IntVec& x, const IntVec& y) const {
  if (static_cast<int>(x.size()) != rows_ || static_cast<int>(y.size()) != cols_) {
    fail(ErrorCode::kInvalidArgument, "bilinear form: vector length mismatch (expected " +
                                          std::to_string(rows_) + "/" + std::to_string(cols_) +
                                          ", got " + std::to_string(x.size()) + "/" +
                                          std::to_string(y.size()) + ")");
  }
  long long s = 0;
  for (int r = 0; r < rows_; ++r) {
    if (x[r] == 0) continue;
    long long row = 0;
    for (int c = 0; c < cols_; ++c) row += static_cast<long long>((*this)(r, c)) * y[c];
    s += row * x[r];
  }
  return s;
}

std::vector<std::vector<int>> IntMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(nr, nc);
  for (int r = 0; r < nr; ++r) {
    if (static_cast<int>(rows[r].size()) != nc) fail(ErrorCode::kInvalidArgument, "ragged matrix");
    for (int c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::kInvalidArgument, "vector length mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::kInvalidArgument, "vector length mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec operator-(const IntVec& a) { return scaled(a, -1); }

IntVec scaled(const IntVec& a, int k) {
  IntVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

IntVec concat(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

IntVec unit_vector(int n, int i) {
  IntVec r(n, 0);
  r.at(i) = 1;
  return r;
}

bool is_zero(const IntVec& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

bool dominated(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int total(const IntVec& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

void for_each_below(const IntVec& upper, const std::function<void(const IntVec&)>& fn) {
  for (int u : upper)
    if (u < 0) return;
  IntVec e(upper.size(), 0);
  while (true) {
    fn(e);
    int i = static_cast<int>(e.size()) - 1;
    while (i >= 0 && e[i] == upper[i]) e[i--] = 0;
    if (i < 0) return;
    ++e[i];
  }
}

}  // namespace qhall
