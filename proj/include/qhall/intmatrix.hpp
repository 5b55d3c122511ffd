#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qhall {

using IntVec = std::vector<int>;

/// Dense row-major integer matrix for the exchange/compatibility data.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, int fill = 0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}
  IntMatrix(int rows, int cols, std::vector<int> data);

  static IntMatrix identity(int n);
  static IntMatrix diagonal(const IntVec& d);
  /// Stacks [a; b] vertically.
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  /// Stacks [a b] horizontally.
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  int operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix block(int r0, int c0, int nr, int nc) const;
  IntVec column(int c) const;
  bool is_skew_symmetric() const;

  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Bilinear form x^T * this * y.
  long long form(const IntVec& x, const IntVec& y) const;

  std::vector<std::vector<int>> to_rows() const;
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec scaled(const IntVec& a, int k);
IntVec concat(const IntVec& a, const IntVec& b);
IntVec unit_vector(int n, int i);
bool is_zero(const IntVec& a);
/// a <= b componentwise.
bool dominated(const IntVec& a, const IntVec& b);
int total(const IntVec& a);
std::string to_string(const IntVec& v);
/// Calls fn for every e with 0 <= e <= upper, last coordinate fastest.
void for_each_below(const IntVec& upper, const std::function<void(const IntVec&)>& fn);

}  // namespace qhall
