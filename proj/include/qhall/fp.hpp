#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qhall {

/// Dense matrix over the prime field F_p (entries kept in [0, p)).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  FpMatrix(int p, int rows, int cols, const std::vector<int>& entries);

  static FpMatrix identity(int p, int n);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, long long v);
  const std::vector<int>& entries() const { return a_; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix scaled(int k) const;
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend auto operator<=>(const FpMatrix& a, const FpMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.a_ <=> b.a_;
  }

  bool is_zero() const;
  FpMatrix transpose() const;
  FpMatrix block(int r0, int c0, int nr, int nc) const;
  static FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
  static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

  /// Reduced row echelon form; pivot columns are written to `pivots`.
  FpMatrix rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  /// Columns form a basis of {x : A x = 0}.
  FpMatrix nullspace() const;
  /// Columns form a basis of the column space.
  FpMatrix column_space() const;
  bool invertible() const;
  FpMatrix inverse() const;
  /// Completes the (independent) columns of this m x k matrix to an invertible
  /// m x m matrix whose first k columns are this.
  FpMatrix complete_basis() const;
  /// Solves A x = b for a single column b; returns false when inconsistent.
  bool solve(const FpMatrix& b, FpMatrix* x) const;

  std::string to_string() const;

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> a_;
};

int fp_inv(int a, int p);

/// Calls `fn` for every k-dimensional subspace of F_p^n, given as an n x k
/// column basis whose transpose is in reduced row echelon form.  Subspaces are
/// visited in lexicographic order of (pivot set, free entries).  Returns false
/// from `fn` to stop early.
void for_each_subspace(int p, int n, int k, const std::function<bool(const FpMatrix&)>& fn);

/// Number of k-dimensional subspaces of F_p^n (Gaussian binomial).
long long gaussian_binomial(int p, int n, int k);

/// True when every column of `sub` lies in the column span of `space`.
bool column_span_contains(const FpMatrix& space, const FpMatrix& sub);

/// Iterates all vectors of F_p^dim, encoded as coefficient lists.
void for_each_vector(int p, int dim, const std::function<bool(const std::vector<int>&)>& fn);

}  // namespace qhall
