#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "affsg/rational.hpp"

namespace affsg {

// Dense exact integer matrix. Dimensions are fixed at construction;
// entries are mutable so the normal-form algorithms can work in place
// on their own copies.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Int(0)) {
    if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<VecInt>& rows, int cols) {
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != cols)
        throw dimension_error("row length mismatch");
      for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Int& operator()(int i, int j) const { return e_[idx(i, j)]; }
  Int& operator()(int i, int j) { return e_[idx(i, j)]; }

  bool operator==(const IntMatrix&) const = default;

  VecInt row(int i) const {
    VecInt r(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  std::vector<VecInt> row_list() const {
    std::vector<VecInt> out;
    out.reserve(rows_);
    for (int i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  void negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }
  void negate_col(int j) {
    for (int r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
  }
  // row i -= q * row j
  void addmul_row(int i, const Int& q, int j) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) -= q * (*this)(j, c);
  }
  // col i -= q * col j
  void addmul_col(int i, const Int& q, int j) {
    for (int r = 0; r < rows_; ++r) (*this)(r, i) -= q * (*this)(r, j);
  }

  std::string to_string() const;

 private:
  size_t idx(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return static_cast<size_t>(i) * cols_ + j;
  }
  int rows_, cols_;
  std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// v * M  (v a row vector of length M.rows())
VecInt mul_row(const VecInt& v, const IntMatrix& m);
// M * v  (v a column vector of length M.cols())
VecInt mul_col(const IntMatrix& m, const VecInt& v);

// Dense exact rational matrix; carries homomorphisms and the
// Fourier-Motzkin / solving machinery.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rat(0)) {
    if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMatrix from_int(const IntMatrix& a) {
    RatMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
    return m;
  }

  static RatMatrix from_rows(const std::vector<VecRat>& rows, int cols) {
    RatMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != cols)
        throw dimension_error("row length mismatch");
      for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rat& operator()(int i, int j) const { return e_[idx(i, j)]; }
  Rat& operator()(int i, int j) { return e_[idx(i, j)]; }
  bool operator==(const RatMatrix&) const = default;

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::string to_string() const;

 private:
  size_t idx(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return static_cast<size_t>(i) * cols_ + j;
  }
  int rows_, cols_;
  std::vector<Rat> e_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

// M * v with v integral; result rational.
VecRat rat_mul_col(const RatMatrix& m, const VecInt& v);

// Exact Gaussian elimination.
int rat_rank(RatMatrix a);

// Solves A * X = B; nullopt when inconsistent. When A has full column
// rank the solution is unique.
std::optional<RatMatrix> rat_solve(const RatMatrix& a, const RatMatrix& b);

std::optional<RatMatrix> rat_inverse(const RatMatrix& a);

// Exact integer vector if every entry is integral.
std::optional<VecInt> to_int_vec(const VecRat& v);

}  // namespace affsg
