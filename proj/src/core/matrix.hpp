// Copyright 2026 the deloop authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace deloop {

// Dense matrix over Q, row major. Vectors are rows and linear maps act on
// the right, so v |-> v*m and compositions read left to right. Dimensions
// in this project stay small enough that dense exact arithmetic is the
// right tradeoff.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // zero-skipping triple loop
  Matrix scaled(const Rat& c) const;
  Matrix transposed() const;

  std::vector<Rat> row(size_t i) const;
  void set_row(size_t i, const std::vector<Rat>& v);
  // v * (*this) for a row vector v of length rows().
  std::vector<Rat> apply_row(const std::vector<Rat>& v) const;

  Matrix submatrix_rows(const std::vector<size_t>& idx) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix block_diag(const std::vector<Matrix>& blocks);
  static Matrix from_rows(const std::vector<std::vector<Rat>>& rows, size_t width);

 private:
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

struct RrefResult {
  Matrix r;
  std::vector<size_t> pivots;
};

// p * m == r with p invertible (the recorded row operations).
struct RrefTransform {
  Matrix r;
  Matrix p;
  std::vector<size_t> pivots;
};

// Reduced row echelon form (Gauss-Jordan, exact).
RrefResult rref(const Matrix& m);
RrefTransform rref_with_transform(const Matrix& m);
size_t rank(const Matrix& m);

// det != 0 test and exact determinant for square matrices.
Rat determinant(const Matrix& m);

// Basis of { v : v * m == 0 }. coord_cols lists, per basis vector, the
// column where that vector carries its defining 1; coordinates of any
// kernel vector in this basis can be read off at those columns.
struct KernelBasis {
  Matrix basis;
  std::vector<size_t> coord_cols;
};
KernelBasis kernel_basis(const Matrix& m);

// Solves x * a == b; requires a.cols() == b.cols(). Returns x with
// b.rows() rows, or nullopt when the system is inconsistent.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

// Reduced echelon basis of the row space (image of v |-> v*m).
Matrix image_basis(const Matrix& m);

// Basis of rowspace(u) intersected with rowspace(w), via the kernel of the
// stacked system.
Matrix intersect_row_spaces(const Matrix& u, const Matrix& w);

// Echelonized row space with incremental insertion; the workhorse behind
// spans, membership tests, closures and quotient coordinates.
class RowSpace {
 public:
  explicit RowSpace(size_t width) : width_(width) {}

  size_t width() const { return width_; }
  size_t dim() const { return rows_.size(); }

  // Reduces v against the current rows; the result has zeros at all pivots.
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  bool contains(const std::vector<Rat>& v) const;
  bool contains_rows(const Matrix& m) const;

  // Inserts v, keeping the reduced echelon invariant. True if dim grew.
  bool insert(std::vector<Rat> v);
  void insert_rows(const Matrix& m);

  // Coordinates of v in the echelon basis (nullopt if v is not in the span).
  std::optional<std::vector<Rat>> coords(const std::vector<Rat>& v) const;

  const std::vector<size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }
  Matrix basis_matrix() const;

 private:
  size_t width_;
  std::vector<std::vector<Rat>> rows_;  // reduced, pivot columns increasing
  std::vector<size_t> pivots_;
};

}  // namespace deloop
