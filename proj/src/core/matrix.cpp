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

#include "matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace deloop {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in +");
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in -");
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Rat& bkj = o.at(k, j);
        if (bkj == 0) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Rat> Matrix::row(size_t i) const {
  std::vector<Rat> v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_row(size_t i, const std::vector<Rat>& v) {
  if (v.size() != cols_) throw std::invalid_argument("row width mismatch");
  for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

std::vector<Rat> Matrix::apply_row(const std::vector<Rat>& v) const {
  if (v.size() != rows_) throw std::invalid_argument("row/matrix size mismatch");
  std::vector<Rat> r(cols_);
  for (size_t i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < cols_; ++j) {
      const Rat& mij = at(i, j);
      if (mij == 0) continue;
      r[j] += v[i] * mij;
    }
  }
  return r;
}

Matrix Matrix::submatrix_rows(const std::vector<size_t>& idx) const {
  Matrix r(idx.size(), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
  return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack col mismatch");
  Matrix r(a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
  size_t rows = 0, cols = 0;
  for (const Matrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix r(rows, cols);
  size_t ro = 0, co = 0;
  for (const Matrix& b : blocks) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) r.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return r;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows, size_t width) {
  Matrix r(rows.size(), width);
  for (size_t i = 0; i < rows.size(); ++i) r.set_row(i, rows[i]);
  return r;
}

namespace {

// Shared elimination core; when 'transform' is non-null it accumulates the
// row operations (starting from the identity).
void rref_inplace(Matrix& m, Matrix* transform, std::vector<size_t>& pivots) {
  const size_t rows = m.rows(), cols = m.cols();
  size_t lead = 0;
  for (size_t col = 0; col < cols && lead < rows; ++col) {
    size_t piv = lead;
    while (piv < rows && m.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead) {
      for (size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
      if (transform)
        for (size_t j = 0; j < transform->cols(); ++j)
          std::swap(transform->at(piv, j), transform->at(lead, j));
    }
    const Rat inv = Rat(1) / m.at(lead, col);
    if (inv != 1) {
      for (size_t j = col; j < cols; ++j)
        if (m.at(lead, j) != 0) m.at(lead, j) *= inv;
      if (transform)
        for (size_t j = 0; j < transform->cols(); ++j)
          if (transform->at(lead, j) != 0) transform->at(lead, j) *= inv;
    }
    for (size_t i = 0; i < rows; ++i) {
      if (i == lead) continue;
      const Rat f = m.at(i, col);
      if (f == 0) continue;
      for (size_t j = col; j < cols; ++j) {
        const Rat& x = m.at(lead, j);
        if (x != 0) m.at(i, j) -= f * x;
      }
      if (transform)
        for (size_t j = 0; j < transform->cols(); ++j) {
          const Rat& x = transform->at(lead, j);
          if (x != 0) transform->at(i, j) -= f * x;
        }
    }
    pivots.push_back(col);
    ++lead;
  }
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.r = m;
  rref_inplace(res.r, nullptr, res.pivots);
  return res;
}

RrefTransform rref_with_transform(const Matrix& m) {
  RrefTransform res;
  res.r = m;
  res.p = Matrix::identity(m.rows());
  rref_inplace(res.r, &res.p, res.pivots);
  return res;
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Rat determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square");
  const size_t n = m.rows();
  Matrix w = m;
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && w.at(piv, col) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      det = -det;
    }
    det *= w.at(col, col);
    const Rat inv = Rat(1) / w.at(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      const Rat f = w.at(i, col) * inv;
      if (f == 0) continue;
      for (size_t j = col; j < n; ++j)
        if (w.at(col, j) != 0) w.at(i, j) -= f * w.at(col, j);
    }
  }
  return det;
}

KernelBasis kernel_basis(const Matrix& m) {
  // v*m == 0 is the null space of m^T in the unknowns v_0..v_{rows-1}.
  const size_t n = m.rows();
  RrefResult e = rref(m.transposed());
  std::vector<bool> is_pivot(n, false);
  for (size_t p : e.pivots) is_pivot[p] = true;

  KernelBasis kb;
  std::vector<size_t> free_cols;
  for (size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  kb.basis = Matrix(free_cols.size(), n);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const size_t f = free_cols[k];
    kb.basis.at(k, f) = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r)
      kb.basis.at(k, e.pivots[r]) = -e.r.at(r, f);
  }
  kb.coord_cols = std::move(free_cols);
  return kb;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("solve_left: a.cols must equal b.cols");
  // x*a == b column-wise: a^T x^T == b^T.
  RrefTransform e = rref_with_transform(a.transposed());
  const size_t rk = e.pivots.size();
  Matrix x(b.rows(), a.rows());
  for (size_t i = 0; i < b.rows(); ++i) {
    // d = P * b_i^T
    std::vector<Rat> d(e.p.rows());
    for (size_t r = 0; r < e.p.rows(); ++r) {
      Rat s(0);
      for (size_t c = 0; c < e.p.cols(); ++c) {
        const Rat& pc = e.p.at(r, c);
        if (pc == 0) continue;
        const Rat& bc = b.at(i, c);
        if (bc == 0) continue;
        s += pc * bc;
      }
      d[r] = s;
    }
    for (size_t r = rk; r < d.size(); ++r)
      if (d[r] != 0) return std::nullopt;
    // Echelon rows may still have entries at non-pivot columns of a^T's
    // column space; those unknowns stay 0 and the pivot unknowns read off d.
    for (size_t r = 0; r < rk; ++r) x.at(i, e.pivots[r]) = d[r];
    // Consistency requires the non-pivot columns of the unknown vector to be
    // representable; verify the candidate solves the row exactly.
    std::vector<Rat> chk = a.apply_row(x.row(i));
    for (size_t j = 0; j < a.cols(); ++j)
      if (chk[j] != b.at(i, j)) return std::nullopt;
  }
  return x;
}

Matrix image_basis(const Matrix& m) {
  RrefResult e = rref(m);
  Matrix r(e.pivots.size(), m.cols());
  for (size_t i = 0; i < e.pivots.size(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = e.r.at(i, j);
  return r;
}

Matrix intersect_row_spaces(const Matrix& u, const Matrix& w) {
  if (u.cols() != w.cols()) throw std::invalid_argument("intersect: width mismatch");
  // (c_u, c_w) with c_u*u + c_w*w == 0 gives intersection vectors c_u*u.
  Matrix stacked = Matrix::vstack(u, w);
  KernelBasis kb = kernel_basis(stacked);
  RowSpace inter(u.cols());
  for (size_t i = 0; i < kb.basis.rows(); ++i) {
    std::vector<Rat> cu(u.rows());
    for (size_t j = 0; j < u.rows(); ++j) cu[j] = kb.basis.at(i, j);
    inter.insert(u.apply_row(cu));
  }
  return inter.basis_matrix();
}

std::vector<Rat> RowSpace::reduce(std::vector<Rat> v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat& f = v[pivots_[r]];
    if (f == 0) continue;
    const Rat factor = f;  // rows are normalized to leading 1
    const std::vector<Rat>& row = rows_[r];
    for (size_t j = pivots_[r]; j < width_; ++j)
      if (row[j] != 0) v[j] -= factor * row[j];
  }
  return v;
}

bool RowSpace::contains(const std::vector<Rat>& v) const {
  std::vector<Rat> r = reduce(v);
  for (const Rat& x : r)
    if (x != 0) return false;
  return true;
}

bool RowSpace::contains_rows(const Matrix& m) const {
  for (size_t i = 0; i < m.rows(); ++i)
    if (!contains(m.row(i))) return false;
  return true;
}

bool RowSpace::insert(std::vector<Rat> v) {
  if (v.size() != width_) throw std::invalid_argument("RowSpace width mismatch");
  v = reduce(std::move(v));
  size_t lead = width_;
  for (size_t j = 0; j < width_; ++j)
    if (v[j] != 0) {
      lead = j;
      break;
    }
  if (lead == width_) return false;
  const Rat inv = Rat(1) / v[lead];
  if (inv != 1)
    for (size_t j = lead; j < width_; ++j)
      if (v[j] != 0) v[j] *= inv;
  // Back-reduce existing rows so the basis stays fully reduced.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = rows_[r][lead];
    if (f == 0) continue;
    for (size_t j = lead; j < width_; ++j)
      if (v[j] != 0) rows_[r][j] -= f * v[j];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

void RowSpace::insert_rows(const Matrix& m) {
  for (size_t i = 0; i < m.rows(); ++i) insert(m.row(i));
}

std::optional<std::vector<Rat>> RowSpace::coords(const std::vector<Rat>& v) const {
  // Fully reduced echelon basis: coordinates are the values at the pivots.
  std::vector<Rat> c(rows_.size());
  for (size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
  std::vector<Rat> residue = v;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (c[r] == 0) continue;
    for (size_t j = 0; j < width_; ++j)
      if (rows_[r][j] != 0) residue[j] -= c[r] * rows_[r][j];
  }
  for (const Rat& x : residue)
    if (x != 0) return std::nullopt;
  return c;
}

Matrix RowSpace::basis_matrix() const {
  Matrix m(rows_.size(), width_);
  for (size_t i = 0; i < rows_.size(); ++i) m.set_row(i, rows_[i]);
  return m;
}

}  // namespace deloop
