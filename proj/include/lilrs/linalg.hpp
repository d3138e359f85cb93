// Copyright 2026 The lilrs Authors
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

// Dense Gaussian elimination, generic over PrimeField and ExtensionField.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lilrs {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }
  void truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    data_.resize(rows_ * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix rows_range(std::size_t begin, std::size_t end) const {
    Matrix out(end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i - begin, j) = (*this)(i, j);
    return out;
  }
  Matrix cols_range(std::size_t begin, std::size_t end) const {
    Matrix out(rows_, end - begin);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = begin; j < end; ++j) out(i, j - begin) = (*this)(i, j);
    return out;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ == 0) return b;
    if (b.rows_ == 0) return a;
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
    Matrix out = a;
    out.data_.insert(out.data_.end(), b.data_.begin(), b.data_.end());
    out.rows_ += b.rows_;
    return out;
  }
  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ == 0) return b;
    if (b.cols_ == 0) return a;
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
    }
    return out;
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class F>
using MatrixOf = Matrix<typename F::element_type>;

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(const F& f, MatrixOf<F>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && f.is_zero(a(sel, col))) ++sel;
    if (sel == a.rows()) continue;
    a.swap_rows(sel, row);
    auto inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      auto factor = a(i, col);
      if (f.is_zero(factor)) continue;
      for (std::size_t j = col; j < a.cols(); ++j) {
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
MatrixOf<F> rref(const F& f, MatrixOf<F> a) {
  auto pivots = row_reduce(f, a);
  a.truncate_rows(pivots.size());
  return a;
}

template <class F>
std::size_t rank(const F& f, MatrixOf<F> a) {
  return row_reduce(f, a).size();
}

// Basis of {x : A x = 0}, one vector per row, built from the free columns of
// the reduced form (so the basis itself is reduced).
template <class F>
MatrixOf<F> right_kernel(const F& f, MatrixOf<F> a) {
  const std::size_t n = a.cols();
  auto pivots = row_reduce(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  MatrixOf<F> basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::element_type> v(n, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a(r, free));
    basis.append_row(v);
  }
  return basis;
}

template <class F>
std::optional<MatrixOf<F>> inverse(const F& f, const MatrixOf<F>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  if (n == 0) return a;
  MatrixOf<F> aug(n, 2 * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = f.one();
  }
  auto pivots = row_reduce(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.cols_range(n, 2 * n);
}

template <class F>
MatrixOf<F> multiply(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  MatrixOf<F> out(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      auto x = a(i, t);
      if (f.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
    }
  }
  return out;
}

template <class F>
struct AffineSolution {
  std::vector<typename F::element_type> particular;
  MatrixOf<F> kernel;  // rows span the homogeneous solutions
};

// All solutions of A x = b, or nullopt when inconsistent.
template <class F>
std::optional<AffineSolution<F>> solve_affine(const F& f, const MatrixOf<F>& a,
                                              const std::vector<typename F::element_type>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t n = a.cols();
  MatrixOf<F> aug(a.rows(), n + 1, f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = row_reduce(f, aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  AffineSolution<F> sol;
  sol.particular.assign(n, f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  sol.kernel = MatrixOf<F>(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::element_type> v(n, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(aug(r, free));
    sol.kernel.append_row(v);
  }
  return sol;
}

}  // namespace lilrs
