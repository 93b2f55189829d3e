#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "realsnf/error.hpp"

namespace realsnf {

/// Dense row-major matrix over a ring element type. Dimensions are positive.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw Error(Errc::ShapeMismatch, "matrix dimensions must be positive");
  }

  static Matrix from_rows(const std::vector<std::vector<E>>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error(Errc::ShapeMismatch, "empty matrix");
    Matrix m(rows.size(), rows.front().size(), rows.front().front());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(Errc::ShapeMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n, const E& zero, const E& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const E& c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) = (*this)(dst, j) + c * (*this)(src, j);
  }
  // col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const E& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) = (*this)(i, dst) + c * (*this)(i, src);
  }
  void scale_row(std::size_t i, const E& c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = c * (*this)(i, j);
  }
  void scale_col(std::size_t j, const E& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c * (*this)(i, j);
  }

  /// Rows/cols picked by index lists.
  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix s(rs.size(), cs.size(), data_.front());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::ShapeMismatch, "matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_, a.data_.front());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        E acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
        c(i, j) = std::move(acc);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const E&>()))> {
    using T = decltype(f(std::declval<const E&>()));
    Matrix<T> out(rows_, cols_, f(data_.front()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

/// Lexicographic k-subsets of {0, ..., n-1}.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// All nonempty subsets of {0, ..., n-1} in lexicographic order of their sorted sequences.
inline std::vector<std::vector<std::size_t>> all_index_subsets_lex(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      out.push_back(cur);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace realsnf
