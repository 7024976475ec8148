#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twa/cyclotomic.hpp"
#include "twa/scalar.hpp"

namespace twa {

namespace detail {
// Unqualified so that argument-dependent lookup reaches hidden-friend overloads.
template <typename T>
bool entry_is_zero(const T& v) {
  return is_zero(v);
}
}  // namespace detail

/// Dense row-major matrix over an exact scalar type (std::int64_t, Rational, CycloNum).
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix ones(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (auto& v : m.data_) v = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> flat() { return data_; }
  std::span<const T> flat() const { return data_; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!detail::entry_is_zero(v)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  T trace() const {
    require_square("trace");
    T s(0);
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  template <typename U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    auto dst = out.flat();
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!detail::entry_is_zero(data_[k])) dst[k] = U(data_[k]);
    }
    return out;
  }

  Matrix& operator+=(const Matrix& b) {
    require_same_shape(b, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& b) {
    require_same_shape(b, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
    return *this;
  }

  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product: shape mismatch " + a.shape() + " * " + b.shape());
    }
    Matrix out(a.rows_, b.cols_);
    // Row-major i-k-j order, skipping zero entries of the left factor.
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (detail::entry_is_zero(aik)) continue;
        const T* brow = &b.data_[k * b.cols_];
        T* orow = &out.data_[i * out.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!detail::entry_is_zero(brow[j])) orow[j] += aik * brow[j];
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw std::invalid_argument(std::string("matrix ") + op + ": shape mismatch " + shape() +
                                  " vs " + b.shape());
    }
  }
  void require_square(const char* op) const {
    if (!square()) throw std::invalid_argument(std::string(op) + ": matrix is not square");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RationalMatrix = Matrix<Rational>;
/// Matrices over Q(zeta_N); the common currency once cyclotomic scalars appear.
using ExactMatrix = Matrix<CycloNum>;

/// A (x) B := (a_ij B).
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

}  // namespace twa
