#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "twa/matrix.hpp"

namespace twa {

/// Subspace of rows x cols matrices, kept as a reduced row echelon basis of the
/// flattened (row-major) vectors. Pivot = first nonzero entry, normalized to 1.
/// The reduced basis of a subspace is unique, so the stored basis does not
/// depend on insertion order.
template <typename T>
class SpanBasis {
 public:
  SpanBasis(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t ambient_dimension() const { return rows_ * cols_; }
  std::size_t dimension() const { return basis_.size(); }

  /// Adds m to the span; returns true iff the dimension grew.
  bool insert(const Matrix<T>& m) {
    std::vector<T> v = residual_vector(m);
    std::size_t pivot = 0;
    while (pivot < v.size() && is_zero(v[pivot])) ++pivot;
    if (pivot == v.size()) return false;

    const T scale = T(1) / v[pivot];
    std::vector<std::size_t> nz;
    for (std::size_t k = pivot; k < v.size(); ++k) {
      if (is_zero(v[k])) continue;
      v[k] *= scale;
      nz.push_back(k);
    }
    // Clear the new pivot column from the existing rows.
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (is_zero(basis_[r][pivot])) continue;
      const T f = basis_[r][pivot];
      for (std::size_t k : nz) basis_[r][k] -= f * v[k];
      refresh_support(r);
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    support_.insert(support_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(nz));
    return true;
  }

  /// m minus its projection along the pivots; zero iff m lies in the span.
  Matrix<T> residual(const Matrix<T>& m) const {
    std::vector<T> v = residual_vector(m);
    Matrix<T> out(rows_, cols_);
    std::move(v.begin(), v.end(), out.flat().begin());
    return out;
  }

  bool contains(const Matrix<T>& m) const {
    const std::vector<T> v = residual_vector(m);
    return std::all_of(v.begin(), v.end(), [](const T& x) { return is_zero(x); });
  }

  std::vector<Matrix<T>> basis() const {
    std::vector<Matrix<T>> out;
    out.reserve(basis_.size());
    for (const auto& row : basis_) {
      Matrix<T> m(rows_, cols_);
      std::copy(row.begin(), row.end(), m.flat().begin());
      out.push_back(std::move(m));
    }
    return out;
  }

  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::vector<T> residual_vector(const Matrix<T>& m) const {
    if (m.rows() != rows_ || m.cols() != cols_) {
      throw std::invalid_argument("SpanBasis: expected " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_) + ", got " + m.shape());
    }
    std::vector<T> v(m.flat().begin(), m.flat().end());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (is_zero(v[p])) continue;
      const T f = v[p];
      for (std::size_t k : support_[r]) v[k] -= f * basis_[r][k];
    }
    return v;
  }

  void refresh_support(std::size_t r) {
    auto& nz = support_[r];
    nz.clear();
    for (std::size_t k = pivots_[r]; k < basis_[r].size(); ++k)
      if (!is_zero(basis_[r][k])) nz.push_back(k);
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<T>> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> support_;
};

template <typename T>
std::size_t rank(std::span<const Matrix<T>> ms) {
  if (ms.empty()) return 0;
  SpanBasis<T> s(ms.front().rows(), ms.front().cols());
  for (const auto& m : ms) s.insert(m);
  return s.dimension();
}

template <typename T>
std::size_t rank(const std::vector<Matrix<T>>& ms) {
  return rank(std::span<const Matrix<T>>(ms));
}

/// Smallest subspace containing the generators and closed under products.
///
/// Rounds multiply every ordered pair of spanning matrices; a pair is only
/// formed once, and a product joins the spanning set when it is independent of
/// the current span. The loop stops when a round adds nothing, at which point
/// the span contains every pairwise product of its spanning set and is
/// therefore closed. The returned basis is the reduced echelon basis, which is
/// deterministic.
template <typename T>
SpanBasis<T> algebra_closure(std::span<const Matrix<T>> generators) {
  if (generators.empty()) throw std::invalid_argument("algebra_closure: no generators");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) {
      throw std::invalid_argument("algebra_closure: generators must be square and equally sized");
    }
  }
  SpanBasis<T> span(n, n);
  std::vector<Matrix<T>> spanning;
  for (const auto& g : generators)
    if (span.insert(g)) spanning.push_back(g);

  std::size_t done = 0;  // pairs among spanning[0, done) were all formed
  while (done < spanning.size()) {
    const std::size_t end = spanning.size();
    std::vector<Matrix<T>> fresh;
    for (std::size_t a = 0; a < end; ++a) {
      for (std::size_t b = (a < done ? done : 0); b < end; ++b) {
        Matrix<T> prod = spanning[a] * spanning[b];
        if (span.insert(prod)) fresh.push_back(std::move(prod));
      }
    }
    done = end;
    for (auto& f : fresh) spanning.push_back(std::move(f));
  }
  return span;
}

template <typename T>
SpanBasis<T> algebra_closure(const std::vector<Matrix<T>>& generators) {
  return algebra_closure(std::span<const Matrix<T>>(generators));
}

}  // namespace twa
