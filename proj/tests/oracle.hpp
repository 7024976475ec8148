#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library's construction or elimination code.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;

/// Class label (flat index) of (u, v) in C_{p_1} wr ... wr C_{p_d}, read off
/// the mixed-radix digits: the highest level where the digits differ decides.
inline std::size_t wreath_class(const std::vector<int>& p, std::size_t u, std::size_t v) {
  std::vector<int> du, dv;
  for (int q : p) {
    du.push_back(static_cast<int>(u % static_cast<std::size_t>(q)));
    dv.push_back(static_cast<int>(v % static_cast<std::size_t>(q)));
    u /= static_cast<std::size_t>(q);
    v /= static_cast<std::size_t>(q);
  }
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (du[static_cast<std::size_t>(i)] == dv[static_cast<std::size_t>(i)]) continue;
    std::size_t base = 0;
    for (int j = 0; j < i; ++j) base += static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1);
    const int q = p[static_cast<std::size_t>(i)];
    const int diff = ((dv[static_cast<std::size_t>(i)] - du[static_cast<std::size_t>(i)]) % q + q) % q;
    return base + static_cast<std::size_t>(diff);
  }
  return 0;
}

inline std::size_t order_of(const std::vector<int>& p) {
  std::size_t n = 1;
  for (int q : p) n *= static_cast<std::size_t>(q);
  return n;
}

inline std::size_t classes_of(const std::vector<int>& p) {
  std::size_t k = 1;
  for (int q : p) k += static_cast<std::size_t>(q - 1);
  return k;
}

/// Full class table by the digit rule.
inline std::vector<std::vector<std::size_t>> wreath_table(const std::vector<int>& p) {
  const std::size_t n = order_of(p);
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) t[u][v] = wreath_class(p, u, v);
  return t;
}

/// p_{ij}^h counted at the first pair in R_h.
inline std::size_t intersection(const std::vector<std::vector<std::size_t>>& t, std::size_t i, std::size_t j,
                                std::size_t h) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (t[x][y] != h) continue;
      std::size_t c = 0;
      for (std::size_t z = 0; z < n; ++z) c += (t[x][z] == i && t[z][y] == j) ? 1 : 0;
      return c;
    }
  return 0;
}

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<Q>(n, Q(0))); }

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Q s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), m = b.size();
  Mat c = zeros(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) c[i * m + k][j * m + l] = a[i][j] * b[k][l];
  return c;
}

inline std::vector<Q> flatten(const Mat& a) {
  std::vector<Q> v;
  for (const auto& row : a) v.insert(v.end(), row.begin(), row.end());
  return v;
}

/// Rank of a list of vectors: column-by-column elimination with the pivot
/// chosen as the last nonzero candidate row.
inline std::size_t rank(std::vector<std::vector<Q>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = cols; c-- > 0 && r < rows.size();) {
    std::size_t piv = rows.size();
    for (std::size_t k = r; k < rows.size(); ++k)
      if (sgn(rows[k][c]) != 0) piv = k;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (sgn(rows[k][c]) == 0) continue;
      const Q f = rows[k][c] / rows[r][c];
      for (std::size_t t = 0; t < cols; ++t) rows[k][t] -= f * rows[r][t];
    }
    ++r;
  }
  return r;
}

/// Adjacency matrices and dual idempotents at x, from the digit rule.
struct Generators {
  std::vector<Mat> a, e;
};

inline Generators generators(const std::vector<int>& p, std::size_t x) {
  const auto t = wreath_table(p);
  const std::size_t n = t.size(), k = classes_of(p);
  Generators g;
  g.a.assign(k, zeros(n));
  g.e.assign(k, zeros(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) g.a[t[u][v]][u][v] = 1;
  for (std::size_t y = 0; y < n; ++y) g.e[t[x][y]][y][y] = 1;
  return g;
}

/// dim T(x) as the span of all words in the generators: start from I and
/// left-multiply by generators until the span stops growing.
inline std::size_t closure_dimension(const std::vector<int>& p, std::size_t x) {
  const Generators g = generators(p, x);
  std::vector<Mat> gens = g.a;
  gens.insert(gens.end(), g.e.begin(), g.e.end());
  const std::size_t n = order_of(p);
  Mat id = zeros(n);
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;

  std::vector<Mat> basis{id};
  std::vector<std::vector<Q>> flat{flatten(id)};
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        Mat prod = mul(s, w);
        flat.push_back(flatten(prod));
        if (rank(flat) == flat.size()) {
          basis.push_back(prod);
          next.push_back(std::move(prod));
        } else {
          flat.pop_back();
        }
      }
    frontier = std::move(next);
  }
  return basis.size();
}

/// dim T_0(x) from the triple products.
inline std::size_t t0_dimension(const std::vector<int>& p, std::size_t x) {
  const Generators g = generators(p, x);
  std::vector<std::vector<Q>> flat;
  for (const auto& ei : g.e)
    for (const auto& aj : g.a)
      for (const auto& eh : g.e) flat.push_back(flatten(mul(mul(ei, aj), eh)));
  return rank(flat);
}

}  // namespace oracle
