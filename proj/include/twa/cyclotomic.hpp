#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twa/scalar.hpp"

namespace twa {

inline std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Integer polynomial, lowest degree first.
using IntPoly = std::vector<std::int64_t>;

namespace detail {

// (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact long division with monic divisors.
inline IntPoly divide_out(std::uint32_t n, const std::map<std::uint32_t, IntPoly>& known) {
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (const auto& [d, phi] : known) {
    if (d >= n || n % d != 0) continue;
    const std::size_t dd = phi.size() - 1;
    IntPoly quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const std::int64_t c = num[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t t = 0; t <= dd; ++t) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(c, phi[t], &prod) ||
            __builtin_sub_overflow(num[k - dd + t], prod, &num[k - dd + t])) {
          throw std::overflow_error("cyclotomic coefficient overflow");
        }
      }
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace detail

/// Phi_n with integer coefficients. Results are cached; references stay valid.
inline const IntPoly& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw std::domain_error("cyclotomic_polynomial: n must be positive");
  static std::mutex mu;
  static std::map<std::uint32_t, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Divisors ascending, so every proper divisor of d is cached before d.
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    cache.emplace(d, detail::divide_out(d, cache));
  }
  return cache.at(n);
}

/// Exact element of Q(zeta_N), stored in the power basis 1, z, ..., z^{phi(N)-1}
/// reduced modulo Phi_N. Values of different conductors are promoted to the lcm.
class CycloNum {
 public:
  CycloNum() : conductor_(1), coeffs_(1) {}
  CycloNum(long v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  CycloNum(const Rational& q) : conductor_(1), coeffs_{q} {}  // NOLINT(google-explicit-constructor)

  static CycloNum from_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs) {
    if (conductor == 0) throw std::domain_error("CycloNum: conductor must be positive");
    if (coeffs.size() != euler_phi(conductor)) {
      throw std::invalid_argument("CycloNum: coefficient count must equal phi(conductor)");
    }
    CycloNum r;
    r.conductor_ = conductor;
    r.coeffs_ = std::move(coeffs);
    for (auto& c : r.coeffs_) {
      if (sgn(c.get_den()) == 0) throw DivisionByZero("CycloNum: zero denominator");
      c.canonicalize();
    }
    return r;
  }

  /// zeta_N^k.
  static CycloNum root_of_unity(std::uint32_t n, std::int64_t k) {
    if (n == 0) throw std::domain_error("zeta: N must be positive");
    const auto e = static_cast<std::size_t>(((k % static_cast<std::int64_t>(n)) + n) % n);
    std::vector<Rational> dense(std::max<std::size_t>(e + 1, 1));
    dense[e] = 1;
    return reduce(n, std::move(dense));
  }

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same value expressed in Q(zeta_m); m must be a multiple of the conductor.
  CycloNum promoted(std::uint32_t m) const {
    if (m == conductor_) return *this;
    if (m == 0 || m % conductor_ != 0) {
      throw std::domain_error("CycloNum: cannot promote conductor " + std::to_string(conductor_) +
                              " to " + std::to_string(m));
    }
    const std::uint32_t stride = m / conductor_;
    std::vector<Rational> dense(stride * (coeffs_.size() - 1) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) dense[k * stride] = coeffs_[k];
    return reduce(m, std::move(dense));
  }

  bool is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      if (sgn(coeffs_[k]) != 0) return false;
    return true;
  }

  friend bool is_zero(const CycloNum& a) {
    for (const auto& c : a.coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  CycloNum operator-() const {
    CycloNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  CycloNum& operator+=(const CycloNum& b) {
    if (b.conductor_ == 1) {
      coeffs_[0] += b.coeffs_[0];
      return *this;
    }
    align(b, [](Rational& x, const Rational& y) { x += y; });
    return *this;
  }

  CycloNum& operator-=(const CycloNum& b) {
    if (b.conductor_ == 1) {
      coeffs_[0] -= b.coeffs_[0];
      return *this;
    }
    align(b, [](Rational& x, const Rational& y) { x -= y; });
    return *this;
  }

  CycloNum& operator*=(const CycloNum& b) {
    if (b.conductor_ == 1) {
      for (auto& c : coeffs_) c *= b.coeffs_[0];
      return *this;
    }
    if (conductor_ == 1) {
      const Rational s = coeffs_[0];
      *this = b;
      for (auto& c : coeffs_) c *= s;
      return *this;
    }
    const std::uint32_t m = std::lcm(conductor_, b.conductor_);
    const CycloNum lhs = promoted(m);
    const CycloNum rhs = b.promoted(m);
    std::vector<Rational> dense(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (sgn(lhs.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        if (sgn(rhs.coeffs_[j]) == 0) continue;
        dense[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    *this = reduce(m, std::move(dense));
    return *this;
  }

  CycloNum& operator/=(const CycloNum& b) { return *this *= b.inverse(); }

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    const std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
    return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
  }

  /// Multiplicative inverse, by solving (a * u = 1) in the power basis.
  CycloNum inverse() const {
    if (is_zero(*this)) throw DivisionByZero("CycloNum: inverse of zero");
    const std::size_t n = coeffs_.size();
    if (n == 1) return CycloNum(Rational(1) / coeffs_[0]);
    // Column k of the system is a * z^k.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> dense(n + k);
      for (std::size_t t = 0; t < n; ++t) dense[t + k] = coeffs_[t];
      const CycloNum col = reduce(conductor_, std::move(dense));
      for (std::size_t r = 0; r < n; ++r) m[r][k] = col.coeffs_[r];
    }
    m[0][n] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (sgn(m[piv][c]) == 0) ++piv;  // a != 0 in a field, so the system is regular
      std::swap(m[piv], m[c]);
      const Rational inv = Rational(1) / m[c][c];
      for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || sgn(m[r][c]) == 0) continue;
        const Rational f = m[r][c];
        for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
      }
    }
    std::vector<Rational> u(n);
    for (std::size_t r = 0; r < n; ++r) u[r] = m[r][n];
    return from_coeffs(conductor_, std::move(u));
  }

  /// Numerical embedding zeta_N -> exp(2 pi i / N). Diagnostics only.
  std::complex<double> to_complex() const {
    std::complex<double> z{0.0, 0.0};
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (sgn(coeffs_[k]) == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
      z += coeffs_[k].get_d() * std::polar(1.0, angle);
    }
    return z;
  }

  /// "q" for rationals, otherwise "[c0, c1, ...]@N".
  std::string to_string() const {
    if (is_rational()) return coeffs_[0].get_str();
    std::string s = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k) s += ", ";
      s += coeffs_[k].get_str();
    }
    return s + "]@" + std::to_string(conductor_);
  }

  friend std::ostream& operator<<(std::ostream& os, const CycloNum& a) { return os << a.to_string(); }

 private:
  static CycloNum reduce(std::uint32_t n, std::vector<Rational> dense) {
    const IntPoly& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = dense.size(); k-- > deg;) {
      if (sgn(dense[k]) == 0) continue;
      const Rational c = dense[k];
      for (std::size_t t = 0; t < deg; ++t) {
        if (phi[t] != 0) dense[k - deg + t] -= c * phi[t];
      }
      dense[k] = 0;
    }
    dense.resize(deg);
    CycloNum r;
    r.conductor_ = n;
    r.coeffs_ = std::move(dense);
    return r;
  }

  template <typename Op>
  void align(const CycloNum& b, Op op) {
    if (conductor_ == b.conductor_) {
      for (std::size_t k = 0; k < coeffs_.size(); ++k) op(coeffs_[k], b.coeffs_[k]);
      return;
    }
    const std::uint32_t m = std::lcm(conductor_, b.conductor_);
    *this = promoted(m);
    const CycloNum rhs = b.promoted(m);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) op(coeffs_[k], rhs.coeffs_[k]);
  }

  std::uint32_t conductor_;
  std::vector<Rational> coeffs_;
};

inline CycloNum zeta(std::uint32_t n, std::int64_t k = 1) { return CycloNum::root_of_unity(n, k); }
inline CycloNum inv(const CycloNum& a) { return a.inverse(); }
inline std::complex<double> to_float(const CycloNum& a) { return a.to_complex(); }
inline std::string to_string(const CycloNum& a) { return a.to_string(); }

}  // namespace twa
