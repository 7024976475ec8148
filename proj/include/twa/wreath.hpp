#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "twa/check.hpp"
#include "twa/scheme.hpp"

namespace twa {

/// A class of C_{p_1} wr ... wr C_{p_d} as (level, offset). Level 0 is the
/// diagonal relation and always carries offset 0; for level i >= 1 the offset
/// lies in [1, p_i - 1].
struct WreathIndex {
  int level = 0;
  int offset = 0;

  friend bool operator==(const WreathIndex&, const WreathIndex&) = default;

  std::string str() const {
    if (level == 0) return "0";
    return "(" + std::to_string(level) + "," + std::to_string(offset) + ")";
  }
};

/// The orders p_1, ..., p_d of the cyclic factors, innermost first.
class Moduli {
 public:
  Moduli() = default;
  explicit Moduli(std::vector<int> p) : p_(std::move(p)) {
    if (p_.empty()) throw std::invalid_argument("moduli: need at least one factor");
    for (int v : p_)
      if (v < 2) throw std::invalid_argument("moduli: every entry must be >= 2, got " + std::to_string(v));
    start_.assign(p_.size() + 2, 0);
    // start_[i] = sum_{j<i} (p_j - 1); level i occupies flat indices start_[i] + 1 .. start_[i] + p_i - 1.
    for (std::size_t i = 1; i <= p_.size(); ++i) start_[i + 1] = start_[i] + p_[i - 1] - 1;
  }

  int depth() const { return static_cast<int>(p_.size()); }
  /// p_i for 1 <= i <= d.
  int p(int level) const {
    if (level < 1 || level > depth()) throw std::out_of_range("moduli: level " + std::to_string(level));
    return p_[static_cast<std::size_t>(level - 1)];
  }
  const std::vector<int>& values() const { return p_; }

  std::size_t order() const {
    std::size_t n = 1;
    for (int v : p_) n *= static_cast<std::size_t>(v);
    return n;
  }

  /// 1 + sum (p_i - 1).
  std::size_t num_classes() const { return static_cast<std::size_t>(start_[p_.size() + 1]) + 1; }

  /// n_{(i,alpha)} = prod_{j<i} p_j; 1 for level 0.
  std::size_t valency(int level) const {
    std::size_t n = 1;
    for (int j = 1; j < level; ++j) n *= static_cast<std::size_t>(p(j));
    return n;
  }

  /// (level, alpha) with alpha read modulo p_level.
  WreathIndex index(int level, int alpha) const {
    if (level == 0) return {};
    const int pl = p(level);
    const int a = ((alpha % pl) + pl) % pl;
    if (a == 0) {
      throw std::invalid_argument("wreath index: offset " + std::to_string(alpha) + " is 0 mod p_" +
                                  std::to_string(level));
    }
    return {level, a};
  }

  bool valid(const WreathIndex& w) const {
    if (w.level == 0) return w.offset == 0;
    return w.level >= 1 && w.level <= depth() && w.offset >= 1 && w.offset < p(w.level);
  }

  std::size_t flat(const WreathIndex& w) const {
    if (!valid(w)) throw std::out_of_range("wreath index " + w.str() + " invalid for " + str());
    if (w.level == 0) return 0;
    return static_cast<std::size_t>(start_[static_cast<std::size_t>(w.level)] + w.offset);
  }

  WreathIndex unflat(std::size_t k) const {
    if (k >= num_classes()) throw std::out_of_range("flat class " + std::to_string(k) + " out of range");
    if (k == 0) return {};
    int level = 1;
    while (static_cast<std::size_t>(start_[static_cast<std::size_t>(level) + 1]) < k) ++level;
    return {level, static_cast<int>(k) - start_[static_cast<std::size_t>(level)]};
  }

  int level_of(std::size_t k) const { return unflat(k).level; }

  /// Flat indices of every class whose level is below `level` (0 included).
  std::size_t classes_below(int level) const {
    return static_cast<std::size_t>(start_[static_cast<std::size_t>(level)]) + 1;
  }

  std::vector<WreathIndex> indices() const {
    std::vector<WreathIndex> out;
    for (std::size_t k = 0; k < num_classes(); ++k) out.push_back(unflat(k));
    return out;
  }

  /// Mixed-radix digits (x_1, ..., x_d) of a vertex, x_1 least significant.
  std::vector<int> digits(std::size_t v) const {
    std::vector<int> out;
    for (int pi : p_) {
      out.push_back(static_cast<int>(v % static_cast<std::size_t>(pi)));
      v /= static_cast<std::size_t>(pi);
    }
    return out;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
    return s + "]";
  }

  friend bool operator==(const Moduli& a, const Moduli& b) { return a.p_ == b.p_; }

 private:
  std::vector<int> p_;
  std::vector<int> start_;
};

/// C_n on Z/n with classify(x, y) = (y - x) mod n, so that A_1^j = A_j.
inline Scheme cyclic_scheme(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_scheme: n must be positive");
  return Scheme::from_classifier(n, n, [n](std::size_t x, std::size_t y) { return (y + n - x) % n; });
}

/// inner wr outer on inner.order() * outer.order() vertices; vertex (x, y_j) is
/// j * |X| + x. Same-copy pairs keep the inner class, cross-copy pairs get the
/// outer class shifted by d.
inline Scheme wreath_product(const Scheme& inner, const Scheme& outer) {
  if (auto r = verify_axioms(inner); !r.all()) {
    throw AxiomViolation("wreath_product: inner factor is not a scheme (" + r.first_failure() + ")");
  }
  if (auto r = verify_axioms(outer); !r.all()) {
    throw AxiomViolation("wreath_product: outer factor is not a scheme (" + r.first_failure() + ")");
  }
  const std::size_t u = inner.order();
  const std::size_t d = inner.d();
  return Scheme::from_classifier(u * outer.order(), inner.num_classes() + outer.d(),
                                 [&](std::size_t a, std::size_t b) -> std::size_t {
                                   const std::size_t ja = a / u;
                                   const std::size_t jb = b / u;
                                   if (ja == jb) return inner.cls(a % u, b % u);
                                   return d + outer.cls(ja, jb);
                                 });
}

inline Scheme wreath_of_cyclics(const Moduli& m) {
  if (m.depth() == 0) throw std::invalid_argument("wreath_of_cyclics: empty moduli");
  Scheme s = cyclic_scheme(static_cast<std::size_t>(m.p(1)));
  for (int i = 2; i <= m.depth(); ++i) s = wreath_product(s, cyclic_scheme(static_cast<std::size_t>(m.p(i))));
  return s;
}

namespace detail {

inline int mod(int v, int p) { return ((v % p) + p) % p; }

inline void require_index(const Moduli& m, const WreathIndex& w, const char* op) {
  if (!m.valid(w)) throw std::out_of_range(std::string(op) + ": index " + w.str() + " invalid for " + m.str());
}

}  // namespace detail

/// Closed-form test for p_{a b}^{c} = 0, cases (1)-(6) of the vanishing lemma.
inline bool predict_vanishing(const Moduli& m, const WreathIndex& a, const WreathIndex& b,
                              const WreathIndex& c) {
  detail::require_index(m, a, "predict_vanishing");
  detail::require_index(m, b, "predict_vanishing");
  detail::require_index(m, c, "predict_vanishing");
  const int i = a.level, j = b.level, h = c.level;
  const int alpha = a.offset, beta = b.offset, gamma = c.offset;

  if (i == j && j == h && i != 0 && detail::mod(alpha + beta - gamma, m.p(i)) != 0) return true;
  if ((i == j && i < h) || (i == h && h < j) || (j == h && j < i)) return true;
  if (h < i && i == j && detail::mod(alpha + beta, m.p(i)) != 0) return true;
  if (j < i && i == h && alpha != gamma) return true;
  if (i < j && j == h && beta != gamma) return true;
  if (i != j && j != h && i != h) return true;
  return false;
}

/// predict_vanishing against brute-force intersection numbers, all class triples.
inline CheckResult check_vanishing_criterion(const Moduli& m) {
  CheckResult res("vanishing");
  const Scheme s = wreath_of_cyclics(m);
  const auto p = intersection_numbers(s);
  const std::size_t k = s.num_classes();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        const std::size_t count = p[(a * k + b) * k + c];
        const bool predicted = predict_vanishing(m, m.unflat(a), m.unflat(b), m.unflat(c));
        res.expect(predicted == (count == 0), [&] {
          return "p_{" + m.unflat(a).str() + m.unflat(b).str() + "}^" + m.unflat(c).str() + " = " +
                 std::to_string(count) + " but criterion says " + (predicted ? "zero" : "nonzero");
        });
      }
  return res;
}

/// Ball structure around every vertex: R_{(i,alpha)}(x) induces the wreath
/// product of the first i-1 factors under y -> (y mod p_1...p_{i-1}), and the
/// membership claims for pairs drawn from two balls.
inline CheckResult check_ball_structure(const Moduli& m) {
  CheckResult res("ball-structure");
  const Scheme s = wreath_of_cyclics(m);
  const std::size_t n = s.order();
  const std::size_t k = s.num_classes();

  std::vector<Scheme> prefix;  // prefix[i] = C_{p_1} wr ... wr C_{p_{i-1}}
  prefix.push_back(cyclic_scheme(1));
  prefix.push_back(cyclic_scheme(1));
  for (int i = 2; i <= m.depth(); ++i) {
    prefix.push_back(wreath_of_cyclics(Moduli(std::vector<int>(m.values().begin(), m.values().begin() + i - 1))));
  }

  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::vector<std::size_t>> balls(k);
    for (std::size_t y = 0; y < n; ++y) balls[s.cls(x, y)].push_back(y);

    for (std::size_t a = 1; a < k; ++a) {
      const WreathIndex wa = m.unflat(a);
      const Scheme& sub = prefix[static_cast<std::size_t>(wa.level)];
      const auto& ball = balls[a];
      const std::size_t radix = m.valency(wa.level);
      res.expect(ball.size() == sub.order(), [&] {
        return "ball " + wa.str() + " around " + std::to_string(x) + " has " + std::to_string(ball.size()) +
               " vertices, expected " + std::to_string(sub.order());
      });
      std::set<std::size_t> images;
      std::set<std::size_t> used;
      for (std::size_t u : ball) {
        images.insert(u % radix);
        for (std::size_t v : ball) {
          used.insert(s.cls(u, v));
          res.expect(s.cls(u, v) == sub.cls(u % radix, v % radix), [&] {
            return "ball " + wa.str() + " around " + std::to_string(x) + ": class of " +
                   detail::pair_str(u, v) + " is " + std::to_string(s.cls(u, v)) + ", sub-scheme says " +
                   std::to_string(sub.cls(u % radix, v % radix));
          });
        }
      }
      res.expect(images.size() == ball.size(), [&] {
        return "ball " + wa.str() + " around " + std::to_string(x) + ": canonical map is not injective";
      });
      res.expect(used.size() == m.classes_below(wa.level) && *used.rbegin() + 1 == m.classes_below(wa.level),
                 [&] {
                   return "ball " + wa.str() + " around " + std::to_string(x) +
                          " does not use exactly the classes of lower levels";
                 });

      for (std::size_t b = 1; b < k; ++b) {
        const WreathIndex wb = m.unflat(b);
        if (wb.level > wa.level) continue;
        for (std::size_t y : ball)
          for (std::size_t z : balls[b]) {
            if (wa.level == wb.level) {
              res.expect(m.level_of(s.cls(y, z)) <= wa.level, [&] {
                return "same-level balls " + wa.str() + "," + wb.str() + " around " + std::to_string(x) +
                       ": pair " + detail::pair_str(y, z) + " has level above " + std::to_string(wa.level);
              });
            } else {
              res.expect(s.cls(z, y) == a, [&] {
                return "z in " + wb.str() + ", y in " + wa.str() + " around " + std::to_string(x) + ": (z,y) = " +
                       detail::pair_str(z, y) + " not in R_" + wa.str();
              });
            }
          }
      }
    }
  }
  return res;
}

}  // namespace twa
