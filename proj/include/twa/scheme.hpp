#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twa/matrix.hpp"

namespace twa {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite scheme candidate: a class table on an order x order vertex grid.
///
/// Construction only checks the table's shape. Whether the table is actually
/// an association scheme is decided by verify_axioms; operations that need a
/// property (well-defined intersection numbers, constant valency) assert it
/// and throw AxiomViolation otherwise.
class Scheme {
 public:
  Scheme(std::size_t order, std::size_t num_classes, std::vector<std::int32_t> table)
      : order_(order), num_classes_(num_classes), table_(std::move(table)) {
    if (order_ == 0) throw std::invalid_argument("Scheme: order must be positive");
    if (num_classes_ == 0) throw std::invalid_argument("Scheme: need at least one class");
    if (table_.size() != order_ * order_) {
      throw std::invalid_argument("Scheme: class table must have order^2 entries");
    }
  }

  template <typename Classifier>
  static Scheme from_classifier(std::size_t order, std::size_t num_classes, Classifier&& f) {
    std::vector<std::int32_t> table(order * order);
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t y = 0; y < order; ++y)
        table[x * order + y] = static_cast<std::int32_t>(f(x, y));
    return Scheme(order, num_classes, std::move(table));
  }

  std::size_t order() const { return order_; }
  std::size_t num_classes() const { return num_classes_; }
  /// The d of a d-class scheme.
  std::size_t d() const { return num_classes_ - 1; }

  std::int32_t classify(std::size_t x, std::size_t y) const { return table_[x * order_ + y]; }
  /// classify() for tables already known to be in range.
  std::size_t cls(std::size_t x, std::size_t y) const {
    return static_cast<std::size_t>(table_[x * order_ + y]);
  }

  const std::vector<std::int32_t>& table() const { return table_; }

  bool in_range() const {
    for (auto c : table_)
      if (c < 0 || static_cast<std::size_t>(c) >= num_classes_) return false;
    return true;
  }

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  std::size_t order_;
  std::size_t num_classes_;
  std::vector<std::int32_t> table_;
};

struct AxiomReport {
  bool reflexive = true;         // A_0 = I
  bool partition = true;         // A_0 + ... + A_d = J, every R_i nonempty
  bool transpose_closed = true;  // A_i^t = A_{i'}
  bool regular = true;           // A_i A_j = sum_h p_ij^h A_h
  std::string reflexive_witness;
  std::string partition_witness;
  std::string transpose_witness;
  std::string regular_witness;

  bool all() const { return reflexive && partition && transpose_closed && regular; }

  std::string first_failure() const {
    if (!reflexive) return "axiom 1: " + reflexive_witness;
    if (!partition) return "axiom 2: " + partition_witness;
    if (!transpose_closed) return "axiom 3: " + transpose_witness;
    if (!regular) return "axiom 4: " + regular_witness;
    return {};
  }
};

namespace detail {

inline std::string pair_str(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace detail

/// Exhaustive check of the four scheme axioms.
inline AxiomReport verify_axioms(const Scheme& s) {
  AxiomReport rep;
  const std::size_t n = s.order();
  const std::size_t k = s.num_classes();

  for (std::size_t x = 0; x < n && rep.reflexive; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((s.classify(x, y) == 0) != (x == y)) {
        rep.reflexive = false;
        rep.reflexive_witness = "classify" + detail::pair_str(x, y) + " = " +
                                std::to_string(s.classify(x, y));
        break;
      }
    }
  }

  std::vector<std::size_t> used(k, 0);
  for (std::size_t x = 0; x < n && rep.partition; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto c = s.classify(x, y);
      if (c < 0 || static_cast<std::size_t>(c) >= k) {
        rep.partition = false;
        rep.partition_witness = "pair " + detail::pair_str(x, y) + " has class " +
                                std::to_string(c) + " outside [0," + std::to_string(k - 1) + "]";
        break;
      }
      ++used[static_cast<std::size_t>(c)];
    }
  }
  if (rep.partition) {
    for (std::size_t i = 0; i < k; ++i) {
      if (used[i] == 0) {
        rep.partition = false;
        rep.partition_witness = "relation R_" + std::to_string(i) + " is empty";
        break;
      }
    }
  }
  if (!rep.partition) {
    // Axioms 3 and 4 index by class; they are meaningless on an out-of-range table.
    if (!s.in_range()) {
      rep.transpose_closed = rep.regular = false;
      rep.transpose_witness = rep.regular_witness = "not evaluated: class table out of range";
      return rep;
    }
  }

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> transpose(k, unset);
  for (std::size_t x = 0; x < n && rep.transpose_closed; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i = s.cls(x, y);
      const std::size_t t = s.cls(y, x);
      if (transpose[i] == unset) {
        transpose[i] = t;
      } else if (transpose[i] != t) {
        rep.transpose_closed = false;
        rep.transpose_witness = "R_" + std::to_string(i) + " transposes into both R_" +
                                std::to_string(transpose[i]) + " and R_" + std::to_string(t) +
                                " (pair " + detail::pair_str(x, y) + ")";
        break;
      }
    }
  }

  // Axiom 4: the k x k table c[i][j] = |{z : (x,z) in R_i, (z,y) in R_j}|
  // must depend only on the class of (x,y).
  std::vector<std::vector<std::size_t>> by_class(k);
  std::vector<std::pair<std::size_t, std::size_t>> first_pair(k);
  std::vector<std::size_t> counts(k * k);
  for (std::size_t x = 0; x < n && rep.regular; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t z = 0; z < n; ++z) ++counts[s.cls(x, z) * k + s.cls(z, y)];
      const std::size_t h = s.cls(x, y);
      if (by_class[h].empty()) {
        by_class[h] = counts;
        first_pair[h] = {x, y};
      } else if (by_class[h] != counts) {
        std::size_t c = 0;
        while (by_class[h][c] == counts[c]) ++c;
        rep.regular = false;
        rep.regular_witness = "p_{" + std::to_string(c / k) + "," + std::to_string(c % k) + "}^" +
                              std::to_string(h) + " is " + std::to_string(by_class[h][c]) +
                              " at " + detail::pair_str(first_pair[h].first, first_pair[h].second) +
                              " but " + std::to_string(counts[c]) + " at " + detail::pair_str(x, y);
        break;
      }
    }
  }
  return rep;
}

inline void require_class(const Scheme& s, std::size_t i, const char* op) {
  if (i >= s.num_classes()) {
    throw std::out_of_range(std::string(op) + ": class " + std::to_string(i) + " out of range [0," +
                            std::to_string(s.d()) + "]");
  }
}

inline void require_vertex(const Scheme& s, std::size_t x, const char* op) {
  if (x >= s.order()) {
    throw std::out_of_range(std::string(op) + ": vertex " + std::to_string(x) +
                            " out of range [0," + std::to_string(s.order() - 1) + "]");
  }
}

/// 0/1 matrix of relation R_i.
template <typename T = Rational>
Matrix<T> adjacency_matrix(const Scheme& s, std::size_t i) {
  require_class(s, i, "adjacency_matrix");
  const std::size_t n = s.order();
  Matrix<T> a(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (s.classify(x, y) == static_cast<std::int32_t>(i)) a(x, y) = T(1);
  return a;
}

template <typename T = Rational>
std::vector<Matrix<T>> adjacency_matrices(const Scheme& s) {
  std::vector<Matrix<T>> out;
  out.reserve(s.num_classes());
  for (std::size_t i = 0; i < s.num_classes(); ++i) out.push_back(adjacency_matrix<T>(s, i));
  return out;
}

/// p_ij^h, counted at every (x,y) in R_h; throws AxiomViolation if the count varies.
inline std::size_t intersection_number(const Scheme& s, std::size_t i, std::size_t j, std::size_t h) {
  require_class(s, i, "intersection_number");
  require_class(s, j, "intersection_number");
  require_class(s, h, "intersection_number");
  const std::size_t n = s.order();
  bool seen = false;
  std::size_t value = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (s.classify(x, y) != static_cast<std::int32_t>(h)) continue;
      std::size_t c = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (s.classify(x, z) == static_cast<std::int32_t>(i) &&
            s.classify(z, y) == static_cast<std::int32_t>(j))
          ++c;
      if (!seen) {
        seen = true;
        value = c;
      } else if (c != value) {
        throw AxiomViolation("p_{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
                             std::to_string(h) + " depends on the pair: " + std::to_string(value) +
                             " vs " + std::to_string(c) + " at " + detail::pair_str(x, y));
      }
    }
  }
  if (!seen) throw AxiomViolation("R_" + std::to_string(h) + " is empty");
  return value;
}

/// All p_ij^h at once, indexed [(i * k + j) * k + h]; O(order^3).
inline std::vector<std::size_t> intersection_numbers(const Scheme& s) {
  if (!s.in_range()) throw AxiomViolation("class table out of range");
  const std::size_t n = s.order();
  const std::size_t k = s.num_classes();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> p(k * k * k, unset);
  std::vector<std::size_t> counts(k * k);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t z = 0; z < n; ++z) ++counts[s.cls(x, z) * k + s.cls(z, y)];
      const std::size_t h = s.cls(x, y);
      for (std::size_t ij = 0; ij < k * k; ++ij) {
        std::size_t& slot = p[ij * k + h];
        if (slot == unset) {
          slot = counts[ij];
        } else if (slot != counts[ij]) {
          throw AxiomViolation("intersection number p_{" + std::to_string(ij / k) + "," +
                               std::to_string(ij % k) + "}^" + std::to_string(h) +
                               " depends on the pair " + detail::pair_str(x, y));
        }
      }
    }
  }
  for (auto& v : p)
    if (v == unset) throw AxiomViolation("some relation is empty");
  return p;
}

/// n_i = |R_i(x)|, asserted constant over x.
inline std::size_t valency(const Scheme& s, std::size_t i) {
  require_class(s, i, "valency");
  std::size_t value = 0;
  for (std::size_t x = 0; x < s.order(); ++x) {
    std::size_t c = 0;
    for (std::size_t y = 0; y < s.order(); ++y)
      if (s.classify(x, y) == static_cast<std::int32_t>(i)) ++c;
    if (x == 0) {
      value = c;
    } else if (c != value) {
      throw AxiomViolation("valency of R_" + std::to_string(i) + " differs at vertex " +
                           std::to_string(x));
    }
  }
  return value;
}

inline std::vector<std::size_t> valencies(const Scheme& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.num_classes(); ++i) out.push_back(valency(s, i));
  return out;
}

/// A_i A_j = A_j A_i for every pair, by exact integer products.
inline bool is_commutative(const Scheme& s) {
  const auto a = adjacency_matrices<std::int64_t>(s);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * a[j] == a[j] * a[i])) return false;
  return true;
}

/// Ingestion format: "order d" then order*order whitespace-separated class indices.
inline Scheme read_scheme(std::istream& in) {
  long long order = 0;
  long long d = 0;
  if (!(in >> order >> d)) throw ParseError("scheme file: missing 'order d' header");
  if (order <= 0) throw ParseError("scheme file: order must be positive");
  if (d < 0) throw ParseError("scheme file: d must be nonnegative");
  const auto n = static_cast<std::size_t>(order);
  std::vector<std::int32_t> table(n * n);
  for (std::size_t k = 0; k < table.size(); ++k) {
    long long v = 0;
    if (!(in >> v)) {
      throw ParseError("scheme file: expected " + std::to_string(table.size()) +
                       " class entries, found " + std::to_string(k));
    }
    table[k] = static_cast<std::int32_t>(v);
  }
  std::string extra;
  if (in >> extra) throw ParseError("scheme file: trailing data '" + extra + "'");
  return Scheme(n, static_cast<std::size_t>(d) + 1, std::move(table));
}

inline Scheme parse_scheme(const std::string& text) {
  std::istringstream in(text);
  return read_scheme(in);
}

inline void write_scheme(std::ostream& out, const Scheme& s) {
  out << s.order() << ' ' << s.d() << '\n';
  for (std::size_t x = 0; x < s.order(); ++x) {
    for (std::size_t y = 0; y < s.order(); ++y) {
      if (y) out << ' ';
      out << s.classify(x, y);
    }
    out << '\n';
  }
}

}  // namespace twa
