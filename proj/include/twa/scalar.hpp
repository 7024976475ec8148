#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace twa {

/// Arbitrary-precision rational; the base field for every exact computation.
using Rational = mpq_class;

/// Thrown when an exact computation divides by zero.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a scheme fails an axiom that an operation depends on.
class AxiomViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (sgn(q.get_den()) == 0) throw DivisionByZero("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace twa
