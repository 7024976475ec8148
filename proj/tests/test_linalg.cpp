#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "twa/span.hpp"

using namespace twa;

namespace {

RationalMatrix from_rows(std::vector<std::vector<long>> rows) {
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

RationalMatrix unit(std::size_t n, std::size_t r, std::size_t c) {
  RationalMatrix m(n, n);
  m(r, c) = 1;
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic", "[matrix]") {
  const RationalMatrix a = from_rows({{1, 2}, {3, 4}});
  const RationalMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(b * a == from_rows({{3, 4}, {1, 2}}));
  CHECK(a + b == from_rows({{1, 3}, {4, 4}}));
  CHECK(a - a == RationalMatrix(2, 2));
  CHECK((a - a).is_zero());
  CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
  CHECK(a.trace() == 5);
  CHECK(a * RationalMatrix::identity(2) == a);
  CHECK(RationalMatrix::ones(2, 3).shape() == "2x3");
  CHECK(commutator(a, b) == from_rows({{-1, -3}, {3, 1}}));
  CHECK(a * Rational(1, 2) == from_rows({{1, 2}, {3, 4}}) * Rational(1, 2));
  CHECK_THROWS_AS(a * RationalMatrix(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(a + RationalMatrix(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(RationalMatrix::ones(2, 3).trace(), std::invalid_argument);
}

TEST_CASE("kron matches an entrywise reference", "[matrix]") {
  const RationalMatrix a = from_rows({{1, 2}, {0, -1}});
  const RationalMatrix b = from_rows({{0, 1, 1}, {1, 0, 1}, {2, 2, 0}});
  const oracle::Mat ra = {{1, 2}, {0, -1}};
  const oracle::Mat rb = {{0, 1, 1}, {1, 0, 1}, {2, 2, 0}};
  const auto expected = oracle::kron(ra, rb);
  const RationalMatrix got = kron(a, b);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) CHECK(got(r, c) == expected[r][c]);
}

TEST_CASE("cast between scalar types preserves values", "[matrix]") {
  const RationalMatrix a = from_rows({{1, 0}, {-3, 2}}) * Rational(1, 3);
  const ExactMatrix e = a.cast<CycloNum>();
  CHECK(e(1, 0) == CycloNum(Rational(-1)));
  CHECK(e(0, 0) == CycloNum(Rational(1, 3)));
  CHECK(e * ExactMatrix::identity(2) == e);
}

TEST_CASE("SpanBasis tracks dimension and membership", "[span]") {
  SpanBasis<Rational> s(2, 2);
  CHECK(s.ambient_dimension() == 4);
  CHECK(s.insert(unit(2, 0, 0)));
  CHECK(s.insert(unit(2, 0, 0) + unit(2, 1, 1)));
  CHECK_FALSE(s.insert(unit(2, 1, 1) * Rational(5)));
  CHECK(s.dimension() == 2);
  CHECK(s.contains(RationalMatrix::identity(2) * Rational(-7, 3)));
  CHECK_FALSE(s.contains(unit(2, 0, 1)));
  CHECK(s.residual(unit(2, 0, 1) + unit(2, 0, 0)) == unit(2, 0, 1));
  CHECK(s.pivots() == std::vector<std::size_t>{0, 3});
  CHECK_THROWS_AS(s.insert(RationalMatrix(3, 3)), std::invalid_argument);
  CHECK_FALSE(s.insert(RationalMatrix(2, 2)));
}

TEST_CASE("SpanBasis basis is independent of insertion order", "[span]") {
  const std::vector<RationalMatrix> vs = {from_rows({{1, 2}, {3, 4}}), from_rows({{0, 1}, {1, 0}}),
                                          from_rows({{1, 3}, {4, 4}}), from_rows({{2, 0}, {0, 7}})};
  SpanBasis<Rational> forward(2, 2), backward(2, 2);
  for (const auto& v : vs) forward.insert(v);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) backward.insert(*it);
  CHECK(forward.dimension() == 3);
  CHECK(forward.basis() == backward.basis());
}

TEST_CASE("rank agrees with an independent elimination", "[span]") {
  std::vector<RationalMatrix> ms;
  std::vector<std::vector<oracle::Q>> flat;
  // Deterministic pseudo-random 3x3 integer matrices, some forced dependent.
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 5) - 2;
  };
  for (int t = 0; t < 12; ++t) {
    RationalMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = next();
    if (t % 4 == 3) m = ms[0] * Rational(2) - ms[1];
    ms.push_back(m);
  }
  for (const auto& m : ms) {
    std::vector<oracle::Q> v;
    for (const auto& x : m.flat()) v.push_back(x);
    flat.push_back(v);
  }
  CHECK(rank(ms) == oracle::rank(flat));
  CHECK(rank(std::vector<RationalMatrix>{}) == 0);
}

TEST_CASE("algebra_closure on small generator sets", "[span]") {
  CHECK(algebra_closure(std::vector<RationalMatrix>{RationalMatrix::identity(3)}).dimension() == 1);
  // Three orthogonal diagonal idempotents.
  std::vector<RationalMatrix> diag;
  for (std::size_t i = 0; i < 3; ++i) diag.push_back(unit(3, i, i));
  CHECK(algebra_closure(diag).dimension() == 3);
  // A single nilpotent Jordan block generates span{N, N^2}.
  const RationalMatrix n = unit(3, 0, 1) + unit(3, 1, 2);
  CHECK(algebra_closure(std::vector<RationalMatrix>{n}).dimension() == 2);
  // E_11 and the full cycle generate all of M_3.
  const RationalMatrix cyc = unit(3, 0, 1) + unit(3, 1, 2) + unit(3, 2, 0);
  CHECK(algebra_closure(std::vector<RationalMatrix>{unit(3, 0, 0), cyc}).dimension() == 9);
  CHECK_THROWS_AS(algebra_closure(std::vector<RationalMatrix>{}), std::invalid_argument);
  CHECK_THROWS_AS(algebra_closure(std::vector<RationalMatrix>{RationalMatrix(2, 2), RationalMatrix(3, 3)}),
                  std::invalid_argument);
}

TEST_CASE("SpanBasis over a cyclotomic field", "[span]") {
  SpanBasis<CycloNum> s(1, 2);
  ExactMatrix v(1, 2), w(1, 2);
  v(0, 0) = 1;
  v(0, 1) = zeta(3);
  w(0, 0) = zeta(3, 2);
  w(0, 1) = CycloNum(1L);  // zeta^2 * v
  CHECK(s.insert(v));
  CHECK_FALSE(s.insert(w));
  w(0, 1) = zeta(3);
  CHECK(s.insert(w));
  CHECK(s.dimension() == 2);
}
