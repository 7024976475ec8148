#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "twa/check.hpp"
#include "twa/scheme.hpp"
#include "twa/span.hpp"
#include "twa/wreath.hpp"

namespace twa {

/// Adjacency matrices A_i and dual idempotents E_i^*(x) of a scheme at a base point.
class TerwilligerContext {
 public:
  TerwilligerContext(Scheme s, std::size_t x) : scheme_(std::move(s)), base_(x) {
    require_vertex(scheme_, x, "make_context");
    if (!scheme_.in_range()) throw AxiomViolation("make_context: class table out of range");
    const std::size_t n = scheme_.order();
    adjacency_ = adjacency_matrices<Rational>(scheme_);
    dual_.assign(scheme_.num_classes(), RationalMatrix(n, n));
    for (std::size_t y = 0; y < n; ++y) dual_[scheme_.cls(x, y)](y, y) = 1;
  }

  const Scheme& scheme() const { return scheme_; }
  std::size_t base_point() const { return base_; }
  std::size_t order() const { return scheme_.order(); }
  std::size_t num_classes() const { return scheme_.num_classes(); }

  const RationalMatrix& adjacency(std::size_t i) const { return adjacency_.at(i); }
  const RationalMatrix& dual(std::size_t i) const { return dual_.at(i); }
  const std::vector<RationalMatrix>& adjacencies() const { return adjacency_; }
  const std::vector<RationalMatrix>& duals() const { return dual_; }

  /// A_0, ..., A_d, E_0^*, ..., E_d^*.
  std::vector<RationalMatrix> generators() const {
    std::vector<RationalMatrix> g = adjacency_;
    g.insert(g.end(), dual_.begin(), dual_.end());
    return g;
  }

  /// Vertices y with (x, y) in R_i, ascending.
  std::vector<std::size_t> sphere(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < order(); ++y)
      if (scheme_.cls(base_, y) == i) out.push_back(y);
    return out;
  }

 private:
  Scheme scheme_;
  std::size_t base_;
  std::vector<RationalMatrix> adjacency_;
  std::vector<RationalMatrix> dual_;
};

inline TerwilligerContext make_context(const Scheme& s, std::size_t x) { return TerwilligerContext(s, x); }

/// E_i^* A_j E_h^*, as an exact product.
inline RationalMatrix triple_product(const TerwilligerContext& ctx, std::size_t i, std::size_t j, std::size_t h) {
  return ctx.dual(i) * ctx.adjacency(j) * ctx.dual(h);
}

/// Membership in the list of nonzero triple products E_a^* A_b E_c^*.
inline bool predict_triple_nonzero(const Moduli& m, const WreathIndex& a, const WreathIndex& b,
                                   const WreathIndex& c) {
  detail::require_index(m, a, "predict_triple_nonzero");
  detail::require_index(m, b, "predict_triple_nonzero");
  detail::require_index(m, c, "predict_triple_nonzero");
  const int i = a.level, j = b.level, h = c.level;
  const int alpha = a.offset, beta = b.offset, gamma = c.offset;
  if (i == 0 && j == 0 && h == 0) return true;
  if (i != 0 && i == j && j == h) return detail::mod(alpha + beta - gamma, m.p(i)) == 0;
  if (h < i && i == j) return detail::mod(alpha + beta, m.p(i)) == 0;
  if (j < i && i == h) return alpha == gamma;
  if (i < j && j == h) return beta == gamma;
  return false;
}

inline CheckResult check_triple_list(const Moduli& m, std::size_t x) {
  CheckResult res("triple-list");
  const TerwilligerContext ctx(wreath_of_cyclics(m), x);
  const std::size_t k = ctx.num_classes();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        const bool nonzero = !triple_product(ctx, a, b, c).is_zero();
        const bool predicted = predict_triple_nonzero(m, m.unflat(a), m.unflat(b), m.unflat(c));
        res.expect(nonzero == predicted, [&] {
          return "x=" + std::to_string(x) + ": E*_" + m.unflat(a).str() + " A_" + m.unflat(b).str() + " E*_" +
                 m.unflat(c).str() + " is " + (nonzero ? "nonzero" : "zero") + " but list says " +
                 (predicted ? "nonzero" : "zero");
        });
      }
  return res;
}

/// T_0(x): the span of all E_i^* A_j E_h^*.
inline SpanBasis<Rational> t0_span(const TerwilligerContext& ctx) {
  SpanBasis<Rational> span(ctx.order(), ctx.order());
  const std::size_t k = ctx.num_classes();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t h = 0; h < k; ++h) span.insert(triple_product(ctx, i, j, h));
  return span;
}

/// T(x): the algebra generated by the adjacency matrices and dual idempotents.
inline SpanBasis<Rational> terwilliger_algebra(const TerwilligerContext& ctx) {
  return algebra_closure(ctx.generators());
}

/// |R_i(x) cap R_j(y) cap R_h(z)|.
inline std::size_t triple_intersection(const Scheme& s, std::size_t x, std::size_t y, std::size_t z,
                                       std::size_t i, std::size_t j, std::size_t h) {
  require_vertex(s, x, "triple_intersection");
  require_vertex(s, y, "triple_intersection");
  require_vertex(s, z, "triple_intersection");
  std::size_t c = 0;
  for (std::size_t w = 0; w < s.order(); ++w)
    if (s.classify(x, w) == static_cast<std::int32_t>(i) && s.classify(y, w) == static_cast<std::int32_t>(j) &&
        s.classify(z, w) == static_cast<std::int32_t>(h))
      ++c;
  return c;
}

struct BasePointDims {
  std::size_t base_point = 0;
  std::size_t dim_t0 = 0;
  std::size_t dim_t = 0;
};

struct TriplyRegularReport {
  bool triply_regular = true;
  std::string witness;  // first non-constant triple intersection number
  /// False when the input is not a commutative scheme; the T_0 = T comparison is then skipped.
  bool cross_checked = false;
  std::vector<BasePointDims> dims;
  /// triply_regular == (dim T_0(x) == dim T(x) for every checked x).
  bool lemma_consistent = true;

  bool passed() const { return triply_regular && lemma_consistent; }
};

/// Triple intersection numbers are tested for constancy over all (x, y, z)
/// sharing the class triple (l, m, n) = (c(x,y), c(x,z), c(y,z)), by one pass
/// over X^3 with bucketing. For commutative schemes the verdict is then
/// compared with dim T_0(x) == dim T(x) at each listed base point (all when
/// `base_points` is empty).
inline TriplyRegularReport check_triply_regular(const Scheme& s, const std::vector<std::size_t>& base_points = {}) {
  if (!s.in_range()) throw AxiomViolation("check_triply_regular: class table out of range");
  TriplyRegularReport rep;
  const std::size_t n = s.order();
  const auto k = static_cast<std::uint32_t>(s.num_classes());

  struct Bucket {
    std::size_t x, y, z;
    std::vector<std::uint32_t> codes;  // sorted (i, j, h) codes of every w
  };
  std::map<std::uint32_t, Bucket> buckets;
  std::vector<std::uint32_t> codes(n);
  for (std::size_t x = 0; x < n && rep.triply_regular; ++x)
    for (std::size_t y = 0; y < n && rep.triply_regular; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t w = 0; w < n; ++w)
          codes[w] = (static_cast<std::uint32_t>(s.cls(x, w)) * k + static_cast<std::uint32_t>(s.cls(y, w))) * k +
                     static_cast<std::uint32_t>(s.cls(z, w));
        std::sort(codes.begin(), codes.end());
        const std::uint32_t key = (static_cast<std::uint32_t>(s.cls(x, y)) * k + static_cast<std::uint32_t>(s.cls(x, z))) * k +
                                  static_cast<std::uint32_t>(s.cls(y, z));
        auto [it, fresh] = buckets.try_emplace(key, Bucket{x, y, z, codes});
        if (fresh || it->second.codes == codes) continue;

        // First code whose multiplicity differs.
        const auto& ref = it->second.codes;
        auto count = [](const std::vector<std::uint32_t>& v, std::uint32_t c) {
          return static_cast<std::size_t>(std::count(v.begin(), v.end(), c));
        };
        std::uint32_t bad = 0;
        for (std::uint32_t c = 0; c < k * k * k; ++c)
          if (count(ref, c) != count(codes, c)) {
            bad = c;
            break;
          }
        const auto triple = [](std::size_t a, std::size_t b, std::size_t c) {
          return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        };
        rep.triply_regular = false;
        rep.witness = "(i,j,h)=" + triple(bad / (k * k), (bad / k) % k, bad % k) + " over (l,m,n)=" +
                      triple(key / (k * k), (key / k) % k, key % k) + ": " + std::to_string(count(ref, bad)) +
                      " at (x,y,z)=" + triple(it->second.x, it->second.y, it->second.z) + " but " +
                      std::to_string(count(codes, bad)) + " at " + triple(x, y, z);
        break;
      }

  if (!verify_axioms(s).all() || !is_commutative(s)) return rep;
  rep.cross_checked = true;
  std::vector<std::size_t> points = base_points;
  if (points.empty()) {
    points.resize(n);
    std::iota(points.begin(), points.end(), std::size_t{0});
  }
  bool all_equal = true;
  for (std::size_t x : points) {
    const TerwilligerContext ctx(s, x);
    BasePointDims d{x, t0_span(ctx).dimension(), terwilliger_algebra(ctx).dimension()};
    all_equal = all_equal && d.dim_t0 == d.dim_t;
    rep.dims.push_back(d);
  }
  rep.lemma_consistent = (all_equal == rep.triply_regular);
  return rep;
}

/// Span{E_i^* 1} has dimension d+1 and is invariant under every A_j and E_j^*.
inline CheckResult check_primary_module(const TerwilligerContext& ctx) {
  CheckResult res("primary-module");
  const std::size_t n = ctx.order();
  const std::size_t k = ctx.num_classes();
  const RationalMatrix all_ones = RationalMatrix::ones(n, 1);

  std::vector<RationalMatrix> vecs;
  SpanBasis<Rational> span(n, 1);
  for (std::size_t i = 0; i < k; ++i) {
    vecs.push_back(ctx.dual(i) * all_ones);
    span.insert(vecs.back());
    res.expect(!vecs.back().is_zero(), [&] { return "E*_" + std::to_string(i) + " 1 is zero"; });
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Rational dot = (vecs[i].transpose() * vecs[j])(0, 0);
      res.expect(is_zero(dot), [&] {
        return "E*_" + std::to_string(i) + " 1 and E*_" + std::to_string(j) + " 1 are not orthogonal";
      });
    }
  res.expect(span.dimension() == k, [&] {
    return "primary module has dimension " + std::to_string(span.dimension()) + ", expected " + std::to_string(k);
  });
  const auto gens = ctx.generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < k; ++i) {
      res.expect(span.contains(gens[g] * vecs[i]), [&] {
        const std::string name = g < k ? "A_" + std::to_string(g) : "E*_" + std::to_string(g - k);
        return name + " maps E*_" + std::to_string(i) + " 1 outside the primary module";
      });
    }
  return res;
}

}  // namespace twa
