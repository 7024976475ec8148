#pragma once

#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twa/check.hpp"
#include "twa/cyclotomic.hpp"
#include "twa/span.hpp"
#include "twa/terwilliger.hpp"
#include "twa/wreath.hpp"

namespace twa {

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Terwilliger context of C_{p_1} wr ... wr C_{p_d}, addressable by wreath index.
class WreathContext : public TerwilligerContext {
 public:
  WreathContext(Moduli m, std::size_t x) : TerwilligerContext(wreath_of_cyclics(m), x), moduli_(std::move(m)) {}

  const Moduli& moduli() const { return moduli_; }
  const RationalMatrix& A(const WreathIndex& w) const { return adjacency(moduli_.flat(w)); }
  const RationalMatrix& E(const WreathIndex& w) const { return dual(moduli_.flat(w)); }
  std::size_t n(const WreathIndex& w) const { return moduli_.valency(w.level); }

 private:
  Moduli moduli_;
};

/// Sum over h < i of (p_h - 1)(p_i - 1).
inline std::size_t one_dimensional_count(const Moduli& m) {
  std::size_t total = 0;
  for (int i = 1; i <= m.depth(); ++i)
    for (int h = 1; h < i; ++h) total += static_cast<std::size_t>((m.p(h) - 1) * (m.p(i) - 1));
  return total;
}

/// 1 + sum (p_i - 1), the size of the full matrix block.
inline std::size_t matrix_block_size(const Moduli& m) { return m.num_classes(); }

inline std::size_t dimension_formula(const Moduli& m) {
  const std::size_t b = matrix_block_size(m);
  return b * b + one_dimensional_count(m);
}

// ---------------------------------------------------------------------------
// Matrix units

struct GFamily {
  Moduli moduli;
  std::size_t base_point = 0;
  std::size_t size = 0;  // number of classes K; the family has K^2 members
  std::vector<RationalMatrix> members;

  const RationalMatrix& at(std::size_t a, std::size_t b) const { return members[a * size + b]; }
  const RationalMatrix& at(const WreathIndex& a, const WreathIndex& b) const {
    return at(moduli.flat(a), moduli.flat(b));
  }
};

/// G_{ab} for every ordered pair of classes, by the three-case definition.
/// Throws StructureError if some G is not (1/n_b) J on its (a, b) block and zero elsewhere.
inline GFamily build_g_family(const WreathContext& ctx) {
  const Moduli& m = ctx.moduli();
  const std::size_t k = ctx.num_classes();
  const std::size_t n = ctx.order();
  GFamily g{m, ctx.base_point(), k, {}};
  g.members.reserve(k * k);
  const RationalMatrix all_ones = RationalMatrix::ones(n, n);

  std::vector<std::size_t> sphere_of(n);
  for (std::size_t y = 0; y < n; ++y) sphere_of[y] = ctx.scheme().cls(ctx.base_point(), y);

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const WreathIndex wa = m.unflat(a);
      const WreathIndex wb = m.unflat(b);
      RationalMatrix gm;
      if (wa.level < wb.level) {
        gm = ctx.dual(a) * ctx.adjacency(b) * ctx.dual(b);
        gm *= Rational(1, ctx.n(wb));
      } else if (wa.level > wb.level) {
        gm = ctx.dual(a) * ctx.adjacency(a).transpose() * ctx.dual(b);
        gm *= Rational(1, ctx.n(wb));
      } else {
        gm = ctx.dual(a) * all_ones * ctx.dual(b);
        gm *= Rational(1, ctx.n(wa));
      }
      const Rational block_value(1, ctx.n(wb));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          const bool inside = sphere_of[r] == a && sphere_of[c] == b;
          if (gm(r, c) != (inside ? block_value : Rational(0))) {
            throw StructureError("G_{" + wa.str() + wb.str() + "} has entry " + gm(r, c).get_str() + " at " +
                                 detail::pair_str(r, c) + ", expected " +
                                 (inside ? block_value.get_str() : std::string("0")));
          }
        }
      g.members.push_back(std::move(gm));
    }
  }
  return g;
}

/// G_{ab} G_{ce} = delta_{bc} G_{ae} for every quadruple.
inline CheckResult check_matrix_units(const GFamily& g) {
  CheckResult res("matrix-units");
  const std::size_t k = g.size;
  const std::size_t n = g.members.front().rows();
  const RationalMatrix zero(n, n);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t e = 0; e < k; ++e) {
          const RationalMatrix prod = g.at(a, b) * g.at(c, e);
          const RationalMatrix& expected = (b == c) ? g.at(a, e) : zero;
          res.expect(prod == expected, [&] {
            const auto& m = g.moduli;
            return "G_{" + m.unflat(a).str() + m.unflat(b).str() + "} G_{" + m.unflat(c).str() + m.unflat(e).str() +
                   "} violates the matrix-unit law";
          });
        }
  return res;
}

/// Rank of the G family; the members are linearly independent iff this is K^2.
inline std::size_t g_family_rank(const GFamily& g) { return rank(g.members); }

inline SpanBasis<Rational> g_span(const GFamily& g) {
  const std::size_t n = g.members.front().rows();
  SpanBasis<Rational> u(n, n);
  for (const auto& m : g.members) u.insert(m);
  return u;
}

struct AgFormsReport {
  CheckResult result{"ag-forms"};
  /// Hits per case row: A G rows (h<i, h=i&a=xi, h=i&a!=xi, h>i), then G A rows
  /// (h<j, h=j&rho!=0, h=j&rho=0, h>j).
  std::array<std::size_t, 8> row_hits{};
};

/// Exact products A_{(h,xi)} G and G A_{(h,xi)} against the closed-form case rows,
/// for every nonzero (h, xi) and every G. A_0 = I is checked separately as G itself.
inline AgFormsReport check_ag_forms(const WreathContext& ctx, const GFamily& g) {
  AgFormsReport rep;
  auto& res = rep.result;
  const Moduli& m = ctx.moduli();
  const std::size_t k = ctx.num_classes();
  const std::size_t n = ctx.order();

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      res.expect(ctx.adjacency(0) * g.at(a, b) == g.at(a, b) && g.at(a, b) * ctx.adjacency(0) == g.at(a, b),
                 [&] { return "A_0 does not act as the identity on G_{" + m.unflat(a).str() + m.unflat(b).str() + "}"; });

  for (std::size_t hx = 1; hx < k; ++hx) {
    const WreathIndex wh = m.unflat(hx);
    const int h = wh.level;
    const int xi = wh.offset;
    const Rational n_h(ctx.n(wh));
    for (std::size_t a = 0; a < k; ++a) {
      const WreathIndex wa = m.unflat(a);
      const int i = wa.level;
      const Rational n_a(ctx.n(wa));
      for (std::size_t b = 0; b < k; ++b) {
        const WreathIndex wb = m.unflat(b);
        const int j = wb.level;
        const RationalMatrix& gab = g.at(a, b);
        auto describe = [&](const char* side, int row) {
          return [&, side, row] {
            return std::string(side) + " row " + std::to_string(row + 1) + ": A_" + wh.str() + " with G_{" + wa.str() +
                   wb.str() + "}";
          };
        };

        // A_{(h,xi)} G_{(i,alpha)(j,beta)}
        RationalMatrix left_expected(n, n);
        int left_row = 0;
        if (h < i) {
          left_row = 0;
          left_expected = gab * n_h;
        } else if (h == i && xi == wa.offset) {
          left_row = 1;
          for (std::size_t r = 0; r < m.classes_below(i); ++r) left_expected += g.at(r, b) * n_a;
        } else if (h == i) {
          left_row = 2;
          left_expected = g.at(m.flat(m.index(i, wa.offset - xi)), b) * n_a;
        } else {
          left_row = 3;
          left_expected = g.at(m.flat(m.index(h, m.p(h) - xi)), b) * n_a;
        }
        ++rep.row_hits[static_cast<std::size_t>(left_row)];
        res.expect(ctx.adjacency(hx) * gab == left_expected, describe("A*G", left_row));

        // G_{(i,alpha)(j,beta)} A_{(h,xi)}
        RationalMatrix right_expected(n, n);
        int right_row = 4;
        if (h < j) {
          right_row = 4;
          right_expected = gab * n_h;
        } else if (h == j && detail::mod(wb.offset + xi, m.p(j)) != 0) {
          right_row = 5;
          const WreathIndex rho = m.index(j, wb.offset + xi);
          right_expected = g.at(a, m.flat(rho)) * Rational(ctx.n(rho));
        } else if (h == j) {
          right_row = 6;
          for (std::size_t r = 0; r < m.classes_below(j); ++r)
            right_expected += g.at(a, r) * Rational(ctx.n(m.unflat(r)));
        } else {
          right_row = 7;
          right_expected = g.at(a, hx) * n_h;
        }
        ++rep.row_hits[static_cast<std::size_t>(right_row)];
        res.expect(gab * ctx.adjacency(hx) == right_expected, describe("G*A", right_row - 4));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Block form and commutation

/// Nonzero-block pattern of A_{(j,beta)} with respect to the sphere partition at the base point.
inline CheckResult check_block_form(const WreathContext& ctx, const WreathIndex& j) {
  CheckResult res("block-form");
  const Moduli& m = ctx.moduli();
  detail::require_index(m, j, "check_block_form");
  if (j.level == 0) throw std::invalid_argument("check_block_form: index must be nonzero");
  const std::size_t k = ctx.num_classes();
  const RationalMatrix& a = ctx.A(j);

  std::vector<std::vector<std::size_t>> spheres(k);
  for (std::size_t s = 0; s < k; ++s) spheres[s] = ctx.sphere(s);

  for (std::size_t r = 0; r < k; ++r) {
    const WreathIndex wr = m.unflat(r);
    for (std::size_t c = 0; c < k; ++c) {
      const WreathIndex wc = m.unflat(c);
      bool expect_nonzero = false;
      bool expect_ones = false;
      if (wr.level < j.level) {
        expect_nonzero = wc == j;
        expect_ones = true;
      } else if (wr.level == j.level) {
        const int target = detail::mod(wr.offset + j.offset, m.p(j.level));
        expect_nonzero = target != 0 ? wc == WreathIndex{j.level, target} : wc.level < j.level;
        expect_ones = true;
      } else {
        expect_nonzero = r == c;
      }

      std::size_t ones = 0;
      for (std::size_t y : spheres[r])
        for (std::size_t z : spheres[c])
          if (!is_zero(a(y, z))) ++ones;
      const std::size_t cells = spheres[r].size() * spheres[c].size();
      res.expect((ones != 0) == expect_nonzero, [&] {
        return "A_" + j.str() + " block (" + wr.str() + "," + wc.str() + ") is " + (ones ? "nonzero" : "zero") +
               ", expected " + (expect_nonzero ? "nonzero" : "zero");
      });
      if (expect_nonzero && expect_ones) {
        res.expect(ones == cells, [&] {
          return "A_" + j.str() + " block (" + wr.str() + "," + wc.str() + ") is not all-ones";
        });
      }
    }
  }
  return res;
}

/// Every nonzero (j, beta), at one base point.
inline CheckResult check_block_forms(const WreathContext& ctx) {
  CheckResult res("block-form");
  for (std::size_t b = 1; b < ctx.num_classes(); ++b) res.absorb(check_block_form(ctx, ctx.moduli().unflat(b)));
  res.name = "block-form";
  return res;
}

/// E_a^* commutes with A_b for level(b) < level(a), and the sandwich identity
/// E_a^* A_b E_a^* E_a^* A_c E_a^* = E_a^* A_b A_c E_a^* for levels of b, c below a.
inline CheckResult check_commutation(const WreathContext& ctx) {
  CheckResult res("commutation");
  const Moduli& m = ctx.moduli();
  const std::size_t k = ctx.num_classes();
  for (std::size_t a = 1; a < k; ++a) {
    const int i = m.level_of(a);
    const std::size_t below = m.classes_below(i);
    const RationalMatrix& e = ctx.dual(a);
    for (std::size_t b = 0; b < below; ++b) {
      res.expect(e * ctx.adjacency(b) == ctx.adjacency(b) * e, [&] {
        return "E*_" + m.unflat(a).str() + " does not commute with A_" + m.unflat(b).str();
      });
      const RationalMatrix eae = e * ctx.adjacency(b) * e;
      for (std::size_t c = 0; c < below; ++c) {
        const RationalMatrix lhs = eae * e * ctx.adjacency(c) * e;
        const RationalMatrix rhs = e * ctx.adjacency(b) * ctx.adjacency(c) * e;
        res.expect(lhs == rhs, [&] {
          return "sandwich identity fails for E*_" + m.unflat(a).str() + ", A_" + m.unflat(b).str() + ", A_" +
                 m.unflat(c).str();
        });
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Central idempotents

struct FMember {
  WreathIndex outer;  // (i, alpha), 2 <= i <= d
  WreathIndex inner;  // (h, xi), 1 <= h < i
  ExactMatrix matrix;
  bool nonzero = false;
};

struct FFamily {
  Moduli moduli;
  std::size_t base_point = 0;
  std::uint32_t conductor = 1;  // lcm(p_1, ..., p_{d-1})
  std::vector<FMember> members;

  std::size_t nonzero_count() const {
    std::size_t c = 0;
    for (const auto& f : members) c += f.nonzero ? 1 : 0;
    return c;
  }
};

/// epsilon = e^{2 pi i / p_h} inside Q(zeta_conductor).
inline CycloNum root_in(std::uint32_t conductor, int p, std::int64_t power) {
  return zeta(conductor, static_cast<std::int64_t>(conductor / static_cast<std::uint32_t>(p)) * power);
}

/// F_{(i,alpha)(h,xi)} = 1/(p_h n_{(h,xi)}) E^*_{(i,alpha)} (sum_{r below h} A_r
///   + sum_k eps^{k xi} A_{(h,k)}) E^*_{(i,alpha)}, eps = e^{2 pi i / p_h}.
inline FFamily build_f_family(const WreathContext& ctx) {
  const Moduli& m = ctx.moduli();
  FFamily f{m, ctx.base_point(), 1, {}};
  for (int h = 1; h < m.depth(); ++h) f.conductor = std::lcm(f.conductor, static_cast<std::uint32_t>(m.p(h)));

  std::vector<ExactMatrix> adjacency;
  for (const auto& a : ctx.adjacencies()) adjacency.push_back(a.cast<CycloNum>());

  for (int i = 2; i <= m.depth(); ++i)
    for (int alpha = 1; alpha < m.p(i); ++alpha) {
      const WreathIndex outer = m.index(i, alpha);
      const ExactMatrix e = ctx.E(outer).cast<CycloNum>();
      for (int h = 1; h < i; ++h)
        for (int xi = 1; xi < m.p(h); ++xi) {
          const WreathIndex inner = m.index(h, xi);
          const std::size_t n = ctx.order();
          ExactMatrix sum(n, n);
          for (std::size_t r = 0; r < m.classes_below(h); ++r) sum += adjacency[r];
          for (int kk = 1; kk < m.p(h); ++kk) {
            const CycloNum coeff = root_in(f.conductor, m.p(h), static_cast<std::int64_t>(kk) * xi);
            sum += adjacency[m.flat(m.index(h, kk))] * coeff;
          }
          ExactMatrix fm = e * sum * e;
          fm *= CycloNum(Rational(1, static_cast<unsigned long>(m.p(h)) * ctx.n(inner)));
          const bool nz = !fm.is_zero();
          f.members.push_back({outer, inner, std::move(fm), nz});
        }
    }
  return f;
}

/// The scalar c with A_{(j,beta)} F = F A_{(j,beta)} = c F.
inline CycloNum f_eigenvalue(const FFamily& f, const FMember& member, const WreathIndex& b) {
  const Moduli& m = f.moduli;
  const int i = member.outer.level;
  const int h = member.inner.level;
  const int j = b.level;
  if (j >= i || j > h) return CycloNum(0L);
  const Rational n_j1(m.valency(j));
  if (j < h) return CycloNum(n_j1);
  // j == h: eps^{-beta xi} n_{(j,1)}
  return root_in(f.conductor, m.p(h), -static_cast<std::int64_t>(b.offset) * member.inner.offset) * CycloNum(n_j1);
}

/// Idempotence, the eigenvalue table against every A, commutation with every E^*,
/// annihilation of every G, and mutual orthogonality.
inline CheckResult check_f_properties(const WreathContext& ctx, const FFamily& f, const GFamily& g) {
  CheckResult res("f-family");
  const Moduli& m = ctx.moduli();
  const std::size_t k = ctx.num_classes();
  const std::size_t n = ctx.order();
  const ExactMatrix zero(n, n);

  std::vector<ExactMatrix> adjacency, duals, gs;
  for (const auto& a : ctx.adjacencies()) adjacency.push_back(a.cast<CycloNum>());
  for (const auto& e : ctx.duals()) duals.push_back(e.cast<CycloNum>());
  for (const auto& gm : g.members) gs.push_back(gm.cast<CycloNum>());

  for (std::size_t t = 0; t < f.members.size(); ++t) {
    const FMember& member = f.members[t];
    const ExactMatrix& fm = member.matrix;
    const std::string name = "F_{" + member.outer.str() + member.inner.str() + "}";
    res.expect(member.nonzero, [&] { return name + " is zero"; });
    res.expect(fm * fm == fm, [&] { return name + " is not idempotent"; });

    for (std::size_t b = 0; b < k; ++b) {
      const ExactMatrix expected = fm * f_eigenvalue(f, member, m.unflat(b));
      res.expect(adjacency[b] * fm == expected, [&] { return "A_" + m.unflat(b).str() + " " + name + " != c " + name; });
      res.expect(fm * adjacency[b] == expected, [&] { return name + " A_" + m.unflat(b).str() + " != c " + name; });
    }
    for (std::size_t e = 0; e < k; ++e) {
      res.expect(duals[e] * fm == fm * duals[e],
                 [&] { return name + " does not commute with E*_" + m.unflat(e).str(); });
    }
    for (std::size_t q = 0; q < gs.size(); ++q) {
      res.expect(fm * gs[q] == zero && gs[q] * fm == zero, [&] {
        return name + " does not annihilate G_{" + m.unflat(q / k).str() + m.unflat(q % k).str() + "}";
      });
    }
    for (std::size_t u = 0; u < f.members.size(); ++u) {
      if (u == t) continue;
      res.expect(fm * f.members[u].matrix == zero, [&] {
        return name + " and F_{" + f.members[u].outer.str() + f.members[u].inner.str() + "} are not orthogonal";
      });
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Decomposition

struct DecompOptions {
  std::vector<std::size_t> base_points;  // empty: every vertex
  std::size_t max_order = 64;
};

struct DecompReport {
  Moduli moduli;
  std::size_t order = 0;
  std::size_t num_classes = 0;
  std::optional<std::size_t> dim_T;
  std::size_t dim_formula = 0;
  std::size_t matrix_block = 0;
  std::optional<std::size_t> one_dim_count;
  std::vector<CheckResult> verdicts;
  std::vector<std::size_t> base_points;

  bool passed() const {
    for (const auto& v : verdicts)
      if (!v.passed) return false;
    return dim_T.has_value() && *dim_T == dim_formula;
  }

  const CheckResult* verdict(const std::string& name) const {
    for (const auto& v : verdicts)
      if (v.name == name) return &v;
    return nullptr;
  }
};

inline std::vector<std::size_t> resolve_base_points(std::size_t order, const std::vector<std::size_t>& requested) {
  std::vector<std::size_t> points = requested;
  if (points.empty()) {
    points.resize(order);
    std::iota(points.begin(), points.end(), std::size_t{0});
  }
  for (std::size_t x : points)
    if (x >= order) throw std::out_of_range("base point " + std::to_string(x) + " out of range");
  return points;
}

/// Runs the full structural certificate at each base point and merges the verdicts:
/// dim T(x) by closure against the formula, the G family (rank, matrix units,
/// ideal, quotient commutativity), the F family (count, properties), and rank
/// accounting of U + F against T(x) together with sum G_aa + sum F = I.
inline DecompReport decomposition_report(const Moduli& m, const DecompOptions& opts = {}) {
  if (m.order() > opts.max_order) {
    throw std::invalid_argument("moduli " + m.str() + " give order " + std::to_string(m.order()) +
                                " above the limit " + std::to_string(opts.max_order));
  }
  DecompReport rep;
  rep.moduli = m;
  rep.order = m.order();
  rep.num_classes = m.num_classes();
  rep.dim_formula = dimension_formula(m);
  rep.matrix_block = matrix_block_size(m);
  rep.base_points = resolve_base_points(rep.order, opts.base_points);

  CheckResult dimension("dimension"), g_rank("g-rank"), units("matrix-units"), ideal("ideal"),
      quotient("quotient-commutative"), f_count("f-count"), f_props("f-family"), accounting("identity-accounting");
  const std::size_t k = m.num_classes();
  const std::size_t n = m.order();
  const std::size_t expected_f = one_dimensional_count(m);

  for (std::size_t x : rep.base_points) {
    const WreathContext ctx(m, x);
    const std::string at = " at x=" + std::to_string(x);
    const auto t_span = terwilliger_algebra(ctx);
    const std::size_t dim_t = t_span.dimension();
    if (!rep.dim_T) rep.dim_T = dim_t;
    dimension.expect(dim_t == rep.dim_formula && dim_t == *rep.dim_T, [&] {
      return "dim T = " + std::to_string(dim_t) + at + ", formula " + std::to_string(rep.dim_formula);
    });

    const GFamily g = build_g_family(ctx);
    const std::size_t g_dim = g_family_rank(g);
    g_rank.expect(g_dim == k * k, [&] { return "G family has rank " + std::to_string(g_dim) + at; });
    units.absorb(check_matrix_units(g));

    const auto u = g_span(g);
    const auto gens = ctx.generators();
    for (std::size_t q = 0; q < gens.size(); ++q) {
      for (std::size_t gi = 0; gi < g.members.size(); ++gi) {
        ideal.expect(u.contains(gens[q] * g.members[gi]) && u.contains(g.members[gi] * gens[q]), [&] {
          return "generator " + std::to_string(q) + " times G_" + std::to_string(gi) + " leaves U" + at;
        });
      }
      for (std::size_t r = q + 1; r < gens.size(); ++r) {
        quotient.expect(u.contains(commutator(gens[q], gens[r])), [&] {
          return "commutator of generators " + std::to_string(q) + "," + std::to_string(r) + " not in U" + at;
        });
      }
    }
    // G members lie in T(x).
    for (const auto& gm : g.members)
      ideal.expect(t_span.contains(gm), [&] { return "some G lies outside T(x)" + at; });

    const FFamily f = build_f_family(ctx);
    f_count.expect(f.nonzero_count() == expected_f, [&] {
      return std::to_string(f.nonzero_count()) + " nonzero F, expected " + std::to_string(expected_f) + at;
    });
    if (!rep.one_dim_count) rep.one_dim_count = f.nonzero_count();
    f_props.absorb(check_f_properties(ctx, f, g));

    // U + span(F) = T(x), at the level of ranks over Q(zeta).
    SpanBasis<CycloNum> uf(n, n);
    for (const auto& gm : g.members) uf.insert(gm.cast<CycloNum>());
    for (const auto& fm : f.members) uf.insert(fm.matrix);
    const std::size_t uf_dim = uf.dimension();
    accounting.expect(uf_dim == k * k + f.nonzero_count() && uf_dim == dim_t, [&] {
      return "rank(U + F) = " + std::to_string(uf_dim) + ", dim T = " + std::to_string(dim_t) + at;
    });
    for (const auto& t : t_span.basis()) uf.insert(t.cast<CycloNum>());
    accounting.expect(uf.dimension() == dim_t, [&] {
      return "rank(U + F + T) = " + std::to_string(uf.dimension()) + ", dim T = " + std::to_string(dim_t) + at;
    });
    ExactMatrix identity(n, n);
    for (std::size_t a = 0; a < k; ++a) identity += g.at(a, a).cast<CycloNum>();
    for (const auto& fm : f.members) identity += fm.matrix;
    accounting.expect(identity == ExactMatrix::identity(n),
                      [&] { return "sum of G_aa and all F is not the identity" + at; });
  }

  rep.verdicts = {dimension, g_rank, units, ideal, quotient, f_count, f_props, accounting};
  return rep;
}

}  // namespace twa
