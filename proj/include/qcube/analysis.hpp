#pragma once

// Scalar metrics (rho, nei, alpha), the two perfect 2-coloring checks
// (direct neighbor sweep and spectral support), the exact inequality
// rho(S) * q * (cor+1) <= alpha(S) with its equality dichotomy, the
// Bierbrauer-Friedman bound, and admissible parameter enumeration.
//
// Color convention: S is the set of 1-colored points. The parameter matrix
//   ( n(q-1)-b    b    )
//   (    c     n(q-1)-c )
// has rows ordered (color 0, color 1): b is the number of 1-colored
// neighbors of a 0-vertex, c the number of 0-colored neighbors of a
// 1-vertex. Constant colorings (either class empty) are rejected as trivial.

#include <cstdint>
#include <optional>
#include <vector>

#include "qcube/cube.hpp"
#include "qcube/rational.hpp"
#include "qcube/spectral.hpp"

namespace qcube {

struct ParameterMatrix {
  CubeShape shape;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t s() const { return (b + c) / shape.q; }

  // Full 2x2 matrix, rows (color 0, color 1).
  std::int64_t a00() const { return shape.degree() - b; }
  std::int64_t a01() const { return b; }
  std::int64_t a10() const { return c; }
  std::int64_t a11() const { return shape.degree() - c; }

  bool operator==(const ParameterMatrix& o) const {
    return shape == o.shape && b == o.b && c == o.c;
  }
};

inline Rational density(const VertexSet& s) {
  return Rational(s.cardinality(), s.shape().point_count);
}

// Sum over x in S of |N(x) ∩ S|; equals 2 * (edges inside S).
inline std::int64_t internal_adjacency_sum(const VertexSet& s) {
  std::int64_t sum = 0;
  s.for_each_member([&](Index x) {
    for_each_neighbor(s.shape(), x, [&](Index y) { sum += s.contains(y) ? 1 : 0; });
  });
  return sum;
}

// Sum over x outside S of |N(x) ∩ S|, i.e. the boundary edge count.
inline std::int64_t boundary_adjacency_sum(const VertexSet& s) {
  return s.cardinality() * s.shape().degree() - internal_adjacency_sum(s);
}

inline Rational nei(const VertexSet& s) {
  if (s.empty()) throw InputError("nei: undefined for the empty set");
  return Rational(internal_adjacency_sum(s), s.cardinality());
}

inline Rational alpha(const VertexSet& s) {
  if (s.is_full()) throw InputError("alpha: undefined when the complement is empty");
  return Rational(boundary_adjacency_sum(s), s.shape().point_count - s.cardinality());
}

inline void check_proper(const VertexSet& s, const char* what) {
  if (s.empty() || s.is_full())
    throw InputError(std::string(what) + ": trivial coloring (a color class is empty)");
}

// Single sweep: S is the 1-class of a perfect 2-coloring iff every outside
// vertex sees the same number b of points of S and every inside vertex the
// same number n(q-1)-c.
inline std::optional<ParameterMatrix> check_perfect_direct(const VertexSet& s) {
  check_proper(s, "check_perfect_direct");
  const CubeShape& shape = s.shape();
  std::int64_t inside = -1, outside = -1;
  for (Index x = 0; x < shape.point_count; ++x) {
    std::int64_t cnt = 0;
    for_each_neighbor(shape, x, [&](Index y) { cnt += s.contains(y) ? 1 : 0; });
    std::int64_t& slot = s.contains(x) ? inside : outside;
    if (slot == -1) {
      slot = cnt;
    } else if (slot != cnt) {
      return std::nullopt;
    }
  }
  ParameterMatrix m{shape, outside, shape.degree() - inside};
  return m;
}

// Spectral route: S is perfect iff the nonzero character sums sit at
// weights {0, s} for a single s >= 1; then b = s*q*rho, c = s*q*(1-rho)
// (from b + c = s*q and the boundary double count (q^n-|S|)*b = |S|*c).
inline std::optional<ParameterMatrix> check_perfect_spectral(
    const VertexSet& s, Index entry_cap = kDefaultSpectrumEntryCap) {
  check_proper(s, "check_perfect_spectral");
  const CubeShape& shape = s.shape();
  const SpectrumTable table = full_spectrum(s, entry_cap);
  CharsumTester tester(shape.q);
  int support_weight = 0;
  for (Index z = 1; z < shape.point_count; ++z) {
    if (tester.is_zero(table.counts_at(z))) continue;
    const int w = weight(z, shape);
    if (support_weight == 0)
      support_weight = w;
    else if (support_weight != w)
      return std::nullopt;
  }
  if (support_weight == 0)
    throw InternalError("check_perfect_spectral: proper set with empty nonzero-weight support");
  const std::int64_t sq = static_cast<std::int64_t>(support_weight) * shape.q;
  const std::int64_t b_num = sq * s.cardinality();
  const std::int64_t c_num = sq * (shape.point_count - s.cardinality());
  if (b_num % shape.point_count != 0 || c_num % shape.point_count != 0)
    throw InternalError("check_perfect_spectral: non-integral parameters from a single-weight support");
  return ParameterMatrix{shape, b_num / shape.point_count, c_num / shape.point_count};
}

struct BfBound {
  Rational lhs;  // 1 - n(q-1) / (q * (cor+1))
  Rational rhs;  // rho(S)
  bool holds = false;
  bool equality = false;
};

inline BfBound bf_bound(const VertexSet& s, const SpectralOptions& opts = {}) {
  if (s.empty()) throw InputError("bf_bound: undefined for the empty set");
  const CubeShape& shape = s.shape();
  const int cor = cor_spectral(s, opts);
  BfBound r;
  r.lhs = Rational(1) - Rational(shape.degree(), static_cast<std::int64_t>(shape.q) * (cor + 1));
  r.rhs = density(s);
  r.holds = r.rhs >= r.lhs;
  r.equality = r.rhs == r.lhs;
  if (!r.holds) throw InternalError("bf_bound: the Bierbrauer-Friedman inequality failed");
  return r;
}

// Adjacency eigenvalue attached to characters of weight w.
inline std::int64_t eigenvalue(const CubeShape& shape, int w) {
  if (w < 0 || w > shape.n) throw InputError("eigenvalue: weight out of [0, n]");
  return static_cast<std::int64_t>(shape.n - w) * (shape.q - 1) - w;
}

// Necessary conditions only: 1 <= b,c <= n(q-1), q | (b+c), 1 <= (b+c)/q <= n,
// and the implied cardinality q^n * b / (b+c) integral. Realizability is the
// search module's job.
inline std::vector<ParameterMatrix> admissible_matrices(const CubeShape& shape) {
  std::vector<ParameterMatrix> out;
  const std::int64_t deg = shape.degree();
  for (std::int64_t b = 1; b <= deg; ++b) {
    for (std::int64_t c = 1; c <= deg; ++c) {
      if ((b + c) % shape.q != 0) continue;
      const std::int64_t s = (b + c) / shape.q;
      if (s < 1 || s > shape.n) continue;
      if ((shape.point_count * b) % (b + c) != 0) continue;
      out.push_back(ParameterMatrix{shape, b, c});
    }
  }
  return out;
}

struct AnalysisReport {
  CubeShape shape;
  Index cardinality = 0;
  Rational rho;
  Rational nei;
  Rational alpha;
  int cor = 0;
  Rational theorem_lhs;  // rho * q * (cor + 1)
  Rational theorem_rhs;  // alpha
  bool is_perfect = false;
  std::optional<ParameterMatrix> matrix;
  Rational bf_lhs;
  Rational bf_rhs;
  bool bf_equality = false;
};

// Exact evaluation of rho*q*(cor+1) <= alpha together with the equality
// dichotomy; the verdict is cross-validated against the direct sweep and
// any disagreement is an internal invariant failure.
inline AnalysisReport theorem_eval(const VertexSet& s, const SpectralOptions& opts = {}) {
  check_proper(s, "theorem_eval");
  const CubeShape& shape = s.shape();
  AnalysisReport r;
  r.shape = shape;
  r.cardinality = s.cardinality();
  r.rho = density(s);
  r.nei = nei(s);
  r.alpha = alpha(s);
  r.cor = cor_spectral(s, opts);
  r.theorem_lhs = r.rho * Rational(shape.q) * Rational(r.cor + 1);
  r.theorem_rhs = r.alpha;
  if (r.theorem_lhs > r.theorem_rhs)
    throw InternalError("theorem_eval: rho*q*(cor+1) <= alpha failed");
  r.is_perfect = r.theorem_lhs == r.theorem_rhs;
  r.matrix = check_perfect_direct(s);
  if (r.is_perfect != r.matrix.has_value())
    throw InternalError("theorem_eval: equality dichotomy disagrees with the direct check");
  r.bf_lhs = Rational(1) - Rational(shape.degree(), static_cast<std::int64_t>(shape.q) * (r.cor + 1));
  r.bf_rhs = r.rho;
  if (r.bf_rhs < r.bf_lhs) throw InternalError("theorem_eval: the Bierbrauer-Friedman inequality failed");
  r.bf_equality = r.bf_rhs == r.bf_lhs;
  return r;
}

}  // namespace qcube
