#pragma once

// Bitrades, mobile sets and components, orthogonal array strength, and
// MDS-distance-2 verification.
//
// Order convention: S is a bitrade of order t iff every face obtained by
// FIXING t coordinates (dimension n-t) meets S in an even number of points.
// With this reading the mobile set of two correlation-immune functions of
// order t is a bitrade of order t, and evenness at t implies evenness at
// t-1 (a coarser face is a disjoint union of q finer ones). Evenness is a
// mod-2 condition on integer counts for every q.

#include <algorithm>
#include <cstdint>
#include <optional>

#include "qcube/analysis.hpp"
#include "qcube/cube.hpp"
#include "qcube/rational.hpp"
#include "qcube/spectral.hpp"

namespace qcube {

struct BitradeCheck {
  bool even = false;
  std::optional<Face> odd_face;  // a witness face with odd intersection, on failure
};

inline BitradeCheck check_bitrade(const VertexSet& s, int t) {
  const CubeShape& shape = s.shape();
  if (t < 0 || t > shape.n - 1) throw InputError("bitrade: order must lie in [0, n-1]");
  BitradeCheck result;
  result.even = true;
  for_each_position_subset(shape.n, t, [&](const std::vector<int>& positions) {
    const std::vector<Index> counts = pattern_counts(s, positions);
    for (std::size_t p = 0; p < counts.size(); ++p) {
      if (counts[p] % 2 != 0) {
        Face f;
        f.shape = shape;
        f.fixed_positions = positions;
        f.fixed_values.resize(positions.size());
        std::size_t rest = p;
        for (std::size_t k = 0; k < positions.size(); ++k) {
          f.fixed_values[k] = static_cast<int>(rest % static_cast<std::size_t>(shape.q));
          rest /= static_cast<std::size_t>(shape.q);
        }
        result.even = false;
        result.odd_face = std::move(f);
        return false;
      }
    }
    return true;
  });
  return result;
}

inline bool is_bitrade(const VertexSet& s, int t) { return check_bitrade(s, t).even; }

struct BitradeVerdict {
  std::optional<int> order;        // max t with the bitrade property, none if |S| is odd
  std::optional<Face> witness_face;  // odd face at the first failing order
};

inline BitradeVerdict bitrade_order_verdict(const VertexSet& s) {
  BitradeVerdict v;
  for (int t = 0; t <= s.shape().n - 1; ++t) {
    BitradeCheck c = check_bitrade(s, t);
    if (!c.even) {
      if (t > 0) v.order = t - 1;
      v.witness_face = std::move(c.odd_face);
      return v;
    }
  }
  v.order = s.shape().n - 1;
  return v;
}

inline std::optional<int> bitrade_order(const VertexSet& s) { return bitrade_order_verdict(s).order; }

struct MobileResult {
  VertexSet mobile;    // s1 symmetric-difference s2
  VertexSet comp_1_2;  // s1 minus s2
  VertexSet comp_2_1;  // s2 minus s1
  int common_cor = 0;  // min(cor(s1), cor(s2)), the certified immunity both sides share
  std::optional<int> certified_order;  // bitrade order of the mobile set, none when empty
};

inline MobileResult mobile_and_components(const VertexSet& s1, const VertexSet& s2,
                                          const SpectralOptions& opts = {}) {
  check_same_shape(s1, s2, "mobile_and_components");
  if (s1.cardinality() != s2.cardinality())
    throw InputError("mobile_and_components: the two sets must have equal cardinality");
  MobileResult r{symmetric_difference(s1, s2), set_difference(s1, s2), set_difference(s2, s1), 0,
                 std::nullopt};
  r.common_cor = std::min(cor_spectral(s1, opts), cor_spectral(s2, opts));
  if (!r.mobile.empty()) {
    r.certified_order = bitrade_order(r.mobile);
    if (!r.certified_order || *r.certified_order < r.common_cor)
      throw InternalError("mobile_and_components: mobile set is not a bitrade of the common order");
  }
  return r;
}

// 2^((b+c)/q - 1), the component cardinality lower bound attached to a
// parameter matrix.
inline std::int64_t component_lower_bound(const ParameterMatrix& m) {
  if ((m.b + m.c) % m.shape.q != 0)
    throw InputError("component_lower_bound: b + c is not divisible by q");
  const std::int64_t s = (m.b + m.c) / m.shape.q;
  if (s < 1) throw InputError("component_lower_bound: (b+c)/q must be at least 1");
  if (s > 62) throw ResourceError("component_lower_bound: 2^(s-1) overflows");
  return std::int64_t{1} << (s - 1);
}

struct OAResult {
  int strength = 0;       // cor of the characteristic function
  Rational index_lambda;  // |S| / q^strength, the standard OA index
  Rational paper_lambda;  // the alternate |S| / q^(n - strength) convention, reported alongside
};

// Computes the strength spectrally and verifies it combinatorially: every
// pattern on every strength-sized coordinate subset must occur exactly
// |S| / q^strength times.
inline OAResult oa_check(const VertexSet& s, const SpectralOptions& opts = {}) {
  if (s.empty()) throw InputError("oa_check: undefined for the empty set");
  const CubeShape& shape = s.shape();
  const int t = cor_spectral(s, opts);
  const Index qt = shape.stride[static_cast<std::size_t>(t)];
  if (s.cardinality() % qt != 0)
    throw InternalError("oa_check: |S| is not divisible by q^strength");
  const Index lam = s.cardinality() / qt;
  for_each_position_subset(shape.n, t, [&](const std::vector<int>& positions) {
    for (Index c : pattern_counts(s, positions))
      if (c != lam) throw InternalError("oa_check: a pattern count disagrees with the spectral strength");
    return true;
  });
  OAResult r;
  r.strength = t;
  r.index_lambda = Rational(lam);
  r.paper_lambda = Rational(s.cardinality(), shape.stride[static_cast<std::size_t>(shape.n - t)]);
  return r;
}

// True iff every line (face fixing n-1 coordinates) meets S exactly once.
inline bool is_mds_distance2(const VertexSet& s) {
  const CubeShape& shape = s.shape();
  if (s.cardinality() * shape.q != shape.point_count) return false;
  bool ok = true;
  std::vector<int> positions(static_cast<std::size_t>(shape.n) - 1);
  for (int free = 0; free < shape.n && ok; ++free) {
    int k = 0;
    for (int i = 0; i < shape.n; ++i)
      if (i != free) positions[static_cast<std::size_t>(k++)] = i;
    for (Index c : pattern_counts(s, positions)) {
      if (c != 1) {
        ok = false;
        break;
      }
    }
  }
  return ok;
}

}  // namespace qcube
