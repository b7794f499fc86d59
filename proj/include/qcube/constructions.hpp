#pragma once

// Reference constructions used as ground truth in tests and from the CLI:
// q-ary Hamming codes, MDS sum codes, slabs, subcube bitrades, translates,
// coordinate permutations, and seeded random subsets.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qcube/cube.hpp"
#include "qcube/errors.hpp"
#include "qcube/spectral.hpp"

namespace qcube {

// 1-perfect Hamming code of length n = (q^m - 1)/(q - 1) over a prime q:
// the kernel of the m x n parity check matrix whose columns are the
// canonical projective representatives (first nonzero coordinate equal
// to 1), taken in increasing order of their little-endian index in Z_q^m.
// That column order makes the construction reproducible bit for bit.
inline VertexSet hamming_code(int q, int m, Index point_cap = CubeShape::kDefaultPointCap) {
  if (!detail::is_prime(q)) throw InputError("hamming_code: q must be prime");
  if (m < 2) throw InputError("hamming_code: m must be at least 2");
  Index qm = 1;
  for (int i = 0; i < m; ++i) {
    if (qm > point_cap / q) throw ResourceError("hamming_code: q^m exceeds the point cap");
    qm *= q;
  }
  const Index n64 = (qm - 1) / (q - 1);
  const CubeShape shape(q, static_cast<int>(n64), point_cap);

  std::vector<std::vector<int>> columns;
  columns.reserve(static_cast<std::size_t>(n64));
  std::vector<int> col(static_cast<std::size_t>(m));
  for (Index j = 1; j < qm; ++j) {
    Index rest = j;
    int first_nonzero = -1;
    for (int i = 0; i < m; ++i) {
      col[static_cast<std::size_t>(i)] = static_cast<int>(rest % q);
      if (first_nonzero < 0 && col[static_cast<std::size_t>(i)] != 0) first_nonzero = i;
      rest /= q;
    }
    if (col[static_cast<std::size_t>(first_nonzero)] == 1) columns.push_back(col);
  }
  if (static_cast<Index>(columns.size()) != n64)
    throw InternalError("hamming_code: projective representative count is not (q^m-1)/(q-1)");

  VertexSet code(shape);
  std::vector<int> syndrome(static_cast<std::size_t>(m));
  std::vector<int> x(static_cast<std::size_t>(shape.n));
  for (Index idx = 0; idx < shape.point_count; ++idx) {
    decode_into(idx, shape, x);
    std::fill(syndrome.begin(), syndrome.end(), 0);
    for (int i = 0; i < shape.n; ++i) {
      const int xi = x[static_cast<std::size_t>(i)];
      if (xi == 0) continue;
      const std::vector<int>& ci = columns[static_cast<std::size_t>(i)];
      for (int r = 0; r < m; ++r)
        syndrome[static_cast<std::size_t>(r)] =
            (syndrome[static_cast<std::size_t>(r)] + xi * ci[static_cast<std::size_t>(r)]) % q;
    }
    bool zero = true;
    for (int r = 0; r < m; ++r) zero = zero && syndrome[static_cast<std::size_t>(r)] == 0;
    if (zero) code.set(idx, true);
  }
  return code;
}

// {x : sum_i x_i = a mod q}; an MDS code with distance 2.
inline VertexSet mds_sum_code(int q, int n, int a, Index point_cap = CubeShape::kDefaultPointCap) {
  if (a < 0 || a >= q) throw InputError("mds_sum_code: residue a must lie in [0, q)");
  const CubeShape shape(q, n, point_cap);
  VertexSet s(shape);
  std::vector<int> x(static_cast<std::size_t>(n));
  for (Index idx = 0; idx < shape.point_count; ++idx) {
    decode_into(idx, shape, x);
    int sum = 0;
    for (int i = 0; i < n; ++i) sum = (sum + x[static_cast<std::size_t>(i)]) % q;
    if (sum == a) s.set(idx, true);
  }
  return s;
}

// {x : x_i = v}; the smallest nontrivial perfect coloring (b=1, c=q-1).
inline VertexSet slab(int q, int n, int i, int v, Index point_cap = CubeShape::kDefaultPointCap) {
  const CubeShape shape(q, n, point_cap);
  if (i < 0 || i >= n) throw InputError("slab: position out of range");
  if (v < 0 || v >= q) throw InputError("slab: value out of range");
  VertexSet s(shape);
  for (Index idx = 0; idx < shape.point_count; ++idx)
    if (shape.digit(idx, i) == v) s.set(idx, true);
  return s;
}

// {x + v mod q : x in S}; preserves every analysis metric.
inline VertexSet translate(const VertexSet& s, std::span<const int> v) {
  const CubeShape& shape = s.shape();
  if (static_cast<int>(v.size()) != shape.n) throw InputError("translate: vector has wrong length");
  for (int i = 0; i < shape.n; ++i)
    if (v[static_cast<std::size_t>(i)] < 0 || v[static_cast<std::size_t>(i)] >= shape.q)
      throw InputError("translate: vector coordinate out of range");
  VertexSet out(shape);
  s.for_each_member([&](Index x) {
    Index y = 0;
    for (int i = 0; i < shape.n; ++i) {
      const int d = (shape.digit(x, i) + v[static_cast<std::size_t>(i)]) % shape.q;
      y += static_cast<Index>(d) * shape.stride[static_cast<std::size_t>(i)];
    }
    out.set(y, true);
  });
  return out;
}

inline VertexSet translate(const VertexSet& s, Index v_index) {
  check_index(v_index, s.shape());
  const std::vector<int> v = decode(v_index, s.shape());
  return translate(s, v);
}

// Moves coordinate i to position perm[i].
inline VertexSet permute_coordinates(const VertexSet& s, std::span<const int> perm) {
  const CubeShape& shape = s.shape();
  if (static_cast<int>(perm.size()) != shape.n)
    throw InputError("permute_coordinates: permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(shape.n), false);
  for (int p : perm) {
    if (p < 0 || p >= shape.n || seen[static_cast<std::size_t>(p)])
      throw InputError("permute_coordinates: not a permutation of 0..n-1");
    seen[static_cast<std::size_t>(p)] = true;
  }
  VertexSet out(shape);
  s.for_each_member([&](Index x) {
    Index y = 0;
    for (int i = 0; i < shape.n; ++i)
      y += static_cast<Index>(shape.digit(x, i)) *
           shape.stride[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    out.set(y, true);
  });
  return out;
}

// {x : x_i in {0,1} for i <= t, x_i = 0 otherwise}: 2^(t+1) points forming
// a bitrade of order t (and of exactly t for q = 2).
inline VertexSet subcube_bitrade(int q, int n, int t, Index point_cap = CubeShape::kDefaultPointCap) {
  const CubeShape shape(q, n, point_cap);
  if (t < 0 || t > n - 1) throw InputError("subcube_bitrade: t must lie in [0, n-1]");
  VertexSet s(shape);
  for (Index mask = 0; mask < (Index{1} << (t + 1)); ++mask) {
    Index idx = 0;
    for (int i = 0; i <= t; ++i)
      if ((mask >> i) & 1) idx += shape.stride[static_cast<std::size_t>(i)];
    s.set(idx, true);
  }
  return s;
}

namespace detail {

// Unbiased draw from [0, bound) by rejection; together with the fully
// specified mt19937_64 this makes every seeded construction identical
// across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = (UINT64_MAX / bound) * bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace detail

// Uniformly random subset of the given cardinality, by one-pass selection
// sampling: index i is kept with probability (still needed)/(still left).
inline VertexSet random_subset(const CubeShape& shape, Index cardinality, std::uint64_t seed) {
  if (cardinality < 0 || cardinality > shape.point_count)
    throw InputError("random_subset: cardinality out of [0, q^n]");
  std::mt19937_64 rng(seed);
  VertexSet s(shape);
  Index needed = cardinality;
  for (Index i = 0; i < shape.point_count && needed > 0; ++i) {
    const std::uint64_t left = static_cast<std::uint64_t>(shape.point_count - i);
    if (detail::uniform_below(rng, left) < static_cast<std::uint64_t>(needed)) {
      s.set(i, true);
      --needed;
    }
  }
  return s;
}

}  // namespace qcube
