#pragma once

// The q-ary n-cube Z_q^n: shapes, point indexing, neighbors, faces and
// dense vertex sets. Everything else in the library iterates over these.
//
// Indexing convention (shared by all modules and the .qset file format):
// the point (x_0, ..., x_{n-1}) has index sum_i x_i * q^i, i.e. little-endian
// base q, so coordinate i is digit i of the index.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcube/errors.hpp"

namespace qcube {

using Index = std::int64_t;

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct CubeShape {
  int q = 2;
  int n = 1;
  Index point_count = 2;            // q^n
  std::vector<Index> stride;        // stride[i] = q^i, size n+1

  // Dense arrays of q^n entries are allocated all over the library, so a
  // shape refuses to exist beyond this many points unless told otherwise.
  static constexpr Index kDefaultPointCap = Index{1} << 26;

  CubeShape() : stride{1, 2} {}

  CubeShape(int q_, int n_, Index point_cap = kDefaultPointCap) : q(q_), n(n_) {
    if (q < 2) throw InputError("cube shape: alphabet size q must be at least 2");
    if (n < 1) throw InputError("cube shape: dimension n must be at least 1");
    stride.resize(static_cast<std::size_t>(n) + 1);
    stride[0] = 1;
    for (int i = 0; i < n; ++i) {
      if (stride[i] > point_cap / q)
        throw ResourceError("cube shape: q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                            " exceeds the point cap " + std::to_string(point_cap));
      stride[static_cast<std::size_t>(i) + 1] = stride[i] * q;
    }
    point_count = stride[static_cast<std::size_t>(n)];
  }

  int digit(Index x, int i) const { return static_cast<int>((x / stride[static_cast<std::size_t>(i)]) % q); }

  // Index of the point equal to x except that coordinate i is v.
  Index with_digit(Index x, int i, int v) const {
    return x + (static_cast<Index>(v) - digit(x, i)) * stride[static_cast<std::size_t>(i)];
  }

  Index degree() const { return static_cast<Index>(n) * (q - 1); }

  bool operator==(const CubeShape& o) const { return q == o.q && n == o.n; }
  bool operator!=(const CubeShape& o) const { return !(*this == o); }
};

inline Index encode(std::span<const int> coords, const CubeShape& shape) {
  if (static_cast<int>(coords.size()) != shape.n)
    throw InputError("encode: expected " + std::to_string(shape.n) + " coordinates, got " +
                     std::to_string(coords.size()));
  Index x = 0;
  for (int i = 0; i < shape.n; ++i) {
    if (coords[static_cast<std::size_t>(i)] < 0 || coords[static_cast<std::size_t>(i)] >= shape.q)
      throw InputError("encode: coordinate " + std::to_string(i) + " = " +
                       std::to_string(coords[static_cast<std::size_t>(i)]) + " is outside [0, " +
                       std::to_string(shape.q) + ")");
    x += static_cast<Index>(coords[static_cast<std::size_t>(i)]) * shape.stride[static_cast<std::size_t>(i)];
  }
  return x;
}

inline void decode_into(Index x, const CubeShape& shape, std::span<int> out) {
  for (int i = 0; i < shape.n; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(x % shape.q);
    x /= shape.q;
  }
}

inline std::vector<int> decode(Index x, const CubeShape& shape) {
  std::vector<int> coords(static_cast<std::size_t>(shape.n));
  decode_into(x, shape, coords);
  return coords;
}

inline void check_index(Index x, const CubeShape& shape) {
  if (x < 0 || x >= shape.point_count)
    throw InputError("point index " + std::to_string(x) + " is outside [0, " +
                     std::to_string(shape.point_count) + ")");
}

// Visits the n(q-1) points at Hamming distance 1 from x.
template <typename Fn>
inline void for_each_neighbor(const CubeShape& shape, Index x, Fn&& fn) {
  for (int i = 0; i < shape.n; ++i) {
    const Index s = shape.stride[static_cast<std::size_t>(i)];
    const Index base = x - static_cast<Index>(shape.digit(x, i)) * s;
    for (int v = 0; v < shape.q; ++v) {
      const Index y = base + static_cast<Index>(v) * s;
      if (y != x) fn(y);
    }
  }
}

inline std::vector<Index> neighbors(Index x, const CubeShape& shape) {
  check_index(x, shape);
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(shape.degree()));
  for_each_neighbor(shape, x, [&](Index y) { out.push_back(y); });
  return out;
}

// Number of nonzero coordinates of the point with index x.
inline int weight(Index x, const CubeShape& shape) {
  int w = 0;
  while (x != 0) {
    if (x % shape.q != 0) ++w;
    x /= shape.q;
  }
  return w;
}

// Dense subset of Z_q^n; the object every analysis runs on.
class VertexSet {
 public:
  explicit VertexSet(const CubeShape& shape)
      : shape_(shape), in_(static_cast<std::size_t>(shape.point_count), 0) {}

  static VertexSet full(const CubeShape& shape) {
    VertexSet s(shape);
    std::fill(s.in_.begin(), s.in_.end(), std::uint8_t{1});
    s.card_ = shape.point_count;
    return s;
  }

  static VertexSet of(const CubeShape& shape, std::span<const Index> members) {
    VertexSet s(shape);
    for (Index x : members) s.set(x, true);
    return s;
  }

  const CubeShape& shape() const { return shape_; }
  Index cardinality() const { return card_; }
  bool empty() const { return card_ == 0; }
  bool is_full() const { return card_ == shape_.point_count; }

  bool contains(Index x) const { return in_[static_cast<std::size_t>(x)] != 0; }

  void set(Index x, bool member = true) {
    check_index(x, shape_);
    std::uint8_t v = member ? 1 : 0;
    card_ += static_cast<Index>(v) - in_[static_cast<std::size_t>(x)];
    in_[static_cast<std::size_t>(x)] = v;
  }

  template <typename Fn>
  void for_each_member(Fn&& fn) const {
    for (Index x = 0; x < shape_.point_count; ++x)
      if (in_[static_cast<std::size_t>(x)]) fn(x);
  }

  std::vector<Index> members() const {
    std::vector<Index> out;
    out.reserve(static_cast<std::size_t>(card_));
    for_each_member([&](Index x) { out.push_back(x); });
    return out;
  }

  bool operator==(const VertexSet& o) const { return shape_ == o.shape_ && in_ == o.in_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

 private:
  CubeShape shape_;
  std::vector<std::uint8_t> in_;
  Index card_ = 0;
};

inline void check_same_shape(const VertexSet& a, const VertexSet& b, const char* what) {
  if (a.shape() != b.shape()) throw InputError(std::string(what) + ": cube shapes differ");
}

inline VertexSet complement(const VertexSet& s) {
  VertexSet out = VertexSet::full(s.shape());
  s.for_each_member([&](Index x) { out.set(x, false); });
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  check_same_shape(a, b, "set_difference");
  VertexSet out(a.shape());
  a.for_each_member([&](Index x) {
    if (!b.contains(x)) out.set(x, true);
  });
  return out;
}

inline VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
  check_same_shape(a, b, "symmetric_difference");
  VertexSet out(a.shape());
  a.for_each_member([&](Index x) {
    if (!b.contains(x)) out.set(x, true);
  });
  b.for_each_member([&](Index x) {
    if (!a.contains(x)) out.set(x, true);
  });
  return out;
}

// A face of the cube: the set of points agreeing with fixed_values on
// fixed_positions. Its dimension is n - |fixed_positions|.
struct Face {
  CubeShape shape;
  std::vector<int> fixed_positions;  // strictly increasing
  std::vector<int> fixed_values;

  int dimension() const { return shape.n - static_cast<int>(fixed_positions.size()); }

  Index point_count() const { return shape.stride[static_cast<std::size_t>(dimension())]; }

  bool contains(Index x) const {
    for (std::size_t k = 0; k < fixed_positions.size(); ++k)
      if (shape.digit(x, fixed_positions[k]) != fixed_values[k]) return false;
    return true;
  }
};

inline std::string to_string(const Face& f) {
  std::string out = "{";
  for (std::size_t k = 0; k < f.fixed_positions.size(); ++k) {
    if (k) out += ", ";
    out += "x" + std::to_string(f.fixed_positions[k]) + "=" + std::to_string(f.fixed_values[k]);
  }
  out += "}";
  return out;
}

// Visits every t-element subset of {0,...,n-1} in lexicographic order.
// fn receives the positions and returns true to continue, false to stop.
template <typename Fn>
inline void for_each_position_subset(int n, int t, Fn&& fn) {
  if (t < 0 || t > n) throw InputError("position subset size out of range");
  std::vector<int> pos(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) pos[static_cast<std::size_t>(i)] = i;
  const std::vector<int>& cpos = pos;
  while (true) {
    if (!fn(cpos)) return;
    // advance to the next combination
    int i = t - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - t + i) --i;
    if (i < 0) return;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Streams the C(n,m) * q^m faces with m fixed positions.
template <typename Fn>
inline void for_each_face(const CubeShape& shape, int fixed_count, Fn&& fn) {
  if (fixed_count < 0 || fixed_count > shape.n)
    throw InputError("face enumeration: fixed position count out of [0, n]");
  const Index assignments = shape.stride[static_cast<std::size_t>(fixed_count)];  // q^m
  for_each_position_subset(shape.n, fixed_count, [&](const std::vector<int>& positions) {
    for (Index a = 0; a < assignments; ++a) {
      Face f;
      f.shape = shape;
      f.fixed_positions = positions;
      f.fixed_values.resize(positions.size());
      Index rest = a;
      for (std::size_t k = 0; k < positions.size(); ++k) {
        f.fixed_values[k] = static_cast<int>(rest % shape.q);
        rest /= shape.q;
      }
      fn(f);
    }
    return true;
  });
}

inline std::vector<Face> enumerate_faces(const CubeShape& shape, int fixed_count) {
  std::vector<Face> out;
  for_each_face(shape, fixed_count, [&](const Face& f) { out.push_back(f); });
  return out;
}

// Bucket counts of S by the values it takes on the given positions:
// result[p] = |{x in S : x agrees with pattern p}| where pattern p has
// digit k (base q) equal to the value at positions[k]. This is the face
// sweep primitive behind correlation immunity, bitrades, OA and MDS checks.
inline std::vector<Index> pattern_counts(const VertexSet& s, std::span<const int> positions) {
  const CubeShape& shape = s.shape();
  Index buckets = 1;
  for (std::size_t k = 0; k < positions.size(); ++k) buckets *= shape.q;
  std::vector<Index> counts(static_cast<std::size_t>(buckets), 0);
  s.for_each_member([&](Index x) {
    Index p = 0;
    Index mul = 1;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      p += static_cast<Index>(shape.digit(x, positions[k])) * mul;
      mul *= shape.q;
    }
    ++counts[static_cast<std::size_t>(p)];
  });
  return counts;
}

}  // namespace qcube
