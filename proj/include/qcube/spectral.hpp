#pragma once

// Exact character analysis on Z_q^n.
//
// For a set S and a point z, the unnormalized character sum is
// sum_{x in S} xi^{<x,z>} with xi = e^{2*pi*i/q}. We never store that sum
// as a complex float for decisions: the CountVector (how many x in S have
// <x,z> = j mod q, for each residue j) represents it exactly, and the sum
// vanishes iff the q-th cyclotomic polynomial divides sum_j counts[j] x^j
// over the integers. For prime q this is just "all counts equal".
//
// Conjugation convention: the scalar product (f, phi_z) conjugates phi_z,
// i.e. uses xi^{-<x,z>}. Zero tests and magnitudes are conjugation
// invariant, so CountVector stores the +<x,z> residues. The 1/q^n scalar
// product normalization is applied only when reporting energies.

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <vector>

#include "qcube/cube.hpp"
#include "qcube/errors.hpp"

namespace qcube {

struct CountVector {
  int q = 2;
  std::vector<std::int64_t> counts;  // size q; counts[j] = |{x in S : <x,z> = j mod q}|

  std::int64_t total() const {
    std::int64_t t = 0;
    for (std::int64_t c : counts) t += c;
    return t;
  }
};

namespace detail {

inline bool is_prime(int m) {
  if (m < 2) return false;
  for (int d = 2; static_cast<std::int64_t>(d) * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// Quotient-free remainder check is not enough here: callers want the full
// polynomial. Coefficients are int64; fine for the alphabet sizes in scope.
using Poly = std::vector<std::int64_t>;  // coefficient i of x^i

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division p / d for monic d; throws if the division leaves a remainder.
inline Poly poly_divide_monic_exact(Poly p, const Poly& d) {
  Poly quot(p.size() >= d.size() ? p.size() - d.size() + 1 : 0, 0);
  while (p.size() >= d.size()) {
    const std::int64_t lead = p.back();
    const std::size_t shift = p.size() - d.size();
    quot[shift] = lead;
    for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= lead * d[i];
    poly_trim(p);
    if (!p.empty() && p.size() < d.size()) break;
  }
  if (!p.empty()) throw InternalError("cyclotomic polynomial division left a remainder");
  return quot;
}

// Remainder of p modulo monic d (integer coefficients).
inline Poly poly_mod_monic(Poly p, const Poly& d) {
  poly_trim(p);
  while (p.size() >= d.size()) {
    const std::int64_t lead = p.back();
    const std::size_t shift = p.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= lead * d[i];
    poly_trim(p);
  }
  return p;
}

// Phi_m(x), computed as (x^m - 1) / prod_{d | m, d < m} Phi_d(x).
inline const Poly& cyclotomic_polynomial(int m) {
  thread_local std::map<int, Poly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  Poly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;  // x^m - 1
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = poly_divide_monic_exact(std::move(p), cyclotomic_polynomial(d));
  return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace detail

// Decides charsum questions for one alphabet size; build once, query many.
class CharsumTester {
 public:
  explicit CharsumTester(int q) : q_(q), prime_(detail::is_prime(q)) {
    if (q < 2) throw InputError("charsum tester: q must be at least 2");
    if (!prime_) cyclo_ = detail::cyclotomic_polynomial(q);
    cos_.resize(static_cast<std::size_t>(q));
    sin_.resize(static_cast<std::size_t>(q));
    const long double tau = 2.0L * std::numbers::pi_v<long double>;
    for (int j = 0; j < q; ++j) {
      cos_[static_cast<std::size_t>(j)] = std::cos(tau * j / q);
      sin_[static_cast<std::size_t>(j)] = std::sin(tau * j / q);
    }
  }

  int q() const { return q_; }

  // Exact test of sum_j counts[j] * xi^j == 0.
  bool is_zero(std::span<const std::int64_t> counts) const {
    if (prime_) {
      for (std::size_t j = 1; j < counts.size(); ++j)
        if (counts[j] != counts[0]) return false;
      return true;
    }
    detail::Poly p(counts.begin(), counts.end());
    return detail::poly_mod_monic(std::move(p), cyclo_).empty();
  }

  // |sum_j counts[j] * xi^j|^2, unnormalized.
  long double magnitude_sq(std::span<const std::int64_t> counts) const {
    long double re = 0, im = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      re += static_cast<long double>(counts[j]) * cos_[j];
      im += static_cast<long double>(counts[j]) * sin_[j];
    }
    return re * re + im * im;
  }

 private:
  int q_;
  bool prime_;
  detail::Poly cyclo_;
  std::vector<long double> cos_, sin_;
};

inline bool charsum_is_zero(const CountVector& c) {
  if (static_cast<int>(c.counts.size()) != c.q) throw InputError("count vector: counts size != q");
  return CharsumTester(c.q).is_zero(c.counts);
}

// Direct per-z evaluation: counts[j] = |{x in S : <x,z> = j mod q}|.
inline CountVector count_vector(const VertexSet& s, std::span<const int> z_coords) {
  const CubeShape& shape = s.shape();
  if (static_cast<int>(z_coords.size()) != shape.n)
    throw InputError("count_vector: z has wrong length");
  std::vector<std::pair<int, int>> support;  // (position, z value)
  for (int i = 0; i < shape.n; ++i) {
    const int v = z_coords[static_cast<std::size_t>(i)];
    if (v < 0 || v >= shape.q) throw InputError("count_vector: z coordinate out of range");
    if (v != 0) support.emplace_back(i, v);
  }
  CountVector out;
  out.q = shape.q;
  out.counts.assign(static_cast<std::size_t>(shape.q), 0);
  s.for_each_member([&](Index x) {
    std::int64_t ip = 0;
    for (const auto& [i, v] : support) ip += static_cast<std::int64_t>(v) * shape.digit(x, i);
    ++out.counts[static_cast<std::size_t>(ip % shape.q)];
  });
  return out;
}

inline CountVector count_vector(const VertexSet& s, Index z) {
  check_index(z, s.shape());
  return count_vector(s, decode(z, s.shape()));
}

// All q^n count vectors at once, flat in z-index order.
class SpectrumTable {
 public:
  SpectrumTable(CubeShape shape, std::vector<std::int64_t> flat)
      : shape_(std::move(shape)), flat_(std::move(flat)) {}

  const CubeShape& shape() const { return shape_; }

  std::span<const std::int64_t> counts_at(Index z) const {
    return {flat_.data() + static_cast<std::size_t>(z) * static_cast<std::size_t>(shape_.q),
            static_cast<std::size_t>(shape_.q)};
  }

  CountVector count_vector_at(Index z) const {
    auto c = counts_at(z);
    return CountVector{shape_.q, {c.begin(), c.end()}};
  }

 private:
  CubeShape shape_;
  std::vector<std::int64_t> flat_;
};

// The full table costs q^n * q entries; refuse beyond this by default.
inline constexpr Index kDefaultSpectrumEntryCap = Index{1} << 24;

// Radix-q counting transform. One coordinate axis at a time, the q count
// vectors along each line are combined by new[d][j] = sum_a old[a][(j - a*d) mod q],
// which turns the point axis into a z axis. Total work is O(n * q^2 * q^n)
// small integer additions; all arithmetic stays integral.
inline SpectrumTable full_spectrum(const VertexSet& s, Index entry_cap = kDefaultSpectrumEntryCap) {
  const CubeShape& shape = s.shape();
  const Index v = shape.point_count;
  const int q = shape.q;
  if (v > entry_cap / q)
    throw ResourceError("full_spectrum: q^n * q = " + std::to_string(v) + " * " + std::to_string(q) +
                        " entries exceed the cap " + std::to_string(entry_cap));
  std::vector<std::int64_t> flat(static_cast<std::size_t>(v) * static_cast<std::size_t>(q), 0);
  s.for_each_member([&](Index x) { flat[static_cast<std::size_t>(x) * static_cast<std::size_t>(q)] = 1; });

  std::vector<std::int64_t> line(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (int axis = 0; axis < shape.n; ++axis) {
    const Index stride = shape.stride[static_cast<std::size_t>(axis)];
    const Index block = stride * q;
    for (Index hi = 0; hi < v; hi += block) {
      for (Index lo = 0; lo < stride; ++lo) {
        const Index base = hi + lo;
        std::fill(line.begin(), line.end(), 0);
        for (int a = 0; a < q; ++a) {
          const std::int64_t* src =
              flat.data() + static_cast<std::size_t>(base + a * stride) * static_cast<std::size_t>(q);
          for (int d = 0; d < q; ++d) {
            std::int64_t* dst = line.data() + static_cast<std::size_t>(d) * static_cast<std::size_t>(q);
            const int shift = static_cast<int>((static_cast<std::int64_t>(a) * d) % q);
            for (int j = 0; j < q - shift; ++j) dst[j + shift] += src[j];
            for (int j = q - shift; j < q; ++j) dst[j + shift - q] += src[j];
          }
        }
        for (int d = 0; d < q; ++d) {
          std::int64_t* dst =
              flat.data() + static_cast<std::size_t>(base + d * stride) * static_cast<std::size_t>(q);
          const std::int64_t* src = line.data() + static_cast<std::size_t>(d) * static_cast<std::size_t>(q);
          for (int j = 0; j < q; ++j) dst[j] = src[j];
        }
      }
    }
  }

  if (flat[0] != s.cardinality())
    throw InternalError("full_spectrum: z = 0 entry does not equal |S|");
  for (int j = 1; j < q; ++j)
    if (flat[static_cast<std::size_t>(j)] != 0)
      throw InternalError("full_spectrum: z = 0 entry has nonzero residue counts");
  return SpectrumTable(shape, std::move(flat));
}

namespace detail {

// Existence of a nonzero character sum at exactly weight t, without the full
// table: for every t-subset of positions, bucket S by its values there and
// assemble the count vector of every z supported on that subset.
inline bool weight_has_nonzero_charsum(const VertexSet& s, int t, const CharsumTester& tester) {
  const CubeShape& shape = s.shape();
  const int q = shape.q;
  bool found = false;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(q));
  std::vector<int> zval(static_cast<std::size_t>(t));
  for_each_position_subset(shape.n, t, [&](const std::vector<int>& positions) {
    const std::vector<Index> buckets = pattern_counts(s, positions);
    // odometer over z values in [1, q)^t
    std::fill(zval.begin(), zval.end(), 1);
    while (true) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t p = 0; p < buckets.size(); ++p) {
        if (buckets[p] == 0) continue;
        std::int64_t ip = 0;
        std::size_t rest = p;
        for (int k = 0; k < t; ++k) {
          ip += static_cast<std::int64_t>(zval[static_cast<std::size_t>(k)]) * static_cast<int>(rest % q);
          rest /= static_cast<std::size_t>(q);
        }
        counts[static_cast<std::size_t>(ip % q)] += buckets[p];
      }
      if (!tester.is_zero(counts)) {
        found = true;
        return false;
      }
      int k = 0;
      while (k < t && zval[static_cast<std::size_t>(k)] == q - 1) {
        zval[static_cast<std::size_t>(k)] = 1;
        ++k;
      }
      if (k == t) break;
      ++zval[static_cast<std::size_t>(k)];
    }
    return true;
  });
  return found;
}

inline int cor_from_table(const SpectrumTable& table, const CharsumTester& tester) {
  const CubeShape& shape = table.shape();
  int minw = shape.n + 1;
  for (Index z = 1; z < shape.point_count; ++z) {
    const int w = weight(z, shape);
    if (w >= minw) continue;
    if (!tester.is_zero(table.counts_at(z))) minw = w;
  }
  return minw == shape.n + 1 ? shape.n : minw - 1;
}

}  // namespace detail

struct SpectralOptions {
  Index table_entry_cap = kDefaultSpectrumEntryCap;
  // Cap on C(n,t) * (q(q-1))^t work in the targeted path.
  std::int64_t targeted_weight_budget = std::int64_t{1} << 27;
};

// Correlation immunity order: (min{wt(z) : z != 0, charsum(z) != 0}) - 1,
// or n when every nonzero-z sum vanishes (constant-density convention).
// Strategy: a cheap weight-1 scan settles the common case; otherwise the
// full transform when it fits, else targeted low-weight evaluation.
inline int cor_spectral(const VertexSet& s, const SpectralOptions& opts = {}) {
  const CubeShape& shape = s.shape();
  CharsumTester tester(shape.q);
  if (detail::weight_has_nonzero_charsum(s, 1, tester)) return 0;
  if (shape.n == 1) return 1;
  if (shape.point_count <= opts.table_entry_cap / shape.q)
    return detail::cor_from_table(full_spectrum(s, opts.table_entry_cap), tester);
  for (int t = 2; t <= shape.n; ++t) {
    double work = static_cast<double>(binomial(shape.n, t));
    for (int k = 0; k < t; ++k) work *= static_cast<double>(shape.q) * (shape.q - 1);
    if (work > static_cast<double>(opts.targeted_weight_budget))
      throw ResourceError("cor_spectral: shape too large for both the full transform and the "
                          "targeted weight-" + std::to_string(t) + " scan");
    if (detail::weight_has_nonzero_charsum(s, t, tester)) return t - 1;
  }
  return shape.n;
}

// Combinatorial oracle: the largest t such that every face fixing t
// coordinates holds exactly |S| / q^t points of S.
inline int cor_by_faces(const VertexSet& s) {
  const CubeShape& shape = s.shape();
  for (int t = 1; t <= shape.n; ++t) {
    const Index qt = shape.stride[static_cast<std::size_t>(t)];
    if (s.cardinality() % qt != 0) return t - 1;
    const Index expected = s.cardinality() / qt;
    bool uniform = true;
    for_each_position_subset(shape.n, t, [&](const std::vector<int>& positions) {
      for (Index c : pattern_counts(s, positions)) {
        if (c != expected) {
          uniform = false;
          return false;
        }
      }
      return true;
    });
    if (!uniform) return t - 1;
  }
  return shape.n;
}

// Exact nonzero counts and floating energies of the spectrum, grouped by
// wt(z). Energies carry the scalar product normalization, so the total is
// Parseval's rho(S).
struct WeightProfile {
  struct Entry {
    std::int64_t nonzero_count = 0;
    double energy = 0.0;
  };
  std::vector<Entry> by_weight;  // size n+1

  double total_energy() const {
    double t = 0;
    for (const Entry& e : by_weight) t += e.energy;
    return t;
  }
};

inline WeightProfile weight_profile(const VertexSet& s, Index entry_cap = kDefaultSpectrumEntryCap) {
  const CubeShape& shape = s.shape();
  const SpectrumTable table = full_spectrum(s, entry_cap);
  CharsumTester tester(shape.q);
  WeightProfile wp;
  wp.by_weight.resize(static_cast<std::size_t>(shape.n) + 1);
  std::vector<long double> energy(static_cast<std::size_t>(shape.n) + 1, 0.0L);
  const long double norm =
      static_cast<long double>(shape.point_count) * static_cast<long double>(shape.point_count);
  for (Index z = 0; z < shape.point_count; ++z) {
    const auto counts = table.counts_at(z);
    if (tester.is_zero(counts)) continue;  // contributes exactly 0 energy
    const int w = weight(z, shape);
    ++wp.by_weight[static_cast<std::size_t>(w)].nonzero_count;
    energy[static_cast<std::size_t>(w)] += tester.magnitude_sq(counts) / norm;
  }
  for (std::size_t w = 0; w < energy.size(); ++w)
    wp.by_weight[w].energy = static_cast<double>(energy[w]);
  return wp;
}

}  // namespace qcube
