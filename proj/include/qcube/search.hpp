#pragma once

// Exhaustive certification at desk scale: enumerate all perfect 2-colorings
// with a given parameter matrix by depth-first color assignment with
// constraint propagation, compute exact minimum nonempty bitrade sizes via
// GF(2) kernel enumeration, and bundle both into a bounds-verification
// campaign over a list of shapes.

#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qcube/analysis.hpp"
#include "qcube/constructions.hpp"
#include "qcube/cube.hpp"
#include "qcube/structures.hpp"

namespace qcube {

struct SearchConfig {
  CubeShape shape;
  std::int64_t b = 1;
  std::int64_t c = 1;
  std::int64_t limit = 0;            // solutions to retain in the outcome (0 = count only)
  bool symmetry_reduction = false;   // when b == c, search color(0)=0 and mirror complements
  Index point_cap = Index{1} << 20;  // hard cap on q^n for the DFS
};

struct SearchOutcome {
  std::int64_t count = 0;
  std::vector<VertexSet> solutions;  // first `limit` solutions in emission order
  std::string infeasible_reason;     // set when the matrix fails the necessary conditions
};

namespace detail {

// Returns a reason string if (b, c) fails the necessary admissibility
// conditions, empty otherwise.
inline std::string matrix_infeasibility(const CubeShape& shape, std::int64_t b, std::int64_t c) {
  const std::int64_t deg = shape.degree();
  if (b < 1 || b > deg) return "b = " + std::to_string(b) + " outside [1, n(q-1) = " + std::to_string(deg) + "]";
  if (c < 1 || c > deg) return "c = " + std::to_string(c) + " outside [1, n(q-1) = " + std::to_string(deg) + "]";
  if ((b + c) % shape.q != 0) return "b + c is not divisible by q";
  if ((b + c) / shape.q > shape.n) return "(b+c)/q exceeds n";
  if ((shape.point_count * b) % (b + c) != 0)
    return "implied cardinality q^n * b/(b+c) is not an integer";
  return {};
}

class ColoringSearch {
 public:
  ColoringSearch(const CubeShape& shape, std::int64_t b, std::int64_t c)
      : shape_(shape),
        deg_(shape.degree()),
        b_(b),
        c_(c),
        target_ones_(shape.point_count * b / (b + c)),
        color_(static_cast<std::size_t>(shape.point_count), -1),
        ones_(static_cast<std::size_t>(shape.point_count), 0),
        assigned_(static_cast<std::size_t>(shape.point_count), 0) {
    adj_.reserve(static_cast<std::size_t>(shape.point_count * deg_));
    for (Index x = 0; x < shape.point_count; ++x)
      for_each_neighbor(shape, x, [&](Index y) { adj_.push_back(y); });
  }

  // Emits every solution exactly once; fn may be empty. Branch order is
  // color 0 before color 1 at every vertex, so the order is deterministic.
  void run(Index first_free, const std::function<void(const std::vector<std::int8_t>&)>& emit) {
    const Index v_count = shape_.point_count;
    std::vector<std::int8_t> tried(static_cast<std::size_t>(v_count), -1);
    Index depth = first_free;
    while (true) {
      if (depth == v_count) {
        emit(color_);
        --depth;
        if (depth < first_free) break;
        unassign(depth);
        continue;
      }
      bool descended = false;
      for (std::int8_t col = tried[static_cast<std::size_t>(depth)] + 1; col <= 1; ++col) {
        tried[static_cast<std::size_t>(depth)] = col;
        if (try_assign(depth, col)) {
          ++depth;
          descended = true;
          break;
        }
      }
      if (!descended) {
        tried[static_cast<std::size_t>(depth)] = -1;
        --depth;
        if (depth < first_free) break;
        unassign(depth);
      }
    }
  }

  bool try_assign(Index v, std::int8_t col) {
    if (col == 1 && n1_ == target_ones_) return false;
    if (col == 0 && n0_ == shape_.point_count - target_ones_) return false;
    color_[static_cast<std::size_t>(v)] = col;
    ++(col == 1 ? n1_ : n0_);
    const Index* nb = adj_.data() + static_cast<std::size_t>(v * deg_);
    for (Index k = 0; k < deg_; ++k) {
      ++assigned_[static_cast<std::size_t>(nb[k])];
      ones_[static_cast<std::size_t>(nb[k])] += col;
    }
    bool ok = feasible(v);
    for (Index k = 0; ok && k < deg_; ++k) ok = feasible(nb[k]);
    if (!ok) {
      unassign(v);
      return false;
    }
    return true;
  }

  void unassign(Index v) {
    const std::int8_t col = color_[static_cast<std::size_t>(v)];
    const Index* nb = adj_.data() + static_cast<std::size_t>(v * deg_);
    for (Index k = 0; k < deg_; ++k) {
      --assigned_[static_cast<std::size_t>(nb[k])];
      ones_[static_cast<std::size_t>(nb[k])] -= col;
    }
    --(col == 1 ? n1_ : n0_);
    color_[static_cast<std::size_t>(v)] = -1;
  }

 private:
  bool feasible(Index v) const {
    const std::int64_t o = ones_[static_cast<std::size_t>(v)];
    const std::int64_t rem = deg_ - assigned_[static_cast<std::size_t>(v)];
    const std::int8_t col = color_[static_cast<std::size_t>(v)];
    if (col == 0) return o <= b_ && b_ <= o + rem;
    if (col == 1) return o <= deg_ - c_ && deg_ - c_ <= o + rem;
    return (o <= b_ && b_ <= o + rem) || (o <= deg_ - c_ && deg_ - c_ <= o + rem);
  }

  CubeShape shape_;
  std::int64_t deg_, b_, c_, target_ones_;
  std::int64_t n0_ = 0, n1_ = 0;
  std::vector<Index> adj_;
  std::vector<std::int8_t> color_;
  std::vector<std::int64_t> ones_;
  std::vector<std::int64_t> assigned_;
};

}  // namespace detail

// Enumerates every S whose indicator is a perfect 2-coloring with matrix
// (b, c). on_solution (if given) sees every solution in emission order.
inline SearchOutcome search_perfect_colorings(
    const SearchConfig& config,
    const std::function<void(const VertexSet&)>& on_solution = nullptr) {
  const CubeShape& shape = config.shape;
  if (shape.point_count > config.point_cap)
    throw ResourceError("search: q^n exceeds the search point cap " + std::to_string(config.point_cap));
  SearchOutcome outcome;
  outcome.infeasible_reason = detail::matrix_infeasibility(shape, config.b, config.c);
  if (!outcome.infeasible_reason.empty()) return outcome;

  detail::ColoringSearch dfs(shape, config.b, config.c);
  const auto emit = [&](const std::vector<std::int8_t>& colors, bool mirrored) {
    VertexSet s(shape);
    for (Index x = 0; x < shape.point_count; ++x)
      if ((colors[static_cast<std::size_t>(x)] == 1) != mirrored) s.set(x, true);
    ++outcome.count;
    if (on_solution) on_solution(s);
    if (outcome.count <= config.limit) outcome.solutions.push_back(std::move(s));
  };

  if (config.symmetry_reduction && config.b == config.c) {
    // Complementing swaps the color classes but keeps (b, c) when b == c,
    // so solutions come in complement pairs split by the color of vertex 0.
    if (dfs.try_assign(0, 0)) {
      dfs.run(1, [&](const std::vector<std::int8_t>& colors) {
        emit(colors, false);
        emit(colors, true);
      });
      dfs.unassign(0);
    }
  } else {
    dfs.run(0, [&](const std::vector<std::int8_t>& colors) { emit(colors, false); });
  }
  return outcome;
}

struct MinBitradeConfig {
  Index point_cap = Index{1} << 12;
  std::int64_t row_cap = std::int64_t{1} << 14;
  int kernel_dim_cap = 26;
  std::int64_t enumeration_work_cap = std::int64_t{1} << 28;  // gray steps * words
};

struct MinBitradeResult {
  int t = 0;
  std::int64_t minimum_size = 0;
  VertexSet witness;
  int kernel_dimension = 0;
};

// Exact minimum cardinality of a nonempty bitrade of order t. Rows of the
// face/point incidence matrix span the parity constraints; bitrades are the
// GF(2) kernel. Small kernels are swept completely by a Gray-code walk.
// Larger kernels use a branch-and-bound over basis combinations: with the
// basis in reduced echelon form every combination of j vectors has weight
// at least j (each contributes its private free column), so enumerating
// combination sizes below the best weight found — seeded with the 2^(t+1)
// subcube witness — certifies the minimum. Refuses (rather than
// approximates) when neither fits the work caps.
inline MinBitradeResult min_bitrade(const CubeShape& shape, int t, const MinBitradeConfig& cfg = {}) {
  if (t < 0 || t > shape.n - 1) throw InputError("min_bitrade: order must lie in [0, n-1]");
  const Index v_count = shape.point_count;
  if (v_count > cfg.point_cap)
    throw ResourceError("min_bitrade: q^n exceeds the exact-mode cap " + std::to_string(cfg.point_cap));
  const std::int64_t row_count = binomial(shape.n, t) * shape.stride[static_cast<std::size_t>(t)];
  if (row_count > cfg.row_cap)
    throw ResourceError("min_bitrade: " + std::to_string(row_count) + " parity rows exceed the cap " +
                        std::to_string(cfg.row_cap));
  const std::size_t words = static_cast<std::size_t>((v_count + 63) / 64);

  auto get_bit = [&](const std::vector<std::uint64_t>& row, Index x) {
    return (row[static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1u;
  };

  // Incidence rows: one per face fixing t coordinates.
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(static_cast<std::size_t>(row_count));
  for_each_position_subset(shape.n, t, [&](const std::vector<int>& positions) {
    const Index patterns = shape.stride[static_cast<std::size_t>(t)];
    const std::size_t base = rows.size();
    rows.resize(base + static_cast<std::size_t>(patterns), std::vector<std::uint64_t>(words, 0));
    for (Index x = 0; x < v_count; ++x) {
      Index p = 0;
      Index mul = 1;
      for (std::size_t k = 0; k < positions.size(); ++k) {
        p += static_cast<Index>(shape.digit(x, positions[k])) * mul;
        mul *= shape.q;
      }
      rows[base + static_cast<std::size_t>(p)][static_cast<std::size_t>(x >> 6)] |= std::uint64_t{1}
                                                                                   << (x & 63);
    }
    return true;
  });

  // Gaussian elimination to row echelon form over GF(2).
  std::vector<std::vector<std::uint64_t>> pivot_rows;
  std::vector<Index> pivot_cols;
  for (auto& row : rows) {
    for (std::size_t i = 0; i < pivot_rows.size(); ++i)
      if (get_bit(row, pivot_cols[i]))
        for (std::size_t w = 0; w < words; ++w) row[w] ^= pivot_rows[i][w];
    Index pc = -1;
    for (std::size_t w = 0; w < words && pc < 0; ++w)
      if (row[w] != 0) pc = static_cast<Index>(w * 64 + static_cast<std::size_t>(std::countr_zero(row[w])));
    if (pc >= 0) {
      pivot_rows.push_back(std::move(row));
      pivot_cols.push_back(pc);
    }
  }
  const int rank = static_cast<int>(pivot_rows.size());
  const int kdim = static_cast<int>(v_count) - rank;
  if (kdim <= 0) throw InternalError("min_bitrade: empty kernel, but subcube bitrades always exist");
  const bool gray_walk = kdim <= cfg.kernel_dim_cap;
  if (gray_walk && (std::int64_t{1} << kdim) * static_cast<std::int64_t>(words) > cfg.enumeration_work_cap)
    throw ResourceError("min_bitrade: kernel enumeration work exceeds the cap");

  // Back-substitute to reduced row echelon form.
  for (std::size_t i = 0; i < pivot_rows.size(); ++i)
    for (std::size_t j = 0; j < pivot_rows.size(); ++j)
      if (i != j && get_bit(pivot_rows[j], pivot_cols[i]))
        for (std::size_t w = 0; w < words; ++w) pivot_rows[j][w] ^= pivot_rows[i][w];

  // Kernel basis: one vector per free column.
  std::vector<bool> is_pivot(static_cast<std::size_t>(v_count), false);
  for (Index pc : pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  basis.reserve(static_cast<std::size_t>(kdim));
  for (Index f = 0; f < v_count; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<std::uint64_t> vec(words, 0);
    vec[static_cast<std::size_t>(f >> 6)] |= std::uint64_t{1} << (f & 63);
    for (std::size_t i = 0; i < pivot_rows.size(); ++i)
      if (get_bit(pivot_rows[i], f))
        vec[static_cast<std::size_t>(pivot_cols[i] >> 6)] |= std::uint64_t{1} << (pivot_cols[i] & 63);
    basis.push_back(std::move(vec));
  }

  std::vector<std::uint64_t> best(words, 0);
  std::int64_t best_w = std::numeric_limits<std::int64_t>::max();
  if (gray_walk) {
    // Complete Gray-code walk over all nonzero kernel combinations.
    std::vector<std::uint64_t> cur(words, 0);
    const std::uint64_t total = std::uint64_t{1} << kdim;
    for (std::uint64_t g = 1; g < total; ++g) {
      const auto& flip = basis[static_cast<std::size_t>(std::countr_zero(g))];
      std::int64_t w = 0;
      for (std::size_t i = 0; i < words; ++i) {
        cur[i] ^= flip[i];
        w += std::popcount(cur[i]);
      }
      if (w < best_w) {
        best_w = w;
        best = cur;
      }
    }
  } else {
    // Branch and bound by combination size. The subcube bitrade seeds the
    // upper bound; a combination of j basis vectors weighs at least j.
    const VertexSet seed = subcube_bitrade(shape.q, shape.n, t, shape.point_count);
    best_w = seed.cardinality();
    seed.for_each_member(
        [&](Index x) { best[static_cast<std::size_t>(x >> 6)] |= std::uint64_t{1} << (x & 63); });
    std::vector<std::vector<std::uint64_t>> stk(2, std::vector<std::uint64_t>(words, 0));
    for (std::int64_t level = 1; level < best_w; ++level) {
      double level_work = static_cast<double>(words);
      for (std::int64_t i = 0; i < level; ++i)
        level_work *= static_cast<double>(kdim - i) / static_cast<double>(i + 1);
      if (level_work > static_cast<double>(cfg.enumeration_work_cap))
        throw ResourceError("min_bitrade: kernel dimension " + std::to_string(kdim) +
                            " needs combination level " + std::to_string(level) +
                            ", beyond the work cap");
      stk.resize(static_cast<std::size_t>(level) + 1, std::vector<std::uint64_t>(words, 0));
      const auto descend = [&](const auto& self, int depth, int start) -> void {
        for (int i = start; i < kdim && best_w > level; ++i) {
          const auto& prev = stk[static_cast<std::size_t>(depth)];
          auto& next = stk[static_cast<std::size_t>(depth) + 1];
          const auto& vec = basis[static_cast<std::size_t>(i)];
          if (depth + 1 == level) {
            std::int64_t w = 0;
            for (std::size_t k = 0; k < words; ++k) w += std::popcount(prev[k] ^ vec[k]);
            if (w < best_w) {
              best_w = w;
              for (std::size_t k = 0; k < words; ++k) best[k] = prev[k] ^ vec[k];
            }
          } else {
            for (std::size_t k = 0; k < words; ++k) next[k] = prev[k] ^ vec[k];
            self(self, depth + 1, i + 1);
          }
        }
      };
      descend(descend, 0, 0);
      if (best_w <= level) break;
    }
  }

  MinBitradeResult result{t, best_w, VertexSet(shape), kdim};
  for (Index x = 0; x < v_count; ++x)
    if (get_bit(best, x)) result.witness.set(x, true);
  if (result.witness.cardinality() != best_w || best_w % 2 != 0 || !is_bitrade(result.witness, t))
    throw InternalError("min_bitrade: witness failed validation");
  return result;
}

struct CampaignOptions {
  Index search_point_cap = Index{1} << 20;
  std::int64_t retain_limit = 6;        // solutions kept per matrix for pairwise component checks
  std::int64_t full_check_limit = 256;  // solutions per matrix run through theorem_eval
  MinBitradeConfig bitrade;
};

struct CampaignMatrixEntry {
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t solution_count = 0;
  std::int64_t checked_solutions = 0;
  bool all_theorem_equalities = true;
  std::int64_t component_pairs_checked = 0;
  bool all_component_bounds_hold = true;
  std::string error;
};

struct CampaignBitradeEntry {
  int t = 0;
  std::int64_t claimed_bound = 0;  // 2^(t+1)
  std::optional<std::int64_t> measured_minimum;
  std::string note;
};

struct CampaignShapeEntry {
  CubeShape shape;
  std::vector<CampaignMatrixEntry> matrices;
  std::vector<CampaignBitradeEntry> bitrades;
  std::string error;
};

struct CampaignReport {
  std::vector<CampaignShapeEntry> shapes;
};

// For each shape: enumerate admissible matrices, search each for
// realizability, cross-check every found coloring against the theorem
// equality, check component bounds over solution pairs, and measure
// minimum bitrades next to the claimed 2^(t+1) bound. Per-shape failures
// are recorded, not fatal.
inline CampaignReport verify_bounds_campaign(const std::vector<CubeShape>& shapes,
                                             const CampaignOptions& opts = {}) {
  CampaignReport report;
  for (const CubeShape& shape : shapes) {
    CampaignShapeEntry entry;
    entry.shape = shape;
    try {
      for (const ParameterMatrix& m : admissible_matrices(shape)) {
        CampaignMatrixEntry me;
        me.b = m.b;
        me.c = m.c;
        try {
          SearchConfig cfg;
          cfg.shape = shape;
          cfg.b = m.b;
          cfg.c = m.c;
          cfg.limit = opts.retain_limit;
          cfg.point_cap = opts.search_point_cap;
          SearchOutcome outcome = search_perfect_colorings(cfg, [&](const VertexSet& s) {
            if (me.checked_solutions >= opts.full_check_limit) return;
            ++me.checked_solutions;
            const AnalysisReport rep = theorem_eval(s);
            if (!rep.is_perfect || !rep.matrix || rep.matrix->b != m.b || rep.matrix->c != m.c)
              me.all_theorem_equalities = false;
          });
          me.solution_count = outcome.count;
          const std::int64_t bound = component_lower_bound(m);
          for (std::size_t i = 0; i < outcome.solutions.size(); ++i) {
            for (std::size_t j = i + 1; j < outcome.solutions.size(); ++j) {
              const MobileResult mr = mobile_and_components(outcome.solutions[i], outcome.solutions[j]);
              ++me.component_pairs_checked;
              if (!mr.comp_1_2.empty() && mr.comp_1_2.cardinality() < bound)
                me.all_component_bounds_hold = false;
              if (!mr.comp_2_1.empty() && mr.comp_2_1.cardinality() < bound)
                me.all_component_bounds_hold = false;
            }
          }
        } catch (const std::exception& e) {
          me.error = e.what();
        }
        entry.matrices.push_back(std::move(me));
      }
      for (int t = 0; t <= shape.n - 1; ++t) {
        CampaignBitradeEntry be;
        be.t = t;
        be.claimed_bound = std::int64_t{1} << (t + 1);
        try {
          be.measured_minimum = min_bitrade(shape, t, opts.bitrade).minimum_size;
        } catch (const ResourceError& e) {
          be.note = std::string("refused: ") + e.what();
        }
        entry.bitrades.push_back(std::move(be));
      }
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    report.shapes.push_back(std::move(entry));
  }
  return report;
}

}  // namespace qcube
