#pragma once

// JSON report assembly. Exact rationals are serialized as reduced fraction
// strings ("16/128" is emitted as "1/8") with floating mirrors beside them,
// so golden files stay stable and parsing a report back reproduces the
// exact values.

#include <string>

#include "json.hpp"
#include "qcube/analysis.hpp"
#include "qcube/rational.hpp"
#include "qcube/search.hpp"
#include "qcube/spectral.hpp"
#include "qcube/structures.hpp"

namespace qcube {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1";

struct InputDescriptor {
  std::string kind;   // "file" or "construction"
  std::string value;  // path or construction spec
};

inline Json rational_json(const Rational& r) {
  return Json{{"exact", to_string(r)}, {"value", to_double(r)}};
}

inline Json shape_json(const CubeShape& shape) {
  return Json{{"q", shape.q}, {"n", shape.n}};
}

inline Json matrix_json(const ParameterMatrix& m) {
  return Json{{"b", m.b},
              {"c", m.c},
              {"s", m.s()},
              {"rows", Json::array({Json::array({m.a00(), m.a01()}), Json::array({m.a10(), m.a11()})})}};
}

// The full analysis bundle behind `analyze`: theorem evaluation, the
// Bierbrauer-Friedman bound, the weight profile, orthogonal array strength
// and the bitrade order. Timing is the caller's to add.
inline Json analysis_to_json(const InputDescriptor& input, const VertexSet& s,
                             const SpectralOptions& opts = {}) {
  const AnalysisReport rep = theorem_eval(s, opts);
  const WeightProfile wp = weight_profile(s, opts.table_entry_cap);
  const OAResult oa = oa_check(s, opts);
  const BitradeVerdict bv = bitrade_order_verdict(s);

  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input"] = Json{{"kind", input.kind}, {"value", input.value}};
  j["shape"] = shape_json(rep.shape);
  j["cardinality"] = rep.cardinality;
  j["metrics"] = Json{{"rho", rational_json(rep.rho)},
                      {"nei", rational_json(rep.nei)},
                      {"alpha", rational_json(rep.alpha)},
                      {"cor", rep.cor}};
  j["theorem"] = Json{{"lhs", rational_json(rep.theorem_lhs)},
                      {"rhs", rational_json(rep.theorem_rhs)},
                      {"equality", rep.is_perfect},
                      {"is_perfect", rep.is_perfect}};
  j["matrix"] = rep.matrix ? matrix_json(*rep.matrix) : Json(nullptr);
  j["bierbrauer_friedman"] = Json{{"lhs", rational_json(rep.bf_lhs)},
                                  {"rhs", rational_json(rep.bf_rhs)},
                                  {"holds", true},
                                  {"equality", rep.bf_equality}};
  Json profile = Json::array();
  for (std::size_t w = 0; w < wp.by_weight.size(); ++w)
    profile.push_back(Json{{"weight", w},
                           {"nonzero_count", wp.by_weight[w].nonzero_count},
                           {"energy", wp.by_weight[w].energy}});
  j["weight_profile"] = std::move(profile);
  j["orthogonal_array"] = Json{{"strength", oa.strength},
                               {"index_lambda", to_string(oa.index_lambda)},
                               {"paper_lambda", to_string(oa.paper_lambda)}};
  j["bitrade"] = Json{{"order", bv.order ? Json(*bv.order) : Json(nullptr)}};
  j["verdict"] = rep.is_perfect ? "perfect" : "not perfect";
  return j;
}

inline Json search_to_json(const CubeShape& shape, std::int64_t b, std::int64_t c,
                           const SearchOutcome& outcome, std::int64_t files_written) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["shape"] = shape_json(shape);
  j["matrix"] = Json{{"b", b}, {"c", c}};
  j["solution_count"] = outcome.count;
  j["infeasible_reason"] =
      outcome.infeasible_reason.empty() ? Json(nullptr) : Json(outcome.infeasible_reason);
  j["files_written"] = files_written;
  return j;
}

inline Json matrices_to_json(const CubeShape& shape, const std::vector<ParameterMatrix>& ms) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["shape"] = shape_json(shape);
  Json arr = Json::array();
  for (const ParameterMatrix& m : ms) arr.push_back(matrix_json(m));
  j["admissible_matrices"] = std::move(arr);
  return j;
}

inline Json min_bitrade_to_json(const CubeShape& shape, const MinBitradeResult& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["shape"] = shape_json(shape);
  j["order"] = r.t;
  j["minimum_size"] = r.minimum_size;
  j["kernel_dimension"] = r.kernel_dimension;
  j["subcube_bound"] = std::int64_t{1} << (r.t + 1);
  return j;
}

inline Json campaign_to_json(const CampaignReport& report) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  Json shapes = Json::array();
  for (const CampaignShapeEntry& e : report.shapes) {
    Json je;
    je["shape"] = shape_json(e.shape);
    Json ms = Json::array();
    for (const CampaignMatrixEntry& m : e.matrices) {
      Json jm;
      jm["b"] = m.b;
      jm["c"] = m.c;
      jm["solution_count"] = m.solution_count;
      jm["checked_solutions"] = m.checked_solutions;
      jm["all_theorem_equalities"] = m.all_theorem_equalities;
      jm["component_pairs_checked"] = m.component_pairs_checked;
      jm["all_component_bounds_hold"] = m.all_component_bounds_hold;
      if (!m.error.empty()) jm["error"] = m.error;
      ms.push_back(std::move(jm));
    }
    je["matrices"] = std::move(ms);
    Json bs = Json::array();
    for (const CampaignBitradeEntry& b : e.bitrades) {
      Json jb;
      jb["t"] = b.t;
      jb["claimed_bound"] = b.claimed_bound;
      jb["measured_minimum"] = b.measured_minimum ? Json(*b.measured_minimum) : Json(nullptr);
      if (!b.note.empty()) jb["note"] = b.note;
      bs.push_back(std::move(jb));
    }
    je["bitrades"] = std::move(bs);
    if (!e.error.empty()) je["error"] = e.error;
    shapes.push_back(std::move(je));
  }
  j["shapes"] = std::move(shapes);
  return j;
}

}  // namespace qcube
