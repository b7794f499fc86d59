#pragma once

// Command line front end. All the work happens in run_cli so tests can
// drive the exact binary surface in process; tools/qcube.cpp is a two-line
// main. Exit codes: 0 success, 2 input error, 3 resource cap, 4 internal
// invariant violation (which also dumps the offending set for triage).

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcube/analysis.hpp"
#include "qcube/constructions.hpp"
#include "qcube/qset.hpp"
#include "qcube/report.hpp"
#include "qcube/search.hpp"

namespace qcube {

namespace detail {

inline std::int64_t parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(text, &pos);
    if (pos != text.size()) throw InputError(what + ": \"" + text + "\" is not an integer");
    return v;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError(what + ": \"" + text + "\" is not an integer");
  }
}

// "name:key=value,key=value" -> (name, {key: value})
inline std::pair<std::string, std::map<std::string, std::string>> parse_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::map<std::string, std::string> kv;
  if (colon != std::string::npos) {
    std::istringstream rest(spec.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw InputError("construction spec: \"" + item + "\" is not key=value");
      kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return {name, kv};
}

inline std::int64_t take_int(std::map<std::string, std::string>& kv, const std::string& key,
                             const std::string& specname) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw InputError("construction \"" + specname + "\" requires key \"" + key + "\"");
  const std::int64_t v = parse_int(it->second, "construction key \"" + key + "\"");
  kv.erase(it);
  return v;
}

inline void reject_leftovers(const std::map<std::string, std::string>& kv, const std::string& specname) {
  if (!kv.empty())
    throw InputError("construction \"" + specname + "\": unknown key \"" + kv.begin()->first + "\"");
}

// A tuple literal: contiguous digits for q <= 10, '-'-separated otherwise.
inline std::vector<int> parse_tuple(const std::string& text, const CubeShape& shape) {
  std::vector<int> v;
  if (text.find('-') != std::string::npos) {
    std::istringstream ts(text);
    std::string tok;
    while (std::getline(ts, tok, '-'))
      v.push_back(static_cast<int>(parse_int(tok, "tuple entry")));
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw InputError("tuple \"" + text + "\" contains a non-digit");
      v.push_back(ch - '0');
    }
  }
  if (static_cast<int>(v.size()) != shape.n)
    throw InputError("tuple \"" + text + "\" has " + std::to_string(v.size()) + " entries, expected " +
                     std::to_string(shape.n));
  for (int x : v)
    if (x < 0 || x >= shape.q) throw InputError("tuple \"" + text + "\" has an entry outside [0, q)");
  return v;
}

}  // namespace detail

// Builds a set from a construction spec:
//   hamming:q=2,m=3            mds:q=3,n=2,a=0          slab:q=3,n=2,i=0,v=0
//   subcube_bitrade:q=3,n=2,t=1  random:q=2,n=4,size=5,seed=42
//   translate:in=PATH,by=TUPLE
inline VertexSet make_construction(const std::string& spec,
                                   Index point_cap = CubeShape::kDefaultPointCap) {
  auto [name, kv] = detail::parse_spec(spec);
  if (name == "hamming") {
    const int q = static_cast<int>(detail::take_int(kv, "q", name));
    const int m = static_cast<int>(detail::take_int(kv, "m", name));
    detail::reject_leftovers(kv, name);
    return hamming_code(q, m, point_cap);
  }
  if (name == "mds") {
    const int q = static_cast<int>(detail::take_int(kv, "q", name));
    const int n = static_cast<int>(detail::take_int(kv, "n", name));
    const int a = static_cast<int>(detail::take_int(kv, "a", name));
    detail::reject_leftovers(kv, name);
    return mds_sum_code(q, n, a, point_cap);
  }
  if (name == "slab") {
    const int q = static_cast<int>(detail::take_int(kv, "q", name));
    const int n = static_cast<int>(detail::take_int(kv, "n", name));
    const int i = static_cast<int>(detail::take_int(kv, "i", name));
    const int v = static_cast<int>(detail::take_int(kv, "v", name));
    detail::reject_leftovers(kv, name);
    return slab(q, n, i, v, point_cap);
  }
  if (name == "subcube_bitrade") {
    const int q = static_cast<int>(detail::take_int(kv, "q", name));
    const int n = static_cast<int>(detail::take_int(kv, "n", name));
    const int t = static_cast<int>(detail::take_int(kv, "t", name));
    detail::reject_leftovers(kv, name);
    return subcube_bitrade(q, n, t, point_cap);
  }
  if (name == "random") {
    const int q = static_cast<int>(detail::take_int(kv, "q", name));
    const int n = static_cast<int>(detail::take_int(kv, "n", name));
    const std::int64_t size = detail::take_int(kv, "size", name);
    const std::int64_t seed = detail::take_int(kv, "seed", name);
    detail::reject_leftovers(kv, name);
    return random_subset(CubeShape(q, n, point_cap), size, static_cast<std::uint64_t>(seed));
  }
  if (name == "translate") {
    auto in_it = kv.find("in");
    auto by_it = kv.find("by");
    if (in_it == kv.end() || by_it == kv.end())
      throw InputError("construction \"translate\" requires keys \"in\" and \"by\"");
    const VertexSet s = read_qset_file(in_it->second, point_cap);
    const std::vector<int> by = detail::parse_tuple(by_it->second, s.shape());
    kv.erase(in_it);
    kv.erase("by");
    detail::reject_leftovers(kv, name);
    return translate(s, by);
  }
  throw InputError("unknown construction \"" + name + "\"");
}

namespace detail {

inline void print_analysis_text(std::ostream& out, const Json& j) {
  const auto& m = j["metrics"];
  out << "shape: q=" << j["shape"]["q"] << " n=" << j["shape"]["n"]
      << "   |S| = " << j["cardinality"] << "  (" << j["input"]["value"].get<std::string>() << ")\n";
  out << "rho   = " << m["rho"]["exact"].get<std::string>() << "\n";
  out << "nei   = " << m["nei"]["exact"].get<std::string>() << "\n";
  out << "alpha = " << m["alpha"]["exact"].get<std::string>() << "\n";
  out << "cor   = " << m["cor"] << "\n";
  out << "theorem: rho*q*(cor+1) = " << j["theorem"]["lhs"]["exact"].get<std::string>()
      << "  vs  alpha = " << j["theorem"]["rhs"]["exact"].get<std::string>() << "  ->  "
      << j["verdict"].get<std::string>() << "\n";
  if (!j["matrix"].is_null()) {
    const auto& rows = j["matrix"]["rows"];
    out << "matrix: b=" << j["matrix"]["b"] << " c=" << j["matrix"]["c"] << "   (("
        << rows[0][0] << "," << rows[0][1] << "),(" << rows[1][0] << "," << rows[1][1] << "))\n";
  }
  out << "bierbrauer-friedman: 1 - n(q-1)/(q(cor+1)) = "
      << j["bierbrauer_friedman"]["lhs"]["exact"].get<std::string>()
      << "  vs  rho = " << j["bierbrauer_friedman"]["rhs"]["exact"].get<std::string>()
      << (j["bierbrauer_friedman"]["equality"].get<bool>() ? "  (equality)" : "  (strict)") << "\n";
  out << "orthogonal array: strength " << j["orthogonal_array"]["strength"]
      << ", lambda = " << j["orthogonal_array"]["index_lambda"].get<std::string>()
      << " (alternate |S|/q^(n-t) convention: "
      << j["orthogonal_array"]["paper_lambda"].get<std::string>() << ")\n";
  out << "bitrade order: ";
  if (j["bitrade"]["order"].is_null())
    out << "none (odd cardinality)\n";
  else
    out << j["bitrade"]["order"] << "\n";
  out << "spectrum support weights:";
  for (const auto& e : j["weight_profile"])
    if (e["nonzero_count"].get<std::int64_t>() > 0) out << " " << e["weight"];
  out << "\n";
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << j.dump(2) << "\n";
  if (!out) throw InputError(path + ": write failed");
}

template <typename Fn>
int run_guarded(std::ostream& err, Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace detail

struct AnalyzeArgs {
  std::string input_path;      // .qset file; mutually exclusive with construct_spec
  std::string construct_spec;  // construction spec
  std::string json_path;
  Index point_cap = CubeShape::kDefaultPointCap;
  bool quiet = false;
};

inline int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  return detail::run_guarded(err, [&] {
    if (args.input_path.empty() == args.construct_spec.empty())
      throw InputError("analyze: give exactly one of a .qset file or --construct SPEC");
    const auto t0 = std::chrono::steady_clock::now();
    InputDescriptor input;
    std::optional<VertexSet> s;
    if (!args.input_path.empty()) {
      input = {"file", args.input_path};
      s = read_qset_file(args.input_path, args.point_cap);
    } else {
      input = {"construction", args.construct_spec};
      s = make_construction(args.construct_spec, args.point_cap);
    }
    Json j;
    try {
      j = analysis_to_json(input, *s);
    } catch (const InternalError&) {
      // Dump the offending input so the failure can be reproduced.
      try {
        write_qset_file("qcube-invariant-dump.qset", *s, "invariant violation input, from " + input.value);
        err << "offending set dumped to qcube-invariant-dump.qset\n";
      } catch (...) {
      }
      throw;
    }
    const auto t1 = std::chrono::steady_clock::now();
    j["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (!args.quiet) detail::print_analysis_text(out, j);
    if (!args.json_path.empty()) detail::write_json_file(args.json_path, j);
  });
}

struct ConstructArgs {
  std::string spec;
  std::string out_path;
  std::string json_path;
  Index point_cap = CubeShape::kDefaultPointCap;
};

inline int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
  return detail::run_guarded(err, [&] {
    const VertexSet s = make_construction(args.spec, args.point_cap);
    write_qset_file(args.out_path, s, args.spec);
    out << "wrote " << args.out_path << ": q=" << s.shape().q << " n=" << s.shape().n
        << " |S|=" << s.cardinality() << "\n";
    if (!args.json_path.empty()) {
      Json j;
      j["schema_version"] = kReportSchemaVersion;
      j["spec"] = args.spec;
      j["out"] = args.out_path;
      j["shape"] = shape_json(s.shape());
      j["cardinality"] = s.cardinality();
      detail::write_json_file(args.json_path, j);
    }
  });
}

struct SearchArgs {
  int q = 2;
  int n = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t limit = 0;
  bool list_matrices = false;
  bool symmetry_reduction = false;
  std::string out_dir;
  std::string json_path;
  Index point_cap = Index{1} << 20;
};

inline int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  return detail::run_guarded(err, [&] {
    const CubeShape shape(args.q, args.n, args.point_cap);
    if (args.list_matrices) {
      const std::vector<ParameterMatrix> ms = admissible_matrices(shape);
      for (const ParameterMatrix& m : ms)
        out << "b=" << m.b << " c=" << m.c << " s=" << m.s()
            << " |S|=" << shape.point_count * m.b / (m.b + m.c) << "\n";
      out << ms.size() << " admissible matrices\n";
      if (!args.json_path.empty()) detail::write_json_file(args.json_path, matrices_to_json(shape, ms));
      return;
    }
    SearchConfig cfg;
    cfg.shape = shape;
    cfg.b = args.b;
    cfg.c = args.c;
    cfg.limit = args.limit;
    cfg.symmetry_reduction = args.symmetry_reduction;
    cfg.point_cap = args.point_cap;
    const SearchOutcome outcome = search_perfect_colorings(cfg);
    std::int64_t files = 0;
    if (!args.out_dir.empty()) {
      for (const VertexSet& s : outcome.solutions) {
        std::ostringstream path;
        path << args.out_dir << "/solution_" << std::setw(4) << std::setfill('0') << files << ".qset";
        write_qset_file(path.str(), s,
                        "q=" + std::to_string(args.q) + " n=" + std::to_string(args.n) + " b=" +
                            std::to_string(args.b) + " c=" + std::to_string(args.c));
        ++files;
      }
    }
    out << outcome.count << " solutions\n";
    if (!outcome.infeasible_reason.empty()) out << "infeasible: " << outcome.infeasible_reason << "\n";
    if (files > 0) out << files << " solution files written to " << args.out_dir << "\n";
    if (!args.json_path.empty())
      detail::write_json_file(args.json_path, search_to_json(shape, args.b, args.c, outcome, files));
  });
}

struct BitradeArgs {
  int q = 2;
  int n = 1;
  int t = 0;
  std::string out_path;
  std::string json_path;
  MinBitradeConfig config;
};

inline int cmd_bitrade(const BitradeArgs& args, std::ostream& out, std::ostream& err) {
  return detail::run_guarded(err, [&] {
    const CubeShape shape(args.q, args.n, args.config.point_cap);
    const MinBitradeResult r = min_bitrade(shape, args.t, args.config);
    out << "minimum " << r.minimum_size << "\n";
    out << "order " << r.t << ", kernel dimension " << r.kernel_dimension << ", subcube bound "
        << (std::int64_t{1} << (r.t + 1)) << "\n";
    if (!args.out_path.empty()) {
      write_qset_file(args.out_path, r.witness,
                      "minimum bitrade witness, order " + std::to_string(r.t));
      out << "witness written to " << args.out_path << "\n";
    }
    if (!args.json_path.empty())
      detail::write_json_file(args.json_path, min_bitrade_to_json(shape, r));
  });
}

struct CampaignArgs {
  std::string shapes;  // e.g. "2x2,2x3,3x2" (q x n)
  std::string json_path;
  CampaignOptions options;
};

inline int cmd_campaign(const CampaignArgs& args, std::ostream& out, std::ostream& err) {
  return detail::run_guarded(err, [&] {
    std::vector<CubeShape> shapes;
    std::istringstream ss(args.shapes);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto x = item.find('x');
      if (x == std::string::npos)
        throw InputError("campaign: shape \"" + item + "\" is not of the form QxN");
      const int q = static_cast<int>(detail::parse_int(item.substr(0, x), "shape q"));
      const int n = static_cast<int>(detail::parse_int(item.substr(x + 1), "shape n"));
      shapes.emplace_back(q, n);
    }
    const CampaignReport report = verify_bounds_campaign(shapes, args.options);
    for (const CampaignShapeEntry& e : report.shapes) {
      out << "shape q=" << e.shape.q << " n=" << e.shape.n << ": ";
      if (!e.error.empty()) {
        out << "error: " << e.error << "\n";
        continue;
      }
      std::int64_t realizable = 0;
      bool ok = true;
      for (const CampaignMatrixEntry& m : e.matrices) {
        if (m.solution_count > 0) ++realizable;
        ok = ok && m.all_theorem_equalities && m.all_component_bounds_hold && m.error.empty();
      }
      out << e.matrices.size() << " admissible matrices, " << realizable << " realizable, checks "
          << (ok ? "passed" : "FAILED") << "; min bitrades:";
      for (const CampaignBitradeEntry& b : e.bitrades) {
        out << " t=" << b.t << ":";
        if (b.measured_minimum)
          out << *b.measured_minimum << "(bound " << b.claimed_bound << ")";
        else
          out << "refused";
      }
      out << "\n";
    }
    if (!args.json_path.empty()) detail::write_json_file(args.json_path, campaign_to_json(report));
  });
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact spectral and combinatorial analysis of subsets of the q-ary n-cube"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze a set: metrics, theorem, bounds, OA, bitrade");
  analyze->add_option("input", an.input_path, "input .qset file");
  analyze->add_option("--construct", an.construct_spec, "construction spec instead of a file");
  analyze->add_option("--json", an.json_path, "write the JSON report here");
  analyze->add_option("--cap", an.point_cap, "point count cap");
  analyze->add_flag("--quiet", an.quiet, "suppress the text summary");

  ConstructArgs co;
  CLI::App* construct = app.add_subcommand("construct", "build a reference set and write it as .qset");
  construct->add_option("spec", co.spec, "construction spec")->required();
  construct->add_option("--out", co.out_path, "output .qset path")->required();
  construct->add_option("--json", co.json_path, "write a JSON summary here");
  construct->add_option("--cap", co.point_cap, "point count cap");

  SearchArgs se;
  CLI::App* search = app.add_subcommand("search", "enumerate perfect 2-colorings for a matrix");
  search->add_option("--q", se.q, "alphabet size")->required();
  search->add_option("--n", se.n, "dimension")->required();
  search->add_option("--b", se.b, "1-colored neighbors of a 0-vertex");
  search->add_option("--c", se.c, "0-colored neighbors of a 1-vertex");
  search->add_option("--limit", se.limit, "solutions to write (0 = count only)");
  search->add_flag("--matrices", se.list_matrices, "list admissible matrices instead of searching");
  search->add_flag("--symmetry-reduction", se.symmetry_reduction,
                   "when b == c, search one polarity and mirror");
  search->add_option("--out-dir", se.out_dir, "directory for solution .qset files");
  search->add_option("--json", se.json_path, "write the JSON summary here");

  BitradeArgs bi;
  CLI::App* bitrade = app.add_subcommand("bitrade", "certified minimum nonempty bitrade size");
  bitrade->add_option("--q", bi.q, "alphabet size")->required();
  bitrade->add_option("--n", bi.n, "dimension")->required();
  bitrade->add_option("--t", bi.t, "bitrade order")->required();
  bitrade->add_option("--out", bi.out_path, "write the witness .qset here");
  bitrade->add_option("--json", bi.json_path, "write the JSON summary here");

  CampaignArgs ca;
  CLI::App* campaign = app.add_subcommand("campaign", "admissibility/search/bitrade sweep over shapes");
  campaign->add_option("--shapes", ca.shapes, "comma list of QxN shapes, e.g. 2x3,3x2")->required();
  campaign->add_option("--json", ca.json_path, "write the JSON report here");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (*analyze) return cmd_analyze(an, out, err);
  if (*construct) return cmd_construct(co, out, err);
  if (*search) return cmd_search(se, out, err);
  if (*bitrade) return cmd_bitrade(bi, out, err);
  if (*campaign) return cmd_campaign(ca, out, err);
  return 2;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace qcube
