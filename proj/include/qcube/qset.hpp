#pragma once

// The ".qset" set file format.
//
//   # optional comment lines start with '#'
//   q n
//   <tuple>
//   ...
//
// Each non-empty line after the header is one tuple, coordinate 0 first:
// n contiguous digits for q <= 10, n comma-separated decimal integers for
// q > 10. Duplicate tuples are an error; a file with no tuples is an error.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcube/cube.hpp"
#include "qcube/errors.hpp"

namespace qcube {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline VertexSet read_qset(std::istream& in, const std::string& name,
                           Index point_cap = CubeShape::kDefaultPointCap) {
  std::string line;
  int lineno = 0;
  auto where = [&]() { return name + ":" + std::to_string(lineno) + ": "; };

  // header
  int q = 0, n = 0;
  while (true) {
    if (!std::getline(in, line)) throw InputError(name + ": missing \"q n\" header line");
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream hs(t);
    std::string extra;
    if (!(hs >> q >> n) || (hs >> extra))
      throw InputError(where() + "header must be two integers \"q n\"");
    break;
  }
  if (q < 2) throw InputError(where() + "q must be at least 2");
  if (n < 1) throw InputError(where() + "n must be at least 1");
  CubeShape shape;
  try {
    shape = CubeShape(q, n, point_cap);
  } catch (const ResourceError& e) {
    throw ResourceError(where() + e.what());
  }

  VertexSet s(shape);
  std::vector<int> coords(static_cast<std::size_t>(n));
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (q <= 10) {
      if (static_cast<int>(t.size()) != n)
        throw InputError(where() + "expected " + std::to_string(n) + " digits, got " +
                         std::to_string(t.size()));
      for (int i = 0; i < n; ++i) {
        const char ch = t[static_cast<std::size_t>(i)];
        if (ch < '0' || ch > '9') throw InputError(where() + "tuple contains a non-digit character");
        coords[static_cast<std::size_t>(i)] = ch - '0';
      }
    } else {
      std::istringstream ts(t);
      std::string tok;
      int i = 0;
      while (std::getline(ts, tok, ',')) {
        if (i >= n) throw InputError(where() + "tuple has more than " + std::to_string(n) + " entries");
        try {
          coords[static_cast<std::size_t>(i)] = std::stoi(detail::trim(tok));
        } catch (const std::exception&) {
          throw InputError(where() + "tuple entry \"" + tok + "\" is not an integer");
        }
        ++i;
      }
      if (i != n) throw InputError(where() + "tuple has " + std::to_string(i) + " entries, expected " +
                                   std::to_string(n));
    }
    Index idx;
    try {
      idx = encode(coords, shape);
    } catch (const InputError& e) {
      throw InputError(where() + e.what());
    }
    if (s.contains(idx)) throw InputError(where() + "duplicate tuple");
    s.set(idx, true);
  }
  if (s.empty()) throw InputError(name + ": no tuples");
  return s;
}

inline VertexSet read_qset_file(const std::string& path, Index point_cap = CubeShape::kDefaultPointCap) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  return read_qset(in, path, point_cap);
}

inline void write_qset(std::ostream& out, const VertexSet& s, const std::string& comment = {}) {
  if (s.empty()) throw InputError("write_qset: refusing to write an empty set");
  const CubeShape& shape = s.shape();
  if (!comment.empty()) out << "# " << comment << "\n";
  out << shape.q << " " << shape.n << "\n";
  s.for_each_member([&](Index x) {
    for (int i = 0; i < shape.n; ++i) {
      if (shape.q > 10 && i > 0) out << ",";
      out << shape.digit(x, i);
    }
    out << "\n";
  });
}

inline void write_qset_file(const std::string& path, const VertexSet& s, const std::string& comment = {}) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot open file for writing");
  write_qset(out, s, comment);
  if (!out) throw InputError(path + ": write failed");
}

}  // namespace qcube
