#pragma once

// Exact rational scalars. Every inequality/equality the library decides is
// decided on these; floating values are derived for reports only.

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "qcube/errors.hpp"

namespace qcube {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Inverse of to_string; accepts "p" and "p/q".
inline Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(std::stoll(std::string(s)));
    const std::int64_t num = std::stoll(std::string(s.substr(0, slash)));
    const std::int64_t den = std::stoll(std::string(s.substr(slash + 1)));
    if (den == 0) throw InputError("rational \"" + std::string(s) + "\" has zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InputError("cannot parse rational \"" + std::string(s) + "\"");
  } catch (const std::out_of_range&) {
    throw InputError("rational \"" + std::string(s) + "\" out of range");
  }
}

}  // namespace qcube
