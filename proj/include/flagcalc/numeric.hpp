#pragma once

// Exact arithmetic carriers used throughout the library.  Floating point is
// deliberately absent: every quantity is an integer or a rational number.
// Small structural integers (root coordinates, Weyl matrices) use int64;
// anything that can grow (polynomial coefficients, structure constants,
// weight coordinates) uses arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace flagcalc {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p" / "p/q" rendering (q > 0, reduced; "/1" omitted).
inline std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  if (denominator(r) == 1) {
    os << numerator(r);
  } else {
    os << numerator(r) << '/' << denominator(r);
  }
  return os.str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace flagcalc
