#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qcv {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Rat frac(long num, long den) { return Rat(Int(num), Int(den)); }

// (k-1)!! for even k >= 0, used by the Gaussian moment formulas.
inline Int odd_double_factorial(unsigned k) {
  Int r = 1;
  for (unsigned j = 1; j < k; j += 2) r *= j;
  return r;
}

}  // namespace qcv
