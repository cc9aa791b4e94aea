#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

#include "tleib/errors.hpp"

namespace tleib {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // canonical lowest-terms form

inline Rat rat(long long n, long long d = 1) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  return Rat(Int(n), Int(d));
}

inline bool is_zero(const Rat& r) { return r.is_zero(); }

inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Splits n = s^2 * core with core squarefree (sign kept on core).
// squarefree_core(8) = {2, 2}: 8 = 2^2 * 2.  squarefree_core(-4) = {-1, 2}.
inline std::pair<Int, Int> squarefree_core(Int n) {
  if (n == 0) return {Int(0), Int(1)};
  Int core = n < 0 ? Int(-1) : Int(1);
  Int scale = 1;
  Int m = abs(n);
  for (Int f = 2; f * f <= m; ++f) {
    int count = 0;
    while (m % f == 0) {
      m /= f;
      ++count;
    }
    for (int i = 0; i + 1 < count; i += 2) scale *= f;
    if (count % 2 == 1) core *= f;
  }
  core *= m;  // leftover prime
  return {core, scale};
}

}  // namespace tleib
