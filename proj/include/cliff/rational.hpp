#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cliff {

// Exact arbitrary-precision rational. All coefficients in the library are
// of this type; there is no floating point anywhere in the computational
// core, so every comparison is an exact equality.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical text form: "n" when the denominator is 1, otherwise "n/d"
// with d > 0 and the sign carried by the numerator.
inline std::string rat_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "n" or "n/d". Returns false on malformed input or zero denominator.
inline bool rat_from_string(const std::string& text, Rational& out) {
  try {
    Rational q(text);
    if (q.get_den() == 0) return false;
    q.canonicalize();
    out = q;
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace cliff
