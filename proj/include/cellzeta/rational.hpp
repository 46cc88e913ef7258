#pragma once

// Exact rational arithmetic. Thin layer over GMP's mpq_class plus the
// string format used throughout the library ("p/q", or just "p" when q == 1).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cellzeta {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rational& r) {
  return r.get_str();  // canonical "p" or "p/q", q > 0
}

inline Rational rat_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  r.canonicalize();
  return r;
}

inline double rat_to_double(const Rational& r) { return r.get_d(); }

}  // namespace cellzeta
