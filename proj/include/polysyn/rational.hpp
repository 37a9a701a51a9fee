#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polysyn {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational. cpp_rational keeps values in canonical
// form: gcd(|num|, den) = 1 and den > 0, so operator== is semantic equality
// on constants.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

// "3", "-2/5": whole numbers without the "/1".
inline std::string rat_to_string(const Rational& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace polysyn
