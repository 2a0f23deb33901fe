#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace spx {

// All counts are exact: binomials blow through 64 bits immediately
// (e.g. C(C(n,k), j) in the family-count bounds).
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// log2 of a positive big integer, accurate to double precision.
inline double log2_big(const BigCount& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(x);
  if (bits <= 900) return std::log2(x.convert_to<double>());
  BigCount top = x >> (bits - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

inline std::string to_string(const BigCount& x) { return x.str(); }

inline std::string to_string(const BigRational& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace spx
