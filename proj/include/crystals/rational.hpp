#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace crystals {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// Throws if q is not an integer that fits in a long.
inline long to_long(const Rational& q) {
  if (!is_integral(q)) {
    throw std::logic_error("expected an integer, got " + q.str());
  }
  return boost::multiprecision::numerator(q).convert_to<long>();
}

}  // namespace crystals
