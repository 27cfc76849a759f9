#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace syllog {

using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
// malformed input or a zero denominator.
inline Rational parse_rational(const std::string& text) {
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

// Exact rendering, always with an explicit denominator: "1/100", "0/1", "1/1".
inline std::string to_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

}  // namespace syllog
