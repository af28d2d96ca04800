#pragma once

// Exact rational scalars. Values are always normalized: lowest terms,
// positive denominator. No rounding ever occurs anywhere in this library.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace zinbiel {

using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Parses "p" or "p/q" (q > 0 after normalization). Throws on malformed input.
inline Scalar parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Scalar(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator");
    return Scalar(num, den);
  } catch (const std::exception&) {
    throw std::runtime_error("malformed rational '" + text + "'");
  }
}

/// Lowest terms, positive denominator; integers print without "/1".
inline std::string to_string(const Scalar& s) {
  if (denominator(s) == 1) return numerator(s).str();
  return numerator(s).str() + "/" + denominator(s).str();
}

}  // namespace zinbiel
