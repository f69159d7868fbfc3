#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rpbs {

/// Arbitrary-precision rational used for every exact coefficient.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Rational rat(long long num, long long den = 1) { return Rational(num) / Rational(den); }

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// (-1)^e for any integer e.
inline int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace rpbs
