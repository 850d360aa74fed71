#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace invfp {

// Coefficient magnitudes reach hundreds of digits around n ~ 2000, so all
// counting is done in arbitrary precision; rationals keep the probability
// normalization exact.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const BigRat& v) { return v.str(); }

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const BigRat& v) { return v.convert_to<double>(); }
inline long double to_long_double(const BigInt& v) { return v.convert_to<long double>(); }

// p/q, bare integers, and decimal strings ("0.45" -> 9/20) all parse exactly.
BigRat parse_rational(const std::string& text);

BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace invfp
