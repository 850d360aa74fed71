#pragma once

#include "invfp/bigint.hpp"

#include <vector>

namespace invfp {

// Fixed-point weight polynomial of an avoidance class at length n:
// coeffs[j] counts the involutions of [n] in the class with exactly j fixed
// points.  An involution of [n] has fp ≡ n (mod 2), so coeffs[j] = 0 off the
// parity lattice.
struct WeightPolynomial {
  int n = 0;
  std::vector<BigInt> coeffs;  // size n+1, index j = fixed-point count

  static WeightPolynomial zero(int n) {
    WeightPolynomial w;
    w.n = n;
    w.coeffs.assign(static_cast<size_t>(n) + 1, BigInt(0));
    return w;
  }

  // Value at q=1: the size of the avoidance class at length n.
  BigInt total() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs) s += c;
    return s;
  }

  bool parity_ok() const {
    for (int j = 0; j <= n; ++j) {
      if ((j & 1) != (n & 1) && coeffs[static_cast<size_t>(j)] != 0) return false;
    }
    return true;
  }

  void add(const WeightPolynomial& other) {
    for (size_t j = 0; j < coeffs.size() && j < other.coeffs.size(); ++j) {
      coeffs[j] += other.coeffs[j];
    }
  }

  bool operator==(const WeightPolynomial&) const = default;
};

}  // namespace invfp
