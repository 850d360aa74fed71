#pragma once

#include "invfp/bigint.hpp"
#include "invfp/common.hpp"
#include "invfp/weights.hpp"

#include <vector>

namespace invfp {

// Polynomial rows are cheap for the rational Class231 generating function
// (shift-and-add recurrence) but cubic-ish for Class321's radical one, so the
// caps differ; past them the path DP carries Class321 work in O(n^2) adds.
inline constexpr int kMaxPolyRows321 = 60;
inline constexpr int kMaxPolyRows231 = 600;
inline constexpr int kMaxPathTable = 1000;
inline constexpr int kMaxPathRow = 4000;

struct SeriesTable {
  SigmaClass sigma_class = SigmaClass::Class321;
  std::vector<WeightPolynomial> rows;  // index = n
};

// Cat(0..count-1) by the exact-division recurrence.
std::vector<BigInt> catalan_numbers(int count);

// Rows of 2/(1 - 2qz + sqrt(1 - 4z^2)) via the rationalized form
// 1/(1 - qz - S(z)), S(z) = sum_{m>=1} Cat(m-1) z^{2m}:
// a_n = q a_{n-1} + sum_m Cat(m-1) a_{n-2m}.
SeriesTable expand_class321(int n_max);

// Rows of (1 - z^2)/(1 - 2z^2 - qz): with c_0 = 1, c_1 = q,
// c_n = q c_{n-1} + 2 c_{n-2}, row n is c_n - c_{n-2}.
SeriesTable expand_class231(int n_max);

SeriesTable expand_rows(SigmaClass c, int n_max);

// Ballot-walk table b(n,j): +-1 walks from 0 staying >= 0, ending at j.
// Fast oracle for Class321; the equality of the two engines is certified by
// tests, not assumed.
SeriesTable path_weights(int n_max);

// Single row b(n, .) without materializing the table; the per-step update
// b'(j) = b(j-1) + b(j+1) is a parallel map over j.
WeightPolynomial path_row(int n);
WeightPolynomial path_row_serial(int n);

// Exact PGF value sum_j w_j (uq)^j / sum_j w_j q^j.  q > 0, u >= 0.
BigRat pgf_eval(const WeightPolynomial& w, const BigRat& q, const BigRat& u);

}  // namespace invfp
