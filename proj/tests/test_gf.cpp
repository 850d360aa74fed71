#include "invfp/gf.hpp"

#include "invfp/bigint.hpp"
#include "invfp/involutions.hpp"

#include "doctest.h"

#include <vector>

using namespace invfp;

namespace {

std::vector<BigInt> coeffs(const WeightPolynomial& w) { return w.coeffs; }

std::vector<BigInt> big(const std::vector<long long>& v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("catalan numbers by exact division") {
  CHECK(catalan_numbers(6) == big({1, 1, 2, 5, 14, 42}));
  CHECK(catalan_numbers(0).empty());
}

TEST_CASE("321-class series rows match hand expansion") {
  const SeriesTable t = expand_class321(4);
  CHECK(coeffs(t.rows[0]) == big({1}));
  CHECK(coeffs(t.rows[1]) == big({0, 1}));
  CHECK(coeffs(t.rows[2]) == big({1, 0, 1}));
  CHECK(coeffs(t.rows[3]) == big({0, 2, 0, 1}));
  CHECK(coeffs(t.rows[4]) == big({2, 0, 3, 0, 1}));
}

TEST_CASE("231-class series rows match hand expansion") {
  const SeriesTable t = expand_class231(3);
  CHECK(coeffs(t.rows[0]) == big({1}));
  CHECK(coeffs(t.rows[1]) == big({0, 1}));
  CHECK(coeffs(t.rows[2]) == big({1, 0, 1}));
  CHECK(coeffs(t.rows[3]) == big({0, 3, 0, 1}));
}

TEST_CASE("231-class totals double at each length") {
  const SeriesTable t = expand_class231(12);
  BigInt expected = 1;
  for (int n = 1; n <= 12; ++n) {
    CHECK(t.rows[static_cast<size_t>(n)].total() == expected);
    expected *= 2;
  }
}

TEST_CASE("321-class totals are central binomial coefficients") {
  const SeriesTable t = expand_class321(30);
  for (int n = 0; n <= 30; ++n) {
    CHECK(t.rows[static_cast<size_t>(n)].total() == binomial(n, n / 2));
  }
}

TEST_CASE("ballot walk table on fixed examples") {
  const SeriesTable t = path_weights(3);
  CHECK(coeffs(t.rows[2]) == big({1, 0, 1}));  // b(2,0)=1, b(2,2)=1
  CHECK(coeffs(t.rows[3]) == big({0, 2, 0, 1}));
  for (int n = 0; n <= 3; ++n) CHECK(t.rows[static_cast<size_t>(n)].parity_ok());
}

TEST_CASE("path table equals the 321-class series") {
  const SeriesTable gf = expand_class321(60);
  const SeriesTable pw = path_weights(60);
  REQUIRE(pw.rows.size() == gf.rows.size());
  for (size_t n = 0; n < gf.rows.size(); ++n) CHECK(pw.rows[n] == gf.rows[n]);
}

TEST_CASE("single path row agrees with the table") {
  const SeriesTable pw = path_weights(120);
  for (int n : {0, 1, 37, 60, 120}) {
    CHECK(path_row(n) == pw.rows[static_cast<size_t>(n)]);
  }
}

TEST_CASE("path row sums are central binomial coefficients up to 200") {
  const SeriesTable pw = path_weights(200);
  for (int n = 0; n <= 200; ++n) {
    CHECK(pw.rows[static_cast<size_t>(n)].total() == binomial(n, n / 2));
  }
}

TEST_CASE("parallel path row equals serial") {
  CHECK(path_row(300) == path_row_serial(300));
  CHECK(path_row(301) == path_row_serial(301));
}

TEST_CASE("series guards") {
  CHECK_THROWS_AS(expand_class321(61), std::invalid_argument);
  CHECK_THROWS_AS(expand_class231(601), std::invalid_argument);
  CHECK_THROWS_AS(path_weights(1001), std::invalid_argument);
  CHECK_THROWS_AS(path_row(4001), std::invalid_argument);
  CHECK_THROWS_AS(expand_class321(-1), std::invalid_argument);
}

TEST_CASE("pgf evaluation on fixed examples") {
  const SeriesTable t321 = expand_class321(3);
  const WeightPolynomial& w3 = t321.rows[3];
  CHECK(pgf_eval(w3, BigRat(1), BigRat(1)) == BigRat(1));
  CHECK(pgf_eval(w3, BigRat(1), BigRat(2)) == BigRat(4));

  const SeriesTable t231 = expand_class231(2);
  CHECK(pgf_eval(t231.rows[2], BigRat(1), BigRat(0)) == BigRat(1, 2));

  CHECK_THROWS_AS(pgf_eval(w3, BigRat(0), BigRat(1)), std::invalid_argument);
  CHECK_THROWS_AS(pgf_eval(w3, BigRat(1), BigRat(-1)), std::invalid_argument);
}

TEST_CASE("pgf at u=1 is exactly one across rows and biases") {
  const SeriesTable t = expand_class321(60);
  for (int n = 0; n <= 60; n += 7) {
    for (const BigRat& q : {BigRat(1, 2), BigRat(1), BigRat(2)}) {
      CHECK(pgf_eval(t.rows[static_cast<size_t>(n)], q, BigRat(1)) == BigRat(1));
    }
  }
}

TEST_CASE("expand_rows dispatches by class") {
  CHECK(expand_rows(SigmaClass::Class321, 5).rows[5] == expand_class321(5).rows[5]);
  CHECK(expand_rows(SigmaClass::Class231, 5).rows[5] == expand_class231(5).rows[5]);
}
