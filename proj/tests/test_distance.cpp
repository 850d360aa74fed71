#include "invfp/distance.hpp"

#include "invfp/distribution.hpp"
#include "invfp/gf.hpp"
#include "invfp/goe.hpp"
#include "invfp/limits.hpp"
#include "invfp/weights.hpp"

#include "doctest.h"

#include <algorithm>
#include <map>
#include <stdexcept>

using namespace invfp;

namespace {

FpDistribution point_mass_at(int j) {
  WeightPolynomial w = WeightPolynomial::zero(j);
  w.coeffs[static_cast<size_t>(j)] = 1;
  return biased_distribution(w, BigRat(1));
}

}  // namespace

TEST_CASE("total variation distance") {
  const FpDistribution at0 = point_mass_at(0);
  CHECK(tv_distance(at0, {{0, 1.0}}) == doctest::Approx(0.0));
  CHECK(tv_distance(at0, {{1, 1.0}}) == doctest::Approx(1.0));

  const SeriesTable t = expand_class231(2);
  const FpDistribution half = biased_distribution(t.rows[2], BigRat(1));
  CHECK(tv_distance(half, {{0, 1.0}}) == doctest::Approx(0.5));
  CHECK(tv_distance(half, {{0, 0.5}, {2, 0.5}}) == doctest::Approx(0.0));
}

TEST_CASE("ks distance handles atoms from both sides") {
  const FpDistribution at0 = point_mass_at(0);
  CHECK(ks_distance(at0, 0.0, 1.0, [](double x) { return std_normal_cdf(x); }) ==
        doctest::Approx(0.5));
  CHECK_THROWS_AS(ks_distance(at0, 0.0, 0.0, [](double x) { return x; }), std::invalid_argument);
  CHECK_THROWS_AS(ks_distance(at0, 0.0, -1.0, [](double x) { return x; }), std::invalid_argument);
}

TEST_CASE("ks distance of a fine lattice against a linear cdf") {
  WeightPolynomial w = WeightPolynomial::zero(200);
  for (auto& c : w.coeffs) c = 1;
  const FpDistribution u = biased_distribution(w, BigRat(1));
  const auto ramp = [](double x) { return std::clamp(x, 0.0, 1.0); };
  const double ks = ks_distance(u, 0.0, 200.0, ramp);
  CHECK(ks == doctest::Approx(1.0 / 201.0));
}

TEST_CASE("ks between weighted samples and cdfs") {
  WeightedSample s;
  s.values = {0.0, 1.0};
  s.weights = {1.0, 1.0};
  finalize_weighted_sample(s);
  const auto ramp = [](double x) { return std::clamp(x, 0.0, 1.0); };
  CHECK(ks_weighted_vs_cdf(s, ramp) == doctest::Approx(0.5));

  WeightedSample dup;
  dup.values = {0.0, 0.0, 1.0, 1.0};
  dup.weights = {1.0, 1.0, 1.0, 1.0};
  finalize_weighted_sample(dup);
  CHECK(ks_weighted_vs_cdf(dup, ramp) == doctest::Approx(0.5));
}

TEST_CASE("ks between a rescaled finite law and a weighted sample") {
  WeightedSample s;
  s.values = {-1.0, 1.0};
  s.weights = {1.0, 1.0};
  finalize_weighted_sample(s);
  const FpDistribution at0 = point_mass_at(0);
  CHECK(ks_finite_vs_weighted(at0, 0.0, 1.0, s) == doctest::Approx(0.5));
}
